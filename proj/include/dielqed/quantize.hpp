#pragma once

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include <dielqed/fock.hpp>

namespace dielqed::quantize {

using fock::Scheme;

// Coefficient in p = coefficient * qdot: n^2 for the standard procedure,
// n for the proper-time one.
double conjugate_momentum_coefficient(Scheme scheme, double n);

struct CanonicalPair {
  double momentum = 0.0;
  double coordinate = 0.0;
};

// Ginzburg: (P, Q) = (p/n, n q). Corrected: (P, Q) = (sqrt(n) p, q/sqrt(n)).
// Both rescale the pair by reciprocal factors, so P Q = p q.
CanonicalPair canonical_transform(Scheme scheme, double n, double p, double q);

// Per-mode oscillator H = (momentum_coeff P^2 + coordinate_coeff Q^2)/2 after
// the scheme's transform is applied to its effective Hamiltonian. The
// standard procedure lands exactly on (1, omega^2); the corrected one lands
// on (1/n, n^3 omega^2), an oscillator at the medium frequency n omega.
struct OscillatorForm {
  double momentum_coeff = 0.0;
  double coordinate_coeff = 0.0;
  double frequency() const { return std::sqrt(momentum_coeff * coordinate_coeff); }
};

OscillatorForm transformed_hamiltonian_form(Scheme scheme, double n, double omega);

// Per-mode amplitude multiplying (a exp(ik.r) + adag exp(-ik.r)) in the
// quantized vector potential: c sqrt(hbar / (2 n^2 omega V)) for Ginzburg and
// c sqrt(hbar / (2 n omega V)) for the corrected procedure.
double field_prefactor(Scheme scheme, double n, double omega, double volume,
                       double hbar, double c);

// |prefactor(n1)/prefactor(n2) - sqrt(n2/n1)|: zero exactly when the scheme
// reproduces the classical interface amplitude ratio sqrt(n1) A1 = sqrt(n2) A2.
double correspondence_residual(Scheme scheme, double n1, double n2, double omega,
                               double volume, double hbar, double c);

// Per-quantum energy over hbar*omega, measured as the ground-state level
// spacing of the scheme's Hamiltonian rather than read off the formula.
double energy_ratio(Scheme scheme, double n, Eigen::Index dim = 20);

const char* scheme_name(Scheme scheme);

struct SchemeReport {
  Scheme scheme = Scheme::Ginzburg;
  double refractive_index = 1.0;
  double momentum_coefficient = 1.0;
  std::string transform;
  double prefactor = 0.0;
  double commutator_scale = 1.0;
  double energy_ratio = 1.0;
  double correspondence_residual = 0.0;
};

// Aggregates the scheme diagnostics at refractive index n, with the
// correspondence residual taken against a reference medium n_ref. The
// commutator scale is measured on the safe subspace from the ladder pair the
// scheme's boundary conditions force: the polariton pair for Ginzburg, the
// material-independent boson pair for the corrected procedure.
SchemeReport build_report(Scheme scheme, double n, double n_ref, double omega,
                          double volume, double hbar, double c, Eigen::Index dim);

}  // namespace dielqed::quantize
