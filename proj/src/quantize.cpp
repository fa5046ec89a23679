#include <dielqed/quantize.hpp>

#include <cmath>
#include <stdexcept>

namespace dielqed::quantize {

namespace {

void require_index(double n) {
  if (!(n >= 1.0))
    throw std::invalid_argument("refractive index must be >= 1");
}

void require_positive(double value, const char* name) {
  if (!(value > 0.0))
    throw std::invalid_argument(std::string(name) + " must be positive");
}

// (momentum scale, coordinate scale) of the scheme's transform P = s_p p,
// Q = s_q q. The scales are reciprocal, so the transform is canonical.
CanonicalPair transform_scales(Scheme scheme, double n) {
  if (scheme == Scheme::Ginzburg) return {1.0 / n, n};
  return {std::sqrt(n), 1.0 / std::sqrt(n)};
}

}  // namespace

double conjugate_momentum_coefficient(Scheme scheme, double n) {
  require_index(n);
  return scheme == Scheme::Ginzburg ? n * n : n;
}

CanonicalPair canonical_transform(Scheme scheme, double n, double p, double q) {
  require_index(n);
  const CanonicalPair scales = transform_scales(scheme, n);
  return {scales.momentum * p, scales.coordinate * q};
}

OscillatorForm transformed_hamiltonian_form(Scheme scheme, double n, double omega) {
  require_index(n);
  require_positive(omega, "omega");
  // Effective per-mode Hamiltonian (momentum_coeff p^2 + coordinate_coeff q^2)/2
  // before the transform: the standard procedure has p = n^2 qdot, the
  // corrected one p = dq/dtau, and both share the n^2 omega^2 q^2 term.
  const double pre_momentum = scheme == Scheme::Ginzburg ? 1.0 / (n * n) : 1.0;
  const double pre_coordinate = n * n * omega * omega;
  const CanonicalPair scales = transform_scales(scheme, n);
  return {pre_momentum / (scales.momentum * scales.momentum),
          pre_coordinate / (scales.coordinate * scales.coordinate)};
}

double field_prefactor(Scheme scheme, double n, double omega, double volume,
                       double hbar, double c) {
  require_index(n);
  require_positive(omega, "omega");
  require_positive(volume, "volume");
  require_positive(hbar, "hbar");
  require_positive(c, "light speed");
  const double index_power = scheme == Scheme::Ginzburg ? n * n : n;
  return c * std::sqrt(hbar / (2.0 * index_power * omega * volume));
}

double correspondence_residual(Scheme scheme, double n1, double n2, double omega,
                               double volume, double hbar, double c) {
  const double ratio = field_prefactor(scheme, n1, omega, volume, hbar, c) /
                       field_prefactor(scheme, n2, omega, volume, hbar, c);
  return std::abs(ratio - std::sqrt(n2 / n1));
}

double energy_ratio(Scheme scheme, double n, Eigen::Index dim) {
  require_index(n);
  const fock::FockSpace space(dim);
  const fock::OperatorMatrix h =
      fock::hamiltonian(scheme, fock::boson_pair(space), n, 1.0, 1.0);
  const Eigen::VectorXd levels = fock::spectrum(h);
  return levels(1) - levels(0);
}

const char* scheme_name(Scheme scheme) {
  return scheme == Scheme::Ginzburg ? "Ginzburg" : "Corrected";
}

SchemeReport build_report(Scheme scheme, double n, double n_ref, double omega,
                          double volume, double hbar, double c, Eigen::Index dim) {
  require_index(n);
  require_index(n_ref);

  SchemeReport report;
  report.scheme = scheme;
  report.refractive_index = n;
  report.momentum_coefficient = conjugate_momentum_coefficient(scheme, n);
  report.transform = scheme == Scheme::Ginzburg ? "P = p/n, Q = n q"
                                                : "P = sqrt(n) p, Q = q/sqrt(n)";
  report.prefactor = field_prefactor(scheme, n, omega, volume, hbar, c);

  const fock::FockSpace space(dim);
  const fock::LadderPair pair = scheme == Scheme::Ginzburg
                                    ? fock::polariton_pair(space, n)
                                    : fock::boson_pair(space);
  const fock::OperatorMatrix bracket = fock::commutator(pair.lowering, pair.raising);
  report.commutator_scale = fock::safe_block(bracket).diagonal().real().mean();

  report.energy_ratio = energy_ratio(scheme, n, dim);
  report.correspondence_residual =
      correspondence_residual(scheme, n_ref, n, omega, volume, hbar, c);
  return report;
}

}  // namespace dielqed::quantize
