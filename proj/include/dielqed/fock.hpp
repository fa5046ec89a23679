#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <utility>

namespace dielqed::fock {

using OperatorMatrix = Eigen::MatrixXcd;

/// Which quantization of the medium field is in effect: the standard
/// (Ginzburg) procedure with conjugate momentum p = n^2 qdot, or the
/// corrected procedure built on proper time tau = t/n with p = n qdot.
enum class Scheme { Ginzburg, Corrected };

/// Truncated single-mode number-state space with levels |0> .. |dim-1|.
/// Truncation necessarily breaks ladder identities at the top level, so
/// operator relations are certified only on levels 0..dim-2 (the safe
/// block) and spectra only on the lowest dim/2 levels.
struct FockSpace {
  explicit FockSpace(Eigen::Index dim_) : dim(dim_) {
    if (dim < 3) throw std::invalid_argument("FockSpace: dim must be >= 3");
  }
  Eigen::Index dim;
};

struct LadderPair {
  OperatorMatrix lowering;
  OperatorMatrix raising;
};

/// Annihilation operator with matrix elements a[m-1, m] = sqrt(m).
OperatorMatrix annihilator(const FockSpace& space);

/// Boson ladder pair (a, a†); [a, a†] = identity on the safe block.
LadderPair boson_pair(const FockSpace& space);

/// Medium ladder pair zeta = sqrt(n) a, zeta† = sqrt(n) a†.
/// On the safe block [zeta, zeta†] = n * identity, the material-dependent
/// commutator forced on the standard scheme by the interface conditions.
LadderPair polariton_pair(const FockSpace& space, double refractive_index);

/// [A, B] = AB - BA for square Eigen expressions of matching size.
template <typename DerivedA, typename DerivedB>
auto commutator(const Eigen::MatrixBase<DerivedA>& a,
                const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("commutator: operators must be square and of equal dimension");
  return (a * b - b * a).eval();
}

/// Operator restricted to the truncation-safe block (top levels dropped).
template <typename Derived>
auto safe_block(const Eigen::MatrixBase<Derived>& op, Eigen::Index dropped_levels = 1) {
  if (op.rows() != op.cols())
    throw std::invalid_argument("safe_block: operator must be square");
  if (dropped_levels < 1 || dropped_levels >= op.rows())
    throw std::invalid_argument("safe_block: invalid number of dropped levels");
  const Eigen::Index kept = op.rows() - dropped_levels;
  return op.topLeftCorner(kept, kept).eval();
}

/// Momentum/position quadrature pair built from a ladder pair (L, L†):
///   P = i sqrt(hbar omega / 2) (L† - L),   Q = sqrt(hbar / 2 omega) (L† + L).
/// Returns (P, Q); both Hermitian, with [Q, P] = i hbar [L, L†].
std::pair<OperatorMatrix, OperatorMatrix> quadratures(const LadderPair& ladder,
                                                      double omega, double hbar);

/// Single-mode Hamiltonian of the given scheme:
///   Ginzburg:  (hbar omega / 2)   (L†L + LL†), expects its zeta pair;
///   Corrected: (n hbar omega / 2) (L†L + LL†), expects the boson pair.
/// The ladder/scheme pairing is a caller contract and is not detectable here.
OperatorMatrix hamiltonian(Scheme scheme, const LadderPair& ladder,
                           double refractive_index, double omega, double hbar);

/// Ascending eigenvalues of a Hermitian operator (tolerance 1e-10 on the
/// Hermiticity defect). Only the lowest dim/2 values are truncation-safe.
Eigen::VectorXd spectrum(const OperatorMatrix& op);

}  // namespace dielqed::fock
