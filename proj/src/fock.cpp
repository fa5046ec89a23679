#include <dielqed/fock.hpp>

#include <cmath>

namespace dielqed::fock {

OperatorMatrix annihilator(const FockSpace& space) {
  OperatorMatrix a = OperatorMatrix::Zero(space.dim, space.dim);
  for (Eigen::Index m = 1; m < space.dim; ++m) {
    a(m - 1, m) = std::sqrt(static_cast<double>(m));
  }
  return a;
}

LadderPair boson_pair(const FockSpace& space) {
  OperatorMatrix a = annihilator(space);
  return {a, a.adjoint()};
}

LadderPair polariton_pair(const FockSpace& space, double refractive_index) {
  if (!(refractive_index >= 1.0))
    throw std::invalid_argument("polariton_pair: refractive index must be >= 1");
  const double scale = std::sqrt(refractive_index);
  OperatorMatrix zeta = scale * annihilator(space);
  return {zeta, zeta.adjoint()};
}

std::pair<OperatorMatrix, OperatorMatrix> quadratures(const LadderPair& ladder,
                                                      double omega, double hbar) {
  if (!(omega > 0.0)) throw std::invalid_argument("quadratures: omega must be positive");
  if (!(hbar > 0.0)) throw std::invalid_argument("quadratures: hbar must be positive");
  if (ladder.lowering.rows() != ladder.raising.rows() ||
      ladder.lowering.cols() != ladder.raising.cols())
    throw std::invalid_argument("quadratures: mismatched ladder pair");
  const std::complex<double> i_unit(0.0, 1.0);
  OperatorMatrix p = i_unit * std::sqrt(hbar * omega / 2.0) *
                     OperatorMatrix(ladder.raising - ladder.lowering);
  OperatorMatrix q = std::sqrt(hbar / (2.0 * omega)) *
                     OperatorMatrix(ladder.raising + ladder.lowering);
  return {p, q};
}

OperatorMatrix hamiltonian(Scheme scheme, const LadderPair& ladder,
                           double refractive_index, double omega, double hbar) {
  if (!(refractive_index >= 1.0))
    throw std::invalid_argument("hamiltonian: refractive index must be >= 1");
  if (!(omega > 0.0)) throw std::invalid_argument("hamiltonian: omega must be positive");
  if (!(hbar > 0.0)) throw std::invalid_argument("hamiltonian: hbar must be positive");
  const double front =
      scheme == Scheme::Corrected ? refractive_index * hbar * omega / 2.0 : hbar * omega / 2.0;
  return front * OperatorMatrix(ladder.raising * ladder.lowering +
                                ladder.lowering * ladder.raising);
}

Eigen::VectorXd spectrum(const OperatorMatrix& op) {
  if (op.rows() != op.cols())
    throw std::invalid_argument("spectrum: operator must be square");
  const double defect = (op - op.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-10)
    throw std::invalid_argument("spectrum: operator is not Hermitian within 1e-10");
  Eigen::SelfAdjointEigenSolver<OperatorMatrix> solver(op, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("spectrum: eigenvalue solver failed");
  return solver.eigenvalues();
}

}  // namespace dielqed::fock
