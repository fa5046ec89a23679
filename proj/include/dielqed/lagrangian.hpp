#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace dielqed::lagrange {

/// L(q, dq/dtau, tau) with tau = t/n the medium time parameter. Potentials
/// are assumed velocity independent.
using LagrangianFunction =
    std::function<double(const Eigen::VectorXd&, const Eigen::VectorXd&, double)>;

/// Mechanical system given by per-particle coordinate maps x_i(q, tau).
struct GeneralizedSystem {
  std::vector<std::function<Eigen::Vector3d(const Eigen::VectorXd&, double)>> positions;
  std::vector<double> masses;
  double refractive_index = 1.0;
};

/// Uniform tau grid of generalized coordinates; samples is nodes x J.
/// Central second differences need at least 5 nodes.
struct TrajectoryGrid {
  TrajectoryGrid(double tau_start, double step, Eigen::MatrixXd samples);
  double tau_start;
  double step;
  Eigen::MatrixXd samples;

  double tau_at(Eigen::Index node) const { return tau_start + node * step; }
};

/// Canonical momentum p_j = dL/d(dq_j/dtau) by central finite difference
/// with one Richardson extrapolation (relative step 1e-6).
double canonical_momentum(const LagrangianFunction& L, const Eigen::VectorXd& q,
                          const Eigen::VectorXd& qdot_tau, Eigen::Index j,
                          double tau = 0.0);

/// Lagrange-equation residual d/dtau(dL/d(dq_j/dtau)) - dL/dq_j along the
/// grid. Entry k corresponds to node k + 2; the stencil consumes two nodes
/// on each side.
Eigen::VectorXd euler_lagrange_residual(const LagrangianFunction& L,
                                        const TrajectoryGrid& grid, Eigen::Index j);

/// Generalized force Q_j = sum_i f_i . dx_i/dq_j with finite-difference
/// partials of the coordinate maps.
double generalized_force(const GeneralizedSystem& system,
                         const std::vector<Eigen::Vector3d>& applied_forces,
                         const Eigen::VectorXd& q, double tau, Eigen::Index j);

/// D'Alembert residual sum_j [d/dtau(dT/d(dq_j/dtau)) - dT/dq_j - Q_j] dq_j
/// at the grid midpoint, with T assembled from the coordinate maps and the
/// applied forces evaluated at the midpoint configuration. Vanishes when the
/// sampled trajectory satisfies the dynamics.
double dalembert_residual(const GeneralizedSystem& system,
                          const std::vector<Eigen::Vector3d>& applied_forces,
                          const TrajectoryGrid& grid, const Eigen::VectorXd& dq);

}  // namespace dielqed::lagrange
