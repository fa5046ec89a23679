#include <dielqed/lagrangian.hpp>

#include <cmath>
#include <stdexcept>

#include <dielqed/numdiff.hpp>

namespace dielqed::lagrange {

namespace {

using PositionMap = std::function<Eigen::Vector3d(const Eigen::VectorXd&, double)>;

void validate_system(const GeneralizedSystem& system) {
  if (system.positions.empty())
    throw std::invalid_argument("GeneralizedSystem: at least one particle required");
  if (system.positions.size() != system.masses.size())
    throw std::invalid_argument("GeneralizedSystem: one mass per particle required");
  for (double m : system.masses) {
    if (!(m > 0.0))
      throw std::invalid_argument("GeneralizedSystem: masses must be positive");
  }
  if (!(system.refractive_index >= 1.0))
    throw std::invalid_argument("GeneralizedSystem: refractive index must be >= 1");
}

double finite_or_throw(double value, const char* where) {
  if (!std::isfinite(value))
    throw std::invalid_argument(std::string(where) + ": non-finite value near evaluation point");
  return value;
}

Eigen::Vector3d map_partial_q(const PositionMap& map, const Eigen::VectorXd& q,
                              double tau, Eigen::Index j) {
  auto f = [&](double qj) {
    Eigen::VectorXd shifted = q;
    shifted(j) = qj;
    return Eigen::Vector3d(map(shifted, tau));
  };
  return numdiff::derivative(f, q(j));
}

Eigen::Vector3d map_partial_tau(const PositionMap& map, const Eigen::VectorXd& q,
                                double tau) {
  auto f = [&](double t) { return Eigen::Vector3d(map(q, t)); };
  return numdiff::derivative(f, tau);
}

double partial_wrt_coordinate(const LagrangianFunction& L, const Eigen::VectorXd& q,
                              const Eigen::VectorXd& qdot_tau, double tau, Eigen::Index j) {
  auto f = [&](double qj) {
    Eigen::VectorXd shifted = q;
    shifted(j) = qj;
    return finite_or_throw(L(shifted, qdot_tau, tau), "euler_lagrange_residual");
  };
  return numdiff::derivative(f, q(j));
}

// Kinetic energy T(q, qdot_tau, tau) = sum_i m_i/2 |u_i|^2 assembled from the
// coordinate maps, with u_i = sum_j dx_i/dq_j qdot_j + dx_i/dtau (finite
// differences; the tau term covers rheonomous maps).
LagrangianFunction kinetic_energy_function(const GeneralizedSystem& system) {
  return [system](const Eigen::VectorXd& q, const Eigen::VectorXd& qdot_tau,
                  double tau) {
    double total = 0.0;
    for (std::size_t i = 0; i < system.positions.size(); ++i) {
      Eigen::Vector3d u = map_partial_tau(system.positions[i], q, tau);
      for (Eigen::Index j = 0; j < qdot_tau.size(); ++j) {
        u += map_partial_q(system.positions[i], q, tau, j) * qdot_tau(j);
      }
      total += 0.5 * system.masses[i] * u.squaredNorm();
    }
    return total;
  };
}

}  // namespace

TrajectoryGrid::TrajectoryGrid(double tau_start_, double step_, Eigen::MatrixXd samples_)
    : tau_start(tau_start_), step(step_), samples(std::move(samples_)) {
  if (!(step > 0.0)) throw std::invalid_argument("TrajectoryGrid: step must be positive");
  if (samples.rows() < 5)
    throw std::invalid_argument("TrajectoryGrid: need at least 5 nodes");
  if (samples.cols() < 1)
    throw std::invalid_argument("TrajectoryGrid: need at least one coordinate");
}

double canonical_momentum(const LagrangianFunction& L, const Eigen::VectorXd& q,
                          const Eigen::VectorXd& qdot_tau, Eigen::Index j, double tau) {
  if (q.size() != qdot_tau.size())
    throw std::invalid_argument("canonical_momentum: q and qdot_tau sizes differ");
  if (j < 0 || j >= qdot_tau.size())
    throw std::invalid_argument("canonical_momentum: coordinate index out of range");
  auto f = [&](double vj) {
    Eigen::VectorXd shifted = qdot_tau;
    shifted(j) = vj;
    return finite_or_throw(L(q, shifted, tau), "canonical_momentum");
  };
  return numdiff::derivative(f, qdot_tau(j));
}

Eigen::VectorXd euler_lagrange_residual(const LagrangianFunction& L,
                                        const TrajectoryGrid& grid, Eigen::Index j) {
  const Eigen::Index nodes = grid.samples.rows();
  if (j < 0 || j >= grid.samples.cols())
    throw std::invalid_argument("euler_lagrange_residual: coordinate index out of range");

  // Grid velocities and momenta exist on nodes 1..nodes-2.
  auto velocity_at = [&](Eigen::Index i) {
    return Eigen::VectorXd((grid.samples.row(i + 1) - grid.samples.row(i - 1)).transpose() /
                           (2.0 * grid.step));
  };
  auto momentum_at = [&](Eigen::Index i) {
    return canonical_momentum(L, grid.samples.row(i).transpose(), velocity_at(i), j,
                              grid.tau_at(i));
  };

  Eigen::VectorXd residual(nodes - 4);
  for (Eigen::Index i = 2; i <= nodes - 3; ++i) {
    const double dp_dtau = (momentum_at(i + 1) - momentum_at(i - 1)) / (2.0 * grid.step);
    const double dL_dq =
        partial_wrt_coordinate(L, grid.samples.row(i).transpose(), velocity_at(i),
                               grid.tau_at(i), j);
    residual(i - 2) = dp_dtau - dL_dq;
  }
  return residual;
}

double generalized_force(const GeneralizedSystem& system,
                         const std::vector<Eigen::Vector3d>& applied_forces,
                         const Eigen::VectorXd& q, double tau, Eigen::Index j) {
  validate_system(system);
  if (applied_forces.size() != system.positions.size())
    throw std::invalid_argument("generalized_force: one force per particle required");
  if (j < 0 || j >= q.size())
    throw std::invalid_argument("generalized_force: coordinate index out of range");
  double total = 0.0;
  for (std::size_t i = 0; i < system.positions.size(); ++i) {
    total += applied_forces[i].dot(map_partial_q(system.positions[i], q, tau, j));
  }
  return total;
}

double dalembert_residual(const GeneralizedSystem& system,
                          const std::vector<Eigen::Vector3d>& applied_forces,
                          const TrajectoryGrid& grid, const Eigen::VectorXd& dq) {
  validate_system(system);
  if (applied_forces.size() != system.positions.size())
    throw std::invalid_argument("dalembert_residual: one force per particle required");
  if (dq.size() != grid.samples.cols())
    throw std::invalid_argument("dalembert_residual: dq size must match coordinate count");

  const LagrangianFunction kinetic = kinetic_energy_function(system);
  const Eigen::Index mid = grid.samples.rows() / 2;

  auto velocity_at = [&](Eigen::Index i) {
    return Eigen::VectorXd((grid.samples.row(i + 1) - grid.samples.row(i - 1)).transpose() /
                           (2.0 * grid.step));
  };

  const Eigen::VectorXd q_mid = grid.samples.row(mid).transpose();
  const Eigen::VectorXd qdot_mid = velocity_at(mid);
  const double tau_mid = grid.tau_at(mid);

  double residual = 0.0;
  for (Eigen::Index j = 0; j < dq.size(); ++j) {
    const double p_next = canonical_momentum(kinetic, grid.samples.row(mid + 1).transpose(),
                                             velocity_at(mid + 1), j, grid.tau_at(mid + 1));
    const double p_prev = canonical_momentum(kinetic, grid.samples.row(mid - 1).transpose(),
                                             velocity_at(mid - 1), j, grid.tau_at(mid - 1));
    const double dp_dtau = (p_next - p_prev) / (2.0 * grid.step);
    const double dT_dq = partial_wrt_coordinate(kinetic, q_mid, qdot_mid, tau_mid, j);
    const double force_term = generalized_force(system, applied_forces, q_mid, tau_mid, j);
    residual += (dp_dtau - dT_dq - force_term) * dq(j);
  }
  return residual;
}

}  // namespace dielqed::lagrange
