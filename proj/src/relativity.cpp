#include <dielqed/relativity.hpp>

#include <cmath>
#include <stdexcept>

namespace dielqed::relativity {

namespace {

void require_medium(double n, double c, const char* where) {
  if (!(n >= 1.0)) throw std::invalid_argument(std::string(where) + ": refractive index must be >= 1");
  if (!(c > 0.0)) throw std::invalid_argument(std::string(where) + ": light speed must be positive");
}

// Central-difference velocity of a worldline at an interior sample.
Eigen::Vector3d sampled_velocity(const Worldline& w, Eigen::Index i) {
  return (w.positions[i + 1] - w.positions[i - 1]) / (w.times[i + 1] - w.times[i - 1]);
}

}  // namespace

FourVector event_from_time(double t, const Eigen::Vector3d& position,
                           double refractive_index, double light_speed) {
  require_medium(refractive_index, light_speed, "event_from_time");
  return {light_speed * t / refractive_index, position};
}

double coordinate_time(const FourVector& event, double refractive_index,
                       double light_speed) {
  require_medium(refractive_index, light_speed, "coordinate_time");
  return refractive_index * event.t_coord / light_speed;
}

MaterialBoost::MaterialBoost(double velocity, double refractive_index, double light_speed)
    : v(velocity), n(refractive_index), c(light_speed) {
  require_medium(n, c, "MaterialBoost");
  if (!(std::abs(v) < c / n))
    throw std::invalid_argument("MaterialBoost: |v| must be below the signal speed c/n");
}

double gamma(const MaterialBoost& boost) {
  const double beta = boost.n * boost.v / boost.c;
  return 1.0 / std::sqrt(1.0 - beta * beta);
}

FourVector boost_event(const FourVector& event_primed, const MaterialBoost& boost) {
  const double beta = boost.n * boost.v / boost.c;
  const double g = gamma(boost);
  FourVector event;
  event.t_coord = g * (event_primed.t_coord + beta * event_primed.spatial.x());
  event.spatial = event_primed.spatial;
  event.spatial.x() = g * (event_primed.spatial.x() + beta * event_primed.t_coord);
  return event;
}

double interval_squared(const FourVector& separation) {
  return separation.spatial.squaredNorm() - separation.t_coord * separation.t_coord;
}

double proper_time_step(double dt, double v, double refractive_index, double light_speed) {
  const MaterialBoost boost(v, refractive_index, light_speed);
  return dt / (gamma(boost) * refractive_index);
}

Worldline::Worldline(std::vector<double> times_, std::vector<Eigen::Vector3d> positions_,
                     double rest_mass_, double refractive_index_, double light_speed_)
    : times(std::move(times_)),
      positions(std::move(positions_)),
      rest_mass(rest_mass_),
      refractive_index(refractive_index_),
      light_speed(light_speed_) {
  require_medium(refractive_index, light_speed, "Worldline");
  if (!(rest_mass > 0.0)) throw std::invalid_argument("Worldline: rest mass must be positive");
  if (times.size() != positions.size())
    throw std::invalid_argument("Worldline: times and positions must have equal length");
  if (times.size() < 5)
    throw std::invalid_argument("Worldline: need at least 5 samples");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("Worldline: times must be strictly increasing");
  }
  const double signal = light_speed / refractive_index;
  for (Eigen::Index i = 1; i + 1 < static_cast<Eigen::Index>(times.size()); ++i) {
    if (!(sampled_velocity(*this, i).norm() < signal))
      throw std::invalid_argument("Worldline: sampled speed reaches the signal speed c/n");
  }
}

FourKinematics four_kinematics(const Worldline& w, Eigen::Index index) {
  const Eigen::Index size = static_cast<Eigen::Index>(w.times.size());
  if (index < 2 || index > size - 3)
    throw std::invalid_argument("four_kinematics: index must be interior (two neighbors each side)");
  const double n = w.refractive_index;
  const double c = w.light_speed;

  // U = gamma c (1, dx/d(ct/n), ...) = (gamma c, gamma n xdot).
  auto velocity_at = [&](Eigen::Index i) -> FourVector {
    const Eigen::Vector3d xdot = sampled_velocity(w, i);
    const double beta = n * xdot.norm() / c;
    if (!(beta < 1.0))
      throw std::invalid_argument("four_kinematics: sampled speed reaches the signal speed c/n");
    const double g = 1.0 / std::sqrt(1.0 - beta * beta);
    return {g * c, g * n * xdot};
  };

  FourKinematics result;
  result.velocity = velocity_at(index);
  result.momentum = w.rest_mass * result.velocity;

  const FourVector p_next = w.rest_mass * velocity_at(index + 1);
  const FourVector p_prev = w.rest_mass * velocity_at(index - 1);
  const double dt = w.times[index + 1] - w.times[index - 1];
  const double gamma_here = result.velocity.t_coord / c;
  // F = dP/dt * dt/dtau with dt/dtau = gamma n.
  result.force = (gamma_here * n / dt) * (p_next - p_prev);
  return result;
}

Eigen::Vector3d three_momentum_nonrel(double mass, const Eigen::Vector3d& xdot,
                                      double refractive_index) {
  return refractive_index * mass * xdot;
}

}  // namespace dielqed::relativity
