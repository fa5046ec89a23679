#pragma once

#include <Eigen/Dense>

#include <vector>

namespace dielqed::relativity {

/// Four-component vector in dielectric-filled spacetime. For events the
/// time-like component is ct/n (a length); kinematic vectors reuse the same
/// component layout.
struct FourVector {
  double t_coord = 0.0;
  Eigen::Vector3d spatial = Eigen::Vector3d::Zero();
};

inline FourVector operator-(const FourVector& a, const FourVector& b) {
  return {a.t_coord - b.t_coord, a.spatial - b.spatial};
}

inline FourVector operator+(const FourVector& a, const FourVector& b) {
  return {a.t_coord + b.t_coord, a.spatial + b.spatial};
}

inline FourVector operator*(double s, const FourVector& v) {
  return {s * v.t_coord, s * v.spatial};
}

/// Event four-vector (ct/n, x, y, z) from a coordinate time.
FourVector event_from_time(double t, const Eigen::Vector3d& position,
                           double refractive_index, double light_speed);

/// Coordinate time t = n * t_coord / c of an event four-vector.
double coordinate_time(const FourVector& event, double refractive_index,
                       double light_speed);

/// Frame velocity v along +x in a medium where the signal speed is c/n.
/// Requires |v| < c/n so the material gamma stays real.
struct MaterialBoost {
  MaterialBoost(double velocity, double refractive_index, double light_speed);
  double v;
  double n;
  double c;
};

/// Material Lorentz factor 1 / sqrt(1 - n^2 v^2 / c^2).
double gamma(const MaterialBoost& boost);

/// Maps a primed-frame event to the unprimed frame:
///   x = gamma (x' + v t'),  t = gamma (t' + n^2 v x' / c^2),  y, z unchanged.
/// In (ct/n, x) components this is the standard boost with beta = n v / c.
FourVector boost_event(const FourVector& event_primed, const MaterialBoost& boost);

/// Invariant interval dx^2 + dy^2 + dz^2 - (c/n)^2 dt^2 of a separation,
/// with (c/n) dt being the stored t_coord difference.
double interval_squared(const FourVector& separation);

/// Proper-time interval dtau = dt / (gamma n).
double proper_time_step(double dt, double v, double refractive_index,
                        double light_speed);

/// Sampled particle trajectory in a medium. Times must be strictly
/// increasing and interior central-difference speeds below c/n.
struct Worldline {
  Worldline(std::vector<double> times, std::vector<Eigen::Vector3d> positions,
            double rest_mass, double refractive_index, double light_speed);
  std::vector<double> times;
  std::vector<Eigen::Vector3d> positions;
  double rest_mass;
  double refractive_index;
  double light_speed;
};

struct FourKinematics {
  FourVector velocity;  // U = gamma c (1, dx/d(ct/n), ...)
  FourVector momentum;  // P = m0 U
  FourVector force;     // F = dP/dt * dt/dtau
};

/// Four-velocity, four-momentum, and four-force at a sample index, using
/// central differences. The force stencil needs two neighbors on each side,
/// so index must lie in [2, size-3].
FourKinematics four_kinematics(const Worldline& w, Eigen::Index index);

/// Nonrelativistic medium momentum p = n m xdot.
Eigen::Vector3d three_momentum_nonrel(double mass, const Eigen::Vector3d& xdot,
                                      double refractive_index);

}  // namespace dielqed::relativity
