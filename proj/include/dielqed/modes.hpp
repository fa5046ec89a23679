#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace dielqed::modes {

// One plane-wave cavity mode: k = 2*pi*(mx/Lx, my/Ly, mz/Lz) with two
// transverse polarization directions and dispersion omega = c|k|/n.
struct Mode {
  Eigen::Vector3i integers;
  Eigen::Vector3d wavevector;
  double omega = 0.0;
  std::array<Eigen::Vector3d, 2> polarization;
};

// Periodic-box mode family u_{l,lambda}(r) = e_{l,lambda} exp(i k_l.r)/sqrt(V).
//
// The first polarization vector of each mode is the normalized projection of
// the coordinate axis least aligned with k onto the plane transverse to k;
// the second closes the right-handed frame. This keeps the basis a
// deterministic function of the wavevector with no special cases away from
// the axes.
struct ModeSet {
  ModeSet(const Eigen::Vector3d& box_lengths,
          const std::vector<Eigen::Vector3i>& wave_integers, double refractive_index,
          double light_speed = 1.0);

  Eigen::Vector3d box;
  double refractive_index;
  double light_speed;
  std::vector<Mode> list;

  double volume() const { return box.prod(); }

  // Smallest uniform grid (points per axis) on which the pairwise quadratures
  // below are exact: one more than twice the largest integer component.
  int min_grid_size() const;
};

// Evaluates u_{l,lambda}(r). Mode index l is zero-based, lambda is 1 or 2.
Eigen::Vector3cd mode_function(const ModeSet& modes, std::size_t l, int lambda,
                               const Eigen::Vector3d& r);

// Max over mode pairs of |<u, u'> - delta| with the conjugated inner product
// evaluated by uniform-grid quadrature over the box. Grids below
// min_grid_size() are rejected because the quadrature is no longer exact.
double orthonormality_residual(const ModeSet& modes, int grid_size);

// |integral (curl u)* . (curl u') - integral u* . curl(curl u')| using the
// analytic curl of plane waves (ik x) and the same quadrature.
double curl_identity_residual(const ModeSet& modes, std::size_t l, int lambda,
                              std::size_t l_prime, int lambda_prime, int grid_size);

// Coefficients of (velocity^2, coordinate^2) in the per-mode Lagrangian
// obtained by inserting q(t) u(r) into the field Lagrangian: the quadratures
// n^2 integral |u|^2 and c^2 integral |curl u|^2.
std::pair<double, double> discrete_lagrangian_coefficients(const ModeSet& modes,
                                                           std::size_t l, int lambda,
                                                           int grid_size);

}  // namespace dielqed::modes
