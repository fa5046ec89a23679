#include <dielqed/modes.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace dielqed::modes {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

std::array<Eigen::Vector3d, 2> transverse_frame(const Eigen::Vector3d& wavevector) {
  const Eigen::Vector3d direction = wavevector.normalized();
  Eigen::Index axis = 0;
  direction.cwiseAbs().minCoeff(&axis);
  const Eigen::Vector3d seed = Eigen::Vector3d::Unit(axis);
  const Eigen::Vector3d first =
      (seed - seed.dot(direction) * direction).normalized();
  return {first, direction.cross(first)};
}

void require_grid(const ModeSet& modes, int grid_size) {
  const int minimum = modes.min_grid_size();
  if (grid_size < minimum)
    throw std::invalid_argument("quadrature grid too coarse: need at least " +
                                std::to_string(minimum) + " points per axis");
}

const Mode& mode_at(const ModeSet& modes, std::size_t l, int lambda) {
  if (l >= modes.list.size())
    throw std::invalid_argument("mode index out of range");
  if (lambda != 1 && lambda != 2)
    throw std::invalid_argument("polarization index must be 1 or 2");
  return modes.list[l];
}

Eigen::Vector3cd plane_wave_value(const Mode& mode, int lambda, double inv_sqrt_volume,
                                  const Eigen::Vector3d& r) {
  const std::complex<double> phase =
      std::exp(std::complex<double>(0.0, mode.wavevector.dot(r)));
  return mode.polarization[static_cast<std::size_t>(lambda - 1)] *
         (phase * inv_sqrt_volume);
}

// Bilinear cross product. Eigen's cross() conjugates the result for complex
// scalars, which would flip signs in nested curls.
Eigen::Vector3cd real_cross(const Eigen::Vector3d& a, const Eigen::Vector3cd& b) {
  return Eigen::Vector3cd(a.y() * b.z() - a.z() * b.y(),
                          a.z() * b.x() - a.x() * b.z(),
                          a.x() * b.y() - a.y() * b.x());
}

// Analytic curl of a transverse plane-wave mode: the gradient acts as i k.
Eigen::Vector3cd analytic_curl(const Mode& mode, const Eigen::Vector3cd& value) {
  const std::complex<double> imag(0.0, 1.0);
  return imag * real_cross(mode.wavevector, value);
}

// Uniform left-endpoint quadrature over the box; exact for trigonometric
// integrands whose per-axis bandwidth stays below the grid size.
std::complex<double> box_quadrature(
    const ModeSet& modes, int grid_size,
    const std::function<std::complex<double>(const Eigen::Vector3d&)>& integrand) {
  std::complex<double> sum = 0.0;
  for (int ix = 0; ix < grid_size; ++ix) {
    for (int iy = 0; iy < grid_size; ++iy) {
      for (int iz = 0; iz < grid_size; ++iz) {
        const Eigen::Vector3d r(modes.box.x() * ix / grid_size,
                                modes.box.y() * iy / grid_size,
                                modes.box.z() * iz / grid_size);
        sum += integrand(r);
      }
    }
  }
  const double cell = modes.volume() / (static_cast<double>(grid_size) * grid_size *
                                        grid_size);
  return sum * cell;
}

}  // namespace

ModeSet::ModeSet(const Eigen::Vector3d& box_lengths,
                 const std::vector<Eigen::Vector3i>& wave_integers,
                 double refractive_index_, double light_speed_)
    : box(box_lengths), refractive_index(refractive_index_), light_speed(light_speed_) {
  if (!(box.minCoeff() > 0.0))
    throw std::invalid_argument("ModeSet: box lengths must be positive");
  if (!(refractive_index >= 1.0))
    throw std::invalid_argument("ModeSet: refractive index must be >= 1");
  if (!(light_speed > 0.0))
    throw std::invalid_argument("ModeSet: light speed must be positive");
  if (wave_integers.empty())
    throw std::invalid_argument("ModeSet: at least one mode required");
  list.reserve(wave_integers.size());
  for (const auto& m : wave_integers) {
    if (m == Eigen::Vector3i::Zero())
      throw std::invalid_argument("ModeSet: zero mode excluded");
    Mode mode;
    mode.integers = m;
    mode.wavevector = kTwoPi * m.cast<double>().cwiseQuotient(box);
    mode.omega = light_speed * mode.wavevector.norm() / refractive_index;
    mode.polarization = transverse_frame(mode.wavevector);
    list.push_back(std::move(mode));
  }
}

int ModeSet::min_grid_size() const {
  int max_component = 0;
  for (const auto& mode : list)
    max_component = std::max(max_component, mode.integers.cwiseAbs().maxCoeff());
  return 2 * max_component + 1;
}

Eigen::Vector3cd mode_function(const ModeSet& modes, std::size_t l, int lambda,
                               const Eigen::Vector3d& r) {
  const Mode& mode = mode_at(modes, l, lambda);
  return plane_wave_value(mode, lambda, 1.0 / std::sqrt(modes.volume()), r);
}

double orthonormality_residual(const ModeSet& modes, int grid_size) {
  require_grid(modes, grid_size);
  const double inv_sqrt_volume = 1.0 / std::sqrt(modes.volume());
  double worst = 0.0;
  for (std::size_t l = 0; l < modes.list.size(); ++l) {
    for (int lam = 1; lam <= 2; ++lam) {
      for (std::size_t lp = 0; lp < modes.list.size(); ++lp) {
        for (int lamp = 1; lamp <= 2; ++lamp) {
          const std::complex<double> overlap =
              box_quadrature(modes, grid_size, [&](const Eigen::Vector3d& r) {
                const Eigen::Vector3cd u =
                    plane_wave_value(modes.list[l], lam, inv_sqrt_volume, r);
                const Eigen::Vector3cd up =
                    plane_wave_value(modes.list[lp], lamp, inv_sqrt_volume, r);
                return u.dot(up);  // Eigen conjugates the left factor.
              });
          const double expected = (l == lp && lam == lamp) ? 1.0 : 0.0;
          worst = std::max(worst, std::abs(overlap - expected));
        }
      }
    }
  }
  return worst;
}

double curl_identity_residual(const ModeSet& modes, std::size_t l, int lambda,
                              std::size_t l_prime, int lambda_prime, int grid_size) {
  require_grid(modes, grid_size);
  const Mode& left = mode_at(modes, l, lambda);
  const Mode& right = mode_at(modes, l_prime, lambda_prime);
  const double inv_sqrt_volume = 1.0 / std::sqrt(modes.volume());

  const std::complex<double> curl_curl_side =
      box_quadrature(modes, grid_size, [&](const Eigen::Vector3d& r) {
        const Eigen::Vector3cd curl_u =
            analytic_curl(left, plane_wave_value(left, lambda, inv_sqrt_volume, r));
        const Eigen::Vector3cd curl_up = analytic_curl(
            right, plane_wave_value(right, lambda_prime, inv_sqrt_volume, r));
        return curl_u.dot(curl_up);
      });

  const std::complex<double> double_curl_side =
      box_quadrature(modes, grid_size, [&](const Eigen::Vector3d& r) {
        const Eigen::Vector3cd up = plane_wave_value(right, lambda_prime,
                                                     inv_sqrt_volume, r);
        const Eigen::Vector3cd double_curl = analytic_curl(right, analytic_curl(right, up));
        return plane_wave_value(left, lambda, inv_sqrt_volume, r).dot(double_curl);
      });

  return std::abs(curl_curl_side - double_curl_side);
}

std::pair<double, double> discrete_lagrangian_coefficients(const ModeSet& modes,
                                                           std::size_t l, int lambda,
                                                           int grid_size) {
  require_grid(modes, grid_size);
  const Mode& mode = mode_at(modes, l, lambda);
  const double inv_sqrt_volume = 1.0 / std::sqrt(modes.volume());
  const double n2 = modes.refractive_index * modes.refractive_index;

  const std::complex<double> norm =
      box_quadrature(modes, grid_size, [&](const Eigen::Vector3d& r) {
        const Eigen::Vector3cd u = plane_wave_value(mode, lambda, inv_sqrt_volume, r);
        return u.dot(u);
      });
  const std::complex<double> curl_norm =
      box_quadrature(modes, grid_size, [&](const Eigen::Vector3d& r) {
        const Eigen::Vector3cd curl_u =
            analytic_curl(mode, plane_wave_value(mode, lambda, inv_sqrt_volume, r));
        return curl_u.dot(curl_u);
      });

  const double c2 = modes.light_speed * modes.light_speed;
  return {n2 * norm.real(), c2 * curl_norm.real()};
}

}  // namespace dielqed::modes
