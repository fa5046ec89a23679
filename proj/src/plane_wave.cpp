#include <dielqed/plane_wave.hpp>

#include <cmath>
#include <stdexcept>

namespace dielqed::fields {

PlaneWave::PlaneWave(double amplitude_, double omega_, double refractive_index_,
                     double phase_, const Eigen::Vector3d& polarization_,
                     double light_speed_)
    : amplitude(amplitude_),
      omega(omega_),
      refractive_index(refractive_index_),
      phase(phase_),
      polarization(polarization_),
      light_speed(light_speed_) {
  if (!(omega > 0.0)) throw std::invalid_argument("PlaneWave: omega must be positive");
  if (!(refractive_index >= 1.0))
    throw std::invalid_argument("PlaneWave: refractive index must be >= 1");
  if (!(light_speed > 0.0))
    throw std::invalid_argument("PlaneWave: light speed must be positive");
  if (std::abs(polarization.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("PlaneWave: polarization must be a unit vector");
  if (std::abs(polarization.z()) > 1e-12)
    throw std::invalid_argument("PlaneWave: polarization must be transverse to z");
}

MediumInterface::MediumInterface(double n_in, double n_out) : n1(n_in), n2(n_out) {
  if (!(n1 >= 1.0) || !(n2 >= 1.0))
    throw std::invalid_argument("MediumInterface: refractive indices must be >= 1");
}

FieldSample sample_fields(const PlaneWave& wave, double z, double t) {
  const double k = wave.wavenumber();
  const double arg = -wave.omega * t + k * z + wave.phase;
  const Eigen::Vector3d z_hat(0.0, 0.0, 1.0);
  FieldSample sample;
  sample.vector_potential = wave.amplitude * std::cos(arg) * wave.polarization;
  // E = -(1/c) dA/dt; d/dt cos(arg) = omega sin(arg).
  sample.electric =
      -(wave.amplitude * wave.omega / wave.light_speed) * std::sin(arg) * wave.polarization;
  // B = curl A = d/dz [A_f cos(arg)] (zhat x e) = -A_f k sin(arg) (zhat x e).
  sample.magnetic = -wave.amplitude * k * std::sin(arg) * z_hat.cross(wave.polarization);
  return sample;
}

double time_averaged_flux(const PlaneWave& wave) {
  constexpr int kSamples = 1024;
  const double period = 2.0 * M_PI / wave.omega;
  const double step = period / kSamples;
  double total = 0.0;
  for (int j = 0; j < kSamples; ++j) {
    const double t = (j + 0.5) * step;
    const FieldSample s = sample_fields(wave, 0.0, t);
    total += wave.light_speed * s.electric.cross(s.magnetic).z();
  }
  return total / kSamples;
}

double refracted_amplitude(double amplitude_in, const MediumInterface& interface) {
  return std::sqrt(interface.n1 / interface.n2) * amplitude_in;
}

double flux_continuity_residual(const MediumInterface& interface, double amplitude_in,
                                double omega, double light_speed) {
  const Eigen::Vector3d x_hat(1.0, 0.0, 0.0);
  const PlaneWave incident(amplitude_in, omega, interface.n1, 0.0, x_hat, light_speed);
  const PlaneWave transmitted(refracted_amplitude(amplitude_in, interface), omega,
                              interface.n2, 0.0, x_hat, light_speed);
  return time_averaged_flux(transmitted) - time_averaged_flux(incident);
}

double energy_density(const PlaneWave& wave) {
  const double n_omega_over_c = wave.refractive_index * wave.omega / wave.light_speed;
  return n_omega_over_c * n_omega_over_c * wave.amplitude * wave.amplitude;
}

}  // namespace dielqed::fields
