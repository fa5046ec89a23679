#pragma once

#include <Eigen/Dense>

namespace dielqed::fields {

/// Forward-propagating transverse vector-potential wave along +z,
///   A(z, t) = amplitude * cos(-omega t + k z + phase) * polarization,
/// in a homogeneous medium of index n. The wavenumber k = n omega / c is
/// always derived, never stored.
struct PlaneWave {
  PlaneWave(double amplitude, double omega, double refractive_index, double phase,
            const Eigen::Vector3d& polarization, double light_speed);

  double amplitude;
  double omega;
  double refractive_index;
  double phase;
  Eigen::Vector3d polarization;
  double light_speed;

  double wavenumber() const { return refractive_index * omega / light_speed; }
};

/// Planar interface at normal incidence in the reflection-free limit.
struct MediumInterface {
  MediumInterface(double n_in, double n_out);
  double n1;
  double n2;
};

struct FieldSample {
  Eigen::Vector3d vector_potential;
  Eigen::Vector3d electric;
  Eigen::Vector3d magnetic;
};

/// Analytic fields in the Gaussian convention E = -(1/c) dA/dt, B = curl A.
FieldSample sample_fields(const PlaneWave& wave, double z, double t);

/// Cycle average of the energy flux c (E x B)_z, computed by the midpoint
/// rule with 1024 samples over one period. Closed form: n w^2 A^2 / (2c).
double time_averaged_flux(const PlaneWave& wave);

/// Transmitted amplitude A2 = sqrt(n1/n2) * A1 for a reflectionless interface.
double refracted_amplitude(double amplitude_in, const MediumInterface& interface);

/// Transmitted minus incident cycle-averaged flux when the transmitted
/// amplitude is matched by refracted_amplitude. Zero within 1e-10 of the
/// incident flux for any valid interface.
double flux_continuity_residual(const MediumInterface& interface, double amplitude_in,
                                double omega, double light_speed);

/// Cycle-peak field energy density n^2 w^2 A^2 / c^2.
double energy_density(const PlaneWave& wave);

}  // namespace dielqed::fields
