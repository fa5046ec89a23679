#include <dielqed/verification.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <iterator>
#include <random>
#include <stdexcept>
#include <vector>

#include <dielqed/fock.hpp>
#include <dielqed/lagrangian.hpp>
#include <dielqed/modes.hpp>
#include <dielqed/plane_wave.hpp>
#include <dielqed/quantize.hpp>
#include <dielqed/relativity.hpp>

namespace dielqed::verify {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

double deviation_from_scaled_identity(const Eigen::MatrixXcd& m,
                                      std::complex<double> scale) {
  return max_abs(m - scale * Eigen::MatrixXcd::Identity(m.rows(), m.cols()));
}

double hermiticity_defect(const Eigen::MatrixXcd& m) {
  return max_abs(m - m.adjoint());
}

Eigen::VectorXd scalar1(double v) {
  Eigen::VectorXd x(1);
  x << v;
  return x;
}

// Fourth-order integration of qddot = accel(q), sampling nodes `step` apart.
std::vector<double> rk4_positions(double q0, double w0,
                                  const std::function<double(double)>& accel,
                                  double step, int nodes, int substeps) {
  std::vector<double> qs;
  qs.reserve(nodes);
  double q = q0;
  double w = w0;
  qs.push_back(q);
  const double h = step / substeps;
  for (int i = 1; i < nodes; ++i) {
    for (int s = 0; s < substeps; ++s) {
      const double k1q = w, k1w = accel(q);
      const double k2q = w + 0.5 * h * k1w, k2w = accel(q + 0.5 * h * k1q);
      const double k3q = w + 0.5 * h * k2w, k3w = accel(q + 0.5 * h * k2q);
      const double k4q = w + h * k3w, k4w = accel(q + h * k3q);
      q += h / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
      w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    }
    qs.push_back(q);
  }
  return qs;
}

relativity::Worldline uniform_line(double xdot, double n, double c) {
  std::vector<double> times;
  std::vector<Eigen::Vector3d> positions;
  for (int i = 0; i < 9; ++i) {
    const double t = 0.01 * i;
    times.push_back(t);
    positions.emplace_back(xdot * t, 0.0, 0.0);
  }
  return relativity::Worldline(times, positions, 1.0, n, c);
}

modes::ModeSet standard_modes(double c) {
  return modes::ModeSet(Eigen::Vector3d(1.0, 1.0, 1.0),
                        {Eigen::Vector3i(0, 0, 1), Eigen::Vector3i(1, 0, 0),
                         Eigen::Vector3i(1, 1, 0)},
                        1.5, c);
}

double check_truncation_safe_commutator(const VerifyOptions& o) {
  double worst = 0.0;
  for (Eigen::Index dim : {Eigen::Index(3), Eigen::Index(5), Eigen::Index(8),
                           Eigen::Index(13), o.dim}) {
    const fock::FockSpace space(dim);
    const fock::LadderPair pair = fock::boson_pair(space);
    worst = std::max(
        worst, deviation_from_scaled_identity(
                   fock::safe_block(fock::commutator(pair.lowering, pair.raising)),
                   1.0));
  }
  return worst;
}

double check_polariton_scaling(const VerifyOptions& o) {
  const fock::FockSpace space(o.dim);
  double worst = 0.0;
  for (double n : {1.0, 1.33, 1.5, 2.0, 2.4}) {
    const fock::LadderPair pair = fock::polariton_pair(space, n);
    worst = std::max(
        worst, deviation_from_scaled_identity(
                   fock::safe_block(fock::commutator(pair.lowering, pair.raising)), n));
  }
  return worst;
}

double check_quadrature_scaling(const VerifyOptions& o) {
  const fock::FockSpace space(o.dim);
  const double omega = 1.3;
  const std::complex<double> i_hbar(0.0, o.hbar);
  double worst = 0.0;
  for (double n : {1.0, 1.5, 2.4}) {
    const auto [p_pol, q_pol] =
        fock::quadratures(fock::polariton_pair(space, n), omega, o.hbar);
    worst = std::max(worst, deviation_from_scaled_identity(
                                fock::safe_block(fock::commutator(q_pol, p_pol)),
                                n * i_hbar));
  }
  const auto [p_boson, q_boson] =
      fock::quadratures(fock::boson_pair(space), omega, o.hbar);
  worst = std::max(worst, deviation_from_scaled_identity(
                              fock::safe_block(fock::commutator(q_boson, p_boson)),
                              i_hbar));
  return worst;
}

double check_spectrum_linearity(const VerifyOptions& o) {
  const fock::FockSpace space(o.dim);
  const double omega = 1.3;
  const Eigen::Index half = o.dim / 2;
  double worst = 0.0;
  for (double n : {1.0, 1.5, 2.0}) {
    const Eigen::VectorXd corrected = fock::spectrum(
        fock::hamiltonian(fock::Scheme::Corrected, fock::boson_pair(space), n, omega,
                          o.hbar));
    const Eigen::VectorXd standard = fock::spectrum(
        fock::hamiltonian(fock::Scheme::Ginzburg, fock::boson_pair(space), n, omega,
                          o.hbar));
    for (Eigen::Index m = 0; m < half; ++m) {
      const double level = (m + 0.5) * o.hbar * omega;
      worst = std::max(worst, std::abs(corrected(m) - n * level) / (n * level));
      worst = std::max(worst, std::abs(standard(m) - level) / level);
    }
  }
  return worst;
}

double check_hermiticity(const VerifyOptions& o) {
  const fock::FockSpace space(o.dim);
  const double omega = 1.3;
  const double n = 1.7;
  double worst = 0.0;
  for (const fock::LadderPair& pair :
       {fock::boson_pair(space), fock::polariton_pair(space, n)}) {
    const auto [p, q] = fock::quadratures(pair, omega, o.hbar);
    worst = std::max({worst, hermiticity_defect(p), hermiticity_defect(q)});
  }
  for (fock::Scheme scheme : {fock::Scheme::Ginzburg, fock::Scheme::Corrected}) {
    worst = std::max(worst, hermiticity_defect(fock::hamiltonian(
                                scheme, fock::boson_pair(space), n, omega, o.hbar)));
  }
  return worst;
}

double check_wave_equation(const VerifyOptions& o) {
  const fields::PlaneWave wave(1.2, 2.1, 1.6, 0.4, Eigen::Vector3d::UnitX(), o.c);
  const double k = wave.wavenumber();
  const double dz = 1e-4 * kTwoPi / k;
  const double dt = 1e-4 * kTwoPi / wave.omega;
  const double n2_c2 =
      wave.refractive_index * wave.refractive_index / (o.c * o.c);
  auto a_x = [&](double z, double t) {
    return fields::sample_fields(wave, z, t).vector_potential.x();
  };
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> pick(0.0, 5.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double z = pick(rng);
    const double t = pick(rng);
    const double a_zz = (a_x(z + dz, t) - 2.0 * a_x(z, t) + a_x(z - dz, t)) / (dz * dz);
    const double a_tt = (a_x(z, t + dt) - 2.0 * a_x(z, t) + a_x(z, t - dt)) / (dt * dt);
    worst = std::max(worst,
                     std::abs(a_zz - n2_c2 * a_tt) / (k * k * wave.amplitude));
  }
  return worst;
}

double check_flux_continuity(const VerifyOptions& o) {
  std::mt19937_64 rng(1844);
  std::uniform_real_distribution<double> index(1.0, 3.0);
  std::uniform_real_distribution<double> amp(0.05, 2.0);
  const double omega = 1.7;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const double n1 = index(rng);
    const double n2 = index(rng);
    const double a = amp(rng);
    const fields::PlaneWave incident(a, omega, n1, 0.0, Eigen::Vector3d::UnitX(), o.c);
    const double reference = fields::time_averaged_flux(incident);
    const double residual = fields::flux_continuity_residual(
        fields::MediumInterface(n1, n2), a, omega, o.c);
    worst = std::max(worst, std::abs(residual) / reference);
  }
  return worst;
}

double check_amplitude_chain(const VerifyOptions&) {
  const double triples[][3] = {{1.0, 1.7, 2.6}, {1.2, 2.9, 1.4}, {2.0, 1.01, 3.0}};
  double worst = 0.0;
  for (const auto& t : triples) {
    const double via = fields::refracted_amplitude(
        fields::refracted_amplitude(1.3, fields::MediumInterface(t[0], t[1])),
        fields::MediumInterface(t[1], t[2]));
    const double direct =
        fields::refracted_amplitude(1.3, fields::MediumInterface(t[0], t[2]));
    worst = std::max(worst, std::abs(via - direct) / direct);
  }
  return worst;
}

double check_energy_density_ratio(const VerifyOptions& o) {
  const fields::PlaneWave vacuum_wave(0.9, 1.9, 1.0, 0.3, Eigen::Vector3d::UnitX(), o.c);
  const double vacuum_density = fields::energy_density(vacuum_wave);
  double worst = 0.0;
  for (double n = 1.0; n <= 3.0 + 1e-9; n += 0.25) {
    const fields::PlaneWave medium_wave(0.9 / std::sqrt(n), 1.9, n, 0.3,
                                        Eigen::Vector3d::UnitX(), o.c);
    const double ratio = fields::energy_density(medium_wave) / vacuum_density;
    worst = std::max(worst, std::abs(ratio - n) / n);
  }
  return worst;
}

double check_interval_invariance(const VerifyOptions& o) {
  std::mt19937_64 rng(7711);
  std::uniform_real_distribution<double> index(1.0, 3.0);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> stamp(0.1, 2.0);
  std::uniform_real_distribution<double> speed(-0.9, 0.9);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const double n = index(rng);
    const relativity::MaterialBoost boost(speed(rng) * o.c / n, n, o.c);
    const relativity::FourVector x1 = relativity::event_from_time(
        stamp(rng), Eigen::Vector3d(coord(rng), coord(rng), coord(rng)), n, o.c);
    const relativity::FourVector x2 = relativity::event_from_time(
        stamp(rng), Eigen::Vector3d(coord(rng), coord(rng), coord(rng)), n, o.c);
    const relativity::FourVector separation = x2 - x1;
    const double before = relativity::interval_squared(separation);
    const double after = relativity::interval_squared(
        relativity::boost_event(x2, boost) - relativity::boost_event(x1, boost));
    const double scale = separation.t_coord * separation.t_coord +
                         separation.spatial.squaredNorm();
    worst = std::max(worst, std::abs(after - before) / scale);
  }
  return worst;
}

double check_light_cone(const VerifyOptions& o) {
  double worst = 0.0;
  const Eigen::Vector3d directions[] = {Eigen::Vector3d::UnitX(),
                                        Eigen::Vector3d(0.6, 0.8, 0.0),
                                        Eigen::Vector3d(2.0 / 3, -2.0 / 3, 1.0 / 3)};
  for (double n : {1.0, 1.5, 2.4}) {
    for (double fraction : {0.4, -0.35}) {
      const relativity::MaterialBoost boost(fraction * o.c / n, n, o.c);
      const relativity::FourVector base = relativity::event_from_time(
          0.2, Eigen::Vector3d(0.1, -0.3, 0.5), n, o.c);
      for (const auto& direction : directions) {
        const double span = 1.3;
        const relativity::FourVector tip{base.t_coord + span,
                                         base.spatial + span * direction};
        const double after = relativity::interval_squared(
            relativity::boost_event(tip, boost) - relativity::boost_event(base, boost));
        worst = std::max(worst, std::abs(after));
      }
    }
  }
  return worst;
}

double check_round_trip(const VerifyOptions& o) {
  double worst = 0.0;
  for (double n : {1.0, 1.8, 2.6}) {
    for (double fraction : {0.45, -0.3}) {
      const double v = fraction * o.c / n;
      const relativity::FourVector event{1.3, Eigen::Vector3d(0.7, -0.2, 0.5)};
      const relativity::FourVector back = relativity::boost_event(
          relativity::boost_event(event, relativity::MaterialBoost(v, n, o.c)),
          relativity::MaterialBoost(-v, n, o.c));
      worst = std::max({worst, std::abs(back.t_coord - event.t_coord),
                        (back.spatial - event.spatial).cwiseAbs().maxCoeff()});
    }
  }
  return worst;
}

double check_vacuum_reduction(const VerifyOptions& o) {
  return std::abs(relativity::gamma(relativity::MaterialBoost(0.6 * o.c, 1.0, o.c)) -
                  1.25);
}

double check_nonrelativistic_limit(const VerifyOptions& o) {
  const double n = 2.0;
  auto momentum_error = [&](double xdot) {
    const relativity::Worldline line = uniform_line(xdot, n, o.c);
    return std::abs(
        relativity::four_kinematics(line, 4).momentum.spatial.x() / (n * xdot) - 1.0);
  };
  const double coarse = momentum_error(0.08 * o.c);
  const double fine = momentum_error(0.04 * o.c);
  return std::abs(4.0 * fine / coarse - 1.0);
}

double check_oracle_equivalence(const VerifyOptions&) {
  const lagrange::LagrangianFunction poly = [](const Eigen::VectorXd& q,
                                               const Eigen::VectorXd& qd, double) {
    return 0.3 * qd(0) * qd(0) * qd(0) + 0.8 * qd(0) * q(0) - 1.1 * qd(0) + q(0) * q(0);
  };
  const double points[][2] = {{0.2, 0.7}, {-1.1, 0.4}, {1.5, -0.9}};
  double worst = 0.0;
  for (const auto& pt : points) {
    const double numeric =
        lagrange::canonical_momentum(poly, scalar1(pt[0]), scalar1(pt[1]), 0);
    const double exact = 0.9 * pt[1] * pt[1] + 0.8 * pt[0] - 1.1;
    worst = std::max(worst, std::abs(numeric - exact) / std::abs(exact));
  }
  return worst;
}

double check_free_particle_law(const VerifyOptions&) {
  double worst = 0.0;
  for (double m : {0.5, 1.0, 2.0}) {
    const lagrange::LagrangianFunction free_particle =
        [m](const Eigen::VectorXd&, const Eigen::VectorXd& qd, double) {
          return 0.5 * m * qd(0) * qd(0);
        };
    for (double n : {1.0, 1.5, 2.0}) {
      for (double xdot : {0.01, 0.1}) {
        const double numeric = lagrange::canonical_momentum(
            free_particle, scalar1(0.0), scalar1(n * xdot), 0);
        worst = std::max(worst, std::abs(numeric - m * n * xdot) / (m * n * xdot));
      }
    }
  }
  return worst;
}

double check_euler_lagrange_oscillator(const VerifyOptions&) {
  const lagrange::LagrangianFunction oscillator =
      [](const Eigen::VectorXd& q, const Eigen::VectorXd& qd, double) {
        return 0.5 * qd(0) * qd(0) - 0.5 * q(0) * q(0);
      };
  const int nodes = 1000;
  const double t_span = 1.0;
  double worst = 0.0;
  for (double n : {1.0, 1.5, 2.0}) {
    // q(t) = cos(t/n) sampled on a uniform coordinate-time grid; the engine
    // works in tau = t/n, where the trajectory is cos(tau).
    const double tau_step = t_span / n / (nodes - 1);
    Eigen::MatrixXd samples(nodes, 1);
    for (int i = 0; i < nodes; ++i) samples(i, 0) = std::cos(i * tau_step);
    const lagrange::TrajectoryGrid grid(0.0, tau_step, samples);
    worst = std::max(worst, lagrange::euler_lagrange_residual(oscillator, grid, 0)
                                .cwiseAbs()
                                .maxCoeff());
  }
  return worst;
}

double check_lagrange_vacuum_reduction(const VerifyOptions&) {
  const lagrange::LagrangianFunction free_particle =
      [](const Eigen::VectorXd&, const Eigen::VectorXd& qd, double) {
        return 0.5 * qd(0) * qd(0);
      };
  Eigen::MatrixXd line(12, 1);
  for (int i = 0; i < 12; ++i) line(i, 0) = 0.3 + 0.7 * (0.05 * i);
  const double straight =
      lagrange::euler_lagrange_residual(free_particle, lagrange::TrajectoryGrid(0.0, 0.05, line), 0)
          .cwiseAbs()
          .maxCoeff();

  lagrange::GeneralizedSystem balanced;
  balanced.positions = {[](const Eigen::VectorXd& q, double) {
                          return Eigen::Vector3d(q(0), 0.0, 0.0);
                        },
                        [](const Eigen::VectorXd& q, double) {
                          return Eigen::Vector3d(-q(0), 0.0, 0.0);
                        }};
  balanced.masses = {1.0, 0.5};
  const std::vector<Eigen::Vector3d> forces = {Eigen::Vector3d(0.4, 0.0, 0.0),
                                               Eigen::Vector3d(0.4, 0.0, 0.0)};
  const double still = std::abs(lagrange::dalembert_residual(
      balanced, forces, lagrange::TrajectoryGrid(0.0, 0.1, Eigen::MatrixXd::Constant(7, 1, 0.2)),
      scalar1(1.0)));
  return std::max(straight, still);
}

double check_dalembert_pendulum(const VerifyOptions&) {
  const double length = 1.3;
  const double mass = 0.7;
  const double g = 1.0;
  const int nodes = 501;
  const double step = 2e-3;
  const std::vector<double> path = rk4_positions(
      0.3, 0.0, [&](double q) { return -(g / length) * std::sin(q); }, step, nodes, 10);
  Eigen::MatrixXd samples(nodes, 1);
  for (int i = 0; i < nodes; ++i) samples(i, 0) = path[i];

  lagrange::GeneralizedSystem pendulum;
  pendulum.positions = {[length](const Eigen::VectorXd& q, double) {
    return Eigen::Vector3d(length * std::sin(q(0)), -length * std::cos(q(0)), 0.0);
  }};
  pendulum.masses = {mass};
  const std::vector<Eigen::Vector3d> forces = {Eigen::Vector3d(0.0, -mass * g, 0.0)};
  return std::abs(lagrange::dalembert_residual(
      pendulum, forces, lagrange::TrajectoryGrid(0.0, step, samples), scalar1(1.0)));
}

double check_time_rescaling(const VerifyOptions&) {
  const double n = 1.5;
  const int nodes = 801;
  const double tau_step = 2.0 / (nodes - 1);
  // Same oscillator once in proper time and once in coordinate time with the
  // acceleration and the step both rescaled by the medium factor.
  const std::vector<double> in_tau =
      rk4_positions(1.0, 0.0, [](double q) { return -q; }, tau_step, nodes, 1);
  const std::vector<double> in_t = rk4_positions(
      1.0, 0.0, [n](double q) { return -q / (n * n); }, n * tau_step, nodes, 1);
  double worst = 0.0;
  for (int i = 0; i < nodes; ++i)
    worst = std::max(worst, std::abs(in_tau[i] - in_t[i]));
  return worst;
}

int quadrature_grid(const modes::ModeSet& set, const VerifyOptions& o) {
  return o.grid > 0 ? o.grid : set.min_grid_size();
}

double check_orthonormality(const VerifyOptions& o) {
  const modes::ModeSet set = standard_modes(o.c);
  return modes::orthonormality_residual(set, quadrature_grid(set, o));
}

double check_curl_identity(const VerifyOptions& o) {
  const modes::ModeSet set = standard_modes(o.c);
  const int grid = quadrature_grid(set, o);
  double worst = 0.0;
  for (std::size_t l = 0; l < set.list.size(); ++l)
    for (int lam = 1; lam <= 2; ++lam)
      for (std::size_t lp = 0; lp < set.list.size(); ++lp)
        for (int lamp = 1; lamp <= 2; ++lamp)
          worst = std::max(worst,
                           modes::curl_identity_residual(set, l, lam, lp, lamp, grid));
  return worst;
}

double check_discrete_lagrangian(const VerifyOptions& o) {
  const modes::ModeSet set = standard_modes(o.c);
  const int grid = quadrature_grid(set, o);
  const double n2 = set.refractive_index * set.refractive_index;
  double worst = 0.0;
  for (std::size_t l = 0; l < set.list.size(); ++l) {
    for (int lam = 1; lam <= 2; ++lam) {
      const auto [velocity_coeff, coordinate_coeff] =
          modes::discrete_lagrangian_coefficients(set, l, lam, grid);
      const double omega2 = set.list[l].omega * set.list[l].omega;
      worst = std::max(worst, std::abs(velocity_coeff - n2) / n2);
      worst = std::max(worst, std::abs(coordinate_coeff - n2 * omega2) / (n2 * omega2));
    }
  }
  return worst;
}

double check_hamiltonian_form(const VerifyOptions&) {
  double worst = 0.0;
  for (double n : {1.0, 1.4, 2.0, 2.6}) {
    for (double omega : {1.0, 2.2}) {
      const auto standard =
          quantize::transformed_hamiltonian_form(quantize::Scheme::Ginzburg, n, omega);
      worst = std::max(worst, std::abs(standard.momentum_coeff - 1.0));
      worst = std::max(worst,
                       std::abs(standard.coordinate_coeff - omega * omega) /
                           (omega * omega));
      const auto corrected =
          quantize::transformed_hamiltonian_form(quantize::Scheme::Corrected, n, omega);
      worst = std::max(worst,
                       std::abs(corrected.frequency() - n * omega) / (n * omega));
    }
    for (quantize::Scheme scheme :
         {quantize::Scheme::Ginzburg, quantize::Scheme::Corrected}) {
      const auto pair = quantize::canonical_transform(scheme, n, 1.37, 0.82);
      worst = std::max(worst, std::abs(pair.momentum * pair.coordinate - 1.37 * 0.82) /
                                  (1.37 * 0.82));
    }
  }
  return worst;
}

double check_correspondence_dichotomy(const VerifyOptions& o) {
  const double grid[] = {1.0, 1.33, 1.5, 2.0, 2.4, 3.0};
  double worst = 0.0;
  for (double n1 : grid) {
    for (double n2 : grid) {
      worst = std::max(worst,
                       quantize::correspondence_residual(quantize::Scheme::Corrected,
                                                         n1, n2, 1.3, 2.0, o.hbar, o.c));
      const double standard = quantize::correspondence_residual(
          quantize::Scheme::Ginzburg, n1, n2, 1.3, 2.0, o.hbar, o.c);
      const double expected = std::abs(n2 / n1 - std::sqrt(n2 / n1));
      worst = std::max(worst, std::abs(standard - expected));
    }
  }
  return worst;
}

double check_prefactor_ratio(const VerifyOptions& o) {
  double worst = 0.0;
  for (double n = 1.0; n <= 3.0 + 1e-9; n += 0.25) {
    const double standard = quantize::field_prefactor(quantize::Scheme::Ginzburg, n,
                                                      1.7, 2.0, o.hbar, o.c);
    const double corrected = quantize::field_prefactor(quantize::Scheme::Corrected, n,
                                                       1.7, 2.0, o.hbar, o.c);
    worst = std::max(worst, std::abs(standard / corrected * std::sqrt(n) - 1.0));
  }
  return worst;
}

double check_energy_density_correspondence(const VerifyOptions& o) {
  const fields::PlaneWave vacuum_wave(1.0, 2.0, 1.0, 0.0, Eigen::Vector3d::UnitX(),
                                      o.c);
  const double vacuum_density = fields::energy_density(vacuum_wave);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double n = 1.0 + 2.0 * i / 19.0;
    const fields::PlaneWave medium_wave(1.0 / std::sqrt(n), 2.0, n, 0.0,
                                        Eigen::Vector3d::UnitX(), o.c);
    const double classical = fields::energy_density(medium_wave) / vacuum_density;
    worst = std::max(worst,
                     std::abs(quantize::energy_ratio(quantize::Scheme::Corrected, n,
                                                     o.dim) -
                              classical));
    worst = std::max(
        worst,
        std::abs(quantize::energy_ratio(quantize::Scheme::Ginzburg, n, o.dim) - 1.0));
  }
  return worst;
}

}  // namespace

std::vector<CheckResult> run_all_checks(const VerifyOptions& options) {
  if (!(options.hbar > 0.0))
    throw std::invalid_argument("hbar must be positive");
  if (!(options.c > 0.0))
    throw std::invalid_argument("light speed must be positive");
  if (options.grid < 0)
    throw std::invalid_argument("grid size must be nonnegative");

  struct Entry {
    const char* name;
    double tolerance;
    double (*run)(const VerifyOptions&);
  };
  const Entry registry[] = {
      {"fock.truncation_safe_commutator", 1e-12, check_truncation_safe_commutator},
      {"fock.polariton_scaling", 1e-12, check_polariton_scaling},
      {"fock.quadrature_scaling", 1e-12, check_quadrature_scaling},
      {"fock.spectrum_linearity", 1e-10, check_spectrum_linearity},
      {"fock.hermiticity", 1e-12, check_hermiticity},
      {"fields.wave_equation", 1e-6, check_wave_equation},
      {"fields.flux_continuity", 1e-10, check_flux_continuity},
      {"fields.amplitude_chain", 1e-12, check_amplitude_chain},
      {"fields.energy_density_ratio", 1e-12, check_energy_density_ratio},
      {"relativity.interval_invariance", 1e-9, check_interval_invariance},
      {"relativity.light_cone", 1e-10, check_light_cone},
      {"relativity.round_trip", 1e-10, check_round_trip},
      {"relativity.vacuum_reduction", 1e-12, check_vacuum_reduction},
      {"relativity.nonrelativistic_limit", 0.05, check_nonrelativistic_limit},
      {"lagrange.oracle_equivalence", 1e-8, check_oracle_equivalence},
      {"lagrange.free_particle_law", 1e-8, check_free_particle_law},
      {"lagrange.euler_lagrange_oscillator", 1e-6, check_euler_lagrange_oscillator},
      {"lagrange.vacuum_reduction", 1e-8, check_lagrange_vacuum_reduction},
      {"lagrange.dalembert_pendulum", 1e-6, check_dalembert_pendulum},
      {"lagrange.time_rescaling", 1e-10, check_time_rescaling},
      {"modes.orthonormality", 1e-12, check_orthonormality},
      {"modes.curl_identity", 1e-12, check_curl_identity},
      {"quantize.discrete_lagrangian", 1e-10, check_discrete_lagrangian},
      {"quantize.hamiltonian_form", 1e-12, check_hamiltonian_form},
      {"quantize.correspondence_dichotomy", 1e-12, check_correspondence_dichotomy},
      {"quantize.prefactor_ratio", 1e-12, check_prefactor_ratio},
      {"quantize.energy_density_correspondence", 1e-12,
       check_energy_density_correspondence},
  };

  std::vector<CheckResult> results;
  results.reserve(std::size(registry));
  for (const Entry& entry : registry) {
    const double residual = entry.run(options);
    const double tolerance = options.tolerance_override > 0.0
                                 ? options.tolerance_override
                                 : entry.tolerance;
    results.push_back({entry.name, residual, tolerance, residual < tolerance});
  }
  return results;
}

}  // namespace dielqed::verify
