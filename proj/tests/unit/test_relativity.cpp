#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <dielqed/relativity.hpp>

using namespace dielqed::relativity;

namespace {

Worldline uniform_worldline(const Eigen::Vector3d& velocity, double n, double c,
                            int samples = 9, double step = 0.01) {
  std::vector<double> times;
  std::vector<Eigen::Vector3d> positions;
  for (int i = 0; i < samples; ++i) {
    times.push_back(i * step);
    positions.push_back(i * step * velocity);
  }
  return Worldline(times, positions, 1.0, n, c);
}

Worldline circular_worldline(double radius, double angular_rate, double n, double c,
                             int samples = 9, double step = 0.01) {
  std::vector<double> times;
  std::vector<Eigen::Vector3d> positions;
  for (int i = 0; i < samples; ++i) {
    const double t = i * step;
    times.push_back(t);
    positions.emplace_back(radius * std::cos(angular_rate * t),
                           radius * std::sin(angular_rate * t), 0.0);
  }
  return Worldline(times, positions, 1.0, n, c);
}

double interval_drift(const FourVector& a, const FourVector& b, const MaterialBoost& boost) {
  const double before = interval_squared(a - b);
  const double after = interval_squared(boost_event(a, boost) - boost_event(b, boost));
  const FourVector d = a - b;
  const double scale = d.spatial.squaredNorm() + d.t_coord * d.t_coord;
  return std::abs(after - before) / scale;
}

}  // namespace

TEST_CASE("material gamma") {
  CHECK(gamma(MaterialBoost(0.0, 1.7, 1.0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gamma(MaterialBoost(0.4, 1.5, 1.0)) == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(gamma(MaterialBoost(0.6, 1.0, 1.0)) == doctest::Approx(1.25).epsilon(1e-12));
  CHECK_THROWS_AS(MaterialBoost(0.7, 1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(MaterialBoost(0.1, 0.9, 1.0), std::invalid_argument);
}

TEST_CASE("boost of events") {
  SUBCASE("zero velocity is the identity") {
    FourVector event = event_from_time(0.8, Eigen::Vector3d(0.1, -0.4, 2.0), 1.6, 1.0);
    FourVector mapped = boost_event(event, MaterialBoost(0.0, 1.6, 1.0));
    CHECK(std::abs(mapped.t_coord - event.t_coord) < 1e-15);
    CHECK((mapped.spatial - event.spatial).norm() < 1e-15);
  }

  SUBCASE("worked example") {
    const double n = 1.5, c = 1.0;
    FourVector event = event_from_time(1.0, Eigen::Vector3d::Zero(), n, c);
    FourVector mapped = boost_event(event, MaterialBoost(0.4, n, c));
    CHECK(coordinate_time(mapped, n, c) == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(mapped.spatial.x() == doctest::Approx(0.5).epsilon(1e-12));
  }

  SUBCASE("signal-speed wavefront maps onto itself") {
    const double n = 2.0, c = 1.0;
    const double t = 1.3;
    FourVector event = event_from_time(t, Eigen::Vector3d((c / n) * t, 0.0, 0.0), n, c);
    FourVector mapped = boost_event(event, MaterialBoost(0.3, n, c));
    CHECK(mapped.spatial.x() ==
          doctest::Approx((c / n) * coordinate_time(mapped, n, c)).epsilon(1e-12));
  }

  SUBCASE("transverse coordinates pass through") {
    FourVector event{0.4, Eigen::Vector3d(0.2, -1.0, 0.7)};
    FourVector mapped = boost_event(event, MaterialBoost(0.25, 1.5, 1.0));
    CHECK(mapped.spatial.y() == -1.0);
    CHECK(mapped.spatial.z() == 0.7);
  }

  SUBCASE("round trip returns the original event") {
    FourVector event{0.9, Eigen::Vector3d(0.3, 1.1, -0.5)};
    MaterialBoost there(0.35, 1.8, 1.0);
    MaterialBoost back(-0.35, 1.8, 1.0);
    FourVector cycled = boost_event(boost_event(event, there), back);
    CHECK(std::abs(cycled.t_coord - event.t_coord) < 1e-10);
    CHECK((cycled.spatial - event.spatial).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("invariant interval") {
  SUBCASE("purely spatial separation") {
    FourVector d{0.0, Eigen::Vector3d(3.0, 0.0, 0.0)};
    CHECK(interval_squared(d) == doctest::Approx(9.0).epsilon(1e-15));
  }

  SUBCASE("null separation stays null under boosts") {
    const double n = 1.5, c = 1.0;
    FourVector origin = event_from_time(0.0, Eigen::Vector3d::Zero(), n, c);
    FourVector front = event_from_time(2.0, Eigen::Vector3d(2.0 * c / n, 0.0, 0.0), n, c);
    CHECK(std::abs(interval_squared(front - origin)) < 1e-12);
    FourVector mapped_front = boost_event(front, MaterialBoost(0.5, n, c));
    FourVector mapped_origin = boost_event(origin, MaterialBoost(0.5, n, c));
    CHECK(std::abs(interval_squared(mapped_front - mapped_origin)) < 1e-10);
  }

  SUBCASE("interval preserved for random pairs and boosts") {
    std::mt19937_64 rng(7711);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> n_draw(1.0, 3.0);
    std::uniform_real_distribution<double> frac(-0.9, 0.9);
    for (int trial = 0; trial < 200; ++trial) {
      FourVector a{coord(rng), Eigen::Vector3d(coord(rng), coord(rng), coord(rng))};
      FourVector b{coord(rng), Eigen::Vector3d(coord(rng), coord(rng), coord(rng))};
      const double n = n_draw(rng);
      const double c = 1.0;
      MaterialBoost boost(frac(rng) * c / n, n, c);
      CHECK(interval_drift(a, b, boost) < 1e-9);
    }
  }
}

TEST_CASE("proper time") {
  CHECK(proper_time_step(1.0, 0.0, 2.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(proper_time_step(1.0, 0.0, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(proper_time_step(1.0, 0.4, 1.5, 1.0) ==
        doctest::Approx(1.0 / (1.25 * 1.5)).epsilon(1e-12));
  CHECK_THROWS_AS(proper_time_step(1.0, 0.9, 1.5, 1.0), std::invalid_argument);
}

TEST_CASE("four kinematics along worldlines") {
  SUBCASE("particle at rest") {
    Worldline rest = uniform_worldline(Eigen::Vector3d::Zero(), 1.5, 1.0);
    FourKinematics k = four_kinematics(rest, 4);
    CHECK(k.velocity.t_coord == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k.velocity.spatial.norm() < 1e-12);
    CHECK(k.momentum.t_coord == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k.force.t_coord == doctest::Approx(0.0));
    CHECK(k.force.spatial.norm() < 1e-10);
  }

  SUBCASE("uniform velocity reproduces the medium momentum") {
    const double n = 1.5, c = 1.0, xdot = 0.3;
    Worldline line = uniform_worldline(Eigen::Vector3d(xdot, 0.0, 0.0), n, c);
    FourKinematics k = four_kinematics(line, 4);
    const double g = gamma(MaterialBoost(xdot, n, c));
    CHECK(std::abs(k.momentum.spatial.x() - g * n * xdot) < 1e-6);
  }

  SUBCASE("circular motion matches the centripetal oracle") {
    const double n = 1.5, c = 1.0, radius = 1.0, rate = 0.3;
    Worldline circle = circular_worldline(radius, rate, n, c);
    FourKinematics k = four_kinematics(circle, 4);
    const double speed = radius * rate;
    const double g = gamma(MaterialBoost(speed, n, c));
    const double expected = g * g * n * n * radius * rate * rate;
    CHECK(k.force.spatial.norm() == doctest::Approx(expected).epsilon(1e-4));
  }

  SUBCASE("momentum error decays quadratically with speed") {
    const double n = 2.0, c = 1.0;
    auto momentum_error = [&](double xdot) {
      Worldline line = uniform_worldline(Eigen::Vector3d(xdot, 0.0, 0.0), n, c);
      return std::abs(four_kinematics(line, 4).momentum.spatial.x() / (n * xdot) - 1.0);
    };
    const double coarse = momentum_error(0.08);
    const double fine = momentum_error(0.04);
    CHECK(std::abs(4.0 * fine / coarse - 1.0) < 0.05);
  }

  SUBCASE("boundary and superluminal samples are rejected") {
    Worldline line = uniform_worldline(Eigen::Vector3d(0.1, 0.0, 0.0), 1.5, 1.0);
    CHECK_THROWS_AS(four_kinematics(line, 0), std::invalid_argument);
    CHECK_THROWS_AS(four_kinematics(line, 8), std::invalid_argument);
    CHECK_THROWS_AS(uniform_worldline(Eigen::Vector3d(0.7, 0.0, 0.0), 1.5, 1.0),
                    std::invalid_argument);
  }
}

TEST_CASE("nonrelativistic three-momentum") {
  CHECK(three_momentum_nonrel(1.0, Eigen::Vector3d(0.1, 0.0, 0.0), 1.5).x() ==
        doctest::Approx(0.15).epsilon(1e-14));
  CHECK((three_momentum_nonrel(1.3, Eigen::Vector3d(0.02, -0.01, 0.0), 1.0) -
         1.3 * Eigen::Vector3d(0.02, -0.01, 0.0))
            .norm() < 1e-15);
  Eigen::Vector3d p = three_momentum_nonrel(2.0, Eigen::Vector3d(0.1, 0.0, 0.2), 2.0);
  CHECK(p.x() == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(p.y() == 0.0);
  CHECK(p.z() == doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("worldline validation") {
  std::vector<double> times{0.0, 0.1, 0.1, 0.2, 0.3};
  std::vector<Eigen::Vector3d> positions(5, Eigen::Vector3d::Zero());
  CHECK_THROWS_AS(Worldline(times, positions, 1.0, 1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Worldline({0.0, 0.1}, {Eigen::Vector3d::Zero()}, 1.0, 1.5, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      Worldline({0.0, 0.1, 0.2, 0.3, 0.4},
                std::vector<Eigen::Vector3d>(5, Eigen::Vector3d::Zero()), -1.0, 1.5, 1.0),
      std::invalid_argument);
}
