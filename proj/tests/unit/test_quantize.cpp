#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include <dielqed/plane_wave.hpp>
#include <dielqed/quantize.hpp>

using dielqed::fock::Scheme;

TEST_CASE("conjugate momentum coefficient separates the two procedures") {
  CHECK(dielqed::quantize::conjugate_momentum_coefficient(Scheme::Ginzburg, 1.5) ==
        doctest::Approx(2.25).epsilon(1e-15));
  CHECK(dielqed::quantize::conjugate_momentum_coefficient(Scheme::Corrected, 1.5) ==
        doctest::Approx(1.5).epsilon(1e-15));
  CHECK(dielqed::quantize::conjugate_momentum_coefficient(Scheme::Ginzburg, 1.0) == 1.0);
  CHECK(dielqed::quantize::conjugate_momentum_coefficient(Scheme::Corrected, 1.0) == 1.0);
  CHECK_THROWS_AS(dielqed::quantize::conjugate_momentum_coefficient(Scheme::Ginzburg, 0.8),
                  std::invalid_argument);
}

TEST_CASE("canonical transforms rescale the pair without changing its product") {
  SUBCASE("worked values") {
    const auto g = dielqed::quantize::canonical_transform(Scheme::Ginzburg, 1.5, 3.0, 2.0);
    CHECK(g.momentum == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(g.coordinate == doctest::Approx(3.0).epsilon(1e-15));
    const auto c = dielqed::quantize::canonical_transform(Scheme::Corrected, 4.0, 1.0, 2.0);
    CHECK(c.momentum == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(c.coordinate == doctest::Approx(1.0).epsilon(1e-15));
  }

  SUBCASE("vacuum is the identity") {
    for (Scheme scheme : {Scheme::Ginzburg, Scheme::Corrected}) {
      const auto pair = dielqed::quantize::canonical_transform(scheme, 1.0, 0.7, -1.3);
      CHECK(pair.momentum == doctest::Approx(0.7).epsilon(1e-15));
      CHECK(pair.coordinate == doctest::Approx(-1.3).epsilon(1e-15));
    }
  }

  SUBCASE("the product p q is invariant, so the transform preserves brackets") {
    for (Scheme scheme : {Scheme::Ginzburg, Scheme::Corrected}) {
      for (double n : {1.0, 1.3, 2.4, 3.0}) {
        const auto pair = dielqed::quantize::canonical_transform(scheme, n, 0.83, 1.91);
        CHECK(std::abs(pair.momentum * pair.coordinate - 0.83 * 1.91) < 1e-12);
      }
    }
  }
}

TEST_CASE("transformed Hamiltonians sit in oscillator normal form") {
  SUBCASE("standard procedure lands exactly on unit momentum coefficient") {
    for (double n : {1.0, 1.5, 2.0, 2.7}) {
      for (double omega : {1.0, 2.5}) {
        const auto form =
            dielqed::quantize::transformed_hamiltonian_form(Scheme::Ginzburg, n, omega);
        CHECK(std::abs(form.momentum_coeff - 1.0) < 1e-15);
        CHECK(std::abs(form.coordinate_coeff - omega * omega) < 1e-12 * omega * omega);
        CHECK(std::abs(form.frequency() - omega) < 1e-12 * omega);
      }
    }
  }

  SUBCASE("corrected procedure oscillates at the medium frequency n omega") {
    for (double n : {1.0, 1.5, 2.0, 2.7}) {
      for (double omega : {1.0, 2.5}) {
        const auto form =
            dielqed::quantize::transformed_hamiltonian_form(Scheme::Corrected, n, omega);
        CHECK(std::abs(form.momentum_coeff - 1.0 / n) < 1e-15);
        CHECK(std::abs(form.coordinate_coeff - n * n * n * omega * omega) <
              1e-12 * n * n * n * omega * omega);
        CHECK(std::abs(form.frequency() - n * omega) < 1e-12 * n * omega);
      }
    }
  }
}

TEST_CASE("field prefactors") {
  SUBCASE("worked values at n=2") {
    CHECK(dielqed::quantize::field_prefactor(Scheme::Corrected, 2.0, 1.0, 1.0, 1.0, 1.0) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(dielqed::quantize::field_prefactor(Scheme::Ginzburg, 2.0, 1.0, 1.0, 1.0, 1.0) ==
          doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-14));
  }

  SUBCASE("schemes coincide in vacuum") {
    const double a =
        dielqed::quantize::field_prefactor(Scheme::Ginzburg, 1.0, 1.0, 1.0, 1.0, 1.0);
    const double b =
        dielqed::quantize::field_prefactor(Scheme::Corrected, 1.0, 1.0, 1.0, 1.0, 1.0);
    CHECK(a == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(a == b);
  }

  SUBCASE("scheme ratio at fixed n is 1/sqrt(n)") {
    for (double n = 1.0; n <= 3.0; n += 0.25) {
      const double g =
          dielqed::quantize::field_prefactor(Scheme::Ginzburg, n, 1.7, 2.0, 0.5, 2.0);
      const double c =
          dielqed::quantize::field_prefactor(Scheme::Corrected, n, 1.7, 2.0, 0.5, 2.0);
      CHECK(std::abs(g / c - 1.0 / std::sqrt(n)) < 1e-12);
    }
  }

  SUBCASE("dimensional arguments all enter") {
    const double base =
        dielqed::quantize::field_prefactor(Scheme::Corrected, 1.5, 2.0, 3.0, 0.7, 2.5);
    CHECK(base == doctest::Approx(2.5 * std::sqrt(0.7 / (2.0 * 1.5 * 2.0 * 3.0)))
                      .epsilon(1e-14));
  }

  SUBCASE("nonpositive arguments rejected") {
    CHECK_THROWS_AS(
        dielqed::quantize::field_prefactor(Scheme::Ginzburg, 1.5, 0.0, 1.0, 1.0, 1.0),
        std::invalid_argument);
    CHECK_THROWS_AS(
        dielqed::quantize::field_prefactor(Scheme::Ginzburg, 1.5, 1.0, -1.0, 1.0, 1.0),
        std::invalid_argument);
    CHECK_THROWS_AS(
        dielqed::quantize::field_prefactor(Scheme::Ginzburg, 0.99, 1.0, 1.0, 1.0, 1.0),
        std::invalid_argument);
  }
}

TEST_CASE("correspondence residual is the headline dichotomy") {
  SUBCASE("corrected procedure matches the classical amplitude ratio") {
    CHECK(dielqed::quantize::correspondence_residual(Scheme::Corrected, 1.0, 2.0, 1.0,
                                                     1.0, 1.0, 1.0) < 1e-12);
    for (double n1 : {1.0, 1.33, 1.5, 2.0, 2.4, 3.0})
      for (double n2 : {1.0, 1.33, 1.5, 2.0, 2.4, 3.0})
        CHECK(dielqed::quantize::correspondence_residual(Scheme::Corrected, n1, n2, 1.3,
                                                         2.0, 1.0, 1.0) < 1e-12);
  }

  SUBCASE("standard procedure misses by |n2/n1 - sqrt(n2/n1)|") {
    const double headline = dielqed::quantize::correspondence_residual(
        Scheme::Ginzburg, 1.0, 2.0, 1.0, 1.0, 1.0, 1.0);
    CHECK(std::abs(headline - (2.0 - std::sqrt(2.0))) < 1e-12);
    CHECK(headline == doctest::Approx(0.5857864376269049).epsilon(1e-12));
    for (double n1 : {1.0, 1.3, 2.0})
      for (double n2 : {1.2, 2.7, 3.0}) {
        const double expected = std::abs(n2 / n1 - std::sqrt(n2 / n1));
        CHECK(std::abs(dielqed::quantize::correspondence_residual(
                           Scheme::Ginzburg, n1, n2, 1.0, 1.0, 1.0, 1.0) -
                       expected) < 1e-12);
      }
  }

  SUBCASE("equal media leave no residual for either scheme") {
    for (Scheme scheme : {Scheme::Ginzburg, Scheme::Corrected})
      CHECK(dielqed::quantize::correspondence_residual(scheme, 1.7, 1.7, 1.0, 1.0, 1.0,
                                                       1.0) < 1e-15);
  }
}

TEST_CASE("energy ratio measured from the spectrum") {
  SUBCASE("corrected level spacing scales with n") {
    CHECK(dielqed::quantize::energy_ratio(Scheme::Corrected, 1.5) ==
          doctest::Approx(1.5).epsilon(1e-10));
    CHECK(dielqed::quantize::energy_ratio(Scheme::Corrected, 2.0) ==
          doctest::Approx(2.0).epsilon(1e-10));
  }

  SUBCASE("standard level spacing ignores the medium") {
    for (double n : {1.0, 1.7, 2.3})
      CHECK(dielqed::quantize::energy_ratio(Scheme::Ginzburg, n) ==
            doctest::Approx(1.0).epsilon(1e-10));
  }

  SUBCASE("vacuum agreement") {
    CHECK(std::abs(dielqed::quantize::energy_ratio(Scheme::Corrected, 1.0) -
                   dielqed::quantize::energy_ratio(Scheme::Ginzburg, 1.0)) < 1e-12);
  }

  SUBCASE("matches the classical energy density enhancement") {
    // Classical target: density of the transmitted wave with A_t = A_v/sqrt(n)
    // relative to the vacuum wave with amplitude A_v.
    for (int i = 0; i < 20; ++i) {
      const double n = 1.0 + 2.0 * i / 19.0;
      const dielqed::fields::PlaneWave vacuum_wave(1.0, 2.0, 1.0, 0.0,
                                                   Eigen::Vector3d::UnitX(), 1.0);
      const dielqed::fields::PlaneWave medium_wave(1.0 / std::sqrt(n), 2.0, n, 0.0,
                                                   Eigen::Vector3d::UnitX(), 1.0);
      const double classical = dielqed::fields::energy_density(medium_wave) /
                               dielqed::fields::energy_density(vacuum_wave);
      CHECK(std::abs(dielqed::quantize::energy_ratio(Scheme::Corrected, n) - classical) <
            1e-12);
    }
  }
}

TEST_CASE("scheme reports aggregate the pipeline") {
  SUBCASE("corrected report at n=2 against vacuum reference") {
    const auto report = dielqed::quantize::build_report(Scheme::Corrected, 2.0, 1.0, 1.0,
                                                        1.0, 1.0, 1.0, 20);
    CHECK(report.scheme == Scheme::Corrected);
    CHECK(report.refractive_index == 2.0);
    CHECK(report.momentum_coefficient == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(report.prefactor == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(report.commutator_scale - 1.0) < 1e-12);
    CHECK(report.energy_ratio == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(report.correspondence_residual < 1e-12);
    CHECK(!report.transform.empty());
  }

  SUBCASE("standard report at n=2 against vacuum reference") {
    const auto report = dielqed::quantize::build_report(Scheme::Ginzburg, 2.0, 1.0, 1.0,
                                                        1.0, 1.0, 1.0, 20);
    CHECK(report.momentum_coefficient == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(report.prefactor == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-14));
    CHECK(std::abs(report.commutator_scale - 2.0) < 1e-12);
    CHECK(report.energy_ratio == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(report.correspondence_residual ==
          doctest::Approx(0.5857864376269049).epsilon(1e-9));
  }

  SUBCASE("vacuum reports agree field by field") {
    const auto g = dielqed::quantize::build_report(Scheme::Ginzburg, 1.0, 1.0, 1.0, 1.0,
                                                   1.0, 1.0, 20);
    const auto c = dielqed::quantize::build_report(Scheme::Corrected, 1.0, 1.0, 1.0, 1.0,
                                                   1.0, 1.0, 20);
    CHECK(std::abs(g.momentum_coefficient - c.momentum_coefficient) < 1e-15);
    CHECK(std::abs(g.prefactor - c.prefactor) < 1e-15);
    CHECK(std::abs(g.commutator_scale - c.commutator_scale) < 1e-12);
    CHECK(std::abs(g.energy_ratio - c.energy_ratio) < 1e-12);
    CHECK(std::abs(g.correspondence_residual - c.correspondence_residual) < 1e-15);
  }

  SUBCASE("invalid inputs rejected") {
    CHECK_THROWS_AS(dielqed::quantize::build_report(Scheme::Ginzburg, 0.9, 1.0, 1.0, 1.0,
                                                    1.0, 1.0, 20),
                    std::invalid_argument);
    CHECK_THROWS_AS(dielqed::quantize::build_report(Scheme::Ginzburg, 1.5, 1.0, 1.0, 1.0,
                                                    1.0, 1.0, 2),
                    std::invalid_argument);
  }
}

TEST_CASE("scheme names are stable strings") {
  CHECK(std::string(dielqed::quantize::scheme_name(Scheme::Ginzburg)) == "Ginzburg");
  CHECK(std::string(dielqed::quantize::scheme_name(Scheme::Corrected)) == "Corrected");
}
