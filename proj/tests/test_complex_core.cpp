#include "doctest.h"

#include <cmath>

#include "complex_core.hpp"
#include "disc_sup.hpp"
#include "test_support.hpp"

using namespace symb;
using symb_test::thrown_code;

TEST_CASE("tolerance validation") {
  CHECK_NOTHROW(validate(default_tolerances()));
  tolerance_config bad = default_tolerances();
  bad.eq_tol = -1.0;
  CHECK(thrown_code([&] { validate(bad); }) == errc::invalid_parameter);
  bad = default_tolerances();
  bad.boundary_band = bad.eq_tol * 2.0;
  CHECK(thrown_code([&] { validate(bad); }) == errc::invalid_parameter);
}

TEST_CASE("region classification") {
  const tolerance_config cfg = default_tolerances();
  CHECK(margin_to_tri(0.5, cfg) == region::inside);
  CHECK(margin_to_tri(-0.5, cfg) == region::outside);
  CHECK(margin_to_tri(1e-13, cfg) == region::boundary);
  CHECK(margin_to_tri(-1e-13, cfg) == region::boundary);
}

TEST_CASE("relative equality and slack") {
  CHECK(approx_eq(1.0, 1.0 + 5e-11, 1e-10));
  CHECK_FALSE(approx_eq(1.0, 1.0 + 3e-10, 1e-10));
  CHECK(approx_eq(cplx(0.0, 1.0), cplx(0.0, 1.0 + 1e-11), 1e-10));
  CHECK(slack(0.0, 1.0) == doctest::Approx(0.5));
  CHECK(slack(1.0, 0.0) == doctest::Approx(-1.0));
  CHECK(slack(0.0, 2.0) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("quadratic solver") {
  SUBCASE("double root") {
    const auto [r1, r2] = solve_quadratic(1.0, -1.0, 0.25);
    CHECK(std::abs(r1 - 0.5) < 1e-14);
    CHECK(std::abs(r2 - 0.5) < 1e-14);
  }
  SUBCASE("pure imaginary pair") {
    const auto [r1, r2] = solve_quadratic(1.0, 0.0, 0.25);
    CHECK(std::abs(r1 + r2) < 1e-14);
    CHECK(std::abs(r1 * r2 - cplx(0.25)) < 1e-14);
    CHECK(std::abs(std::abs(r1) - 0.5) < 1e-14);
  }
  SUBCASE("vieta residuals on complex coefficients") {
    const cplx a(1.2, -0.4), b(-0.3, 0.9), c(0.5, 0.25);
    const auto [r1, r2] = solve_quadratic(a, b, c);
    CHECK(std::abs(a * (r1 + r2) + b) < 1e-12);
    CHECK(std::abs(a * r1 * r2 - c) < 1e-12);
  }
  SUBCASE("cancellation-prone coefficients") {
    const auto [r1, r2] = solve_quadratic(1.0, -(1e8 + 1e-8), 1.0);
    const double big = std::max(std::abs(r1), std::abs(r2));
    const double small = std::min(std::abs(r1), std::abs(r2));
    CHECK(big == doctest::Approx(1e8));
    CHECK(small == doctest::Approx(1e-8).epsilon(1e-10));
  }
  SUBCASE("degenerate leading coefficient") {
    CHECK(thrown_code([] { solve_quadratic(0.0, 1.0, 1.0); }) ==
          errc::degenerate_coefficient);
  }
}

TEST_CASE("slit-plane square root") {
  const tolerance_config cfg = default_tolerances();
  CHECK(std::abs(sqrt_slit(4.0, cfg) - 2.0) < 1e-15);
  const cplx r = sqrt_slit(cplx(0.0, 2.0), cfg);
  CHECK(std::abs(r - cplx(1.0, 1.0)) < 1e-14);
  CHECK(std::real(sqrt_slit(cplx(-1.0, 1e-3), cfg)) > 0.0);
  CHECK(std::real(sqrt_slit(cplx(-1.0, -1e-3), cfg)) > 0.0);
  CHECK(thrown_code([&] { sqrt_slit(cplx(-1.0, 0.0), cfg); }) == errc::branch_cut);
  CHECK(thrown_code([&] { sqrt_slit(cplx(0.0, 0.0), cfg); }) == errc::branch_cut);
}

TEST_CASE("supremum of rational modulus over the disc") {
  SUBCASE("constant ratio") {
    const disc_sup r = sup_abs_ratio_disc(1.0, 0.0, 2.0, 0.0);
    CHECK_FALSE(r.divergent);
    CHECK(r.value == doctest::Approx(0.5));
  }
  SUBCASE("boundary maximum") {
    // |z| / |2 + z| peaks at z = -1.
    const disc_sup r = sup_abs_ratio_disc(0.0, 1.0, 2.0, 1.0);
    CHECK_FALSE(r.divergent);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("pole inside the disc") {
    const disc_sup r = sup_abs_ratio_disc(1.0, 0.0, 0.5, 1.0);
    CHECK(r.divergent);
  }
  SUBCASE("removable pole via proportionality") {
    // (1 + 2z) / (2 + 4z) is constantly 1/2 despite the zero at -1/2.
    const disc_sup r = sup_abs_ratio_disc(1.0, 2.0, 2.0, 4.0);
    CHECK_FALSE(r.divergent);
    CHECK(r.value == doctest::Approx(0.5));
  }
}
