#include "doctest.h"

#include <cmath>

#include "levi_analysis.hpp"
#include "test_support.hpp"

using namespace symb;
using symb_test::thrown_code;

TEST_CASE("leaf defining function") {
  CHECK(g_a({0.5, 0.0}, 0.5) == doctest::Approx(0.0));
  CHECK(g_a({0.5, 0.2}, 0.5) == doctest::Approx(-0.1125));
  CHECK(g_a({cplx(0.3, 0.1), cplx(0.3, 0.1)}, 0.5) < 0.0);

  CHECK(thrown_code([] { g_a({0.5, 0.0}, 0.0); }) == errc::invalid_parameter);
  CHECK(thrown_code([] { g_a({0.5, 0.0}, 1.0); }) == errc::invalid_parameter);
}

TEST_CASE("gradient, analytic and finite differences") {
  const tolerance_config cfg = default_tolerances();
  const auto grad = grad_g_a({0.5, 0.0}, 0.5);
  CHECK(std::abs(grad.first - 0.5) < 1e-15);
  CHECK(std::abs(grad.second + 0.375) < 1e-15);

  const bidisc_point z{cplx(0.3, -0.2), cplx(-0.1, 0.4)};
  const auto g1 = grad_g_a(z, 0.7);
  const auto g2 = grad_g_a_fd(z, 0.7, cfg);
  CHECK(std::abs(g1.first - g2.first) < 1e-9);
  CHECK(std::abs(g1.second - g2.second) < 1e-9);
}

TEST_CASE("complex hessian of the defining function") {
  const tolerance_config cfg = default_tolerances();
  const levi_matrix_t m = levi_matrix({0.5, 0.0}, 0.5);
  CHECK(std::abs(m[0][0] - 1.0) < 1e-15);
  CHECK(std::abs(m[0][1] + 0.75) < 1e-15);
  CHECK(std::abs(m[1][0] + 0.75) < 1e-15);
  CHECK(std::abs(m[1][1] - 0.9375) < 1e-15);

  // Hermitian by construction.
  const bidisc_point z{cplx(0.2, 0.5), cplx(-0.3, 0.1)};
  const levi_matrix_t h = levi_matrix(z, 0.6);
  CHECK(std::abs(h[0][1] - std::conj(h[1][0])) < 1e-15);
  CHECK(std::imag(h[0][0]) == 0.0);
  CHECK(std::imag(h[1][1]) == 0.0);

  const levi_matrix_t fd = levi_matrix_fd(z, 0.6, cfg);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      CHECK(std::abs(h[j][k] - fd[j][k]) < 1e-9);

  // Small-parameter limit: the rank-one matrix with kernel (1, 1).
  const levi_matrix_t tiny = levi_matrix({0.5, 0.0}, 1e-8);
  CHECK(std::abs(tiny[0][0] - 1.0) < 1e-7);
  CHECK(std::abs(tiny[0][1] + 1.0) < 1e-7);
  CHECK(std::abs(tiny[1][1] - 1.0) < 1e-7);
}

TEST_CASE("levi form on the leaf tangent") {
  const tolerance_config cfg = default_tolerances();
  const levi_report rep = levi_value({0.5, 0.0}, 0.5, cfg);
  CHECK(rep.leaf == doctest::Approx(0.5));
  CHECK(std::abs(rep.grad1 - 0.5) < 1e-15);
  CHECK(std::abs(rep.grad2 + 0.375) < 1e-15);
  CHECK(std::abs(rep.tangent - 0.75) < 1e-15);
  CHECK(rep.levi_value == doctest::Approx(0.375).epsilon(1e-13));
  CHECK(rep.closed_form_value == doctest::Approx(0.375).epsilon(1e-13));
  CHECK(std::abs(rep.levi_value - rep.closed_form_value) <=
        1e-9 * (1.0 + std::abs(rep.levi_value)));

  CHECK(thrown_code([&] { levi_value({0.5, 0.2}, 0.5, cfg); }) ==
        errc::off_leaf);
}

TEST_CASE("symmetrization jacobian determinant") {
  const tolerance_config cfg = default_tolerances();
  CHECK(jacobian_sym_det({0.5, 0.0}, cfg) == doctest::Approx(0.25).epsilon(1e-8));
  const bidisc_point z{cplx(0.3, 0.4), cplx(-0.2, 0.1)};
  CHECK(jacobian_sym_det(z, cfg) ==
        doctest::Approx(std::norm(z.z1 - z.z2)).epsilon(1e-8));
}

TEST_CASE("distance submersion data") {
  const tolerance_config cfg = default_tolerances();
  const auto p = f_partials({0.5, 0.0}, cfg);
  CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(p[1]) < 1e-13);
  CHECK(p[2] == doctest::Approx(-0.75).epsilon(1e-13));
  CHECK(std::abs(p[3]) < 1e-13);

  const submersion_report rep = check_f_submersion({0.5, 0.0}, cfg);
  CHECK(rep.grad_norm == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(rep.degenerate_indicator > 0.0);

  CHECK(thrown_code([&] { f_partials({0.5, 0.5}, cfg); }) ==
        errc::diagonal_point);
}

TEST_CASE("tangential holomorphy residuals") {
  const tolerance_config cfg = default_tolerances();
  const cplx w1(0.3, 0.0), w2(-0.2, 0.1);
  CHECK(cauchy_riemann_residual(cr_map::symmetrize, w1, w2, cfg) < 1e-8);
  CHECK(cauchy_riemann_residual(cr_map::bidisc_to_omega1, w1, w2, cfg) < 1e-8);
  CHECK(cauchy_riemann_residual(cr_map::proj_chart, w1, w2, cfg) < 1e-8);
  CHECK(cauchy_riemann_residual(cr_map::g_to_d1, cplx(0.4, 0.4),
                                cplx(0.03, 0.04), cfg) < 1e-8);
  CHECK(cauchy_riemann_residual(cr_map::conjugate, w1, w2, cfg) > 0.5);
}
