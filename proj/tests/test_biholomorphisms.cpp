#include "doctest.h"

#include <cmath>

#include "biholomorphisms.hpp"
#include "test_support.hpp"

using namespace symb;
using symb_test::thrown_code;

namespace {
const cplx iu(0.0, 1.0);
}

TEST_CASE("linear-fractional model map") {
  const tolerance_config cfg = default_tolerances();
  SUBCASE("center") {
    const d1_point r = g_to_d1({0.0, 0.0}, cfg);
    CHECK(std::abs(r.z1 - iu) < 1e-15);
    CHECK(std::abs(r.z2) < 1e-15);
  }
  SUBCASE("real s") {
    const d1_point r = g_to_d1({0.5, 0.0}, cfg);
    CHECK(std::abs(r.z1 - iu) < 1e-15);
    CHECK(std::abs(r.z2 - cplx(0.0, -0.5)) < 1e-15);
    CHECK(eta_index(r, cfg) == doctest::Approx(1.0 / 7.0).epsilon(1e-14));
  }
  SUBCASE("real p") {
    const d1_point r = g_to_d1({0.0, -0.25}, cfg);
    CHECK(std::abs(r.z1 - cplx(0.0, 0.6)) < 1e-15);
    CHECK(std::abs(r.z2) < 1e-15);
  }
  SUBCASE("roundtrip") {
    const g_point pt{cplx(0.4, 0.4), cplx(0.03, 0.04)};
    const g_point back = d1_to_g(g_to_d1(pt, cfg), cfg);
    CHECK(std::abs(back.s - pt.s) < 1e-14);
    CHECK(std::abs(back.p - pt.p) < 1e-14);
  }
  SUBCASE("inverse oracle") {
    const g_point r = d1_to_g({iu, 0.0}, cfg);
    CHECK(std::abs(r.s) < 1e-15);
    CHECK(std::abs(r.p) < 1e-15);
  }
  SUBCASE("domain gates") {
    CHECK(thrown_code([&] { g_to_d1({4.0, 0.0}, cfg); }) ==
          errc::outside_domain);
    CHECK(thrown_code([&] { d1_to_g({-iu, 0.0}, cfg); }) ==
          errc::outside_domain);
  }
}

TEST_CASE("bounded model map") {
  const tolerance_config cfg = default_tolerances();
  const omega1_point q = bidisc_to_omega1({0.5, -0.5}, cfg);
  CHECK(std::abs(q.u - 0.8) < 1e-15);
  CHECK(std::abs(q.v) < 1e-15);

  const bidisc_point back = omega1_to_bidisc({0.8, 0.0}, cfg);
  CHECK(std::abs(back.z1 - 0.5) < 1e-14);
  CHECK(std::abs(back.z2 + 0.5) < 1e-14);

  // Negating u returns the swapped preimage pair.
  const bidisc_point other = omega1_to_bidisc({-0.8, 0.0}, cfg);
  CHECK(std::abs(other.z1 + 0.5) < 1e-14);
  CHECK(std::abs(other.z2 - 0.5) < 1e-14);

  const bidisc_point z{cplx(0.3, 0.1), cplx(-0.2, 0.4)};
  const omega1_point img = bidisc_to_omega1(z, cfg);
  const bidisc_point rt = omega1_to_bidisc(img, cfg);
  CHECK(std::abs(rt.z1 - z.z1) < 1e-12);
  CHECK(std::abs(rt.z2 - z.z2) < 1e-12);

  CHECK(thrown_code([&] { omega1_to_bidisc({std::sqrt(2.0), iu}, cfg); }) ==
        errc::outside_domain);
}

TEST_CASE("projective model map") {
  const tolerance_config cfg = default_tolerances();
  const proj_point q = bidisc_to_proj({0.5, -0.5}, cfg);
  CHECK(std::abs(q.x[0] - 1.0) < 1e-15);
  CHECK(std::abs(q.x[1] - 1.25) < 1e-15);
  CHECK(std::abs(q.x[2] - cplx(0.0, 0.75)) < 1e-15);
  CHECK(std::abs(q.x[3]) < 1e-15);
  CHECK(membership_d21(q, cfg).tri == region::inside);

  const bidisc_point back = proj_to_bidisc(q, cfg);
  CHECK(std::abs(back.z1 - 0.5) < 1e-14);
  CHECK(std::abs(back.z2 + 0.5) < 1e-14);

  proj_point scaled = q;
  for (cplx& x : scaled.x) x *= cplx(2.0, -1.0);
  const bidisc_point again = proj_to_bidisc(scaled, cfg);
  CHECK(std::abs(again.z1 - 0.5) < 1e-13);
  CHECK(std::abs(again.z2 + 0.5) < 1e-13);

  // Diagonal pairs land in the x0 = 0 chart.
  const proj_point diag = bidisc_to_proj({cplx(0.3, 0.0), cplx(0.3, 0.0)}, cfg);
  CHECK(std::abs(diag.x[0]) == 0.0);
  const bidisc_point dback = proj_to_bidisc(diag, cfg);
  CHECK(std::abs(dback.z1 - 0.3) < 1e-13);
  CHECK(std::abs(dback.z2 - 0.3) < 1e-13);
}

TEST_CASE("symmetrization descends to both models") {
  const tolerance_config cfg = default_tolerances();
  const d1_point so = symmetrize_omega1({0.8, 0.0}, cfg);
  CHECK(std::abs(so.z1 - cplx(0.0, 0.6)) < 1e-15);
  CHECK(std::abs(so.z2) < 1e-15);

  const d1_point sp = symmetrize_proj({{0.0, 1.0, iu, 0.0}}, cfg);
  CHECK(std::abs(sp.z1 - iu) < 1e-15);
  CHECK(std::abs(sp.z2) < 1e-15);

  const bidisc_point z{cplx(0.3, 0.1), cplx(-0.2, 0.0)};
  const d1_point via_g = g_to_d1(symmetrize(z), cfg);
  const d1_point via_o = symmetrize_omega1(bidisc_to_omega1(z, cfg), cfg);
  const d1_point via_p = symmetrize_proj(bidisc_to_proj(z, cfg), cfg);
  CHECK(std::abs(via_o.z1 - via_g.z1) < 1e-12);
  CHECK(std::abs(via_o.z2 - via_g.z2) < 1e-12);
  CHECK(std::abs(via_p.z1 - via_g.z1) < 1e-12);
  CHECK(std::abs(via_p.z2 - via_g.z2) < 1e-12);
}

TEST_CASE("commuting diagrams on random samples") {
  const tolerance_config cfg = default_tolerances();
  const diagram_report ro = check_diagram(diagram_kind::omega1, 500, 11, cfg);
  CHECK(ro.max_residual < 1e-10);
  const diagram_report rp = check_diagram(diagram_kind::proj, 500, 11, cfg);
  CHECK(rp.max_residual < 1e-10);
}
