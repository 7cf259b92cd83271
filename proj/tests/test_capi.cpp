#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "symbidisc/symbidisc.h"

namespace {

struct context_guard {
  sbd_context* ctx;
  explicit context_guard(const sbd_tolerances* tol = nullptr)
      : ctx(sbd_context_create(tol)) {}
  ~context_guard() { sbd_context_destroy(ctx); }
  operator sbd_context*() const { return ctx; }
};

} // namespace

TEST_CASE("context lifecycle and defaults") {
  const sbd_tolerances tol = sbd_default_tolerances();
  CHECK(tol.eq_tol == 1e-10);
  CHECK(tol.boundary_band == 1e-12);
  CHECK(tol.fd_step == 1e-6);

  context_guard ctx;
  REQUIRE(ctx.ctx != nullptr);
  CHECK(sbd_context_last_status(ctx) == SBD_OK);

  sbd_tolerances bad = tol;
  bad.eq_tol = -1.0;
  CHECK(sbd_context_create(&bad) == nullptr);

  CHECK(std::strcmp(sbd_status_name(SBD_OK), "ok") == 0);
  CHECK(std::strcmp(sbd_status_name(SBD_ERR_OUTSIDE_DOMAIN),
                    "outside-domain") == 0);
}

TEST_CASE("membership through the c interface") {
  context_guard ctx;
  REQUIRE(ctx.ctx != nullptr);

  const sbd_complex origin[2] = {{0.0, 0.0}, {0.0, 0.0}};
  sbd_region region = SBD_REGION_OUTSIDE;
  double margin = 0.0;

  CHECK(sbd_membership(ctx, SBD_DOMAIN_G, origin, 2, 0, nullptr, 0, &region,
                       &margin) == SBD_OK);
  CHECK(region == SBD_REGION_INSIDE);
  CHECK(margin > 0.0);

  CHECK(sbd_membership(ctx, SBD_DOMAIN_G, origin, 2, 2, nullptr, 0, &region,
                       &margin) == SBD_OK);
  CHECK(region == SBD_REGION_INSIDE);
  CHECK(margin == doctest::Approx(0.5).epsilon(1e-12));

  const sbd_complex q[4] = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {0.0, 0.0}};
  CHECK(sbd_membership(ctx, SBD_DOMAIN_D21, q, 4, 0, nullptr, 0, &region,
                       &margin) == SBD_OK);
  CHECK(region == SBD_REGION_INSIDE);

  // Arity and parameter validation.
  CHECK(sbd_membership(ctx, SBD_DOMAIN_G, origin, 1, 0, nullptr, 0, &region,
                       &margin) == SBD_ERR_INVALID_ARGUMENT);
  CHECK(sbd_membership(ctx, SBD_DOMAIN_GC, origin, 2, 0, nullptr, 0, &region,
                       &margin) == SBD_ERR_INVALID_ARGUMENT);
  const double c2 = 2.0;
  CHECK(sbd_membership(ctx, SBD_DOMAIN_GC, origin, 2, 1, &c2, 1, &region,
                       &margin) == SBD_ERR_INVALID_CONDITION);
  CHECK(sbd_membership(ctx, SBD_DOMAIN_GC, origin, 2, 0, &c2, 1, &region,
                       &margin) == SBD_OK);
  CHECK(region == SBD_REGION_INSIDE);

  const double c_bad = 1.0;
  CHECK(sbd_membership(ctx, SBD_DOMAIN_GC, origin, 2, 0, &c_bad, 1, &region,
                       &margin) == SBD_ERR_INVALID_PARAMETER);
  CHECK(sbd_context_last_status(ctx) == SBD_ERR_INVALID_PARAMETER);
  CHECK(std::strlen(sbd_context_last_message(ctx)) > 0);
}

TEST_CASE("map arities and application") {
  context_guard ctx;
  REQUIRE(ctx.ctx != nullptr);

  size_t n_in = 0, n_out = 0;
  CHECK(sbd_map_arity(SBD_MAP_F, &n_in, &n_out) == SBD_OK);
  CHECK(n_in == 2);
  CHECK(n_out == 2);
  CHECK(sbd_map_arity(SBD_MAP_J, &n_in, &n_out) == SBD_OK);
  CHECK(n_out == 4);
  CHECK(sbd_map_arity(SBD_MAP_JINV, &n_in, &n_out) == SBD_OK);
  CHECK(n_in == 4);
  CHECK(n_out == 2);

  const sbd_complex origin[2] = {{0.0, 0.0}, {0.0, 0.0}};
  sbd_complex image[2] = {{9.0, 9.0}, {9.0, 9.0}};
  CHECK(sbd_map_apply(ctx, SBD_MAP_F, origin, 2, image, 2) == SBD_OK);
  CHECK(image[0].re == doctest::Approx(0.0));
  CHECK(image[0].im == doctest::Approx(1.0));
  CHECK(std::hypot(image[1].re, image[1].im) < 1e-15);

  const sbd_complex outside[2] = {{4.0, 0.0}, {0.0, 0.0}};
  CHECK(sbd_map_apply(ctx, SBD_MAP_F, outside, 2, image, 2) ==
        SBD_ERR_OUTSIDE_DOMAIN);
  CHECK(sbd_map_apply(ctx, SBD_MAP_F, origin, 2, image, 4) ==
        SBD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("leaf index and the two indexings") {
  context_guard ctx;
  REQUIRE(ctx.ctx != nullptr);

  double q = 0.0;
  CHECK(sbd_leaf_index(ctx, {0.5, 0.0}, {0.0, 0.0}, &q) == SBD_OK);
  CHECK(q == doctest::Approx(0.5).epsilon(1e-13));

  double b = 0.0, a = 0.0;
  CHECK(sbd_reindex_a_to_b(0.6, &b) == SBD_OK);
  CHECK(b == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(sbd_reindex_b_to_a(b, &a) == SBD_OK);
  CHECK(a == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(sbd_reindex_a_to_b(1.0, &b) == SBD_ERR_INVALID_PARAMETER);
  CHECK(sbd_reindex_b_to_a(-0.1, &a) == SBD_ERR_INVALID_PARAMETER);
}

TEST_CASE("disc automorphism evaluation") {
  sbd_complex out = {9.0, 9.0};
  CHECK(sbd_disc_apply(0.0, {0.0, 0.0}, {0.3, -0.2}, &out) == SBD_OK);
  CHECK(out.re == doctest::Approx(0.3));
  CHECK(out.im == doctest::Approx(-0.2));
  CHECK(sbd_disc_apply(0.0, {1.0, 0.0}, {0.3, -0.2}, &out) ==
        SBD_ERR_INVALID_PARAMETER);
}

TEST_CASE("levi report through the c interface") {
  context_guard ctx;
  REQUIRE(ctx.ctx != nullptr);

  sbd_levi_report rep;
  CHECK(sbd_levi_report_at(ctx, {0.5, 0.0}, {0.0, 0.0}, 0.5, &rep) == SBD_OK);
  CHECK(rep.leaf_a == 0.5);
  CHECK(rep.levi_value == doctest::Approx(0.375).epsilon(1e-13));
  CHECK(rep.closed_form_value == doctest::Approx(0.375).epsilon(1e-13));
  CHECK(rep.m12.re == doctest::Approx(-0.75).epsilon(1e-13));
  CHECK(rep.tangent.re == doctest::Approx(0.75).epsilon(1e-13));

  CHECK(sbd_levi_report_at(ctx, {0.5, 0.0}, {0.2, 0.0}, 0.5, &rep) ==
        SBD_ERR_OFF_LEAF);
}

TEST_CASE("samplers are deterministic per (seed, index)") {
  context_guard ctx;
  REQUIRE(ctx.ctx != nullptr);

  sbd_complex s1, p1, s2, p2;
  CHECK(sbd_sample_g(ctx, 99, 7, &s1, &p1) == SBD_OK);
  CHECK(sbd_sample_g(ctx, 99, 7, &s2, &p2) == SBD_OK);
  CHECK(s1.re == s2.re);
  CHECK(s1.im == s2.im);
  CHECK(p1.re == p2.re);
  CHECK(p1.im == p2.im);

  sbd_region region = SBD_REGION_OUTSIDE;
  double margin = 0.0;
  const sbd_complex coords[2] = {s1, p1};
  CHECK(sbd_membership(ctx, SBD_DOMAIN_G, coords, 2, 0, nullptr, 0, &region,
                       &margin) == SBD_OK);
  CHECK(region == SBD_REGION_INSIDE);

  for (uint64_t index = 0; index < 16; ++index) {
    sbd_complex s, p;
    REQUIRE(sbd_sample_leaf(ctx, 0.5, 11, index, &s, &p) == SBD_OK);
    double q = 0.0;
    REQUIRE(sbd_leaf_index(ctx, s, p, &q) == SBD_OK);
    CHECK(std::abs(q - 0.5) < 1e-9);
  }
  sbd_complex s, p;
  CHECK(sbd_sample_leaf(ctx, 1.2, 11, 0, &s, &p) == SBD_ERR_INVALID_PARAMETER);
}

TEST_CASE("verification suites through the c interface") {
  context_guard ctx;
  REQUIRE(ctx.ctx != nullptr);

  const size_t count = sbd_suite_count();
  CHECK(count == 19);
  CHECK(sbd_suite_name(count) == nullptr);
  bool found = false;
  for (size_t k = 0; k < count; ++k) {
    REQUIRE(sbd_suite_name(k) != nullptr);
    CHECK(sbd_suite_default_samples(k) > 0);
    if (std::strcmp(sbd_suite_name(k), "slit-plane") == 0) found = true;
  }
  CHECK(found);

  sbd_suite_result result;
  REQUIRE(sbd_verify_run(ctx, "slit-plane", 300, 42, &result) == SBD_OK);
  CHECK(std::strcmp(result.suite_name, "slit-plane") == 0);
  CHECK(result.n_samples == 300);
  CHECK(result.seed == 42);
  CHECK(result.pass == 1);

  size_t needed = 0;
  char tiny[4];
  CHECK(sbd_suite_result_to_json(&result, tiny, sizeof tiny, &needed) ==
        SBD_ERR_INVALID_ARGUMENT);
  REQUIRE(needed > sizeof tiny);
  std::vector<char> buf(needed);
  REQUIRE(sbd_suite_result_to_json(&result, buf.data(), buf.size(), &needed) ==
          SBD_OK);
  const std::string line(buf.data());
  CHECK(line.size() + 1 == needed);
  CHECK(line.rfind("{\"suite_name\":\"slit-plane\",\"n_samples\":300,", 0) == 0);
  CHECK(line.find("\"pass\":true") != std::string::npos);
  CHECK(line.find("elapsed") == std::string::npos);

  CHECK(sbd_verify_run(ctx, "no-such-suite", 10, 1, &result) ==
        SBD_ERR_UNKNOWN_SUITE);
  CHECK(sbd_context_last_status(ctx) == SBD_ERR_UNKNOWN_SUITE);
}
