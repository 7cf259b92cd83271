#include "symbidisc/symbidisc.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "biholomorphisms.hpp"
#include "levi_analysis.hpp"
#include "rng.hpp"
#include "verify_harness.hpp"

struct sbd_context {
  symb::tolerance_config cfg;
  sbd_status last_status = SBD_OK;
  std::string last_message;
};

namespace {

sbd_status map_errc(symb::errc code) {
  using symb::errc;
  switch (code) {
    case errc::ok: return SBD_OK;
    case errc::invalid_argument: return SBD_ERR_INVALID_ARGUMENT;
    case errc::invalid_parameter: return SBD_ERR_INVALID_PARAMETER;
    case errc::invalid_condition: return SBD_ERR_INVALID_CONDITION;
    case errc::degenerate_coefficient: return SBD_ERR_DEGENERATE_COEFFICIENT;
    case errc::branch_cut: return SBD_ERR_BRANCH_CUT;
    case errc::outside_domain: return SBD_ERR_OUTSIDE_DOMAIN;
    case errc::boundary_undecidable: return SBD_ERR_BOUNDARY_UNDECIDABLE;
    case errc::singular_denominator: return SBD_ERR_SINGULAR_DENOMINATOR;
    case errc::leaf_mismatch: return SBD_ERR_LEAF_MISMATCH;
    case errc::distance_mismatch: return SBD_ERR_DISTANCE_MISMATCH;
    case errc::degenerate_leaf: return SBD_ERR_DEGENERATE_LEAF;
    case errc::off_leaf: return SBD_ERR_OFF_LEAF;
    case errc::vanishing_gradient: return SBD_ERR_VANISHING_GRADIENT;
    case errc::diagonal_point: return SBD_ERR_DIAGONAL_POINT;
    case errc::zero_vector: return SBD_ERR_ZERO_VECTOR;
    case errc::zero_chart_coordinate: return SBD_ERR_ZERO_CHART_COORDINATE;
    case errc::unknown_suite: return SBD_ERR_UNKNOWN_SUITE;
    case errc::io_failure: return SBD_ERR_IO;
  }
  return SBD_ERR_INTERNAL;
}

symb::cplx lift(sbd_complex z) { return {z.re, z.im}; }

sbd_complex lower(symb::cplx z) { return {z.real(), z.imag()}; }

sbd_status fail(sbd_context* ctx, sbd_status status, const char* message) {
  if (ctx != nullptr) {
    ctx->last_status = status;
    ctx->last_message = message;
  }
  return status;
}

template <typename Fn>
sbd_status guarded(sbd_context* ctx, Fn&& fn) {
  if (ctx == nullptr) return SBD_ERR_INVALID_ARGUMENT;
  try {
    fn();
    ctx->last_status = SBD_OK;
    ctx->last_message.clear();
    return SBD_OK;
  } catch (const symb::error& e) {
    return fail(ctx, map_errc(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(ctx, SBD_ERR_INTERNAL, e.what());
  }
}

sbd_region lower_region(symb::region r) {
  switch (r) {
    case symb::region::inside: return SBD_REGION_INSIDE;
    case symb::region::boundary: return SBD_REGION_BOUNDARY;
    case symb::region::outside: break;
  }
  return SBD_REGION_OUTSIDE;
}

} // namespace

extern "C" {

sbd_tolerances sbd_default_tolerances(void) {
  const symb::tolerance_config cfg = symb::default_tolerances();
  return {cfg.eq_tol, cfg.boundary_band, cfg.fd_step};
}

sbd_context* sbd_context_create(const sbd_tolerances* tolerances) {
  symb::tolerance_config cfg = symb::default_tolerances();
  if (tolerances != nullptr)
    cfg = {tolerances->eq_tol, tolerances->boundary_band, tolerances->fd_step};
  try {
    symb::validate(cfg);
  } catch (const std::exception&) {
    return nullptr;
  }
  return new (std::nothrow) sbd_context{cfg, SBD_OK, {}};
}

void sbd_context_destroy(sbd_context* ctx) { delete ctx; }

sbd_status sbd_context_last_status(const sbd_context* ctx) {
  return ctx == nullptr ? SBD_ERR_INVALID_ARGUMENT : ctx->last_status;
}

const char* sbd_context_last_message(const sbd_context* ctx) {
  return ctx == nullptr ? "" : ctx->last_message.c_str();
}

const char* sbd_status_name(sbd_status status) {
  switch (status) {
    case SBD_OK: return "ok";
    case SBD_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case SBD_ERR_INVALID_PARAMETER: return "invalid-parameter";
    case SBD_ERR_INVALID_CONDITION: return "invalid-condition";
    case SBD_ERR_DEGENERATE_COEFFICIENT: return "degenerate-coefficient";
    case SBD_ERR_BRANCH_CUT: return "branch-cut";
    case SBD_ERR_OUTSIDE_DOMAIN: return "outside-domain";
    case SBD_ERR_BOUNDARY_UNDECIDABLE: return "boundary-undecidable";
    case SBD_ERR_SINGULAR_DENOMINATOR: return "singular-denominator";
    case SBD_ERR_LEAF_MISMATCH: return "leaf-mismatch";
    case SBD_ERR_DISTANCE_MISMATCH: return "distance-mismatch";
    case SBD_ERR_DEGENERATE_LEAF: return "degenerate-leaf";
    case SBD_ERR_OFF_LEAF: return "off-leaf";
    case SBD_ERR_VANISHING_GRADIENT: return "vanishing-gradient";
    case SBD_ERR_DIAGONAL_POINT: return "diagonal-point";
    case SBD_ERR_ZERO_VECTOR: return "zero-vector";
    case SBD_ERR_ZERO_CHART_COORDINATE: return "zero-chart-coordinate";
    case SBD_ERR_UNKNOWN_SUITE: return "unknown-suite";
    case SBD_ERR_IO: return "io-failure";
    case SBD_ERR_INTERNAL: break;
  }
  return "internal-error";
}

sbd_status sbd_membership(sbd_context* ctx, sbd_domain domain,
                          const sbd_complex* coords, size_t n_coords,
                          int condition, const double* params, size_t n_params,
                          sbd_region* out_region, double* out_margin) {
  if (coords == nullptr || out_region == nullptr || out_margin == nullptr)
    return fail(ctx, SBD_ERR_INVALID_ARGUMENT, "null pointer argument");
  if (n_params > 0 && params == nullptr)
    return fail(ctx, SBD_ERR_INVALID_ARGUMENT, "null params with n_params > 0");
  const size_t want_coords = domain == SBD_DOMAIN_D21 ? 4 : 2;
  if (n_coords != want_coords)
    return fail(ctx, SBD_ERR_INVALID_ARGUMENT, "wrong coordinate count");
  const size_t want_params =
      domain == SBD_DOMAIN_DST
          ? 2
          : (domain == SBD_DOMAIN_DS || domain == SBD_DOMAIN_DC ||
                     domain == SBD_DOMAIN_GC
                 ? 1
                 : 0);
  if (n_params != want_params)
    return fail(ctx, SBD_ERR_INVALID_ARGUMENT, "wrong parameter count");
  if (condition != 0 && domain != SBD_DOMAIN_G && domain != SBD_DOMAIN_D1)
    return fail(ctx, SBD_ERR_INVALID_CONDITION,
                "conditions are defined only for the nine-way domains");

  return guarded(ctx, [&] {
    symb::membership_report rep;
    switch (domain) {
      case SBD_DOMAIN_G:
        rep = symb::membership({lift(coords[0]), lift(coords[1])}, condition,
                               ctx->cfg);
        break;
      case SBD_DOMAIN_D1:
        rep = symb::membership_d1({lift(coords[0]), lift(coords[1])}, condition,
                                  ctx->cfg);
        break;
      case SBD_DOMAIN_DS:
        rep = symb::membership_ds({lift(coords[0]), lift(coords[1])}, params[0],
                                  ctx->cfg);
        break;
      case SBD_DOMAIN_DST:
        rep = symb::membership_dst({lift(coords[0]), lift(coords[1])},
                                   params[0], params[1], ctx->cfg);
        break;
      case SBD_DOMAIN_DC:
        rep = symb::membership_dc({lift(coords[0]), lift(coords[1])}, params[0],
                                  ctx->cfg);
        break;
      case SBD_DOMAIN_GC:
        rep = symb::membership_gc({lift(coords[0]), lift(coords[1])}, params[0],
                                  ctx->cfg);
        break;
      case SBD_DOMAIN_OMEGA1:
        rep = symb::membership_omega1(lift(coords[0]), lift(coords[1]),
                                      ctx->cfg);
        break;
      case SBD_DOMAIN_D21:
        rep = symb::membership_d21(
            {{lift(coords[0]), lift(coords[1]), lift(coords[2]),
              lift(coords[3])}},
            ctx->cfg);
        break;
      default:
        throw symb::error(symb::errc::invalid_argument, "unknown domain");
    }
    *out_region = lower_region(rep.tri);
    *out_margin = rep.margin;
  });
}

sbd_status sbd_map_arity(sbd_map map, size_t* out_n_in, size_t* out_n_out) {
  if (out_n_in == nullptr || out_n_out == nullptr)
    return SBD_ERR_INVALID_ARGUMENT;
  switch (map) {
    case SBD_MAP_F:
    case SBD_MAP_FINV:
    case SBD_MAP_H:
    case SBD_MAP_HINV:
    case SBD_MAP_SYM:
    case SBD_MAP_SYMINV:
    case SBD_MAP_SYM_OMEGA1:
      *out_n_in = 2;
      *out_n_out = 2;
      return SBD_OK;
    case SBD_MAP_J:
      *out_n_in = 2;
      *out_n_out = 4;
      return SBD_OK;
    case SBD_MAP_JINV:
      *out_n_in = 4;
      *out_n_out = 2;
      return SBD_OK;
    case SBD_MAP_SYM_D21:
      *out_n_in = 4;
      *out_n_out = 2;
      return SBD_OK;
  }
  return SBD_ERR_INVALID_ARGUMENT;
}

sbd_status sbd_map_apply(sbd_context* ctx, sbd_map map, const sbd_complex* in,
                         size_t n_in, sbd_complex* out, size_t n_out) {
  size_t want_in = 0;
  size_t want_out = 0;
  if (sbd_map_arity(map, &want_in, &want_out) != SBD_OK)
    return fail(ctx, SBD_ERR_INVALID_ARGUMENT, "unknown map");
  if (in == nullptr || out == nullptr)
    return fail(ctx, SBD_ERR_INVALID_ARGUMENT, "null pointer argument");
  if (n_in != want_in || n_out != want_out)
    return fail(ctx, SBD_ERR_INVALID_ARGUMENT, "wrong arity for map");

  return guarded(ctx, [&] {
    switch (map) {
      case SBD_MAP_F: {
        const symb::d1_point r =
            symb::g_to_d1({lift(in[0]), lift(in[1])}, ctx->cfg);
        out[0] = lower(r.z1);
        out[1] = lower(r.z2);
        break;
      }
      case SBD_MAP_FINV: {
        const symb::g_point r =
            symb::d1_to_g({lift(in[0]), lift(in[1])}, ctx->cfg);
        out[0] = lower(r.s);
        out[1] = lower(r.p);
        break;
      }
      case SBD_MAP_H: {
        const symb::omega1_point r =
            symb::bidisc_to_omega1({lift(in[0]), lift(in[1])}, ctx->cfg);
        out[0] = lower(r.u);
        out[1] = lower(r.v);
        break;
      }
      case SBD_MAP_HINV: {
        const symb::bidisc_point r =
            symb::omega1_to_bidisc({lift(in[0]), lift(in[1])}, ctx->cfg);
        out[0] = lower(r.z1);
        out[1] = lower(r.z2);
        break;
      }
      case SBD_MAP_J: {
        const symb::proj_point r =
            symb::bidisc_to_proj({lift(in[0]), lift(in[1])}, ctx->cfg);
        for (int k = 0; k < 4; ++k) out[k] = lower(r.x[k]);
        break;
      }
      case SBD_MAP_JINV: {
        const symb::bidisc_point r = symb::proj_to_bidisc(
            {{lift(in[0]), lift(in[1]), lift(in[2]), lift(in[3])}}, ctx->cfg);
        out[0] = lower(r.z1);
        out[1] = lower(r.z2);
        break;
      }
      case SBD_MAP_SYM: {
        const symb::g_point r = symb::symmetrize({lift(in[0]), lift(in[1])});
        out[0] = lower(r.s);
        out[1] = lower(r.p);
        break;
      }
      case SBD_MAP_SYMINV: {
        const symb::bidisc_point r =
            symb::symmetrize_inverse({lift(in[0]), lift(in[1])}, ctx->cfg);
        out[0] = lower(r.z1);
        out[1] = lower(r.z2);
        break;
      }
      case SBD_MAP_SYM_OMEGA1: {
        const symb::d1_point r =
            symb::symmetrize_omega1({lift(in[0]), lift(in[1])}, ctx->cfg);
        out[0] = lower(r.z1);
        out[1] = lower(r.z2);
        break;
      }
      case SBD_MAP_SYM_D21: {
        const symb::d1_point r = symb::symmetrize_proj(
            {{lift(in[0]), lift(in[1]), lift(in[2]), lift(in[3])}}, ctx->cfg);
        out[0] = lower(r.z1);
        out[1] = lower(r.z2);
        break;
      }
    }
  });
}

sbd_status sbd_leaf_index(sbd_context* ctx, sbd_complex s, sbd_complex p,
                          double* out_q) {
  if (out_q == nullptr)
    return fail(ctx, SBD_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded(ctx,
                 [&] { *out_q = symb::leaf_index({lift(s), lift(p)}, ctx->cfg); });
}

sbd_status sbd_reindex_a_to_b(double a, double* out_b) {
  if (out_b == nullptr) return SBD_ERR_INVALID_ARGUMENT;
  if (!(a >= 0.0 && a < 1.0)) return SBD_ERR_INVALID_PARAMETER;
  *out_b = symb::reindex_a_to_b(a);
  return SBD_OK;
}

sbd_status sbd_reindex_b_to_a(double b, double* out_a) {
  if (out_a == nullptr) return SBD_ERR_INVALID_ARGUMENT;
  if (!(b >= 0.0 && b < 1.0)) return SBD_ERR_INVALID_PARAMETER;
  *out_a = symb::reindex_b_to_a(b);
  return SBD_OK;
}

sbd_status sbd_disc_apply(double theta, sbd_complex alpha, sbd_complex z,
                          sbd_complex* out) {
  if (out == nullptr) return SBD_ERR_INVALID_ARGUMENT;
  if (!std::isfinite(theta) || !std::isfinite(alpha.re) ||
      !std::isfinite(alpha.im) || !std::isfinite(z.re) || !std::isfinite(z.im))
    return SBD_ERR_INVALID_ARGUMENT;
  if (std::abs(lift(alpha)) >= 1.0) return SBD_ERR_INVALID_PARAMETER;
  *out = lower(symb::apply({theta, lift(alpha)}, lift(z)));
  return SBD_OK;
}

sbd_status sbd_levi_report_at(sbd_context* ctx, sbd_complex z1, sbd_complex z2,
                              double a, sbd_levi_report* out) {
  if (out == nullptr)
    return fail(ctx, SBD_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded(ctx, [&] {
    const symb::levi_report rep =
        symb::levi_value({lift(z1), lift(z2)}, a, ctx->cfg);
    out->z1 = lower(rep.point.z1);
    out->z2 = lower(rep.point.z2);
    out->leaf_a = rep.leaf;
    out->grad1 = lower(rep.grad1);
    out->grad2 = lower(rep.grad2);
    out->m11 = lower(rep.matrix[0][0]);
    out->m12 = lower(rep.matrix[0][1]);
    out->m21 = lower(rep.matrix[1][0]);
    out->m22 = lower(rep.matrix[1][1]);
    out->tangent = lower(rep.tangent);
    out->levi_value = rep.levi_value;
    out->closed_form_value = rep.closed_form_value;
  });
}

sbd_status sbd_sample_g(sbd_context* ctx, uint64_t seed, uint64_t index,
                        sbd_complex* out_s, sbd_complex* out_p) {
  if (out_s == nullptr || out_p == nullptr)
    return fail(ctx, SBD_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded(ctx, [&] {
    symb::splitmix64 g = symb::sample_stream(seed, index);
    const symb::g_point pt =
        symb::symmetrize({symb::random_disc(g), symb::random_disc(g)});
    *out_s = lower(pt.s);
    *out_p = lower(pt.p);
  });
}

sbd_status sbd_sample_leaf(sbd_context* ctx, double a, uint64_t seed,
                           uint64_t index, sbd_complex* out_s,
                           sbd_complex* out_p) {
  if (out_s == nullptr || out_p == nullptr)
    return fail(ctx, SBD_ERR_INVALID_ARGUMENT, "null pointer argument");
  if (!(a >= 0.0 && a < 1.0))
    return fail(ctx, SBD_ERR_INVALID_PARAMETER, "leaf index must lie in [0, 1)");
  return guarded(ctx, [&] {
    symb::splitmix64 g = symb::sample_stream(seed, index);
    const double theta = -symb::pi + 2.0 * symb::pi * g.uniform01();
    const symb::disc_automorphism f{theta, symb::random_disc(g, 0.95)};
    const symb::g_point pt = symb::symmetrize(
        {symb::apply(f, symb::cplx(a)), symb::apply(f, symb::cplx(0.0))});
    *out_s = lower(pt.s);
    *out_p = lower(pt.p);
  });
}

size_t sbd_suite_count(void) { return symb::suite_registry().size(); }

const char* sbd_suite_name(size_t index) {
  const auto& reg = symb::suite_registry();
  return index < reg.size() ? reg[index].name : nullptr;
}

uint64_t sbd_suite_default_samples(size_t index) {
  const auto& reg = symb::suite_registry();
  return index < reg.size() ? reg[index].default_samples : 0;
}

double sbd_suite_tolerance(size_t index) {
  const auto& reg = symb::suite_registry();
  return index < reg.size() ? reg[index].tolerance : 0.0;
}

sbd_status sbd_verify_run(sbd_context* ctx, const char* suite_name,
                          uint64_t n_samples, uint64_t seed,
                          sbd_suite_result* out) {
  if (suite_name == nullptr || out == nullptr)
    return fail(ctx, SBD_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded(ctx, [&] {
    uint64_t n = n_samples;
    if (n == 0) {
      for (const symb::suite_info& s : symb::suite_registry())
        if (std::strcmp(s.name, suite_name) == 0) n = s.default_samples;
      if (n == 0)
        throw symb::error(symb::errc::unknown_suite,
                          "unknown verification suite: " +
                              std::string(suite_name));
    }
    const symb::suite_result r =
        symb::run_suite(suite_name, static_cast<std::size_t>(n), seed, ctx->cfg);
    std::snprintf(out->suite_name, sizeof out->suite_name, "%s",
                  r.suite_name.c_str());
    out->n_samples = r.n_samples;
    out->n_skipped_boundary = r.n_skipped_boundary;
    out->max_violation = r.max_violation;
    out->pass = r.pass ? 1 : 0;
    out->seed = r.seed;
    out->elapsed_seconds = r.elapsed_seconds;
  });
}

sbd_status sbd_suite_result_to_json(const sbd_suite_result* result, char* buf,
                                    size_t buf_size, size_t* out_needed) {
  if (result == nullptr) return SBD_ERR_INVALID_ARGUMENT;
  symb::suite_result sr;
  sr.suite_name = result->suite_name;
  sr.n_samples = result->n_samples;
  sr.n_skipped_boundary = result->n_skipped_boundary;
  sr.max_violation = result->max_violation;
  sr.pass = result->pass != 0;
  sr.seed = result->seed;
  sr.elapsed_seconds = result->elapsed_seconds;
  const std::string line = symb::certificate_line(sr);
  if (out_needed != nullptr) *out_needed = line.size() + 1;
  if (buf == nullptr || buf_size < line.size() + 1)
    return SBD_ERR_INVALID_ARGUMENT;
  std::memcpy(buf, line.c_str(), line.size() + 1);
  return SBD_OK;
}

} // extern "C"
