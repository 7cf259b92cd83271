#include "biholomorphisms.hpp"

#include <algorithm>
#include <cmath>

#include "rng.hpp"

namespace symb {

namespace {

constexpr cplx iu{0.0, 1.0};

d1_point g_to_d1_raw(const g_point& g, const tolerance_config& cfg) {
  const cplx den = 1.0 - g.p;
  if (std::abs(den) <= cfg.boundary_band * (1.0 + std::abs(g.p)))
    throw error(errc::singular_denominator, "g_to_d1: p = 1");
  return {iu * (1.0 + g.p) / den, -iu * g.s / den};
}

g_point d1_to_g_raw(const d1_point& p, const tolerance_config& cfg) {
  const cplx den = p.z1 + iu;
  if (std::abs(den) <= cfg.boundary_band * (1.0 + std::abs(p.z1)))
    throw error(errc::singular_denominator, "d1_to_g: u = -i");
  return {-2.0 * p.z2 / den, (p.z1 - iu) / den};
}

double rel_diff(const d1_point& a, const d1_point& b) {
  const double scale =
      1.0 + std::max(std::max(std::abs(a.z1), std::abs(a.z2)),
                     std::max(std::abs(b.z1), std::abs(b.z2)));
  return std::max(std::abs(a.z1 - b.z1), std::abs(a.z2 - b.z2)) / scale;
}

} // namespace

d1_point g_to_d1(const g_point& g, const tolerance_config& cfg) {
  if (membership(g, 0, cfg).tri != region::inside)
    throw error(errc::outside_domain, "g_to_d1: point not interior");
  return g_to_d1_raw(g, cfg);
}

g_point d1_to_g(const d1_point& p, const tolerance_config& cfg) {
  if (membership_d1(p, 0, cfg).tri != region::inside)
    throw error(errc::outside_domain, "d1_to_g: point not interior");
  return d1_to_g_raw(p, cfg);
}

d1_point g_to_d1_unchecked(const g_point& g, const tolerance_config& cfg) {
  return g_to_d1_raw(g, cfg);
}

g_point d1_to_g_unchecked(const d1_point& p, const tolerance_config& cfg) {
  return d1_to_g_raw(p, cfg);
}

omega1_point bidisc_to_omega1(const bidisc_point& z, const tolerance_config& cfg) {
  require_bidisc(z, cfg);
  const cplx den = 1.0 - z.z1 * z.z2;
  return {(z.z1 - z.z2) / den, -iu * (z.z1 + z.z2) / den};
}

bidisc_point omega1_to_bidisc(const omega1_point& q, const tolerance_config& cfg) {
  if (membership_omega1(q.u, q.v, cfg).tri != region::inside)
    throw error(errc::outside_domain, "omega1_to_bidisc: point not interior");
  const double scale = 1.0 + std::abs(q.u) + std::abs(q.v);
  const cplx dm = q.u - iu * q.v;
  const cplx dp = q.u + iu * q.v;
  if (std::abs(dm) <= cfg.boundary_band * scale) return {iu * q.v, 0.0};
  if (std::abs(dp) <= cfg.boundary_band * scale) return {0.0, iu * q.v};
  const cplx r = sqrt_slit(1.0 - q.u * q.u - q.v * q.v, cfg);
  const cplx z = (1.0 + r) / dm;
  const cplx w = -(1.0 + r) / dp;
  const double band = cfg.boundary_band;
  if (std::abs(z) < 1.0 - band && std::abs(w) < 1.0 - band) return {z, w};
  if (std::abs(z) > 1.0 + band && std::abs(w) > 1.0 + band)
    return {-1.0 / w, -1.0 / z};
  throw error(errc::boundary_undecidable,
              "omega1_to_bidisc: preimage within boundary_band of the circle");
}

proj_point bidisc_to_proj(const bidisc_point& z, const tolerance_config& cfg) {
  require_bidisc(z, cfg);
  const cplx zw = z.z1 * z.z2;
  return {{z.z1 - z.z2, 1.0 - zw, iu * (1.0 + zw), -iu * (z.z1 + z.z2)}};
}

bidisc_point proj_to_bidisc(const proj_point& q, const tolerance_config& cfg) {
  if (membership_d21(q, cfg).tri != region::inside)
    throw error(errc::outside_domain, "proj_to_bidisc: point not interior");
  double norm_max = 0.0;
  for (const cplx& x : q.x) norm_max = std::max(norm_max, std::abs(x));
  if (std::abs(q.x[0]) <= cfg.boundary_band * norm_max) {
    const proj_point c = canonicalize(q);
    const d1_point d1{c.x[2] / c.x[1], c.x[3] / c.x[1]};
    const g_point g = d1_to_g(d1, cfg);
    return {g.s / 2.0, g.s / 2.0};
  }
  const cplx t = q.x[1] / q.x[0];
  if (std::abs(t) <= cfg.boundary_band)
    throw error(errc::singular_denominator, "proj_to_bidisc: x1 = 0 off the diagonal");
  const d1_point d1{q.x[2] / q.x[1], q.x[3] / q.x[1]};
  const g_point g = d1_to_g(d1, cfg);
  const auto [r1, r2] = solve_quadratic(1.0, -g.s, g.p);
  const cplx orient = t * (r1 - r2) / (1.0 - r1 * r2);
  if (std::abs(orient - 1.0) <= std::abs(orient + 1.0)) return {r1, r2};
  return {r2, r1};
}

d1_point symmetrize_omega1(const omega1_point& q, const tolerance_config& cfg) {
  if (membership_omega1(q.u, q.v, cfg).tri != region::inside)
    throw error(errc::outside_domain, "symmetrize_omega1: point not interior");
  return {iu * sqrt_slit(1.0 - q.u * q.u - q.v * q.v, cfg), q.v};
}

d1_point symmetrize_proj(const proj_point& q, const tolerance_config& cfg) {
  if (membership_d21(q, cfg).tri != region::inside)
    throw error(errc::outside_domain, "symmetrize_proj: point not interior");
  double norm_max = 0.0;
  for (const cplx& x : q.x) norm_max = std::max(norm_max, std::abs(x));
  if (std::abs(q.x[1]) <= cfg.boundary_band * norm_max)
    throw error(errc::zero_chart_coordinate, "symmetrize_proj: x1 = 0");
  return {q.x[2] / q.x[1], q.x[3] / q.x[1]};
}

diagram_report check_diagram(diagram_kind kind, std::size_t n, std::uint64_t seed,
                             const tolerance_config& cfg) {
  diagram_report rep;
  rep.n_samples = n;
  for (std::size_t i = 0; i < n; ++i) {
    splitmix64 g = sample_stream(seed, i);
    const bidisc_point z{random_disc(g, 0.95), random_disc(g, 0.95)};
    const d1_point via_g = g_to_d1(symmetrize(z), cfg);
    d1_point via_model{};
    if (kind == diagram_kind::omega1)
      via_model = symmetrize_omega1(bidisc_to_omega1(z, cfg), cfg);
    else
      via_model = symmetrize_proj(bidisc_to_proj(z, cfg), cfg);
    const double resid = rel_diff(via_model, via_g);
    if (resid > rep.max_residual) {
      rep.max_residual = resid;
      rep.worst = z;
    }
  }
  return rep;
}

} // namespace symb
