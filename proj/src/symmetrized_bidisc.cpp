#include "symmetrized_bidisc.hpp"

#include <algorithm>
#include <cmath>

#include "disc_sup.hpp"
#include "rng.hpp"

namespace symb {

g_point symmetrize(const bidisc_point& z) { return {z.z1 + z.z2, z.z1 * z.z2}; }

bidisc_point symmetrize_inverse(const g_point& g, const tolerance_config& cfg) {
  const auto rep = membership(g, 0, cfg);
  if (rep.tri != region::inside)
    throw error(errc::outside_domain, "point is not interior to the symmetrized bidisc");
  auto [r1, r2] = solve_quadratic(1.0, -g.s, g.p);
  if (r2.real() < r1.real() ||
      (r2.real() == r1.real() && r2.imag() < r1.imag()))
    std::swap(r1, r2);
  return {r1, r2};
}

namespace {

double margin_cond2(const g_point& g) {
  const double a = slack(std::abs(g.s * g.s - 4.0 * g.p) + std::norm(g.s),
                         2.0 * (1.0 + std::norm(g.p)));
  const double b = slack(std::norm(g.p) + std::imag(std::conj(g.s) * g.p + std::conj(g.s)), 1.0);
  return std::min(a, b);
}

double margin_cond3(const g_point& g) {
  const auto [r1, r2] = solve_quadratic(1.0, -g.s, g.p);
  return std::min(slack(std::abs(r1), 1.0), slack(std::abs(r2), 1.0));
}

double margin_cond4(const g_point& g) {
  return slack(std::abs(g.s - std::conj(g.s) * g.p) + std::norm(g.p), 1.0);
}

double margin_cond5(const g_point& g) {
  return std::min(slack(std::abs(g.s), 2.0), margin_cond4(g));
}

double margin_from_sup(const disc_sup& s) {
  if (s.divergent) return -1.0;
  return slack(s.value, 1.0);
}

// sup_{|z| <= 1} |(2zp - s) / (2 - zs)| < 1
double margin_cond6(const g_point& g) {
  return margin_from_sup(sup_abs_ratio_disc(-g.s, 2.0 * g.p, 2.0, -g.s));
}

// sup_{|z| <= 1} |(2p - conj(z)s) / (2 - zs)| < 1; the numerator modulus
// equals |2 conj(p) - conj(s) z|, which is holomorphic in z.
double margin_cond7(const g_point& g) {
  return margin_from_sup(sup_abs_ratio_disc(2.0 * std::conj(g.p), -std::conj(g.s), 2.0, -g.s));
}

double margin_cond8(const g_point& g) {
  return slack(2.0 * std::abs(g.s - std::conj(g.s) * g.p) +
                   std::abs(g.s * g.s - 4.0 * g.p) + std::norm(g.s),
               4.0);
}

// s = beta p + conj(beta) has a unique solution while |p| != 1:
//   (1 + Re p) b1 - (Im p) b2 = Re s
//   (Im p) b1 + (Re p - 1) b2 = Im s
// with determinant |p|^2 - 1.
double margin_cond9(const g_point& g, const tolerance_config& cfg) {
  const double slack_p = slack(std::abs(g.p), 1.0);
  if (1.0 - std::abs(g.p) <= cfg.boundary_band) return slack_p;
  const double det = std::norm(g.p) - 1.0;
  const double b1 = (std::real(g.s) * (std::real(g.p) - 1.0) + std::imag(g.s) * std::imag(g.p)) / det;
  const double b2 = (std::imag(g.s) * (1.0 + std::real(g.p)) - std::real(g.s) * std::imag(g.p)) / det;
  return std::min(slack_p, slack(std::hypot(b1, b2), 1.0));
}

double margin_for_condition(const g_point& g, int condition, const tolerance_config& cfg) {
  switch (condition) {
    case 1: // the definition; decided by the closed-form condition 4
    case 4: return margin_cond4(g);
    case 2: return margin_cond2(g);
    case 3: return margin_cond3(g);
    case 5: return margin_cond5(g);
    case 6: return margin_cond6(g);
    case 7: return margin_cond7(g);
    case 8: return margin_cond8(g);
    case 9: return margin_cond9(g, cfg);
    default:
      throw error(errc::invalid_condition, "membership condition must be 1..9");
  }
}

} // namespace

membership_report membership(const g_point& g, int condition, const tolerance_config& cfg) {
  validate(cfg);
  if (condition == 0) condition = 1;
  const double m = margin_for_condition(g, condition, cfg);
  return {margin_to_tri(m, cfg), m};
}

membership_report membership_gc(const g_point& g, double c, const tolerance_config& cfg) {
  validate(cfg);
  if (!(c > 1.0)) throw error(errc::invalid_parameter, "sub-level parameter must exceed 1");
  const double a = slack(c * std::abs(g.s * g.s - 4.0 * g.p) + std::norm(g.s),
                         2.0 * (1.0 + std::norm(g.p)));
  const double b = slack(std::norm(g.p) + std::imag(std::conj(g.s) * g.p + std::conj(g.s)), 1.0);
  const double m = std::min(a, b);
  return {margin_to_tri(m, cfg), m};
}

g_point apply_aut(const disc_automorphism& f, const g_point& g, const tolerance_config& cfg) {
  require_automorphism(f, cfg);
  const bidisc_point lift = symmetrize_inverse(g, cfg);
  return symmetrize({apply(f, lift.z1), apply(f, lift.z2)});
}

double leaf_index(const g_point& g, const tolerance_config& cfg) {
  const auto rep = membership(g, 0, cfg);
  if (rep.tri != region::inside)
    throw error(errc::outside_domain, "point is not interior to the symmetrized bidisc");
  const double disc = std::abs(g.s * g.s - 4.0 * g.p);
  const double denom = 2.0 + 2.0 * std::norm(g.p) - std::norm(g.s) + disc;
  return std::sqrt(2.0 * disc / denom);
}

double leaf_index_via_lift(const g_point& g, const tolerance_config& cfg) {
  return mobius_distance(symmetrize_inverse(g, cfg));
}

double reindex_a_to_b(double a) {
  if (!(a >= 0.0 && a < 1.0))
    throw error(errc::invalid_parameter, "leaf index must lie in [0, 1)");
  return a / (1.0 + std::sqrt((1.0 - a) * (1.0 + a)));
}

double reindex_b_to_a(double b) {
  if (!(b >= 0.0 && b < 1.0))
    throw error(errc::invalid_parameter, "reindexed value must lie in [0, 1)");
  return 2.0 * b / (1.0 + b * b);
}

disc_automorphism recover_automorphism(double a, const bidisc_point& lift,
                                       const tolerance_config& cfg) {
  validate(cfg);
  require_bidisc(lift, cfg);
  if (!(a > cfg.boundary_band))
    throw error(errc::degenerate_leaf, "recovery needs a positive leaf index");
  if (!(a < 1.0))
    throw error(errc::invalid_parameter, "leaf index must lie in [0, 1)");
  if (!approx_eq(mobius_distance(lift), a, cfg.eq_tol))
    throw error(errc::distance_mismatch, "lift separation does not match the leaf index");
  // Send lift.z2 to 0; what remains fixes 0 and is a rotation.
  const disc_automorphism to_zero{0.0, lift.z2};
  const double mu = std::arg(apply(to_zero, lift.z1));
  return compose(inverse(to_zero), disc_automorphism{mu, 0.0});
}

std::vector<g_point> orbit_path(double a, const g_point& target, int steps,
                                const tolerance_config& cfg) {
  validate(cfg);
  if (steps < 2) throw error(errc::invalid_parameter, "path needs at least two waypoints");
  if (!(a > cfg.boundary_band && a < 1.0))
    throw error(errc::invalid_parameter, "leaf index must lie in (0, 1)");
  if (!approx_eq(leaf_index(target, cfg), a, cfg.eq_tol))
    throw error(errc::leaf_mismatch, "target does not lie on the requested leaf");

  const bidisc_point lift = symmetrize_inverse(target, cfg);
  const disc_automorphism f = recover_automorphism(a, lift, cfg);
  // Blaschke-form angle (phi(z) = e^{i theta'}(alpha - z)/(1 - conj(alpha) z))
  // in [0, 2pi); the identity is theta' = pi, alpha = 0, which makes the path
  // from an identity target constant.
  double theta_b = std::fmod(f.theta - pi, 2.0 * pi);
  if (theta_b < 0.0) theta_b += 2.0 * pi;

  std::vector<g_point> path;
  path.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) / (steps - 1);
    const disc_automorphism ft{normalize_angle(t * theta_b + (1.0 - t) * pi + pi),
                               t * f.alpha};
    path.push_back(symmetrize({apply(ft, a), apply(ft, cplx(0.0))}));
  }
  return path;
}

std::vector<g_point> sample_interior(std::size_t n, std::uint64_t seed) {
  std::vector<g_point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    splitmix64 g = sample_stream(seed, i);
    out.push_back(symmetrize({random_disc(g), random_disc(g)}));
  }
  return out;
}

} // namespace symb
