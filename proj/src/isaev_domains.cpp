#include "isaev_domains.hpp"

#include <algorithm>
#include <cmath>

#include "disc_sup.hpp"

namespace symb {

namespace {

cplx eta_quadric(const d1_point& p) { return 1.0 + p.z1 * p.z1 - p.z2 * p.z2; }

double real_part_bound(const d1_point& p) { return 1.0 + std::norm(p.z1) - std::norm(p.z2); }

double im_form(const d1_point& p) { return std::imag(p.z1 * (1.0 + std::conj(p.z2))); }

double margin_cond2(const d1_point& p) {
  const double a = slack(std::abs(eta_quadric(p)), real_part_bound(p));
  const double b = slack(0.0, im_form(p));
  return std::min(a, b);
}

// roots of (u + i) z^2 + 2 v z + (u - i) = 0 in the open disc; a vanishing
// leading coefficient sends one root to infinity, which no disc contains.
double margin_cond3(const d1_point& p) {
  const cplx lead = p.z1 + cplx(0.0, 1.0);
  if (std::abs(lead) <= 1e-14 * (1.0 + std::abs(p.z1))) return -1.0;
  const auto [r1, r2] = solve_quadratic(lead, 2.0 * p.z2, p.z1 - cplx(0.0, 1.0));
  return std::min(slack(std::abs(r1), 1.0), slack(std::abs(r2), 1.0));
}

// |Im v + i Im(conj(u) v)| < Im u
double margin_cond4(const d1_point& p) {
  const double lhs = std::hypot(std::imag(p.z2), std::imag(std::conj(p.z1) * p.z2));
  return slack(lhs, std::imag(p.z1));
}

double margin_cond5(const d1_point& p) {
  const double a = slack(std::abs(p.z2), std::abs(p.z1 + cplx(0.0, 1.0)));
  return std::min(a, margin_cond4(p));
}

double margin_from_sup(const disc_sup& s) {
  if (s.divergent) return -1.0;
  return slack(s.value, 1.0);
}

// sup_a |(a(u - i) + v) / (u + i + a v)| < 1 over the closed disc
double margin_cond6(const d1_point& p) {
  const cplx i(0.0, 1.0);
  return margin_from_sup(sup_abs_ratio_disc(p.z2, p.z1 - i, p.z1 + i, p.z2));
}

// sup_a |(u - i + conj(a) v) / (u + i + a v)| < 1; the numerator modulus
// equals |conj(u) + i + conj(v) a|, holomorphic in a.
double margin_cond7(const d1_point& p) {
  const cplx i(0.0, 1.0);
  return margin_from_sup(
      sup_abs_ratio_disc(std::conj(p.z1) + i, std::conj(p.z2), p.z1 + i, p.z2));
}

double margin_cond8(const d1_point& p) {
  const cplx i(0.0, 1.0);
  const double lhs = 2.0 * std::hypot(std::imag(p.z2), std::imag(std::conj(p.z1) * p.z2)) +
                     std::abs(eta_quadric(p));
  const double rhs = std::norm(i + p.z1) - std::norm(p.z2);
  return slack(lhs, rhs);
}

// Im u > 0 and v + b1 u + b2 = 0 for some b1 + i b2 in the disc; the complex
// equation splits into Re v + b1 Re u + b2 = 0, Im v + b1 Im u = 0.
double margin_cond9(const d1_point& p, const tolerance_config& cfg) {
  const double slack_im = slack(0.0, std::imag(p.z1));
  if (std::imag(p.z1) <= cfg.boundary_band) return slack_im;
  const double b1 = -std::imag(p.z2) / std::imag(p.z1);
  const double b2 = -std::real(p.z2) - b1 * std::real(p.z1);
  return std::min(slack_im, slack(std::hypot(b1, b2), 1.0));
}

double margin_for_condition_d1(const d1_point& p, int condition, const tolerance_config& cfg) {
  switch (condition) {
    case 1: // the definition
    case 2: return margin_cond2(p);
    case 3: return margin_cond3(p);
    case 4: return margin_cond4(p);
    case 5: return margin_cond5(p);
    case 6: return margin_cond6(p);
    case 7: return margin_cond7(p);
    case 8: return margin_cond8(p);
    case 9: return margin_cond9(p, cfg);
    default:
      throw error(errc::invalid_condition, "membership condition must be 1..9");
  }
}

} // namespace

membership_report membership_d1(const d1_point& p, int condition, const tolerance_config& cfg) {
  validate(cfg);
  if (condition == 0) condition = 1;
  const double m = margin_for_condition_d1(p, condition, cfg);
  return {margin_to_tri(m, cfg), m};
}

namespace {

membership_report band_membership(const d1_point& p, double s_lo, double s_hi,
                                  const tolerance_config& cfg) {
  const double eta = std::abs(eta_quadric(p));
  const double bound = real_part_bound(p);
  double m = std::min(slack(s_lo * eta, bound), slack(0.0, im_form(p)));
  if (std::isinf(s_hi)) {
    m = std::min(m, eta); // distance from the excluded curve eta = 0
  } else {
    m = std::min(m, slack(bound, s_hi * eta));
  }
  return {margin_to_tri(m, cfg), m};
}

} // namespace

membership_report membership_ds(const d1_point& p, double s, const tolerance_config& cfg) {
  validate(cfg);
  if (!(s >= 1.0)) throw error(errc::invalid_parameter, "band parameter must be at least 1");
  const double eta = std::abs(eta_quadric(p));
  const double m = std::min(slack(s * eta, real_part_bound(p)), slack(0.0, im_form(p)));
  return {margin_to_tri(m, cfg), m};
}

membership_report membership_dst(const d1_point& p, double s, double t,
                                 const tolerance_config& cfg) {
  validate(cfg);
  if (!(s >= 1.0) || !(t > s))
    throw error(errc::invalid_parameter, "band parameters need 1 <= s < t");
  return band_membership(p, s, t, cfg);
}

membership_report membership_dc(const d1_point& p, double c, const tolerance_config& cfg) {
  validate(cfg);
  if (!(c > 1.0)) throw error(errc::invalid_parameter, "exhaustion parameter must exceed 1");
  return membership_ds(p, c, cfg);
}

double eta_index(const d1_point& p, const tolerance_config& cfg) {
  const auto rep = membership_d1(p, 0, cfg);
  if (rep.tri != region::inside)
    throw error(errc::outside_domain, "point is not interior to the domain");
  return std::abs(eta_quadric(p)) / real_part_bound(p);
}

membership_report membership_omega1(cplx u, cplx v, const tolerance_config& cfg) {
  validate(cfg);
  const double m = slack(std::norm(u) + std::norm(v) - 1.0, std::abs(u * u + v * v - 1.0));
  return {margin_to_tri(m, cfg), m};
}

proj_point canonicalize(const proj_point& q) {
  std::size_t best = 0;
  double best_mod = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double m = std::abs(q.x[i]);
    if (m > best_mod) {
      best_mod = m;
      best = i;
    }
  }
  if (best_mod == 0.0) throw error(errc::zero_vector, "projective point cannot be the zero tuple");
  proj_point out;
  for (std::size_t i = 0; i < 4; ++i) out.x[i] = q.x[i] / q.x[best];
  out.x[best] = 1.0;
  return out;
}

bool proj_eq(const proj_point& a, const proj_point& b, double tol) {
  const proj_point ca = canonicalize(a);
  const proj_point cb = canonicalize(b);
  for (std::size_t i = 0; i < 4; ++i)
    if (!approx_eq(ca.x[i], cb.x[i], tol)) return false;
  return true;
}

membership_report membership_d21(const proj_point& q, const tolerance_config& cfg) {
  validate(cfg);
  double norm_max = 0.0;
  for (const auto& c : q.x) norm_max = std::max(norm_max, std::abs(c));
  if (norm_max == 0.0) throw error(errc::zero_vector, "projective point cannot be the zero tuple");

  const bool affine_chart = std::abs(q.x[0]) > cfg.boundary_band * norm_max;
  cplx t, u, v;
  double quad_target;
  if (affine_chart) {
    t = q.x[1] / q.x[0];
    u = q.x[2] / q.x[0];
    v = q.x[3] / q.x[0];
    quad_target = 1.0;
  } else {
    const proj_point canon = canonicalize(q);
    t = canon.x[1];
    u = canon.x[2];
    v = canon.x[3];
    quad_target = 0.0;
  }

  const cplx quad = t * t + u * u - v * v - quad_target;
  const double scale = 1.0 + std::norm(t) + std::norm(u) + std::norm(v);
  if (std::abs(quad) > cfg.eq_tol * scale)
    return {region::outside, -std::abs(quad) / scale};

  double m = slack(0.0, std::imag(u * (std::conj(t) + std::conj(v))));
  if (affine_chart) m = std::min(m, slack(1.0, std::norm(t) + std::norm(u) - std::norm(v)));
  return {margin_to_tri(m, cfg), m};
}

so21_matrix so21_identity() {
  so21_matrix a;
  for (int i = 0; i < 3; ++i) a.m[i][i] = 1.0;
  return a;
}

so21_matrix so21_rot01(double t) {
  so21_matrix a = so21_identity();
  a.m[0][0] = std::cos(t);
  a.m[0][1] = -std::sin(t);
  a.m[1][0] = std::sin(t);
  a.m[1][1] = std::cos(t);
  return a;
}

so21_matrix so21_boost02(double t) {
  so21_matrix a = so21_identity();
  a.m[0][0] = std::cosh(t);
  a.m[0][2] = std::sinh(t);
  a.m[2][0] = std::sinh(t);
  a.m[2][2] = std::cosh(t);
  return a;
}

so21_matrix so21_boost12(double t) {
  so21_matrix a = so21_identity();
  a.m[1][1] = std::cosh(t);
  a.m[1][2] = std::sinh(t);
  a.m[2][1] = std::sinh(t);
  a.m[2][2] = std::cosh(t);
  return a;
}

so21_matrix so21_multiply(const so21_matrix& a, const so21_matrix& b) {
  so21_matrix c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += a.m[i][k] * b.m[k][j];
      c.m[i][j] = acc;
    }
  return c;
}

double so21_eta_residual(const so21_matrix& a) {
  // eta = diag(1, 1, -1); residual = max |(a^T eta a - eta)_{ij}|
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double acc = a.m[0][i] * a.m[0][j] + a.m[1][i] * a.m[1][j] - a.m[2][i] * a.m[2][j];
      if (i == j) acc -= (i == 2) ? -1.0 : 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  return worst;
}

double so21_det(const so21_matrix& a) {
  return a.m[0][0] * (a.m[1][1] * a.m[2][2] - a.m[1][2] * a.m[2][1]) -
         a.m[0][1] * (a.m[1][0] * a.m[2][2] - a.m[1][2] * a.m[2][0]) +
         a.m[0][2] * (a.m[1][0] * a.m[2][1] - a.m[1][1] * a.m[2][0]);
}

void require_so21(const so21_matrix& a, const tolerance_config& cfg) {
  if (so21_eta_residual(a) > cfg.eq_tol || std::abs(so21_det(a) - 1.0) > cfg.eq_tol)
    throw error(errc::invalid_parameter, "matrix is not in the special eta-orthogonal group");
}

d1_point so21_act(const so21_matrix& a, const d1_point& p, const tolerance_config& cfg) {
  require_so21(a, cfg);
  const cplx den = a.m[0][0] + a.m[0][1] * p.z1 + a.m[0][2] * p.z2;
  const double scale =
      std::abs(a.m[0][0]) + std::abs(a.m[0][1] * p.z1) + std::abs(a.m[0][2] * p.z2);
  if (std::abs(den) <= cfg.boundary_band * (1.0 + scale))
    throw error(errc::singular_denominator, "fractional-linear action undefined at this point");
  return {(a.m[1][0] + a.m[1][1] * p.z1 + a.m[1][2] * p.z2) / den,
          (a.m[2][0] + a.m[2][1] * p.z1 + a.m[2][2] * p.z2) / den};
}

} // namespace symb
