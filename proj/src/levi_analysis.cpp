#include "levi_analysis.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "disc_geometry.hpp"

namespace symb {

namespace {

constexpr cplx iu{0.0, 1.0};

void require_leaf_param(double a) {
  if (!(a > 0.0 && a < 1.0))
    throw error(errc::invalid_parameter, "leaf parameter a must lie in (0, 1)");
}

double norm2(cplx z) { return std::norm(z); }

// (d/dx - i d/dy)/2 and (d/dx + i d/dy)/2 four-point stencils in the
// selected slot of a C^2 -> C function.
template <typename Fn>
cplx wirtinger_fd(const Fn& f, cplx w1, cplx w2, int slot, double h, bool conjugated) {
  const auto eval = [&](cplx d) { return slot == 0 ? f(w1 + d, w2) : f(w1, w2 + d); };
  const cplx dx = (eval(h) - eval(-h)) / (2.0 * h);
  const cplx dy = (eval(iu * h) - eval(-iu * h)) / (2.0 * h);
  return conjugated ? 0.5 * (dx + iu * dy) : 0.5 * (dx - iu * dy);
}

// Gaussian elimination with partial pivoting on a 4x4 system.
double det4(std::array<std::array<double, 4>, 4> m) {
  double det = 1.0;
  for (int c = 0; c < 4; ++c) {
    int pivot = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
    if (m[pivot][c] == 0.0) return 0.0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const double factor = m[r][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return det;
}

} // namespace

double g_a(const bidisc_point& z, double a) {
  require_leaf_param(a);
  return norm2(z.z1 - z.z2) - a * a * norm2(1.0 - z.z1 * std::conj(z.z2));
}

std::pair<cplx, cplx> grad_g_a(const bidisc_point& z, double a) {
  require_leaf_param(a);
  const cplx c1 = std::conj(z.z1);
  const cplx c2 = std::conj(z.z2);
  const double a2 = a * a;
  return {(c1 - c2) + a2 * c2 * (1.0 - c1 * z.z2),
          -(c1 - c2) + a2 * c1 * (1.0 - c2 * z.z1)};
}

std::pair<cplx, cplx> grad_g_a_fd(const bidisc_point& z, double a,
                                  const tolerance_config& cfg) {
  require_leaf_param(a);
  validate(cfg);
  const auto f = [a](cplx w1, cplx w2) { return cplx(g_a({w1, w2}, a), 0.0); };
  return {wirtinger_fd(f, z.z1, z.z2, 0, cfg.fd_step, false),
          wirtinger_fd(f, z.z1, z.z2, 1, cfg.fd_step, false)};
}

levi_matrix_t levi_matrix(const bidisc_point& z, double a) {
  require_leaf_param(a);
  const double a2 = a * a;
  const cplx off = -1.0 + a2 * (1.0 - std::conj(z.z1) * z.z2);
  return {{{cplx(1.0 - a2 * norm2(z.z2), 0.0), off},
           {std::conj(off), cplx(1.0 - a2 * norm2(z.z1), 0.0)}}};
}

levi_matrix_t levi_matrix_fd(const bidisc_point& z, double a,
                             const tolerance_config& cfg) {
  require_leaf_param(a);
  validate(cfg);
  levi_matrix_t m{};
  for (int j = 0; j < 2; ++j) {
    const auto gj = [a, j](cplx w1, cplx w2) {
      const auto g = grad_g_a({w1, w2}, a);
      return j == 0 ? g.first : g.second;
    };
    for (int k = 0; k < 2; ++k)
      m[j][k] = wirtinger_fd(gj, z.z1, z.z2, k, cfg.fd_step, true);
  }
  return m;
}

levi_report levi_value(const bidisc_point& z, double a, const tolerance_config& cfg) {
  require_leaf_param(a);
  validate(cfg);
  levi_report rep;
  rep.point = z;
  rep.leaf = a;
  const double g = g_a(z, a);
  if (std::abs(g) > 1e-9 * (1.0 + a * a))
    throw error(errc::off_leaf, "levi_value: point is not on the requested leaf");
  std::tie(rep.grad1, rep.grad2) = grad_g_a(z, a);
  if (std::abs(rep.grad1) <= cfg.boundary_band)
    throw error(errc::vanishing_gradient, "levi_value: d/dz1 g_a vanishes");
  rep.matrix = levi_matrix(z, a);
  rep.tangent = -rep.grad2 / rep.grad1;
  const cplx v[2] = {rep.tangent, cplx(1.0, 0.0)};
  cplx acc = 0.0;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) acc += rep.matrix[j][k] * v[j] * std::conj(v[k]);
  rep.levi_value = std::real(acc);
  rep.closed_form_value = 2.0 * a * a * std::abs(rep.tangent);
  return rep;
}

double jacobian_sym_det(const bidisc_point& z, const tolerance_config& cfg) {
  validate(cfg);
  const double h = cfg.fd_step;
  const auto eval = [](const std::array<double, 4>& x) {
    const g_point g = symmetrize({{x[0], x[1]}, {x[2], x[3]}});
    return std::array<double, 4>{std::real(g.s), std::imag(g.s), std::real(g.p),
                                 std::imag(g.p)};
  };
  const std::array<double, 4> base{std::real(z.z1), std::imag(z.z1),
                                   std::real(z.z2), std::imag(z.z2)};
  std::array<std::array<double, 4>, 4> jac{};
  for (int c = 0; c < 4; ++c) {
    std::array<double, 4> hi = base, lo = base;
    hi[c] += h;
    lo[c] -= h;
    const auto fh = eval(hi), fl = eval(lo);
    for (int r = 0; r < 4; ++r) jac[r][c] = (fh[r] - fl[r]) / (2.0 * h);
  }
  return det4(jac);
}

std::array<double, 4> f_partials(const bidisc_point& z, const tolerance_config& cfg) {
  validate(cfg);
  const double band = cfg.boundary_band;
  if (std::abs(z.z1 - z.z2) <= band)
    throw error(errc::diagonal_point, "f_partials: the distance is not smooth on the diagonal");
  const double x1 = std::real(z.z1), y1 = std::imag(z.z1);
  const double x2 = std::real(z.z2), y2 = std::imag(z.z2);
  const double dn = (x1 - x2) * (x1 - x2) + (y1 - y2) * (y1 - y2);
  const double re = 1.0 - x1 * x2 - y1 * y2;
  const double im = x1 * y2 - x2 * y1;
  const double dm = re * re + im * im;
  const double f = std::sqrt(dn / dm);
  return {f * ((x1 - x2) / dn + (x2 * re - y2 * im) / dm),
          f * ((y1 - y2) / dn + (y2 * re + x2 * im) / dm),
          f * (-(x1 - x2) / dn + (x1 * re + y1 * im) / dm),
          f * (-(y1 - y2) / dn + (y1 * re - x1 * im) / dm)};
}

submersion_report check_f_submersion(const bidisc_point& z, const tolerance_config& cfg) {
  require_bidisc(z, cfg);
  const auto p = f_partials(z, cfg);
  submersion_report rep;
  rep.grad_norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
  rep.degenerate_indicator =
      std::abs(norm2(z.z1) + norm2(z.z2) - 2.0);
  return rep;
}

double cauchy_riemann_residual(cr_map map, cplx w1, cplx w2,
                               const tolerance_config& cfg) {
  validate(cfg);
  std::vector<std::function<cplx(cplx, cplx)>> coords;
  switch (map) {
    case cr_map::g_to_d1:
      coords = {[](cplx, cplx p) { return iu * (1.0 + p) / (1.0 - p); },
                [](cplx s, cplx p) { return -iu * s / (1.0 - p); }};
      break;
    case cr_map::bidisc_to_omega1:
      coords = {[](cplx z, cplx w) { return (z - w) / (1.0 - z * w); },
                [](cplx z, cplx w) { return -iu * (z + w) / (1.0 - z * w); }};
      break;
    case cr_map::proj_chart:
      if (std::abs(w1 - w2) <= cfg.boundary_band)
        throw error(errc::diagonal_point, "cauchy_riemann_residual: chart pole on the diagonal");
      coords = {[](cplx z, cplx w) { return (1.0 - z * w) / (z - w); },
                [](cplx z, cplx w) { return iu * (1.0 + z * w) / (z - w); },
                [](cplx z, cplx w) { return -iu * (z + w) / (z - w); }};
      break;
    case cr_map::symmetrize:
      coords = {[](cplx z, cplx w) { return z + w; },
                [](cplx z, cplx w) { return z * w; }};
      break;
    case cr_map::conjugate:
      coords = {[](cplx z, cplx) { return std::conj(z); },
                [](cplx, cplx w) { return std::conj(w); }};
      break;
  }
  double worst = 0.0;
  for (const auto& f : coords)
    for (int slot = 0; slot < 2; ++slot)
      worst = std::max(worst,
                       std::abs(wirtinger_fd(f, w1, w2, slot, cfg.fd_step, true)));
  return worst;
}

} // namespace symb
