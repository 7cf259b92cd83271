#include "disc_sup.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace symb {

namespace {

constexpr int n_grid = 720;

struct circle_table {
  std::array<double, n_grid> c{};
  std::array<double, n_grid> s{};
  circle_table() {
    for (int i = 0; i < n_grid; ++i) {
      const double t = 2.0 * pi * i / n_grid;
      c[i] = std::cos(t);
      s[i] = std::sin(t);
    }
  }
};

// |a0 + a1 e^{it}|^2 = |a0|^2 + |a1|^2 + 2 Re(conj(a0) a1 e^{it})
struct ring_mod2 {
  double base;
  double cr, ci;
  ring_mod2(cplx a0, cplx a1) {
    base = std::norm(a0) + std::norm(a1);
    const cplx cross = std::conj(a0) * a1;
    cr = cross.real();
    ci = cross.imag();
  }
  double at_table(const circle_table& tab, int i) const {
    return base + 2.0 * (cr * tab.c[i] - ci * tab.s[i]);
  }
  double at(double t) const { return base + 2.0 * (cr * std::cos(t) - ci * std::sin(t)); }
};

} // namespace

disc_sup sup_abs_ratio_disc(cplx n0, cplx n1, cplx d0, cplx d1) {
  const double num_scale = std::abs(n0) + std::abs(n1);
  const double den_scale = std::abs(d0) + std::abs(d1);
  if (den_scale == 0.0) return {0.0, true};

  // Denominator zero z = -d0/d1 inside the closed disc (with a one-ulp-scale
  // guard): constant ratio if numerator is proportional, otherwise divergent.
  if (std::abs(d0) <= std::abs(d1) * (1.0 + 1e-12)) {
    const cplx cross = n0 * d1 - n1 * d0;
    const double cross_scale = std::abs(n0 * d1) + std::abs(n1 * d0) + num_scale * den_scale;
    if (std::abs(cross) <= 1e-13 * cross_scale) {
      return {std::abs(n1) / std::abs(d1), false};
    }
    return {0.0, true};
  }

  static const circle_table tab;
  const ring_mod2 num(n0, n1);
  const ring_mod2 den(d0, d1);

  std::array<double, n_grid> v;
  for (int i = 0; i < n_grid; ++i) v[i] = num.at_table(tab, i) / den.at_table(tab, i);

  // Golden-section refinement of the grid's local maxima (the true function
  // has at most a few critical points), so near-ties between separate peaks
  // cannot pick the wrong basin.  Flat ratios produce one spurious "local
  // max" per noise ripple; refining the top few by value is enough there
  // since all ripples sit at the same height.
  std::array<int, n_grid> cand;
  int n_cand = 0;
  double peak = 0.0;
  for (int i = 0; i < n_grid; ++i) {
    const double prev = v[(i + n_grid - 1) % n_grid];
    const double next = v[(i + 1) % n_grid];
    if (v[i] < prev || v[i] < next) continue;
    peak = std::max(peak, v[i]);
    cand[n_cand++] = i;
  }
  constexpr int max_refine = 8;
  if (n_cand > max_refine) {
    std::partial_sort(cand.begin(), cand.begin() + max_refine, cand.begin() + n_cand,
                      [&v](int a, int b) { return v[a] > v[b]; });
    n_cand = max_refine;
  }

  const double step = 2.0 * pi / n_grid;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int k = 0; k < n_cand; ++k) {
    const int i = cand[k];
    double lo = (i - 1) * step;
    double hi = (i + 1) * step;
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = num.at(x1) / den.at(x1);
    double f2 = num.at(x2) / den.at(x2);
    while (hi - lo > 1e-12) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = num.at(x2) / den.at(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = num.at(x1) / den.at(x1);
      }
    }
    peak = std::max(peak, std::max(f1, f2));
  }
  return {std::sqrt(peak), false};
}

} // namespace symb
