#include "complex_core.hpp"

#include <algorithm>
#include <cmath>

namespace symb {

void validate(const tolerance_config& cfg) {
  if (!(cfg.eq_tol > 0.0) || !(cfg.boundary_band > 0.0) || !(cfg.fd_step > 0.0))
    throw error(errc::invalid_parameter, "tolerances must be positive");
  if (!(cfg.eq_tol > cfg.boundary_band))
    throw error(errc::invalid_parameter, "eq_tol must exceed boundary_band");
}

const tolerance_config& default_tolerances() {
  static const tolerance_config cfg{};
  return cfg;
}

const char* to_string(region r) {
  switch (r) {
    case region::inside: return "inside";
    case region::boundary: return "boundary";
    case region::outside: return "outside";
  }
  return "?";
}

region margin_to_tri(double margin, const tolerance_config& cfg) {
  if (std::abs(margin) <= cfg.boundary_band) return region::boundary;
  return margin > 0.0 ? region::inside : region::outside;
}

bool approx_eq(double x, double y, double tol) {
  return std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

bool approx_eq(cplx x, cplx y, double tol) {
  return std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

std::pair<cplx, cplx> solve_quadratic(cplx a, cplx b, cplx c) {
  if (std::abs(a) == 0.0)
    throw error(errc::degenerate_coefficient, "quadratic has zero leading coefficient");
  const cplx d = std::sqrt(b * b - 4.0 * a * c);
  // q = -(b + sign*d)/2 with the sign that avoids cancellation in b + sign*d.
  const cplx bd = (std::real(std::conj(b) * d) >= 0.0) ? b + d : b - d;
  if (std::abs(bd) == 0.0) {
    // b = d = 0 forces c = 0 (a is nonzero): double root at the origin.
    const cplx r = std::sqrt(-c / a);
    return {r, -r};
  }
  const cplx q = -0.5 * bd;
  const cplx r1 = q / a;
  const cplx r2 = c / q;
  return {r1, r2};
}

cplx sqrt_slit(cplx w, const tolerance_config& cfg) {
  // Distance from w to the ray (-inf, 0]: |Im w| to the left of 0, |w| otherwise.
  const double dist = std::real(w) <= 0.0 ? std::abs(std::imag(w)) : std::abs(w);
  if (dist <= cfg.boundary_band)
    throw error(errc::branch_cut, "sqrt_slit argument on the branch cut");
  return std::sqrt(w);
}

} // namespace symb
