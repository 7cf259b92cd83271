#pragma once

#include <cstdint>

#include "isaev_domains.hpp"

namespace symb {

// Fractional-linear identification of the symmetrized bidisc with the
// unbounded realization: (s, p) -> (i(1+p)/(1-p), -is/(1-p)).
d1_point g_to_d1(const g_point& g, const tolerance_config& cfg = default_tolerances());
// inverse: (u, v) -> (s, p) = (-2v/(u+i), (u-i)/(u+i))
g_point d1_to_g(const d1_point& p, const tolerance_config& cfg = default_tolerances());

// Unchecked variants for transporting exterior points; they only guard the
// denominators, not membership.
d1_point g_to_d1_unchecked(const g_point& g, const tolerance_config& cfg = default_tolerances());
g_point d1_to_g_unchecked(const d1_point& p, const tolerance_config& cfg = default_tolerances());

// (z, w) -> ((z - w)/(1 - zw), -i(z + w)/(1 - zw)) onto the pre-symmetrized
// model Omega1.
struct omega1_point {
  cplx u;
  cplx v;
};
omega1_point bidisc_to_omega1(const bidisc_point& z,
                              const tolerance_config& cfg = default_tolerances());

// Inverse through z = (1 + r)/(u - iv), w = -(1 + r)/(u + iv) with
// r = sqrt_slit(1 - u^2 - v^2); u = +-iv short-circuits to (iv, 0)/(0, iv),
// and a primary pair outside the closed bidisc flips to (-1/w, -1/z).
// Values on the unit circle within boundary_band refuse with
// boundary_undecidable.
bidisc_point omega1_to_bidisc(const omega1_point& q,
                              const tolerance_config& cfg = default_tolerances());

// (z, w) -> (z - w : 1 - zw : i(1 + zw) : -i(z + w)) into CP^3.
proj_point bidisc_to_proj(const bidisc_point& z,
                          const tolerance_config& cfg = default_tolerances());

// Inverse on the projective model; the root ordering is fixed by requiring
// x1/x0 * (z - w)/(1 - zw) = +1 in the affine chart, and x0 = 0 returns the
// diagonal point (z, z).
bidisc_point proj_to_bidisc(const proj_point& q,
                            const tolerance_config& cfg = default_tolerances());

// Symmetrization maps of the two models, landing in the unbounded domain:
// (u, v) -> (i sqrt_slit(1 - u^2 - v^2), v) and (x0:x1:x2:x3) -> (x2/x1, x3/x1).
d1_point symmetrize_omega1(const omega1_point& q,
                           const tolerance_config& cfg = default_tolerances());
d1_point symmetrize_proj(const proj_point& q,
                         const tolerance_config& cfg = default_tolerances());

enum class diagram_kind { omega1, proj };

struct diagram_report {
  double max_residual = 0.0;
  std::size_t n_samples = 0;
  bidisc_point worst{};
};

// Relative-scaled residual between the two composite routes
// bidisc -> model -> unbounded domain and bidisc -> (s, p) -> unbounded
// domain, maximized over n seeded bidisc samples.
diagram_report check_diagram(diagram_kind kind, std::size_t n, std::uint64_t seed,
                             const tolerance_config& cfg = default_tolerances());

} // namespace symb
