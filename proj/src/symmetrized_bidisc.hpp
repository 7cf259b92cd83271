#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "disc_geometry.hpp"

namespace symb {

// Point of C^2 in symmetrized coordinates (s, p) = (z1 + z2, z1 z2).
struct g_point {
  cplx s;
  cplx p;
};

struct membership_report {
  region tri = region::outside;
  double margin = 0.0;
};

g_point symmetrize(const bidisc_point& z);

// The unordered fiber of symmetrize, sorted lexicographically by (Re, Im).
// Requires (s, p) interior to the domain.
bidisc_point symmetrize_inverse(const g_point& g,
                                const tolerance_config& cfg = default_tolerances());

// Membership test for the symmetrized bidisc.  `condition` selects one of the
// nine equivalent characterizations (1..9, described in README.md); 0 selects
// the default (condition 1, which delegates to 4).  The margin is the minimum
// slack over the condition's inequalities, each normalized by 1 + |rhs|.
membership_report membership(const g_point& g, int condition = 0,
                             const tolerance_config& cfg = default_tolerances());

// Sub-level member c|s^2 - 4p| + |s|^2 < 2(1 + |p|^2) with |p|^2 + Im(conj(s)p
// + conj(s)) < 1; requires c > 1.
membership_report membership_gc(const g_point& g, double c,
                                const tolerance_config& cfg = default_tolerances());

// Action induced on (s, p) by a disc automorphism: lift through
// symmetrize_inverse, apply the automorphism to both coordinates, symmetrize.
g_point apply_aut(const disc_automorphism& f, const g_point& g,
                  const tolerance_config& cfg = default_tolerances());

// Index of the orbit leaf through (s, p): the Moebius distance between the two
// lift coordinates, computed in closed form as
//   q^2 = 2|s^2 - 4p| / (2 + 2|p|^2 - |s|^2 + |s^2 - 4p|),
// which avoids the 1/|z1 - z2| roundoff amplification of the root-based route.
double leaf_index(const g_point& g, const tolerance_config& cfg = default_tolerances());

// Same quantity computed through the explicit lift; used for cross-checks.
double leaf_index_via_lift(const g_point& g,
                           const tolerance_config& cfg = default_tolerances());

// Leaf reindexing b = a / (1 + sqrt(1 - a^2)) and its inverse a = 2b/(1 + b^2).
double reindex_a_to_b(double a);
double reindex_b_to_a(double b);

// Find the disc automorphism f with f(a) = lift.z1 and f(0) = lift.z2.
// Requires a > 0 (away from the royal leaf) and mobius_distance(lift) = a.
disc_automorphism recover_automorphism(double a, const bidisc_point& lift,
                                       const tolerance_config& cfg = default_tolerances());

// Path t -> induced action of f_t on (a, 0), where f_t interpolates the
// recovered automorphism of `target` back to the identity through
// theta_t = t*theta + (1-t)*pi, alpha_t = t*alpha in the Blaschke-form
// parameters (theta in [0, 2pi)).  Returns `steps` waypoints from (a, 0) to
// `target`, all on the leaf of index a.
std::vector<g_point> orbit_path(double a, const g_point& target, int steps,
                                const tolerance_config& cfg = default_tolerances());

// Deterministic interior samples: pushforward of uniform bidisc points.
std::vector<g_point> sample_interior(std::size_t n, std::uint64_t seed);

} // namespace symb
