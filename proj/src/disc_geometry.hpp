#pragma once

#include "complex_core.hpp"

namespace symb {

// Point of the bidisc: both coordinates in the open unit disc.
struct bidisc_point {
  cplx z1;
  cplx z2;
};

bool is_in_disc(cplx z, const tolerance_config& cfg = default_tolerances());
void require_bidisc(const bidisc_point& p, const tolerance_config& cfg = default_tolerances());

// Automorphism of the unit disc, z -> e^{i theta} (z - alpha) / (1 - conj(alpha) z).
struct disc_automorphism {
  double theta = 0.0;
  cplx alpha = 0.0;
};

disc_automorphism identity_automorphism();

// theta = pi gives the self-inverse Blaschke form z -> (alpha - z)/(1 - conj(alpha) z).
disc_automorphism blaschke_at(cplx alpha, const tolerance_config& cfg = default_tolerances());

void require_automorphism(const disc_automorphism& f,
                          const tolerance_config& cfg = default_tolerances());

cplx apply(const disc_automorphism& f, cplx z);

// compose(f, g) acts as z -> f(g(z)); theta is normalized into (-pi, pi].
disc_automorphism compose(const disc_automorphism& f, const disc_automorphism& g);

disc_automorphism inverse(const disc_automorphism& f);

// Pseudo-hyperbolic distance |(z1 - z2) / (1 - conj(z1) z2)|.
double mobius_distance(cplx z1, cplx z2);
double mobius_distance(const bidisc_point& p);

double normalize_angle(double theta); // into (-pi, pi]

} // namespace symb
