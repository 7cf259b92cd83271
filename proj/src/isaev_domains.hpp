#pragma once

#include <array>

#include "symmetrized_bidisc.hpp"

namespace symb {

// Point of the unbounded realization carved out of C^2 by
// |1 + z1^2 - z2^2| < 1 + |z1|^2 - |z2|^2 and Im(z1 (1 + conj(z2))) > 0.
struct d1_point {
  cplx z1;
  cplx z2;
};

// Nine equivalent characterizations (1..9, described in README.md); 0 picks
// the default (condition 1, the definition, which condition 2 restates).
membership_report membership_d1(const d1_point& p, int condition = 0,
                                const tolerance_config& cfg = default_tolerances());

// One-sided band s|1 + z1^2 - z2^2| < 1 + |z1|^2 - |z2|^2 (s >= 1).
membership_report membership_ds(const d1_point& p, double s,
                                const tolerance_config& cfg = default_tolerances());

// Two-sided band s|eta| < 1 + |z1|^2 - |z2|^2 < t|eta| with 1 <= s < t; pass
// t = infinity for the unbounded band, which instead excludes the complex
// curve 1 + z1^2 - z2^2 = 0.
membership_report membership_dst(const d1_point& p, double s, double t,
                                 const tolerance_config& cfg = default_tolerances());

// Exhaustion member c|eta| < 1 + |z1|^2 - |z2|^2, requires c > 1.
membership_report membership_dc(const d1_point& p, double c,
                                const tolerance_config& cfg = default_tolerances());

// Hypersurface index |1 + z1^2 - z2^2| / (1 + |z1|^2 - |z2|^2) in [0, 1);
// requires interior membership.
double eta_index(const d1_point& p, const tolerance_config& cfg = default_tolerances());

// |u^2| + |v^2| - 1 < |u^2 + v^2 - 1|
membership_report membership_omega1(cplx u, cplx v,
                                    const tolerance_config& cfg = default_tolerances());

// Point of CP^3 by homogeneous coordinates.
struct proj_point {
  std::array<cplx, 4> x{};
};

// Scales the largest-modulus coordinate to exactly 1 (first such index on
// ties).  Throws zero_vector on the zero tuple.
proj_point canonicalize(const proj_point& q);

bool proj_eq(const proj_point& a, const proj_point& b, double tol);

// Projective model: in the chart x0 != 0 (affine coordinates (t, u, v)) the
// conditions are t^2 + u^2 - v^2 = 1, |t|^2 + |u|^2 - |v|^2 > 1 and
// Im(u (conj t + conj v)) > 0; on x0 = 0 the quadric condition becomes
// t^2 + u^2 - v^2 = 0.  Chart selection: |x0| > boundary_band * max|x_i|.
membership_report membership_d21(const proj_point& q,
                                 const tolerance_config& cfg = default_tolerances());

// Real 3x3 matrix preserving the form diag(1, 1, -1) with determinant one.
struct so21_matrix {
  std::array<std::array<double, 3>, 3> m{};
};

so21_matrix so21_identity();
so21_matrix so21_rot01(double t);   // rotation in the (x0, x1) plane
so21_matrix so21_boost02(double t); // boost mixing x0 and x2
so21_matrix so21_boost12(double t); // boost mixing x1 and x2
so21_matrix so21_multiply(const so21_matrix& a, const so21_matrix& b);

double so21_eta_residual(const so21_matrix& a); // max entry of |a^T eta a - eta|
double so21_det(const so21_matrix& a);

// Throws invalid_parameter unless eta-orthogonal with det 1 to eq_tol.
void require_so21(const so21_matrix& a, const tolerance_config& cfg = default_tolerances());

// Fractional-linear action (z1, z2) -> row-2 and row-3 affine combinations
// over the row-1 combination a11 + a12 z1 + a13 z2.
d1_point so21_act(const so21_matrix& a, const d1_point& p,
                  const tolerance_config& cfg = default_tolerances());

} // namespace symb
