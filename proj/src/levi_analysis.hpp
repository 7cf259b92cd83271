#pragma once

#include <array>
#include <utility>

#include "symmetrized_bidisc.hpp"

namespace symb {

// Defining function of the leaf hypersurface at index a:
// g_a(z1, z2) = |z1 - z2|^2 - a^2 |1 - z1 conj(z2)|^2.
double g_a(const bidisc_point& z, double a);

// Analytic Wirtinger gradient (d/dz1 g_a, d/dz2 g_a).
std::pair<cplx, cplx> grad_g_a(const bidisc_point& z, double a);

// Four-point finite-difference version of the same gradient, used as an
// independent oracle.
std::pair<cplx, cplx> grad_g_a_fd(const bidisc_point& z, double a,
                                  const tolerance_config& cfg = default_tolerances());

// Mixed second Wirtinger derivatives m[j][k] = d^2 g_a / (dz_{j+1} dzbar_{k+1});
// Hermitian 2x2.
using levi_matrix_t = std::array<std::array<cplx, 2>, 2>;
levi_matrix_t levi_matrix(const bidisc_point& z, double a);

// FD oracle for the matrix: four-point conjugate-Wirtinger stencil applied to
// the analytic gradient.
levi_matrix_t levi_matrix_fd(const bidisc_point& z, double a,
                             const tolerance_config& cfg = default_tolerances());

struct levi_report {
  bidisc_point point{};
  double leaf = 0.0;
  cplx grad1;
  cplx grad2;
  levi_matrix_t matrix{};
  cplx tangent;
  double levi_value = 0.0;
  double closed_form_value = 0.0;
};

// Full report at a point of the leaf with index a: tangent u = -grad2/grad1,
// levi_value = sum_jk m[j][k] v_j conj(v_k) with v = (u, 1), and the closed
// form 2 a^2 |u|.  The point must satisfy |g_a| <= 1e-9 (1 + a^2); no
// projection onto the leaf is performed.
levi_report levi_value(const bidisc_point& z, double a,
                       const tolerance_config& cfg = default_tolerances());

// Finite-difference determinant of the real 4x4 Jacobian of the
// symmetrization map; equals |z1 - z2|^2 up to FD error.
double jacobian_sym_det(const bidisc_point& z,
                        const tolerance_config& cfg = default_tolerances());

// Analytic real partials (d/dx1, d/dy1, d/dx2, d/dy2) of the Mobius distance
// between the coordinates.  Off-diagonal points only.
std::array<double, 4> f_partials(const bidisc_point& z,
                                 const tolerance_config& cfg = default_tolerances());

struct submersion_report {
  double grad_norm = 0.0;
  double degenerate_indicator = 0.0;
};

// grad_norm = Euclidean norm of f_partials (positive off the diagonal);
// degenerate_indicator = |x1^2 + y1^2 + x2^2 + y2^2 - 2|, bounded away from 0
// on the bidisc.
submersion_report check_f_submersion(const bidisc_point& z,
                                     const tolerance_config& cfg = default_tolerances());

enum class cr_map { g_to_d1, bidisc_to_omega1, proj_chart, symmetrize, conjugate };

// Max over output coordinates and input slots of the four-point FD estimate
// of |df/dzbar|; near zero for the holomorphic maps, order 1 for the
// conjugation control.
double cauchy_riemann_residual(cr_map map, cplx w1, cplx w2,
                               const tolerance_config& cfg = default_tolerances());

} // namespace symb
