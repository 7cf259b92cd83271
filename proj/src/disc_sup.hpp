#pragma once

#include "complex_core.hpp"

namespace symb {

struct disc_sup {
  double value = 0.0;   // supremum of the modulus over the closed unit disc
  bool divergent = false; // pole inside the disc: the supremum is infinite
};

// sup over |z| <= 1 of |n0 + n1 z| / |d0 + d1 z|.
//
// The ratio is holomorphic off the zero of the denominator, so away from that
// zero the supremum sits on the boundary circle (maximum modulus); it is
// located with a 720-point scan of the squared modulus, which has at most a
// handful of critical points in t, followed by golden-section refinement of
// the best arc to width 1e-12.  If the denominator zero lies in the closed
// disc the function either diverges or, when the numerator is proportional to
// the denominator, is constant.
disc_sup sup_abs_ratio_disc(cplx n0, cplx n1, cplx d0, cplx d1);

} // namespace symb
