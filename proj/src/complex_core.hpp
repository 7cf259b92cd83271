#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace symb {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// Error taxonomy shared by the whole library; the C layer maps codes 1:1.
enum class errc {
  ok = 0,
  invalid_argument,
  invalid_parameter,
  invalid_condition,
  degenerate_coefficient,
  branch_cut,
  outside_domain,
  boundary_undecidable,
  singular_denominator,
  leaf_mismatch,
  distance_mismatch,
  degenerate_leaf,
  off_leaf,
  vanishing_gradient,
  diagonal_point,
  zero_vector,
  zero_chart_coordinate,
  unknown_suite,
  io_failure,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

struct tolerance_config {
  double eq_tol = 1e-10;        // relative equality comparisons
  double boundary_band = 1e-12; // |margin| below this classifies as boundary
  double fd_step = 1e-6;        // finite-difference step
};

// Throws on non-positive entries or eq_tol <= boundary_band.
void validate(const tolerance_config& cfg);

const tolerance_config& default_tolerances();

enum class region { inside, boundary, outside };

const char* to_string(region r);

region margin_to_tri(double margin, const tolerance_config& cfg = default_tolerances());

// |x - y| <= tol * (1 + max(|x|, |y|))
bool approx_eq(double x, double y, double tol);
bool approx_eq(cplx x, cplx y, double tol);

// Slack of the strict inequality lhs < rhs, normalized by 1 + |rhs|.
inline double slack(double lhs, double rhs) { return (rhs - lhs) / (1.0 + std::abs(rhs)); }

// Roots of a*z^2 + b*z + c = 0, leading coefficient nonzero.  The discriminant
// branch is chosen so that b and the root of the discriminant do not cancel,
// and the second root comes from Vieta (c/a = r1*r2).
std::pair<cplx, cplx> solve_quadratic(cplx a, cplx b, cplx c);

// Principal square root on the plane slit along (-inf, 0]; the result has
// positive real part.  Throws branch_cut when w is within boundary_band of
// the slit.
cplx sqrt_slit(cplx w, const tolerance_config& cfg = default_tolerances());

} // namespace symb
