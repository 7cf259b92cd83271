#include "disc_geometry.hpp"

#include <cmath>

namespace symb {

bool is_in_disc(cplx z, const tolerance_config& cfg) {
  return std::abs(z) < 1.0 - cfg.boundary_band;
}

void require_bidisc(const bidisc_point& p, const tolerance_config& cfg) {
  if (!is_in_disc(p.z1, cfg) || !is_in_disc(p.z2, cfg))
    throw error(errc::invalid_argument, "point is not interior to the bidisc");
}

disc_automorphism identity_automorphism() { return {0.0, cplx(0.0)}; }

disc_automorphism blaschke_at(cplx alpha, const tolerance_config& cfg) {
  disc_automorphism f{pi, alpha};
  require_automorphism(f, cfg);
  return f;
}

void require_automorphism(const disc_automorphism& f, const tolerance_config& cfg) {
  if (!(std::abs(f.alpha) < 1.0 - cfg.boundary_band))
    throw error(errc::invalid_parameter, "automorphism center must be interior to the disc");
  if (!std::isfinite(f.theta))
    throw error(errc::invalid_parameter, "automorphism angle must be finite");
}

cplx apply(const disc_automorphism& f, cplx z) {
  return std::polar(1.0, f.theta) * (z - f.alpha) / (1.0 - std::conj(f.alpha) * z);
}

double normalize_angle(double theta) {
  double t = std::remainder(theta, 2.0 * pi); // into [-pi, pi]
  if (t <= -pi) t += 2.0 * pi;
  return t;
}

disc_automorphism compose(const disc_automorphism& f, const disc_automorphism& g) {
  // f(g(z)) = e^{i(tf - tg + 2 arg A)} (z - B/A) / (1 - conj(B/A) z) with
  //   A = e^{i tg} + alpha_f conj(alpha_g),  B = alpha_f + e^{i tg} alpha_g;
  // |A|^2 - |B|^2 = (1 - |alpha_f|^2)(1 - |alpha_g|^2) > 0 keeps B/A in the disc.
  const cplx eg = std::polar(1.0, g.theta);
  const cplx a = eg + f.alpha * std::conj(g.alpha);
  const cplx b = f.alpha + eg * g.alpha;
  disc_automorphism h;
  h.theta = normalize_angle(f.theta - g.theta + 2.0 * std::arg(a));
  h.alpha = b / a;
  return h;
}

disc_automorphism inverse(const disc_automorphism& f) {
  disc_automorphism h;
  h.theta = normalize_angle(-f.theta);
  h.alpha = -std::polar(1.0, f.theta) * f.alpha;
  return h;
}

double mobius_distance(cplx z1, cplx z2) {
  return std::abs((z1 - z2) / (1.0 - std::conj(z1) * z2));
}

double mobius_distance(const bidisc_point& p) { return mobius_distance(p.z1, p.z2); }

} // namespace symb
