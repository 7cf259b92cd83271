#include "doctest.h"

#include <cmath>

#include "disc_geometry.hpp"
#include "test_support.hpp"

using namespace symb;
using symb_test::thrown_code;

TEST_CASE("automorphism basics") {
  const cplx z(0.3, -0.2);
  CHECK(std::abs(symb::apply(identity_automorphism(), z) - z) < 1e-15);

  const disc_automorphism b = blaschke_at(0.5);
  CHECK(std::abs(symb::apply(b, cplx(0.0)) - cplx(0.5)) < 1e-15);
  CHECK(std::abs(symb::apply(b, cplx(0.5))) < 1e-15);

  CHECK(thrown_code([] { require_automorphism({0.0, cplx(1.0, 0.5)}); }) ==
        errc::invalid_parameter);
}

TEST_CASE("blaschke involution") {
  const disc_automorphism twice = compose(blaschke_at(0.5), blaschke_at(0.5));
  for (const cplx z : {cplx(0.0), cplx(0.3, 0.4), cplx(-0.7, 0.1)})
    CHECK(std::abs(symb::apply(twice, z) - z) < 1e-14);
}

TEST_CASE("composition and inverse") {
  const disc_automorphism f{1.1, cplx(0.3, 0.2)};
  const disc_automorphism g{-2.0, cplx(-0.1, 0.45)};
  const disc_automorphism fg = compose(f, g);
  const disc_automorphism f_inv = inverse(f);
  for (const cplx z : {cplx(0.2, 0.1), cplx(-0.5, 0.3), cplx(0.0, -0.8)}) {
    CHECK(std::abs(symb::apply(fg, z) - symb::apply(f, symb::apply(g, z))) < 1e-14);
    CHECK(std::abs(symb::apply(f_inv, symb::apply(f, z)) - z) < 1e-14);
    CHECK(std::abs(symb::apply(f, z)) < 1.0);
  }
}

TEST_CASE("angle normalization") {
  CHECK(normalize_angle(3.0 * pi) == doctest::Approx(pi));
  CHECK(normalize_angle(-pi) == doctest::Approx(pi));
  CHECK(normalize_angle(0.25) == doctest::Approx(0.25));
  CHECK(normalize_angle(-7.0) == doctest::Approx(-7.0 + 2.0 * pi));
}

TEST_CASE("mobius distance") {
  CHECK(mobius_distance(cplx(0.5), cplx(0.0)) == doctest::Approx(0.5));
  CHECK(mobius_distance(cplx(0.5), cplx(-0.5)) == doctest::Approx(0.8));
  CHECK(mobius_distance({cplx(0.5), cplx(-0.5)}) == doctest::Approx(0.8));

  const disc_automorphism f{0.9, cplx(0.4, -0.3)};
  const cplx z1(0.2, 0.6), z2(-0.3, 0.1);
  CHECK(mobius_distance(symb::apply(f, z1), symb::apply(f, z2)) ==
        doctest::Approx(mobius_distance(z1, z2)).epsilon(1e-13));
}
