#include <random>

#include "doctest.h"
#include "taulab/poly.hpp"

using namespace taulab;

TEST_CASE("polynomial arithmetic basics") {
  Fp f{7};
  Poly x2m1 = {6, 0, 1};  // x^2 - 1
  Poly xm1 = {6, 1};      // x - 1
  Poly g = poly_gcd(f, x2m1, xm1);
  CHECK(g == xm1);
  CHECK(poly_deg(poly_mul(f, x2m1, xm1)) == 3);
  CHECK(poly_eval(f, x2m1, 1) == 0);
  CHECK(poly_eval(f, x2m1, 2) == 3);
  CHECK(poly_mod(f, x2m1, xm1).empty());
}

TEST_CASE("powmod matches repeated multiplication") {
  Fp f{1009};
  std::mt19937_64 rng(3);
  Poly m = {5, 1, 0, 1};  // x^3 + x + 5, any nonzero modulus works here
  Poly base = {static_cast<uint32_t>(rng() % 1009), static_cast<uint32_t>(rng() % 1009), 1};
  Poly acc = {1};
  for (int e = 0; e < 12; ++e) {
    CHECK(poly_powmod(f, base, e, m) == poly_mod(f, acc, m));
    acc = poly_mul(f, acc, base);
  }
}

TEST_CASE("characteristic polynomial agrees with the determinant and traces roots") {
  Mat d(1009, 3, 3);
  d.at(0, 0) = 2;
  d.at(1, 1) = 5;
  d.at(2, 2) = 9;
  auto cp = charpoly(d);
  REQUIRE(cp.has_value());
  CHECK(poly_deg(*cp) == 3);
  CHECK(poly_eval(Fp{1009}, *cp, 2) == 0);
  CHECK(poly_eval(Fp{1009}, *cp, 5) == 0);
  CHECK(poly_eval(Fp{1009}, *cp, 9) == 0);
  // det(tI - m) at t = 0 is (-1)^n det(m)
  uint32_t at0 = poly_eval(Fp{1009}, *cp, 0);
  CHECK(at0 == Fp{1009}.neg(determinant(d)));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    Mat m(1009, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m.at(i, j) = static_cast<uint32_t>(rng() % 1009);
    auto c = charpoly(m);
    REQUIRE(c.has_value());
    CHECK(poly_eval(Fp{1009}, *c, 0) == determinant(m));  // (-1)^4 = 1
  }
}
