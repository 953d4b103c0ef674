#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "taulab/matrix.hpp"

namespace taulab {

// Dense univariate polynomials over F_p, coefficients low degree first,
// normalized with no trailing zeros (zero polynomial = empty vector).
using Poly = std::vector<uint32_t>;

Poly poly_trim(Poly f);
int poly_deg(const Poly& f);  // -1 for the zero polynomial
uint32_t poly_eval(Fp f, const Poly& a, uint32_t x);
Poly poly_add(Fp f, const Poly& a, const Poly& b);
Poly poly_sub(Fp f, const Poly& a, const Poly& b);
Poly poly_mul(Fp f, const Poly& a, const Poly& b);
Poly poly_mod(Fp f, Poly a, const Poly& m);
Poly poly_monic(Fp f, Poly a);
Poly poly_gcd(Fp f, Poly a, Poly b);
// base^e mod m
Poly poly_powmod(Fp f, Poly base, uint64_t e, const Poly& m);
// x^(p^k) mod m, by repeated p-th powering
Poly poly_frobenius(Fp f, const Poly& m, int k);

uint32_t determinant(const Mat& m);
// characteristic polynomial det(tI - m), monic of degree n; computed by
// interpolation, so it needs p > n distinct sample points
std::optional<Poly> charpoly(const Mat& m);

}  // namespace taulab
