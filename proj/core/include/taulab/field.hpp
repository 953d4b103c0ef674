#pragma once
#include <cassert>
#include <cstdint>

namespace taulab {

// Arithmetic in the prime field F_p.  Residues are plain uint32_t values in
// [0, p); the modulus travels with the containing object (matrix, algebra).
struct Fp {
  uint32_t p = 2;

  uint32_t reduce_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
  }
  uint32_t add(uint32_t a, uint32_t b) const {
    uint64_t s = static_cast<uint64_t>(a) + b;
    return s >= p ? static_cast<uint32_t>(s - p) : static_cast<uint32_t>(s);
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1 % p, b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  // inverse by Fermat; p is prime so a^(p-2) works for a != 0
  uint32_t inv(uint32_t a) const {
    assert(a != 0);
    return pow(a, p - 2);
  }
};

bool is_prime(uint64_t n);

}  // namespace taulab
