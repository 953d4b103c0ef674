#include "taulab/poly.hpp"

#include "taulab/errors.hpp"

namespace taulab {

Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

uint32_t poly_eval(Fp f, const Poly& a, uint32_t x) {
  uint32_t r = 0;
  for (size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

Poly poly_add(Fp f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t x = i < a.size() ? a[i] : 0;
    uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = f.add(x, y);
  }
  return poly_trim(r);
}

Poly poly_sub(Fp f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t x = i < a.size() ? a[i] : 0;
    uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = f.sub(x, y);
  }
  return poly_trim(r);
}

Poly poly_mul(Fp f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return poly_trim(r);
}

Poly poly_mod(Fp f, Poly a, const Poly& m) {
  a = poly_trim(std::move(a));
  Poly mm = poly_trim(m);
  if (mm.empty()) throw InvalidInput("poly_mod: zero modulus");
  uint32_t lead_inv = f.inv(mm.back());
  while (a.size() >= mm.size()) {
    uint32_t c = f.mul(a.back(), lead_inv);
    size_t shift = a.size() - mm.size();
    if (c != 0) {
      for (size_t i = 0; i < mm.size(); ++i) {
        a[shift + i] = f.sub(a[shift + i], f.mul(c, mm[i]));
      }
    }
    a.pop_back();
    a = poly_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

Poly poly_monic(Fp f, Poly a) {
  a = poly_trim(std::move(a));
  if (a.empty() || a.back() == 1) return a;
  uint32_t inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

Poly poly_gcd(Fp f, Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, std::move(a));
}

Poly poly_powmod(Fp f, Poly base, uint64_t e, const Poly& m) {
  Poly r = {1 % f.p};
  base = poly_mod(f, std::move(base), m);
  while (e) {
    if (e & 1) r = poly_mod(f, poly_mul(f, r, base), m);
    base = poly_mod(f, poly_mul(f, base, base), m);
    e >>= 1;
  }
  return r;
}

Poly poly_frobenius(Fp f, const Poly& m, int k) {
  Poly x = poly_mod(f, Poly{0, 1}, m);
  Poly r = x;
  for (int i = 0; i < k; ++i) r = poly_powmod(f, r, f.p, m);
  return r;
}

uint32_t determinant(const Mat& m) {
  if (!m.is_square()) throw InvalidShape("determinant: not square");
  Mat w = m;
  Fp f = w.field();
  uint32_t det = 1 % w.p;
  for (int col = 0; col < w.cols; ++col) {
    int sel = -1;
    for (int r = col; r < w.rows; ++r) {
      if (w.at(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) return 0;
    if (sel != col) {
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(sel, j), w.at(col, j));
      det = f.neg(det);
    }
    uint32_t piv = w.at(col, col);
    det = f.mul(det, piv);
    uint32_t piv_inv = f.inv(piv);
    for (int r = col + 1; r < w.rows; ++r) {
      uint32_t v = w.at(r, col);
      if (!v) continue;
      uint32_t c = f.mul(v, piv_inv);
      for (int j = col; j < w.cols; ++j) w.at(r, j) = f.sub(w.at(r, j), f.mul(c, w.at(col, j)));
    }
  }
  return det;
}

std::optional<Poly> charpoly(const Mat& m) {
  if (!m.is_square()) throw InvalidShape("charpoly: not square");
  int n = m.rows;
  Fp f = m.field();
  if (static_cast<uint64_t>(n) + 1 > f.p) return std::nullopt;  // not enough sample points
  if (n == 0) return Poly{1 % f.p};
  // sample det(tI - m) at t = 0..n and interpolate the monic degree-n result
  std::vector<uint32_t> xs(n + 1), ys(n + 1);
  for (int i = 0; i <= n; ++i) {
    xs[i] = static_cast<uint32_t>(i);
    Mat s = m;
    for (int d = 0; d < n; ++d) s.at(d, d) = f.sub(xs[i], m.at(d, d));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (r != c) s.at(r, c) = f.neg(m.at(r, c));
    ys[i] = determinant(s);
  }
  // full product prod (x - x_i)
  Poly full = {1 % f.p};
  for (int i = 0; i <= n; ++i) full = poly_mul(f, full, Poly{f.neg(xs[i]), 1 % f.p});
  Poly result;
  for (int i = 0; i <= n; ++i) {
    // synthetic division of full by (x - x_i)
    Poly q(full.size() - 1, 0);
    uint32_t carry = 0;
    for (size_t k = full.size(); k-- > 1;) {
      carry = f.add(full[k], f.mul(carry, xs[i]));
      q[k - 1] = carry;
    }
    uint32_t denom = poly_eval(f, q, xs[i]);
    uint32_t c = f.mul(ys[i], f.inv(denom));
    for (auto& v : q) v = f.mul(v, c);
    result = poly_add(f, result, q);
  }
  result.resize(n + 1, 0);
  return result;
}

}  // namespace taulab
