#include "taulab/matrix.hpp"

#include <algorithm>

#include "taulab/errors.hpp"

namespace taulab {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // deterministic Miller-Rabin for 64-bit with the standard witness set
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  auto mulmod = [&](uint64_t a, uint64_t b) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](uint64_t a, uint64_t e) {
    uint64_t r = 1;
    a %= n;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (uint64_t w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(w, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool Mat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](uint32_t v) { return v == 0; });
}

Mat Mat::identity(uint32_t p, int n) {
  Mat m(p, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

static void check_same_field(const Mat& x, const Mat& y) {
  if (x.p != y.p) throw InvalidShape("matrices over different fields");
}

Mat mul(const Mat& x, const Mat& y) {
  check_same_field(x, y);
  if (x.cols != y.rows) throw InvalidShape("mul: inner dimensions differ");
  Mat r(x.p, x.rows, y.cols);
  const uint64_t p = x.p;
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      uint64_t v = x.at(i, k);
      if (!v) continue;
      const uint32_t* yrow = y.a.data() + static_cast<size_t>(k) * y.cols;
      uint32_t* rrow = r.a.data() + static_cast<size_t>(i) * r.cols;
      for (int j = 0; j < y.cols; ++j) {
        rrow[j] = static_cast<uint32_t>((rrow[j] + v * yrow[j]) % p);
      }
    }
  }
  return r;
}

Mat add(const Mat& x, const Mat& y) {
  check_same_field(x, y);
  if (x.rows != y.rows || x.cols != y.cols) throw InvalidShape("add: shapes differ");
  Mat r = x;
  Fp f = x.field();
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.add(r.a[i], y.a[i]);
  return r;
}

Mat sub(const Mat& x, const Mat& y) {
  check_same_field(x, y);
  if (x.rows != y.rows || x.cols != y.cols) throw InvalidShape("sub: shapes differ");
  Mat r = x;
  Fp f = x.field();
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.sub(r.a[i], y.a[i]);
  return r;
}

Mat scale(const Mat& x, uint32_t c) {
  Mat r = x;
  Fp f = x.field();
  for (auto& v : r.a) v = f.mul(v, c);
  return r;
}

Mat transposed(const Mat& x) {
  Mat r(x.p, x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

Mat hstack(const Mat& x, const Mat& y) {
  check_same_field(x, y);
  if (x.rows != y.rows) throw InvalidShape("hstack: row counts differ");
  Mat r(x.p, x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

Mat vstack(const Mat& x, const Mat& y) {
  check_same_field(x, y);
  if (x.cols != y.cols) throw InvalidShape("vstack: column counts differ");
  Mat r(x.p, x.rows + y.rows, x.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
  return r;
}

Mat mat_pow(const Mat& x, uint64_t e) {
  if (!x.is_square()) throw InvalidShape("mat_pow: not square");
  Mat r = Mat::identity(x.p, x.rows);
  Mat b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

// in-place Gauss-Jordan; returns pivot columns
static std::vector<int> eliminate(Mat& m) {
  Fp f = m.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int r = row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    }
    uint32_t piv = m.at(row, col);
    if (piv != 1) {
      uint32_t inv = f.inv(piv);
      for (int j = col; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), inv);
    }
    for (int r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      uint32_t v = m.at(r, col);
      if (!v) continue;
      for (int j = col; j < m.cols; ++j) {
        m.at(r, j) = f.sub(m.at(r, j), f.mul(v, m.at(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RrefResult rref(const Mat& m) {
  RrefResult res;
  res.m = m;
  res.pivots = eliminate(res.m);
  res.rank = static_cast<int>(res.pivots.size());
  return res;
}

int rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
  RrefResult r = rref(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : r.pivots) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat k(m.p, m.cols, static_cast<int>(free_cols.size()));
  Fp f = m.field();
  for (size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    k.at(fc, static_cast<int>(j)) = 1 % m.p;
    for (int i = 0; i < r.rank; ++i) {
      uint32_t v = r.m.at(i, fc);
      if (v) k.at(r.pivots[i], static_cast<int>(j)) = f.neg(v);
    }
  }
  return k;
}

Mat column_space_basis(const Mat& m) {
  RrefResult r = rref(m);
  Mat b(m.p, m.rows, r.rank);
  for (int j = 0; j < r.rank; ++j)
    for (int i = 0; i < m.rows; ++i) b.at(i, j) = m.at(i, r.pivots[j]);
  return b;
}

std::optional<Mat> solve_right(const Mat& m, const Mat& b) {
  check_same_field(m, b);
  if (m.rows != b.rows) throw InvalidShape("solve_right: row counts differ");
  Mat aug = hstack(m, b);
  std::vector<int> pivots = eliminate(aug);
  for (int c : pivots) {
    if (c >= m.cols) return std::nullopt;  // inconsistent system
  }
  Mat x(m.p, m.cols, b.cols);
  for (size_t i = 0; i < pivots.size(); ++i) {
    for (int j = 0; j < b.cols; ++j) x.at(pivots[i], j) = aug.at(static_cast<int>(i), m.cols + j);
  }
  return x;
}

bool is_invertible(const Mat& m) {
  if (!m.is_square()) throw InvalidShape("is_invertible: not square");
  return rank(m) == m.rows;
}

std::optional<Mat> inverse(const Mat& m) {
  if (!m.is_square()) throw InvalidShape("inverse: not square");
  Mat aug = hstack(m, Mat::identity(m.p, m.rows));
  std::vector<int> pivots = eliminate(aug);
  if (static_cast<int>(pivots.size()) != m.rows) return std::nullopt;
  Mat inv(m.p, m.rows, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.rows; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
  return inv;
}

}  // namespace taulab
