#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "taulab/field.hpp"

namespace taulab {

// Dense row-major matrix over F_p.  All elimination is exact and
// deterministic: pivots are chosen leftmost-column, topmost nonzero row.
struct Mat {
  uint32_t p = 2;
  int rows = 0, cols = 0;
  std::vector<uint32_t> a;

  Mat() = default;
  Mat(uint32_t p_, int r, int c) : p(p_), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  uint32_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  uint32_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  Fp field() const { return Fp{p}; }
  bool is_zero() const;
  bool is_square() const { return rows == cols; }
  bool operator==(const Mat&) const = default;

  static Mat identity(uint32_t p, int n);
  static Mat zero(uint32_t p, int r, int c) { return Mat(p, r, c); }
};

struct RrefResult {
  Mat m;                    // reduced row echelon form
  std::vector<int> pivots;  // pivot column per nonzero row
  int rank = 0;
};

Mat mul(const Mat& x, const Mat& y);
Mat add(const Mat& x, const Mat& y);
Mat sub(const Mat& x, const Mat& y);
Mat scale(const Mat& x, uint32_t c);
Mat transposed(const Mat& x);
Mat hstack(const Mat& x, const Mat& y);
Mat vstack(const Mat& x, const Mat& y);
Mat mat_pow(const Mat& x, uint64_t e);

RrefResult rref(const Mat& m);
int rank(const Mat& m);
// columns form a basis of { x : m x = 0 }
Mat kernel_basis(const Mat& m);
// columns form a basis of the column space (echelon-selected original columns)
Mat column_space_basis(const Mat& m);
// one solution x of m x = b (b may have several columns); nullopt if none
std::optional<Mat> solve_right(const Mat& m, const Mat& b);
bool is_invertible(const Mat& m);  // InvalidShape unless square
std::optional<Mat> inverse(const Mat& m);

}  // namespace taulab
