#pragma once

#include <optional>

#include "fpmod/ring.hpp"

namespace fpmod {

// Dense row-major matrix. Elements are rows: maps act by right multiplication,
// so composing "alpha then beta" multiplies alpha.matrix * beta.matrix.
// Matrices with zero rows or columns are first-class values.
struct Mat {
  RingHandle ring;
  int rows = 0;
  int cols = 0;
  std::vector<Element> a;

  static Mat zeros(RingHandle r, int rows, int cols);
  static Mat identity(RingHandle r, int n);

  Element& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Element& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

bool mats_equal(const Mat& x, const Mat& y);
bool mat_is_zero(const Mat& x);
bool row_is_zero(const Mat& x, int i);

Mat mat_add(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_neg(const Mat& x);
Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_scale(const Mat& x, const Element& c);

Mat mat_stack(const Mat& top, const Mat& bottom);     // vertical
Mat mat_concat(const Mat& left, const Mat& right);    // horizontal
Mat diag_stack(const Mat& upper_left, const Mat& lower_right);
Mat kronecker(const Mat& x, const Mat& y);
Mat theta_transpose(const Mat& x);

Mat take_rows(const Mat& x, const std::vector<int>& idx);
Mat take_cols(const Mat& x, const std::vector<int>& idx);
Mat row_range(const Mat& x, int begin, int end);
Mat col_range(const Mat& x, int begin, int end);
Mat drop_row(const Mat& x, int i);
Mat drop_col(const Mat& x, int j);

Mat mat_from_strings(RingHandle r, const std::vector<std::vector<std::string>>& entries,
                     int cols_hint = -1);
Mat mat_from_ints(RingHandle r, const std::vector<std::vector<long>>& entries,
                  int cols_hint = -1);
std::vector<std::vector<std::string>> mat_to_strings(const Mat& x);

}  // namespace fpmod
