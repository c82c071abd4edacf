#include "fpmod/matrix.hpp"

#include <stdexcept>

namespace fpmod {

namespace {

void check_ring(const Mat& x, const Mat& y, const char* what) {
  if (!x.ring || !y.ring || !rings_equal(*x.ring, *y.ring))
    throw std::runtime_error(std::string("ring mismatch in ") + what);
}

void check_dims(bool ok, const char* what) {
  if (!ok) throw std::runtime_error(std::string("shape mismatch in ") + what);
}

}  // namespace

Mat Mat::zeros(RingHandle r, int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::runtime_error("negative matrix dimension");
  Mat m;
  m.ring = std::move(r);
  m.rows = rows;
  m.cols = cols;
  m.a.assign(static_cast<size_t>(rows) * cols, ring_zero(*m.ring));
  return m;
}

Mat Mat::identity(RingHandle r, int n) {
  Mat m = zeros(std::move(r), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ring_one(*m.ring);
  return m;
}

bool mats_equal(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (size_t k = 0; k < x.a.size(); ++k)
    if (!elements_equal(x.a[k], y.a[k])) return false;
  return true;
}

bool mat_is_zero(const Mat& x) {
  for (const auto& e : x.a)
    if (!is_zero(e)) return false;
  return true;
}

bool row_is_zero(const Mat& x, int i) {
  for (int j = 0; j < x.cols; ++j)
    if (!is_zero(x.at(i, j))) return false;
  return true;
}

Mat mat_add(const Mat& x, const Mat& y) {
  check_ring(x, y, "mat_add");
  check_dims(x.rows == y.rows && x.cols == y.cols, "mat_add");
  Mat out = x;
  for (size_t k = 0; k < out.a.size(); ++k) out.a[k] = add(*x.ring, x.a[k], y.a[k]);
  return out;
}

Mat mat_sub(const Mat& x, const Mat& y) {
  check_ring(x, y, "mat_sub");
  check_dims(x.rows == y.rows && x.cols == y.cols, "mat_sub");
  Mat out = x;
  for (size_t k = 0; k < out.a.size(); ++k) out.a[k] = sub(*x.ring, x.a[k], y.a[k]);
  return out;
}

Mat mat_neg(const Mat& x) {
  Mat out = x;
  for (auto& e : out.a) e = neg(*x.ring, e);
  return out;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  check_ring(x, y, "mat_mul");
  check_dims(x.cols == y.rows, "mat_mul");
  Mat out = Mat::zeros(x.ring, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Element& xik = x.at(i, k);
      if (is_zero(xik)) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Element& ykj = y.at(k, j);
        if (is_zero(ykj)) continue;
        out.at(i, j) = add(*x.ring, out.at(i, j), mul(*x.ring, xik, ykj));
      }
    }
  return out;
}

Mat mat_scale(const Mat& x, const Element& c) {
  Mat out = x;
  for (auto& e : out.a) e = mul(*x.ring, e, c);
  return out;
}

Mat mat_stack(const Mat& top, const Mat& bottom) {
  check_ring(top, bottom, "mat_stack");
  check_dims(top.cols == bottom.cols, "mat_stack");
  Mat out = Mat::zeros(top.ring, top.rows + bottom.rows, top.cols);
  std::copy(top.a.begin(), top.a.end(), out.a.begin());
  std::copy(bottom.a.begin(), bottom.a.end(), out.a.begin() + top.a.size());
  return out;
}

Mat mat_concat(const Mat& left, const Mat& right) {
  check_ring(left, right, "mat_concat");
  check_dims(left.rows == right.rows, "mat_concat");
  Mat out = Mat::zeros(left.ring, left.rows, left.cols + right.cols);
  for (int i = 0; i < out.rows; ++i) {
    for (int j = 0; j < left.cols; ++j) out.at(i, j) = left.at(i, j);
    for (int j = 0; j < right.cols; ++j) out.at(i, left.cols + j) = right.at(i, j);
  }
  return out;
}

Mat diag_stack(const Mat& upper_left, const Mat& lower_right) {
  check_ring(upper_left, lower_right, "diag_stack");
  Mat out = Mat::zeros(upper_left.ring, upper_left.rows + lower_right.rows,
                       upper_left.cols + lower_right.cols);
  for (int i = 0; i < upper_left.rows; ++i)
    for (int j = 0; j < upper_left.cols; ++j) out.at(i, j) = upper_left.at(i, j);
  for (int i = 0; i < lower_right.rows; ++i)
    for (int j = 0; j < lower_right.cols; ++j)
      out.at(upper_left.rows + i, upper_left.cols + j) = lower_right.at(i, j);
  return out;
}

Mat kronecker(const Mat& x, const Mat& y) {
  check_ring(x, y, "kronecker");
  Mat out = Mat::zeros(x.ring, x.rows * y.rows, x.cols * y.cols);
  for (int i1 = 0; i1 < x.rows; ++i1)
    for (int j1 = 0; j1 < x.cols; ++j1) {
      const Element& xij = x.at(i1, j1);
      if (is_zero(xij)) continue;
      for (int i2 = 0; i2 < y.rows; ++i2)
        for (int j2 = 0; j2 < y.cols; ++j2)
          out.at(i1 * y.rows + i2, j1 * y.cols + j2) = mul(*x.ring, xij, y.at(i2, j2));
    }
  return out;
}

Mat theta_transpose(const Mat& x) {
  Mat out = Mat::zeros(x.ring, x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out.at(j, i) = apply_theta(*x.ring, x.at(i, j));
  return out;
}

Mat take_rows(const Mat& x, const std::vector<int>& idx) {
  Mat out = Mat::zeros(x.ring, static_cast<int>(idx.size()), x.cols);
  for (size_t i = 0; i < idx.size(); ++i) {
    check_dims(idx[i] >= 0 && idx[i] < x.rows, "take_rows");
    for (int j = 0; j < x.cols; ++j) out.at(static_cast<int>(i), j) = x.at(idx[i], j);
  }
  return out;
}

Mat take_cols(const Mat& x, const std::vector<int>& idx) {
  Mat out = Mat::zeros(x.ring, x.rows, static_cast<int>(idx.size()));
  for (int i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < idx.size(); ++j) {
      check_dims(idx[j] >= 0 && idx[j] < x.cols, "take_cols");
      out.at(i, static_cast<int>(j)) = x.at(i, idx[j]);
    }
  return out;
}

Mat row_range(const Mat& x, int begin, int end) {
  check_dims(0 <= begin && begin <= end && end <= x.rows, "row_range");
  Mat out = Mat::zeros(x.ring, end - begin, x.cols);
  for (int i = begin; i < end; ++i)
    for (int j = 0; j < x.cols; ++j) out.at(i - begin, j) = x.at(i, j);
  return out;
}

Mat col_range(const Mat& x, int begin, int end) {
  check_dims(0 <= begin && begin <= end && end <= x.cols, "col_range");
  Mat out = Mat::zeros(x.ring, x.rows, end - begin);
  for (int i = 0; i < x.rows; ++i)
    for (int j = begin; j < end; ++j) out.at(i, j - begin) = x.at(i, j);
  return out;
}

Mat drop_row(const Mat& x, int i) {
  check_dims(0 <= i && i < x.rows, "drop_row");
  std::vector<int> idx;
  for (int k = 0; k < x.rows; ++k)
    if (k != i) idx.push_back(k);
  return take_rows(x, idx);
}

Mat drop_col(const Mat& x, int j) {
  check_dims(0 <= j && j < x.cols, "drop_col");
  std::vector<int> idx;
  for (int k = 0; k < x.cols; ++k)
    if (k != j) idx.push_back(k);
  return take_cols(x, idx);
}

Mat mat_from_strings(RingHandle r, const std::vector<std::vector<std::string>>& entries,
                     int cols_hint) {
  int rows = static_cast<int>(entries.size());
  int cols = rows > 0 ? static_cast<int>(entries[0].size()) : (cols_hint >= 0 ? cols_hint : 0);
  Mat out = Mat::zeros(std::move(r), rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(entries[i].size()) != cols)
      throw std::runtime_error("ragged matrix input");
    for (int j = 0; j < cols; ++j) out.at(i, j) = parse_element(*out.ring, entries[i][j]);
  }
  return out;
}

Mat mat_from_ints(RingHandle r, const std::vector<std::vector<long>>& entries, int cols_hint) {
  int rows = static_cast<int>(entries.size());
  int cols = rows > 0 ? static_cast<int>(entries[0].size()) : (cols_hint >= 0 ? cols_hint : 0);
  Mat out = Mat::zeros(std::move(r), rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(entries[i].size()) != cols)
      throw std::runtime_error("ragged matrix input");
    for (int j = 0; j < cols; ++j) out.at(i, j) = ring_from_int(*out.ring, entries[i][j]);
  }
  return out;
}

std::vector<std::vector<std::string>> mat_to_strings(const Mat& x) {
  std::vector<std::vector<std::string>> out(x.rows, std::vector<std::string>(x.cols));
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out[i][j] = print_element(*x.ring, x.at(i, j));
  return out;
}

}  // namespace fpmod
