#pragma once

#include "fpmod/backends.hpp"

namespace fpmod::detail {

// u * m = r with the nonzero rows of r first (rank many, pivot columns increasing)
// and the remaining rows of u a generating set for the row kernel of m.
struct EchelonOut {
  Mat r;
  Mat u;
  std::vector<int> pivot_cols;
  int rank = 0;
};

EchelonOut rref_field(const Mat& m);
EchelonOut hnf_int(const Mat& m);

BasisResult gb_basis(const Mat& m);
ReductionResult gb_decide_zero(const Mat& b, const Mat& m, bool cert);
Mat gb_syzygies(const Mat& m);

SmithResult snf_int(const Mat& m);
SmithResult snf_field(const Mat& m);

}  // namespace fpmod::detail
