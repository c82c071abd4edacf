#pragma once

#include "fpmod/matrix.hpp"

namespace fpmod {

// basis = transform * input, rows of basis generate the same row module.
struct BasisResult {
  Mat basis;
  Mat transform;
};

// reduced = input + transform * basis; is_zero means every row reduced to zero.
// transform/basis/basis_transform are filled only when certificates were requested,
// with basis = basis_transform * module_input.
struct ReductionResult {
  Mat reduced;
  bool is_zero = false;
  bool certified = false;
  Mat transform;
  Mat basis;
  Mat basis_transform;
};

// u * input * v = d, with d diagonal, successive diagonal entries dividing each other.
struct SmithResult {
  Mat d;
  Mat u;
  Mat v;
};

BasisResult basis_of_module(const Mat& m);
ReductionResult decide_zero(const Mat& b, const Mat& m, bool with_certificate = false);
Mat syzygies_generators(const Mat& m, const std::optional<Mat>& modulo = std::nullopt);
SmithResult smith_normal_form(const Mat& m);
RingHandle residue_class_ring(RingHandle base, const std::vector<Element>& ideal_generators);
std::optional<Element> try_invert(const RingHandle& r, const Element& e);
bool basis_is_reduced(const Ring& r);

}  // namespace fpmod
