#include <doctest.h>

#include "fpmod/backends.hpp"

using namespace fpmod;

namespace {

const RingHandle Z = make_integers();
const RingHandle Q = make_rationals();

void check_reduction_certificates(const Mat& b, const Mat& m) {
  ReductionResult red = decide_zero(b, m, true);
  CHECK(mats_equal(red.reduced, mat_add(b, mat_mul(red.transform, red.basis))));
  CHECK(mats_equal(red.basis, mat_mul(red.basis_transform, m)));
}

bool same_row_module(const Mat& a, const Mat& b) {
  return decide_zero(a, b).is_zero && decide_zero(b, a).is_zero;
}

}  // namespace

TEST_CASE("integer basis collapses to the gcd") {
  Mat m = mat_from_ints(Z, {{6}, {10}});
  BasisResult b = basis_of_module(m);
  CHECK(mats_equal(b.basis, mat_from_ints(Z, {{2}})));
  CHECK(mats_equal(b.basis, mat_mul(b.transform, m)));
}

TEST_CASE("integer membership with certificates") {
  Mat m = mat_from_ints(Z, {{6}, {10}});
  CHECK(decide_zero(mat_from_ints(Z, {{4}}), m).is_zero);
  ReductionResult red = decide_zero(mat_from_ints(Z, {{3}}), m, true);
  CHECK_FALSE(red.is_zero);
  CHECK(mats_equal(red.reduced, mat_from_ints(Z, {{1}})));
  check_reduction_certificates(mat_from_ints(Z, {{3}}), m);
  check_reduction_certificates(mat_from_ints(Z, {{4}, {0}, {-7}}), m);
}

TEST_CASE("integer syzygies") {
  Mat m = mat_from_ints(Z, {{2}, {3}});
  Mat s = syzygies_generators(m);
  CHECK(same_row_module(s, mat_from_ints(Z, {{3, -2}})));
  CHECK(mat_is_zero(mat_mul(s, m)));

  Mat two = mat_from_ints(Z, {{2}});
  Mat four = mat_from_ints(Z, {{4}});
  Mat rel = syzygies_generators(two, four);
  CHECK(same_row_module(rel, mat_from_ints(Z, {{2}})));
}

TEST_CASE("field reductions make everything a unit") {
  Mat m = mat_from_strings(Q, {{"1/2"}, {"3"}});
  BasisResult b = basis_of_module(m);
  CHECK(mats_equal(b.basis, mat_from_strings(Q, {{"1"}})));
  CHECK(decide_zero(mat_from_strings(Q, {{"7/9"}}), m).is_zero);
  check_reduction_certificates(mat_from_strings(Q, {{"7/9"}}), m);

  auto f5 = make_prime_field(5);
  Mat mf = mat_from_ints(f5, {{2, 1}, {4, 2}});
  BasisResult bf = basis_of_module(mf);
  CHECK(bf.basis.rows == 1);
  check_reduction_certificates(mat_from_ints(f5, {{1, 3}}), mf);
  Mat sf = syzygies_generators(mf);
  CHECK(sf.rows == 1);
  CHECK(mat_is_zero(mat_mul(sf, mf)));
}

TEST_CASE("polynomial basis and syzygies on the two-variable maximal ideal") {
  auto R = make_poly(make_rationals(), {"x", "y"});
  Mat m = mat_from_strings(R, {{"x"}, {"y"}});
  BasisResult b = basis_of_module(m);
  CHECK(mats_equal(b.basis, m));
  CHECK(mats_equal(b.basis, mat_mul(b.transform, m)));
  Mat s = syzygies_generators(m);
  CHECK(mats_equal(s, mat_from_strings(R, {{"y", "-x"}})));
  CHECK(mat_is_zero(mat_mul(s, m)));
}

TEST_CASE("polynomial membership certificates re-multiply bit-exactly") {
  auto R = make_poly(make_rationals(), {"x", "y"});
  Mat m = mat_from_strings(R, {{"x"}, {"y"}});
  ReductionResult red = decide_zero(mat_from_strings(R, {{"x*y+1"}}), m, true);
  CHECK_FALSE(red.is_zero);
  CHECK(mats_equal(red.reduced, mat_from_strings(R, {{"1"}})));
  check_reduction_certificates(mat_from_strings(R, {{"x*y+1"}}), m);
  check_reduction_certificates(mat_from_strings(R, {{"x^2+y^2"}, {"x"}}), m);
  CHECK(decide_zero(mat_from_strings(R, {{"x^2+y^2"}}), m).is_zero);
}

TEST_CASE("groebner reduction is canonical for non-members") {
  auto R = make_poly(make_rationals(), {"x", "y"});
  Mat m = mat_from_strings(R, {{"x^2"}, {"x*y"}});
  ReductionResult a = decide_zero(mat_from_strings(R, {{"x^2+x+y"}}), m, false);
  ReductionResult b = decide_zero(mat_from_strings(R, {{"x+y"}}), m, false);
  CHECK(mats_equal(a.reduced, b.reduced));
}

TEST_CASE("residue ring arithmetic stays canonical") {
  auto z6 = residue_class_ring(Z, {parse_element(*Z, "6")});
  Element four = parse_element(*z6, "4");
  Element five = parse_element(*z6, "-1");
  CHECK(print_element(*z6, five) == "5");
  CHECK(print_element(*z6, mul(*z6, four, five)) == "2");
  CHECK_THROWS(residue_class_ring(z6, {parse_element(*z6, "2")}));
}

TEST_CASE("residue basis, membership and syzygies over Z/6") {
  auto z6 = residue_class_ring(Z, {parse_element(*Z, "6")});
  Mat m = mat_from_ints(z6, {{2}});
  BasisResult b = basis_of_module(m);
  CHECK(mats_equal(b.basis, mat_from_ints(z6, {{2}})));
  CHECK(mats_equal(b.basis, mat_mul(b.transform, m)));
  CHECK(decide_zero(mat_from_ints(z6, {{4}}), m).is_zero);
  CHECK_FALSE(decide_zero(mat_from_ints(z6, {{3}}), m).is_zero);
  check_reduction_certificates(mat_from_ints(z6, {{3}}), m);
  check_reduction_certificates(mat_from_ints(z6, {{5}, {2}}), m);

  Mat s = syzygies_generators(m);
  CHECK(same_row_module(s, mat_from_ints(z6, {{3}})));
  CHECK(mat_is_zero(mat_mul(s, m)));
}

TEST_CASE("residue ring over a polynomial base") {
  auto R = make_poly(make_rationals(), {"x"});
  auto Rx2 = residue_class_ring(R, {parse_element(*R, "x^2")});
  Element x = parse_element(*Rx2, "x^3+x");
  CHECK(print_element(*Rx2, x) == "x");
  Mat m = mat_from_strings(Rx2, {{"x"}});
  Mat s = syzygies_generators(m);
  CHECK(same_row_module(s, mat_from_strings(Rx2, {{"x"}})));
  check_reduction_certificates(mat_from_strings(Rx2, {{"x+1"}}), m);
}

TEST_CASE("try_invert works through the generic certificate route") {
  CHECK(!try_invert(Z, parse_element(*Z, "2")).has_value());
  CHECK(elements_equal(*try_invert(Z, parse_element(*Z, "-1")), parse_element(*Z, "-1")));
  CHECK(elements_equal(*try_invert(Q, parse_element(*Q, "2/3")), parse_element(*Q, "3/2")));
  auto f5 = make_prime_field(5);
  CHECK(elements_equal(*try_invert(f5, parse_element(*f5, "3")), parse_element(*f5, "2")));
  auto z6 = residue_class_ring(Z, {parse_element(*Z, "6")});
  CHECK(elements_equal(*try_invert(z6, parse_element(*z6, "5")), parse_element(*z6, "5")));
  CHECK(!try_invert(z6, parse_element(*z6, "2")).has_value());
  auto R = make_poly(make_rationals(), {"x"});
  CHECK(!try_invert(R, parse_element(*R, "x")).has_value());
  CHECK(elements_equal(*try_invert(R, parse_element(*R, "2")), parse_element(*R, "1/2")));
  auto Rm = residue_class_ring(R, {parse_element(*R, "x-1")});
  auto inv = try_invert(Rm, parse_element(*Rm, "x+1"));
  REQUIRE(inv.has_value());
  CHECK(elements_equal(mul(*Rm, *inv, parse_element(*Rm, "x+1")), ring_one(*Rm)));
}

TEST_CASE("zero-sized inputs flow through the backends") {
  Mat empty_rows = Mat::zeros(Z, 0, 3);
  CHECK(basis_of_module(empty_rows).basis.rows == 0);
  CHECK(decide_zero(empty_rows, mat_from_ints(Z, {{1, 2, 3}})).is_zero);
  ReductionResult red = decide_zero(mat_from_ints(Z, {{1, 2, 3}}), empty_rows, true);
  CHECK_FALSE(red.is_zero);
  CHECK(mats_equal(red.reduced, mat_from_ints(Z, {{1, 2, 3}})));
  CHECK(syzygies_generators(empty_rows).rows == 0);
  Mat all = syzygies_generators(Mat::zeros(Z, 2, 0));
  CHECK(same_row_module(all, Mat::identity(Z, 2)));
}
