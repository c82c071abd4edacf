#include <doctest.h>

#include "fpmod/backends.hpp"

using namespace fpmod;

namespace {

const RingHandle Z = make_integers();

void check_snf(const Mat& m) {
  SmithResult s = smith_normal_form(m);
  CHECK(mats_equal(s.d, mat_mul(mat_mul(s.u, m), s.v)));
  CHECK(s.u.rows == m.rows);
  CHECK(s.u.cols == m.rows);
  CHECK(s.v.rows == m.cols);
  CHECK(s.v.cols == m.cols);
  for (int i = 0; i < s.d.rows; ++i)
    for (int j = 0; j < s.d.cols; ++j)
      if (i != j) CHECK(is_zero(s.d.at(i, j)));
}

}  // namespace

TEST_CASE("smith form of a column of integers") {
  Mat m = mat_from_ints(Z, {{4}, {6}});
  SmithResult s = smith_normal_form(m);
  CHECK(mats_equal(s.d, mat_from_ints(Z, {{2}, {0}})));
  check_snf(m);
}

TEST_CASE("smith form enforces the divisibility chain") {
  Mat m = mat_from_ints(Z, {{2, 0}, {0, 3}});
  SmithResult s = smith_normal_form(m);
  CHECK(mats_equal(s.d, mat_from_ints(Z, {{1, 0}, {0, 6}})));
  check_snf(m);

  Mat n = mat_from_ints(Z, {{6, 0, 0}, {0, 10, 0}, {0, 0, 15}});
  SmithResult t = smith_normal_form(n);
  CHECK(mats_equal(t.d, mat_from_ints(Z, {{1, 0, 0}, {0, 30, 0}, {0, 0, 30}})));
  check_snf(n);
}

TEST_CASE("smith form of rectangular and degenerate shapes") {
  check_snf(mat_from_ints(Z, {{2, 4, 4}}));
  check_snf(mat_from_ints(Z, {{-4, -6, 10}, {2, 2, -2}}));
  check_snf(Mat::zeros(Z, 2, 3));
  check_snf(Mat::zeros(Z, 0, 3));
  check_snf(Mat::zeros(Z, 3, 0));
  SmithResult s = smith_normal_form(mat_from_ints(Z, {{0, 5}, {7, 0}}));
  CHECK(mats_equal(s.d, mat_from_ints(Z, {{1, 0}, {0, 35}})));
}

TEST_CASE("smith diagonal entries are nonnegative and ordered") {
  Mat m = mat_from_ints(Z, {{-3, 1, 2}, {6, -2, 0}, {9, 5, 1}});
  SmithResult s = smith_normal_form(m);
  check_snf(m);
  mpz_class prev = 0;
  bool seen_zero = false;
  for (int i = 0; i < std::min(s.d.rows, s.d.cols); ++i) {
    mpz_class di = std::get<mpz_class>(s.d.at(i, i));
    CHECK(di >= 0);
    if (di == 0) {
      seen_zero = true;
    } else {
      CHECK_FALSE(seen_zero);
      if (prev != 0) CHECK(di % prev == 0);
      prev = di;
    }
  }
}

TEST_CASE("smith form over the rationals counts rank") {
  auto Q = make_rationals();
  Mat m = mat_from_strings(Q, {{"1", "2"}, {"2", "4"}, {"0", "1/3"}});
  SmithResult s = smith_normal_form(m);
  check_snf(m);
  CHECK(mats_equal(s.d, mat_from_strings(Q, {{"1", "0"}, {"0", "1"}, {"0", "0"}})));

  auto f5 = make_prime_field(5);
  Mat mf = mat_from_ints(f5, {{2, 1}, {4, 2}});
  SmithResult sf = smith_normal_form(mf);
  CHECK(mats_equal(sf.d, mat_from_ints(f5, {{1, 0}, {0, 0}})));
}

TEST_CASE("smith form over a residue ring of the integers") {
  auto z12 = residue_class_ring(make_integers(), {parse_element(*make_integers(), "12")});
  Mat m = mat_from_ints(z12, {{4, 0}, {0, 6}});
  SmithResult s = smith_normal_form(m);
  CHECK(mats_equal(s.d, mat_mul(mat_mul(s.u, m), s.v)));
  CHECK(mats_equal(s.d, mat_from_ints(z12, {{2, 0}, {0, 0}})));
}

TEST_CASE("smith form refuses polynomial rings") {
  auto R = make_poly(make_rationals(), {"x"});
  CHECK_THROWS(smith_normal_form(mat_from_strings(R, {{"x"}})));
}
