#include <doctest.h>

#include "fpmod/ring.hpp"

using namespace fpmod;

TEST_CASE("integer arithmetic and literals") {
  auto z = make_integers();
  Element a = parse_element(*z, "-42");
  Element b = parse_element(*z, "7");
  CHECK(print_element(*z, a) == "-42");
  CHECK(print_element(*z, add(*z, a, b)) == "-35");
  CHECK(print_element(*z, mul(*z, a, b)) == "-294");
  CHECK(is_zero(sub(*z, a, a)));
  CHECK(elements_equal(parse_element(*z, "0"), ring_zero(*z)));
}

TEST_CASE("rational literals stay reduced with positive denominator") {
  auto q = make_rationals();
  CHECK(print_element(*q, parse_element(*q, "4/6")) == "2/3");
  CHECK(print_element(*q, parse_element(*q, "-4/6")) == "-2/3");
  CHECK(print_element(*q, parse_element(*q, "8/4")) == "2");
  Element half = parse_element(*q, "1/2");
  Element third = parse_element(*q, "1/3");
  CHECK(print_element(*q, add(*q, half, third)) == "5/6");
  CHECK(print_element(*q, mul(*q, half, third)) == "1/6");
}

TEST_CASE("prime field reduces to canonical representatives") {
  auto f5 = make_prime_field(5);
  CHECK(print_element(*f5, parse_element(*f5, "7")) == "2");
  CHECK(print_element(*f5, parse_element(*f5, "-1")) == "4");
  Element three = parse_element(*f5, "3");
  Element four = parse_element(*f5, "4");
  CHECK(print_element(*f5, mul(*f5, three, four)) == "2");
  CHECK_THROWS(make_prime_field(6));
}

TEST_CASE("polynomial parse and canonical print round-trip") {
  auto r = make_poly(make_rationals(), {"x", "y"});
  auto roundtrip = [&](const std::string& in, const std::string& out) {
    Element e = parse_element(*r, in);
    CHECK(print_element(*r, e) == out);
    CHECK(elements_equal(parse_element(*r, print_element(*r, e)), e));
  };
  roundtrip("x^2 - 2*x + 1", "x^2-2*x+1");
  roundtrip("y*x", "x*y");
  roundtrip("0", "0");
  roundtrip("3", "3");
  roundtrip("-x + 1/2", "-x+1/2");
  roundtrip("x*y^2", "x*y^2");
  roundtrip("2x", "2*x");
  roundtrip("x + x", "2*x");
  roundtrip("x - x", "0");
  CHECK_THROWS(parse_element(*r, "z + 1"));
}

TEST_CASE("degrevlex orders by total degree then reversed exponents") {
  auto r = make_poly(make_rationals(), {"x", "y", "z"});
  // x*z vs y^2: same degree, last differing exponent decides
  Element e = parse_element(*r, "x*z + y^2");
  CHECK(print_element(*r, e) == "y^2+x*z");
  auto lex = make_poly(make_rationals(), {"x", "y", "z"}, MonomialOrder::Lex);
  Element f = parse_element(*lex, "x*z + y^2");
  CHECK(print_element(*lex, f) == "x*z+y^2");
}

TEST_CASE("polynomials over a prime field normalize coefficients") {
  auto r = make_poly(make_prime_field(5), {"x"});
  Element e = parse_element(*r, "7*x - 1");
  CHECK(print_element(*r, e) == "2*x+4");
  Element s = add(*r, e, parse_element(*r, "3*x+1"));
  CHECK(print_element(*r, s) == "0");
}

TEST_CASE("involution defaults to the identity and composes with transpose data") {
  auto r0 = make_poly(make_rationals(), {"x", "y"});
  Element e = parse_element(*r0, "x^2*y");
  CHECK(elements_equal(apply_theta(*r0, e), e));

  auto swap_xy = [](const Ring& rr, const Element& v) -> Element {
    PolyVal out = std::get<PolyVal>(v);
    for (auto& t : out.terms) std::swap(t.exps[0], t.exps[1]);
    PolyVal sorted{};
    for (auto& t : out.terms)
      sorted = poly_add(rr, sorted, poly_from_term(t.coeff, t.exps));
    return sorted;
  };
  auto r = with_involution(r0, swap_xy);
  CHECK(print_element(*r, apply_theta(*r, e)) == "x*y^2");
}
