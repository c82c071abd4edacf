#include <doctest.h>

#include "fpmod/presentation.hpp"

using namespace fpmod;

namespace {

const RingHandle Z = make_integers();

Presentation zmod(long n) {
  return make_presentation(Z, 1, mat_from_ints(Z, {{n}}));
}

bool valid(const Morphism& phi) { return morphism_validity(phi) == MorphValidity::Valid; }

// ch must carry p to q with mutually inverse generator changes.
void check_change(const Presentation& p, const Presentation& q, const BaseChange& ch) {
  Morphism otn = make_morphism(p, q, ch.old_to_new);
  Morphism nto = make_morphism(q, p, ch.new_to_old);
  CHECK(valid(otn));
  CHECK(valid(nto));
  CHECK(morphisms_equal(compose(otn, nto), identity_morphism(p)));
  CHECK(morphisms_equal(compose(nto, otn), identity_morphism(q)));
}

}  // namespace

TEST_CASE("morphism validity is checked against target relations") {
  Presentation z4 = zmod(4);
  Presentation z2 = zmod(2);
  CHECK(valid(make_morphism(z4, z2, mat_from_ints(Z, {{1}}))));
  CHECK(morphism_validity(make_morphism(z2, z4, mat_from_ints(Z, {{1}}))) ==
        MorphValidity::NotInduced);
  CHECK(valid(make_morphism(z2, z4, mat_from_ints(Z, {{2}}))));
  CHECK_THROWS(make_morphism(z2, z4, mat_from_ints(Z, {{1, 0}})));
}

TEST_CASE("morphism equality ignores relation multiples") {
  Presentation z4 = zmod(4);
  Morphism a = make_morphism(z4, z4, mat_from_ints(Z, {{1}}));
  Morphism b = make_morphism(z4, z4, mat_from_ints(Z, {{5}}));
  CHECK(morphisms_equal(a, b));
  CHECK_FALSE(morphisms_equal(a, make_morphism(z4, z4, mat_from_ints(Z, {{2}}))));
  CHECK(is_zero_morphism(make_morphism(z4, z4, mat_from_ints(Z, {{8}}))));
}

TEST_CASE("composition and identity") {
  Presentation z4 = zmod(4);
  Presentation z2 = zmod(2);
  Morphism f = make_morphism(z4, z2, mat_from_ints(Z, {{1}}));
  Morphism g = make_morphism(z2, z4, mat_from_ints(Z, {{2}}));
  Morphism fg = compose(f, g);
  CHECK(fg.source.gens == 1);
  CHECK(mats_equal(fg.matrix, mat_from_ints(Z, {{2}})));
  CHECK(morphisms_equal(compose(identity_morphism(z4), f), f));
  CHECK(morphisms_equal(compose(f, identity_morphism(z2)), f));
}

TEST_CASE("zero and equality of presentations") {
  CHECK(is_zero_module(zmod(1)));
  CHECK_FALSE(is_zero_module(zmod(2)));
  CHECK(is_zero_module(zero_presentation(Z)));
  CHECK(presentations_equal(zmod(2), make_presentation(Z, 1, mat_from_ints(Z, {{2}, {4}}))));
  CHECK_FALSE(presentations_equal(zmod(2), zmod(4)));
}

TEST_CASE("unit elimination removes a generator") {
  Presentation p = make_presentation(Z, 2, mat_from_ints(Z, {{1, 2}}));
  auto [q, ch] = eliminate_units(p);
  CHECK(q.gens == 1);
  CHECK(q.relations.rows == 0);
  CHECK(mats_equal(ch.old_to_new, mat_from_ints(Z, {{-2}, {1}})));
  CHECK(mats_equal(ch.new_to_old, mat_from_ints(Z, {{0, 1}})));
  check_change(p, q, ch);
}

TEST_CASE("better generators reaches a stable small presentation") {
  Presentation p = make_presentation(
      Z, 3, mat_from_ints(Z, {{1, 2, 0}, {0, 3, 0}, {0, 3, 0}, {0, 0, 0}}));
  auto [q, ch] = better_generators(p);
  CHECK(q.gens == 2);
  CHECK(q.relations.rows == 1);
  check_change(p, q, ch);

  auto [q2, ch2] = better_generators(q);
  CHECK(q2.gens == q.gens);
  CHECK(mats_equal(q2.relations, q.relations));
}

TEST_CASE("better generators keeps torsion intact") {
  auto z6 = residue_class_ring(Z, {parse_element(*Z, "6")});
  Presentation p = make_presentation(z6, 2, mat_from_ints(z6, {{5, 1}, {0, 2}}));
  auto [q, ch] = better_generators(p);
  CHECK(q.gens == 1);
  check_change(p, q, ch);
  auto dec = canonical_decomposition(q);
  REQUIRE(dec.factors.size() == 1);
  CHECK(dec.factors[0] == 2);
  CHECK(dec.rank == 0);
}

TEST_CASE("canonical decomposition over the integers") {
  Presentation p = make_presentation(Z, 3, mat_from_ints(Z, {{2, 0, 0}, {0, 3, 0}}));
  auto dec = canonical_decomposition(p);
  CHECK(dec.rank == 1);
  REQUIRE(dec.factors.size() == 1);
  CHECK(dec.factors[0] == 6);

  auto free2 = canonical_decomposition(free_presentation(Z, 2));
  CHECK(free2.rank == 2);
  CHECK(free2.factors.empty());

  auto trivial = canonical_decomposition(zmod(1));
  CHECK(trivial.rank == 0);
  CHECK(trivial.factors.empty());
}

TEST_CASE("canonical decomposition over fields counts dimension") {
  auto Q = make_rationals();
  Presentation p =
      make_presentation(Q, 3, mat_from_strings(Q, {{"1", "2", "0"}, {"2", "4", "0"}}));
  auto dec = canonical_decomposition(p);
  CHECK(dec.rank == 2);
  CHECK(dec.factors.empty());
}

TEST_CASE("canonical decomposition over a residue ring of the integers") {
  auto z6 = residue_class_ring(Z, {parse_element(*Z, "6")});
  Presentation p = make_presentation(z6, 2, mat_from_ints(z6, {{2, 0}}));
  auto dec = canonical_decomposition(p);
  CHECK(dec.rank == 1);
  REQUIRE(dec.factors.size() == 1);
  CHECK(dec.factors[0] == 2);
  CHECK(decomposition_to_string(dec) == "rank 1 factors [2]");
}

TEST_CASE("canonical decomposition refuses polynomial rings") {
  auto R = make_poly(make_rationals(), {"x"});
  CHECK_THROWS(canonical_decomposition(free_presentation(R, 1)));
}
