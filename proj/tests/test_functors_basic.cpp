#include <doctest.h>

#include "fpmod/functors_basic.hpp"

using namespace fpmod;

namespace {

RingHandle ZZ() {
  static RingHandle z = make_integers();
  return z;
}

Presentation zmod(long n) {
  return make_presentation(ZZ(), 1, mat_from_ints(ZZ(), {{n}}));
}

Decomposition cyclic(long n) { return Decomposition{{mpz_class(n)}, 0}; }

Decomposition dec2(const FunctorHandle& f, const Presentation& a,
                   const Presentation& b) {
  return canonical_decomposition(functor_obj(f, {slot_object(a), slot_object(b)}));
}

}  // namespace

TEST_CASE("hom groups of cyclic modules") {
  CHECK(dec2(hom_functor(), zmod(4), zmod(6)) == cyclic(2));
  CHECK(dec2(hom_functor(), zmod(12), zmod(18)) == cyclic(6));
  CHECK(dec2(hom_functor(), free_presentation(ZZ(), 1), zmod(5)) == cyclic(5));
  CHECK(is_zero_module(functor_obj(
      hom_functor(), {slot_object(zmod(6)), slot_object(free_presentation(ZZ(), 1))})));
  CHECK(dec2(hom_functor(), free_presentation(ZZ(), 2), zmod(3)) ==
        Decomposition{{3, 3}, 0});
}

TEST_CASE("hom is contravariant in its first slot") {
  Morphism phi = make_morphism(zmod(2), zmod(4), mat_from_ints(ZZ(), {{2}}));
  std::vector<SlotValue> args = {slot_object(zmod(4)), slot_object(zmod(8))};
  Morphism h = functor_map(hom_functor(), 0, object_change(phi), args);
  CHECK(canonical_decomposition(h.source) == cyclic(4));
  CHECK(canonical_decomposition(h.target) == cyclic(2));

  SlotMorphism idm = object_change(identity_morphism(zmod(4)));
  Morphism hid = functor_map(hom_functor(), 0, idm, args);
  CHECK(morphisms_equal(hid, identity_morphism(hid.source)));
}

TEST_CASE("hom is covariant in its second slot") {
  Morphism psi = make_morphism(zmod(2), zmod(8), mat_from_ints(ZZ(), {{4}}));
  std::vector<SlotValue> args = {slot_object(zmod(4)), slot_object(zmod(2))};
  Morphism h = functor_map(hom_functor(), 1, object_change(psi), args);
  CHECK(canonical_decomposition(h.source) == cyclic(2));
  CHECK(canonical_decomposition(h.target) == cyclic(4));

  Morphism hid = functor_map(hom_functor(), 1,
                             object_change(identity_morphism(zmod(2))), args);
  CHECK(morphisms_equal(hid, identity_morphism(hid.source)));
}

TEST_CASE("tensor products of cyclic modules") {
  CHECK(dec2(tensor_functor(), zmod(4), zmod(6)) == cyclic(2));
  CHECK(dec2(tensor_functor(), free_presentation(ZZ(), 2), zmod(3)) ==
        Decomposition{{3, 3}, 0});
  Presentation ff = functor_obj(tensor_functor(),
                                {slot_object(free_presentation(ZZ(), 2)),
                                 slot_object(free_presentation(ZZ(), 3))});
  CHECK(canonical_decomposition(ff) == Decomposition{{}, 6});
}

TEST_CASE("degree zero derived functors recover their base") {
  CHECK(dec2(ext_functor(0), zmod(4), zmod(6)) ==
        dec2(hom_functor(), zmod(4), zmod(6)));
  CHECK(dec2(ext_functor(0), free_presentation(ZZ(), 1), zmod(5)) == cyclic(5));
  CHECK(dec2(tor_functor(0), zmod(4), zmod(6)) ==
        dec2(tensor_functor(), zmod(4), zmod(6)));
}

TEST_CASE("ext groups of cyclic modules") {
  CHECK(dec2(ext_functor(1), zmod(4), zmod(6)) == cyclic(2));
  CHECK(dec2(ext_functor(1), zmod(6), free_presentation(ZZ(), 1)) == cyclic(6));
  CHECK(is_zero_module(functor_obj(
      ext_functor(1),
      {slot_object(free_presentation(ZZ(), 2)), slot_object(zmod(9))})));
  CHECK(is_zero_module(
      functor_obj(ext_functor(2), {slot_object(zmod(4)), slot_object(zmod(6))})));
}

TEST_CASE("tor groups of cyclic modules") {
  CHECK(dec2(tor_functor(1), zmod(4), zmod(6)) == cyclic(2));
  CHECK(dec2(tor_functor(1), zmod(2), zmod(2)) == cyclic(2));
  CHECK(is_zero_module(functor_obj(
      tor_functor(1),
      {slot_object(free_presentation(ZZ(), 3)), slot_object(zmod(7))})));
  CHECK(is_zero_module(
      functor_obj(tor_functor(2), {slot_object(zmod(4)), slot_object(zmod(6))})));
}

TEST_CASE("shortcut derived functors match the general ones") {
  for (int q = 0; q <= 2; ++q) {
    CHECK(dec2(ext_functor(q), zmod(12), zmod(18)) ==
          dec2(ext_functor_cheap(q), zmod(12), zmod(18)));
    CHECK(dec2(tor_functor(q), zmod(12), zmod(18)) ==
          dec2(tor_functor_cheap(q), zmod(12), zmod(18)));
  }
}

TEST_CASE("double dual of a cyclic module against a big cyclic target") {
  FunctorHandle hh = hom_hom_functor();
  CHECK(functor_arity(*hh) == 3);
  CHECK(functor_variance(*hh, 0) == Variance::Covariant);
  CHECK(functor_variance(*hh, 1) == Variance::Contravariant);
  CHECK(functor_variance(*hh, 2) == Variance::Covariant);

  Presentation out = functor_obj(
      hh, {slot_object(zmod(5)), slot_object(zmod(25)), slot_object(zmod(25))});
  CHECK(canonical_decomposition(out) == cyclic(5));

  Presentation f1 = free_presentation(ZZ(), 1);
  CHECK(is_zero_module(functor_obj(
      hh, {slot_object(zmod(5)), slot_object(f1), slot_object(f1)})));
}

TEST_CASE("first left derived double dual") {
  Presentation f1 = free_presentation(ZZ(), 1);
  FunctorHandle lhh = l_hom_hom_functor();
  CHECK(is_zero_module(functor_obj(
      lhh, {slot_object(zmod(6)), slot_object(f1), slot_object(f1)})));
  Presentation l0 = functor_obj(left_derived(hom_hom_functor(), 0, 0),
                                {slot_object(zmod(6)), slot_object(f1),
                                 slot_object(f1)});
  CHECK(canonical_decomposition(l0) == cyclic(6));
}

TEST_CASE("iterated ext") {
  Presentation f1 = free_presentation(ZZ(), 1);
  FunctorHandle ee = ext_ext_functor(1, 1);
  CHECK(functor_arity(*ee) == 3);
  Presentation out = functor_obj(
      ee, {slot_object(zmod(6)), slot_object(f1), slot_object(f1)});
  CHECK(canonical_decomposition(out) == cyclic(6));
}

TEST_CASE("hom tensor adjunction on decompositions") {
  Presentation a = zmod(4), b = zmod(6), c = zmod(12);
  Presentation ab = functor_obj(tensor_functor(), {slot_object(a), slot_object(b)});
  Presentation lhs = functor_obj(hom_functor(), {slot_object(ab), slot_object(c)});
  Presentation bc = functor_obj(hom_functor(), {slot_object(b), slot_object(c)});
  Presentation rhs = functor_obj(hom_functor(), {slot_object(a), slot_object(bc)});
  CHECK(canonical_decomposition(lhs) == canonical_decomposition(rhs));
  CHECK(canonical_decomposition(lhs) == cyclic(2));
}

TEST_CASE("catalogue functors over a polynomial ring") {
  RingHandle r = make_poly(make_rationals(), {"x", "y"});
  Presentation f1 = free_presentation(r, 1);
  Presentation f2 = free_presentation(r, 2);
  Morphism koszul = make_morphism(f2, f1, mat_from_strings(r, {{"x"}, {"y"}}));

  Presentation c = cokernel_of(koszul);
  CHECK(c.gens == 1);
  CHECK_FALSE(is_zero_module(c));

  Presentation k = kernel_of(koszul);
  CHECK(k.gens == 1);
  CHECK(k.relations.rows == 0);

  Presentation mx = make_presentation(r, 1, mat_from_strings(r, {{"x"}}));
  Presentation my = make_presentation(r, 1, mat_from_strings(r, {{"y"}}));
  Presentation t = functor_obj(tensor_functor(), {slot_object(mx), slot_object(my)});
  Presentation both = make_presentation(r, 1, mat_from_strings(r, {{"x"}, {"y"}}));
  CHECK(presentations_equal(t, both));

  Presentation endo = functor_obj(hom_functor(), {slot_object(mx), slot_object(mx)});
  CHECK(presentations_equal(endo, mx));
}
