#include <doctest.h>

#include "fpmod/functors_basic.hpp"
#include "fpmod/procedures.hpp"

using namespace fpmod;

namespace {

RingHandle ZZ() {
  static RingHandle z = make_integers();
  return z;
}

Presentation zmod(long n) {
  return make_presentation(ZZ(), 1, mat_from_ints(ZZ(), {{n}}));
}

Morphism scal(const Presentation& src, const Presentation& dst, long k) {
  return make_morphism(src, dst, mat_from_ints(ZZ(), {{k}}));
}

Decomposition cyclic(long n) { return Decomposition{{mpz_class(n)}, 0}; }

}  // namespace

TEST_CASE("cokernel of a scalar map is cyclic") {
  Presentation f1 = free_presentation(ZZ(), 1);
  Presentation c = cokernel_of(scal(f1, f1, 2));
  CHECK(canonical_decomposition(c) == cyclic(2));
  CHECK(is_zero_module(cokernel_of(identity_morphism(f1))));
}

TEST_CASE("kernel objects and embeddings") {
  Presentation f1 = free_presentation(ZZ(), 1);

  Morphism into_four = make_morphism(f1, zmod(4), mat_from_ints(ZZ(), {{2}}));
  Presentation k = kernel_of(into_four);
  CHECK(canonical_decomposition(k) == Decomposition{{}, 1});

  Morphism doubling = scal(zmod(4), zmod(4), 2);
  Presentation k2 = kernel_of(doubling);
  CHECK(canonical_decomposition(k2) == cyclic(2));

  KernelData kd = kernel_with_embedding(doubling);
  CHECK(canonical_decomposition(kd.pres) == cyclic(2));
  CHECK(kd.embedding.source.gens == kd.pres.gens);
  CHECK(is_zero_morphism(compose(kd.embedding, doubling)));
}

TEST_CASE("defect of a composable zero pair") {
  Presentation f1 = free_presentation(ZZ(), 1);
  Morphism a1 = scal(f1, f1, 4);
  Morphism a2 = make_morphism(f1, zmod(2), mat_from_ints(ZZ(), {{1}}));
  CHECK(canonical_decomposition(defect_of(a1, a2)) == cyclic(2));

  Presentation m6 = zmod(6);
  Presentation z0 = zero_presentation(ZZ());
  Morphism in = zero_morphism(z0, m6);
  Morphism out = zero_morphism(m6, z0);
  CHECK(canonical_decomposition(defect_of(in, out)) == cyclic(6));

  CHECK_THROWS(defect_of(identity_morphism(f1), identity_morphism(f1)));
}

TEST_CASE("cokernel ladders induce the expected map") {
  Presentation f1 = free_presentation(ZZ(), 1);
  Morphism a2 = scal(f1, f1, 2);
  Morphism a6 = scal(f1, f1, 6);
  SlotMorphism ladder =
      arrow_change(a2, a6, identity_morphism(f1), scal(f1, f1, 3));
  Morphism induced = functor_map1(cokernel_functor(), ladder);
  CHECK(canonical_decomposition(induced.source) == cyclic(2));
  CHECK(canonical_decomposition(induced.target) == cyclic(6));
  CHECK(morphisms_equal(
      induced, make_morphism(induced.source, induced.target,
                             mat_from_ints(ZZ(), {{3}}))));
}

TEST_CASE("kernel functor sends the identity ladder to the identity") {
  Morphism doubling = scal(zmod(4), zmod(4), 2);
  SlotMorphism ladder = arrow_change(doubling, doubling, identity_morphism(zmod(4)),
                                     identity_morphism(zmod(4)));
  Morphism k = functor_map1(kernel_functor(), ladder);
  CHECK(morphisms_equal(k, identity_morphism(k.source)));
  CHECK(canonical_decomposition(k.source) == cyclic(2));
}

TEST_CASE("dualizer on objects and morphisms") {
  CHECK(is_zero_module(functor_obj1(hom_r_functor(), slot_object(zmod(6)))));
  Presentation d2 = functor_obj1(hom_r_functor(), slot_object(free_presentation(ZZ(), 2)));
  CHECK(canonical_decomposition(d2) == Decomposition{{}, 2});

  Presentation f1 = free_presentation(ZZ(), 1);
  Morphism dual = functor_map1(hom_r_functor(), object_change(scal(f1, f1, 2)));
  CHECK(morphisms_equal(dual, make_morphism(dual.source, dual.target,
                                            mat_from_ints(ZZ(), {{2}}))));
}

TEST_CASE("right derived dualizer detects torsion") {
  FunctorHandle ext1 = right_derived_cofunctor(hom_r_functor(), 0, 1);
  CHECK(canonical_decomposition(functor_obj1(ext1, slot_object(zmod(6)))) ==
        cyclic(6));
  CHECK(is_zero_module(functor_obj1(right_derived_cofunctor(hom_r_functor(), 0, 0),
                                    slot_object(zmod(6)))));
  CHECK(is_zero_module(functor_obj1(right_derived_cofunctor(hom_r_functor(), 0, 2),
                                    slot_object(zmod(6)))));
  CHECK(is_zero_module(
      functor_obj1(ext1, slot_object(free_presentation(ZZ(), 2)))));
}

TEST_CASE("derived functor respects identities and composition") {
  FunctorHandle ext1 = right_derived_cofunctor(hom_r_functor(), 0, 1);

  Morphism idm = functor_map1(ext1, object_change(identity_morphism(zmod(6))));
  CHECK(morphisms_equal(idm, identity_morphism(idm.source)));

  Morphism psi = scal(zmod(2), zmod(4), 2);
  Morphism phi = scal(zmod(4), zmod(8), 2);
  Morphism lhs = functor_map1(ext1, object_change(compose(psi, phi)));
  Morphism rhs = compose(functor_map1(ext1, object_change(phi)),
                         functor_map1(ext1, object_change(psi)));
  CHECK(morphisms_equal(lhs, rhs));
  CHECK(canonical_decomposition(lhs.source) == cyclic(8));
  CHECK(canonical_decomposition(lhs.target) == cyclic(2));
}

TEST_CASE("shortcut flavor agrees with the general derived route") {
  Presentation m = make_presentation(
      ZZ(), 2, mat_from_ints(ZZ(), {{4, 0}, {0, 6}}));
  for (int q = 0; q <= 2; ++q) {
    FunctorHandle general = right_derived_cofunctor(hom_r_functor(), 0, q);
    FunctorHandle cheap = right_derived_left_exact(hom_r_functor(), 0, q);
    CHECK(canonical_decomposition(functor_obj1(general, slot_object(m))) ==
          canonical_decomposition(functor_obj1(cheap, slot_object(m))));
    CHECK(canonical_decomposition(functor_obj1(general, slot_object(zmod(6)))) ==
          canonical_decomposition(functor_obj1(cheap, slot_object(zmod(6)))));
  }
}

TEST_CASE("complex slices and functor images of complexes") {
  Presentation f1 = free_presentation(ZZ(), 1);
  Complex c = make_complex({f1, f1}, {scal(f1, f1, 2)}, 1);
  CHECK(complex_is_valid(c));
  CHECK(obj_slice(c, 2).gens == 1);
  CHECK(elements_equal(mor_slice(c, 1).matrix.at(0, 0), ring_from_int(*ZZ(), 2)));
  CHECK_THROWS(obj_slice(c, 3));
  CHECK_THROWS(make_complex({f1, f1}, {}));

  Complex hc = functor_on_complex(hom_r_functor(), c);
  CHECK(hc.objects.size() == 2);
  CHECK(morphisms_equal(hc.maps[0],
                        make_morphism(hc.objects[1], hc.objects[0],
                                      mat_from_ints(ZZ(), {{2}}))));

  Complex bad = make_complex({f1, f1, f1}, {scal(f1, f1, 2), scal(f1, f1, 2)}, 0);
  CHECK_FALSE(complex_is_valid(bad));
}

TEST_CASE("chain lifts commute with boundaries and augmentations") {
  Morphism phi = scal(zmod(2), zmod(4), 2);
  LiftedChainMap lift = resolution_of_seq(phi, 1);
  REQUIRE(lift.levels.size() == 2);

  Morphism aug_s = lift.source.augmentation();
  Morphism aug_t = lift.target.augmentation();
  Morphism top = make_morphism(aug_s.source, phi.target,
                               mat_mul(aug_s.matrix, phi.matrix));
  CHECK(morphisms_equal(top, compose(lift.levels[0], aug_t)));

  Mat lhs = mat_mul(lift.source.map(1), lift.levels[0].matrix);
  Mat rhs = mat_mul(lift.levels[1].matrix, lift.target.map(1));
  CHECK(mats_equal(lhs, rhs));
}

TEST_CASE("composition with the identity functor changes nothing") {
  Presentation f1 = free_presentation(ZZ(), 1);
  Morphism phi = scal(f1, f1, 2);

  FunctorHandle wrapped = compose_functors(hom_r_functor(), 0, identity_functor());
  CHECK(functor_arity(*wrapped) == 1);
  CHECK(functor_variance(*wrapped, 0) == Variance::Contravariant);
  CHECK(is_zero_module(functor_obj1(wrapped, slot_object(zmod(6)))));
  CHECK(morphisms_equal(functor_map1(wrapped, object_change(phi)),
                        functor_map1(hom_r_functor(), object_change(phi))));

  FunctorHandle outer = compose_functors(identity_functor(), 0, hom_r_functor());
  CHECK(functor_variance(*outer, 0) == Variance::Contravariant);
  CHECK(is_zero_module(functor_obj1(outer, slot_object(zmod(6)))));
}

TEST_CASE("outer slots of a composed functor stay active") {
  FunctorHandle f = compose_functors(hom_functor(), 0, identity_functor());
  CHECK(functor_arity(*f) == 2);
  std::vector<SlotValue> args = {slot_object(zmod(4)), slot_object(zmod(2))};
  Morphism psi = scal(zmod(2), zmod(6), 3);
  Morphism via = functor_map(f, 1, object_change(psi), args);
  Morphism direct = functor_map(hom_functor(), 1, object_change(psi), args);
  CHECK(morphisms_equal(via, direct));
}

TEST_CASE("curried tensor behaves as a unary functor") {
  FunctorHandle t2 = curry_functor(
      tensor_functor(), {std::nullopt, slot_object(zmod(2))});
  CHECK(functor_arity(*t2) == 1);
  CHECK(functor_variance(*t2, 0) == Variance::Covariant);
  CHECK(canonical_decomposition(functor_obj1(t2, slot_object(zmod(4)))) ==
        cyclic(2));

  Presentation f1 = free_presentation(ZZ(), 1);
  Morphism phi = scal(f1, f1, 2);
  CHECK(is_zero_morphism(functor_map1(t2, object_change(phi))));
}
