#include "fpmod/functors_basic.hpp"

#include <stdexcept>

namespace fpmod {

namespace {

// Relations of coker(alpha) on the generators of alpha's target.
Presentation coker_raw(const Morphism& alpha) {
  return make_presentation(alpha.target.ring, alpha.target.gens,
                           mat_stack(alpha.matrix, alpha.target.relations));
}

// Kernel of alpha as a subfactor of alpha's source, embedded by its rows.
AppliedBasic kernel_parts(const Morphism& alpha) {
  Mat iota = syzygies_generators(alpha.matrix, alpha.target.relations);
  Subfactor sf = subfactor_module(iota, alpha.source.relations);
  return {sf.pres, alpha.source, sf.embedding};
}

AppliedBasic defect_parts(const Morphism& a1, const Morphism& a2) {
  if (a1.target.gens != a2.source.gens)
    throw std::runtime_error("defect needs composable morphisms");
  if (!is_zero_morphism(compose(a1, a2)))
    throw std::runtime_error("defect needs a zero composite");
  Mat iota = syzygies_generators(a2.matrix, a2.target.relations);
  Mat denom = mat_stack(a1.matrix, a2.source.relations);
  Subfactor sf = subfactor_module(iota, denom);
  Presentation hull = make_presentation(a2.source.ring, a2.source.gens, denom);
  return {sf.pres, std::move(hull), sf.embedding};
}

Morphism theta_free_map(const Presentation& m) {
  Presentation dom = free_presentation(m.ring, m.gens);
  Presentation cod = free_presentation(m.ring, m.relations.rows);
  return make_morphism(std::move(dom), std::move(cod), theta_transpose(m.relations));
}

}  // namespace

FunctorHandle identity_functor() {
  static const FunctorHandle f = make_basic_functor(
      "Identity", {SlotShape::Object}, {Variance::Covariant},
      [](const std::vector<SlotValue>& a) -> AppliedBasic {
        const Presentation& m = a[0].object;
        return {m, m, Mat::identity(m.ring, m.gens)};
      },
      [](int, const SlotMorphism& m, const std::vector<SlotValue>&,
         const std::vector<SlotValue>&) { return m.verticals[0].matrix; });
  return f;
}

FunctorHandle cokernel_functor() {
  static const FunctorHandle f = make_basic_functor(
      "Cokernel", {SlotShape::Arrow}, {Variance::Covariant},
      [](const std::vector<SlotValue>& a) -> AppliedBasic {
        Presentation raw = coker_raw(a[0].arrow);
        Mat iota = Mat::identity(raw.ring, raw.gens);
        return {raw, raw, std::move(iota)};
      },
      [](int, const SlotMorphism& m, const std::vector<SlotValue>&,
         const std::vector<SlotValue>&) { return m.verticals[1].matrix; });
  return f;
}

FunctorHandle kernel_functor() {
  static const FunctorHandle f = make_basic_functor(
      "Kernel", {SlotShape::Arrow}, {Variance::Covariant},
      [](const std::vector<SlotValue>& a) { return kernel_parts(a[0].arrow); },
      [](int, const SlotMorphism& m, const std::vector<SlotValue>&,
         const std::vector<SlotValue>&) { return m.verticals[0].matrix; });
  return f;
}

FunctorHandle defect_functor() {
  static const FunctorHandle f = make_basic_functor(
      "DefectOfHoms", {SlotShape::ArrowPair}, {Variance::Covariant},
      [](const std::vector<SlotValue>& a) { return defect_parts(a[0].arrow, a[0].arrow2); },
      [](int, const SlotMorphism& m, const std::vector<SlotValue>&,
         const std::vector<SlotValue>&) { return m.verticals[1].matrix; });
  return f;
}

FunctorHandle hom_r_functor() {
  static const FunctorHandle f = make_basic_functor(
      "HomR", {SlotShape::Object}, {Variance::Contravariant},
      [](const std::vector<SlotValue>& a) {
        return kernel_parts(theta_free_map(a[0].object));
      },
      [](int, const SlotMorphism& m, const std::vector<SlotValue>&,
         const std::vector<SlotValue>&) {
        return theta_transpose(m.verticals[0].matrix);
      });
  return f;
}

FunctorHandle tensor_functor() {
  static const FunctorHandle f = make_basic_functor(
      "Tensor", {SlotShape::Object, SlotShape::Object},
      {Variance::Covariant, Variance::Covariant},
      [](const std::vector<SlotValue>& a) -> AppliedBasic {
        const Presentation& m = a[0].object;
        const Presentation& l = a[1].object;
        if (!rings_equal(*m.ring, *l.ring))
          throw std::runtime_error("tensor arguments live over different rings");
        Mat t = mat_stack(kronecker(m.relations, Mat::identity(l.ring, l.gens)),
                          kronecker(Mat::identity(m.ring, m.gens), l.relations));
        Presentation raw = make_presentation(m.ring, m.gens * l.gens, std::move(t));
        Mat iota = Mat::identity(raw.ring, raw.gens);
        return {raw, raw, std::move(iota)};
      },
      [](int slot, const SlotMorphism& m, const std::vector<SlotValue>& from_args,
         const std::vector<SlotValue>&) {
        const Morphism& v = m.verticals[0];
        if (slot == 0)
          return kronecker(v.matrix,
                           Mat::identity(v.source.ring, from_args[1].object.gens));
        return kronecker(Mat::identity(v.source.ring, from_args[0].object.gens), v.matrix);
      });
  return f;
}

FunctorHandle hom_functor() {
  static const FunctorHandle f = make_basic_functor(
      "Hom", {SlotShape::Object, SlotShape::Object},
      {Variance::Contravariant, Variance::Covariant},
      [](const std::vector<SlotValue>& a) {
        const Presentation& m = a[0].object;
        const Presentation& l = a[1].object;
        if (!rings_equal(*m.ring, *l.ring))
          throw std::runtime_error("hom arguments live over different rings");
        int l0 = m.gens, l1 = m.relations.rows;
        Presentation c0 = make_presentation(
            m.ring, l0 * l.gens,
            kronecker(Mat::identity(m.ring, l0), l.relations));
        Presentation c1 = make_presentation(
            m.ring, l1 * l.gens,
            kronecker(Mat::identity(m.ring, l1), l.relations));
        Mat kappa = theta_transpose(
            kronecker(m.relations, Mat::identity(m.ring, l.gens)));
        return kernel_parts(make_morphism(std::move(c0), std::move(c1), std::move(kappa)));
      },
      [](int slot, const SlotMorphism& m, const std::vector<SlotValue>& from_args,
         const std::vector<SlotValue>&) {
        const Morphism& v = m.verticals[0];
        if (slot == 0)
          return theta_transpose(kronecker(
              v.matrix, Mat::identity(v.source.ring, from_args[1].object.gens)));
        return kronecker(Mat::identity(v.source.ring, from_args[0].object.gens), v.matrix);
      });
  return f;
}

FunctorHandle ext_functor(int q) { return right_derived_cofunctor(hom_functor(), 0, q); }

FunctorHandle ext_functor_cheap(int q) {
  return right_derived_left_exact(hom_functor(), 0, q);
}

FunctorHandle tor_functor(int q) { return left_derived(tensor_functor(), 0, q); }

FunctorHandle tor_functor_cheap(int q) {
  return left_derived_right_exact(tensor_functor(), 0, q);
}

FunctorHandle hom_hom_functor() {
  return compose_functors(hom_functor(), 0, hom_functor());
}

FunctorHandle l_hom_hom_functor() { return left_derived(hom_hom_functor(), 0, 1); }

FunctorHandle ext_ext_functor(int j, int k) {
  return compose_functors(ext_functor(j), 0, ext_functor(k));
}

Presentation cokernel_of(const Morphism& alpha) {
  return functor_obj1(cokernel_functor(), slot_arrow(alpha));
}

Presentation kernel_of(const Morphism& alpha) {
  return functor_obj1(kernel_functor(), slot_arrow(alpha));
}

Presentation defect_of(const Morphism& first, const Morphism& second) {
  return functor_obj1(defect_functor(), slot_pair(first, second));
}

KernelData kernel_with_embedding(const Morphism& alpha) {
  AppliedObject ap = functor_apply_basic(kernel_functor(), {slot_arrow(alpha)});
  Mat emb = mat_mul(ap.change.new_to_old, ap.parts.iota);
  Morphism embedding = make_morphism(ap.cleaned, alpha.source, std::move(emb));
  return {std::move(ap.cleaned), std::move(embedding)};
}

}  // namespace fpmod
