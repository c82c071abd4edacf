#pragma once

#include <functional>

#include "fpmod/procedures.hpp"

namespace fpmod {

enum class Variance { Covariant, Contravariant };

// What one functor slot accepts: a module, a morphism, or a composable pair
// with zero composite (the input of a defect).
enum class SlotShape { Object, Arrow, ArrowPair };

struct SlotValue {
  SlotShape shape = SlotShape::Object;
  Presentation object;
  Morphism arrow;   // Arrow; first map of an ArrowPair
  Morphism arrow2;  // second map of an ArrowPair
};
SlotValue slot_object(Presentation p);
SlotValue slot_arrow(Morphism a);
SlotValue slot_pair(Morphism first, Morphism second);
RingHandle slot_ring(const SlotValue& v);

// A map between two values of one slot: one vertical morphism per term,
// forming commuting squares with the horizontal arrows. An Object slot has a
// single vertical (the morphism itself).
struct SlotMorphism {
  SlotValue from;
  SlotValue to;
  std::vector<Morphism> verticals;
};
SlotMorphism object_change(Morphism phi);
SlotMorphism arrow_change(Morphism from_arrow, Morphism to_arrow, Morphism v_source,
                          Morphism v_target);
SlotMorphism pair_change(SlotValue from, SlotValue to, Morphism v1, Morphism v2, Morphism v3);

// What a basic functor computes at one argument tuple: a raw presentation, the
// hull object it embeds into, and the embedding rows (raw.gens x hull.gens).
// Self-hull functors use iota = identity.
struct AppliedBasic {
  Presentation raw;
  Presentation hull;
  Mat iota;
};

struct FunctorDesc;
using FunctorHandle = std::shared_ptr<const FunctorDesc>;

enum class FunctorKind { Basic, Composed, Derived, Curried };
enum class DerivedFlavor { General, RightExactCovariant, LeftExactContravariant };

// Inspectable functor value. Basic functors carry their object part, hull and
// embedding as closures; Composed/Derived/Curried are plain structure that the
// engine interprets with no functor-specific code.
struct FunctorDesc {
  std::string name;
  std::vector<SlotShape> shapes;
  std::vector<Variance> variances;
  FunctorKind kind = FunctorKind::Basic;

  // Basic
  std::function<AppliedBasic(const std::vector<SlotValue>&)> basic_apply;
  // Matrix of the hull morphism induced by changing `slot`, oriented along the
  // induced map: hull(source tuple) -> hull(target tuple) after swapping the
  // tuples on a contravariant slot.
  std::function<Mat(int slot, const SlotMorphism& m, const std::vector<SlotValue>& from_args,
                    const std::vector<SlotValue>& to_args)>
      basic_hull;

  // Composed: outer with `slot` fed by inner's output.
  FunctorHandle outer;
  int slot = 0;
  FunctorHandle inner;

  // Derived: q-th derivation of base in `slot` (also stored in `slot`).
  FunctorHandle base;
  int degree = 0;
  DerivedFlavor flavor = DerivedFlavor::General;

  // Curried: underlying functor with some slots frozen.
  FunctorHandle uncurried;
  std::vector<std::optional<SlotValue>> fixed;
};

FunctorHandle make_basic_functor(std::string name, std::vector<SlotShape> shapes,
                                 std::vector<Variance> variances,
                                 decltype(FunctorDesc::basic_apply) apply,
                                 decltype(FunctorDesc::basic_hull) hull);
FunctorHandle compose_functors(FunctorHandle outer, int slot, FunctorHandle inner);
FunctorHandle left_derived(FunctorHandle base, int slot, int q);
FunctorHandle right_derived_cofunctor(FunctorHandle base, int slot, int q);
FunctorHandle left_derived_right_exact(FunctorHandle base, int slot, int q);
FunctorHandle right_derived_left_exact(FunctorHandle base, int slot, int q);
FunctorHandle curry_functor(FunctorHandle f, std::vector<std::optional<SlotValue>> fixed);

int functor_arity(const FunctorDesc& f);
Variance functor_variance(const FunctorDesc& f, int slot);

Presentation functor_obj(const FunctorHandle& f, const std::vector<SlotValue>& args);
// args[active_slot] is replaced by m.from / m.to internally.
Morphism functor_map(const FunctorHandle& f, int active_slot, const SlotMorphism& m,
                     const std::vector<SlotValue>& args);

// One basic application with the cleaning bookkeeping kept around, for callers
// that need the hull embedding expressed on the cleaned generators.
struct AppliedObject {
  AppliedBasic parts;
  Presentation cleaned;
  BaseChange change;  // parts.raw -> cleaned
};
AppliedObject functor_apply_basic(const FunctorHandle& f, const std::vector<SlotValue>& args);

// Unary conveniences.
Presentation functor_obj1(const FunctorHandle& f, const SlotValue& arg);
Morphism functor_map1(const FunctorHandle& f, const SlotMorphism& m);

// Chain complex C_1 <- C_2 <- ... (maps[i]: objects[i+1] -> objects[i]);
// objects[i] sits in degree low + i. Positions for the slice operators are
// 1-based from the low end.
struct Complex {
  std::vector<Presentation> objects;
  std::vector<Morphism> maps;
  int low = 0;
};
Complex make_complex(std::vector<Presentation> objects, std::vector<Morphism> maps,
                     int low = 0);
bool complex_is_valid(const Complex& c);
Presentation obj_slice(const Complex& c, int i);
Morphism mor_slice(const Complex& c, int i);
Complex functor_on_complex(const FunctorHandle& f, const Complex& c);

// Chain map phi_0..phi_q between free resolutions of source and target,
// commuting with the boundaries and with the augmentations at level 0.
struct LiftedChainMap {
  Resolution source;
  Resolution target;
  std::vector<Morphism> levels;
};
LiftedChainMap resolution_of_seq(const Morphism& phi, int q);
LiftedChainMap lift_chain_map(const Morphism& phi, Resolution source, Resolution target,
                              int levels);

}  // namespace fpmod
