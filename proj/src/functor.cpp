#include "fpmod/functor.hpp"

#include <stdexcept>

#include "fpmod/functors_basic.hpp"

namespace fpmod {

SlotValue slot_object(Presentation p) {
  SlotValue v;
  v.object = std::move(p);
  return v;
}

SlotValue slot_arrow(Morphism a) {
  SlotValue v;
  v.shape = SlotShape::Arrow;
  v.arrow = std::move(a);
  return v;
}

SlotValue slot_pair(Morphism first, Morphism second) {
  if (first.target.gens != second.source.gens ||
      !rings_equal(*first.target.ring, *second.source.ring))
    throw std::runtime_error("slot_pair needs composable morphisms");
  SlotValue v;
  v.shape = SlotShape::ArrowPair;
  v.arrow = std::move(first);
  v.arrow2 = std::move(second);
  return v;
}

RingHandle slot_ring(const SlotValue& v) {
  switch (v.shape) {
    case SlotShape::Object: return v.object.ring;
    case SlotShape::Arrow:
    case SlotShape::ArrowPair: return v.arrow.source.ring;
  }
  throw std::logic_error("unreachable");
}

SlotMorphism object_change(Morphism phi) {
  SlotMorphism m;
  m.from = slot_object(phi.source);
  m.to = slot_object(phi.target);
  m.verticals = {std::move(phi)};
  return m;
}

SlotMorphism arrow_change(Morphism from_arrow, Morphism to_arrow, Morphism v_source,
                          Morphism v_target) {
  SlotMorphism m;
  m.from = slot_arrow(std::move(from_arrow));
  m.to = slot_arrow(std::move(to_arrow));
  m.verticals = {std::move(v_source), std::move(v_target)};
  return m;
}

SlotMorphism pair_change(SlotValue from, SlotValue to, Morphism v1, Morphism v2,
                         Morphism v3) {
  if (from.shape != SlotShape::ArrowPair || to.shape != SlotShape::ArrowPair)
    throw std::runtime_error("pair_change needs ArrowPair slot values");
  SlotMorphism m;
  m.from = std::move(from);
  m.to = std::move(to);
  m.verticals = {std::move(v1), std::move(v2), std::move(v3)};
  return m;
}

namespace {

void check_args(const FunctorDesc& f, const std::vector<SlotValue>& args) {
  if (args.size() != f.shapes.size())
    throw std::runtime_error("functor arity mismatch for " + f.name);
  for (size_t i = 0; i < args.size(); ++i)
    if (args[i].shape != f.shapes[i])
      throw std::runtime_error("functor slot shape mismatch for " + f.name);
}

void check_ladder(const SlotMorphism& m) {
  switch (m.from.shape) {
    case SlotShape::Object:
      if (m.verticals.size() != 1)
        throw std::runtime_error("object slot change needs one morphism");
      return;
    case SlotShape::Arrow: {
      if (m.verticals.size() != 2)
        throw std::runtime_error("arrow slot change needs two verticals");
      if (!morphisms_equal(compose(m.from.arrow, m.verticals[1]),
                           compose(m.verticals[0], m.to.arrow)))
        throw std::runtime_error("arrow slot change square does not commute");
      return;
    }
    case SlotShape::ArrowPair: {
      if (m.verticals.size() != 3)
        throw std::runtime_error("pair slot change needs three verticals");
      if (!morphisms_equal(compose(m.from.arrow, m.verticals[1]),
                           compose(m.verticals[0], m.to.arrow)))
        throw std::runtime_error("pair slot change: first square does not commute");
      if (!morphisms_equal(compose(m.from.arrow2, m.verticals[2]),
                           compose(m.verticals[1], m.to.arrow2)))
        throw std::runtime_error("pair slot change: second square does not commute");
      return;
    }
  }
}

std::vector<SlotValue> with_slot(std::vector<SlotValue> args, int slot, SlotValue v) {
  args[slot] = std::move(v);
  return args;
}

AppliedObject apply_basic_at(const FunctorDesc& f, const std::vector<SlotValue>& args) {
  AppliedBasic parts = f.basic_apply(args);
  auto [cleaned, change] = better_generators(parts.raw);
  return {std::move(parts), std::move(cleaned), std::move(change)};
}

Presentation derived_obj(const FunctorDesc& f, const std::vector<SlotValue>& args);
Morphism derived_map(const FunctorDesc& f, int active_slot, const SlotMorphism& m,
                     const std::vector<SlotValue>& args);

std::vector<SlotValue> composed_inner_args(const FunctorDesc& f,
                                           const std::vector<SlotValue>& args) {
  int ni = functor_arity(*f.inner);
  return {args.begin() + f.slot, args.begin() + f.slot + ni};
}

std::vector<SlotValue> composed_outer_args(const FunctorDesc& f,
                                           const std::vector<SlotValue>& args,
                                           SlotValue inner_result) {
  int ni = functor_arity(*f.inner);
  std::vector<SlotValue> out(args.begin(), args.begin() + f.slot);
  out.push_back(std::move(inner_result));
  out.insert(out.end(), args.begin() + f.slot + ni, args.end());
  return out;
}

std::vector<SlotValue> curried_full_args(const FunctorDesc& f,
                                         const std::vector<SlotValue>& args) {
  std::vector<SlotValue> full;
  size_t next = 0;
  for (const auto& fx : f.fixed) {
    if (fx)
      full.push_back(*fx);
    else
      full.push_back(args.at(next++));
  }
  if (next != args.size()) throw std::runtime_error("curried functor arity mismatch");
  return full;
}

int curried_underlying_slot(const FunctorDesc& f, int active) {
  int seen = -1;
  for (size_t i = 0; i < f.fixed.size(); ++i) {
    if (f.fixed[i]) continue;
    if (++seen == active) return static_cast<int>(i);
  }
  throw std::runtime_error("curried slot out of range");
}

}  // namespace

FunctorHandle make_basic_functor(std::string name, std::vector<SlotShape> shapes,
                                 std::vector<Variance> variances,
                                 decltype(FunctorDesc::basic_apply) apply,
                                 decltype(FunctorDesc::basic_hull) hull) {
  auto d = std::make_shared<FunctorDesc>();
  d->name = std::move(name);
  d->shapes = std::move(shapes);
  d->variances = std::move(variances);
  d->kind = FunctorKind::Basic;
  d->basic_apply = std::move(apply);
  d->basic_hull = std::move(hull);
  if (d->shapes.size() != d->variances.size())
    throw std::runtime_error("functor slot lists disagree");
  return d;
}

FunctorHandle compose_functors(FunctorHandle outer, int slot, FunctorHandle inner) {
  if (slot < 0 || slot >= functor_arity(*outer))
    throw std::runtime_error("composition slot out of range");
  if (outer->shapes[slot] != SlotShape::Object)
    throw std::runtime_error("composition slot must accept modules");
  auto d = std::make_shared<FunctorDesc>();
  d->name = "Compose(" + outer->name + "," + std::to_string(slot) + "," + inner->name + ")";
  d->kind = FunctorKind::Composed;
  bool flip = outer->variances[slot] == Variance::Contravariant;
  for (int i = 0; i < slot; ++i) {
    d->shapes.push_back(outer->shapes[i]);
    d->variances.push_back(outer->variances[i]);
  }
  for (int i = 0; i < functor_arity(*inner); ++i) {
    d->shapes.push_back(inner->shapes[i]);
    Variance v = inner->variances[i];
    if (flip)
      v = v == Variance::Covariant ? Variance::Contravariant : Variance::Covariant;
    d->variances.push_back(v);
  }
  for (int i = slot + 1; i < functor_arity(*outer); ++i) {
    d->shapes.push_back(outer->shapes[i]);
    d->variances.push_back(outer->variances[i]);
  }
  d->outer = std::move(outer);
  d->slot = slot;
  d->inner = std::move(inner);
  return d;
}

namespace {

FunctorHandle derived_common(FunctorHandle base, int slot, int q, DerivedFlavor flavor,
                             Variance need, const char* tag) {
  if (slot < 0 || slot >= functor_arity(*base))
    throw std::runtime_error("derivation slot out of range");
  if (base->shapes[slot] != SlotShape::Object)
    throw std::runtime_error("derivation slot must accept modules");
  if (base->variances[slot] != need)
    throw std::runtime_error("variance mismatch in derivation of " + base->name);
  if (q < 0) throw std::runtime_error("derivation degree must be nonnegative");
  auto d = std::make_shared<FunctorDesc>();
  d->name = std::string(tag) + std::to_string(q) + "(" + base->name + "," +
            std::to_string(slot) + ")";
  d->shapes = base->shapes;
  d->variances = base->variances;
  d->kind = FunctorKind::Derived;
  d->base = std::move(base);
  d->slot = slot;
  d->degree = q;
  d->flavor = flavor;
  return d;
}

}  // namespace

FunctorHandle left_derived(FunctorHandle base, int slot, int q) {
  return derived_common(std::move(base), slot, q, DerivedFlavor::General,
                        Variance::Covariant, "L");
}

FunctorHandle right_derived_cofunctor(FunctorHandle base, int slot, int q) {
  return derived_common(std::move(base), slot, q, DerivedFlavor::General,
                        Variance::Contravariant, "R");
}

FunctorHandle left_derived_right_exact(FunctorHandle base, int slot, int q) {
  return derived_common(std::move(base), slot, q, DerivedFlavor::RightExactCovariant,
                        Variance::Covariant, "L");
}

FunctorHandle right_derived_left_exact(FunctorHandle base, int slot, int q) {
  return derived_common(std::move(base), slot, q, DerivedFlavor::LeftExactContravariant,
                        Variance::Contravariant, "R");
}

FunctorHandle curry_functor(FunctorHandle f, std::vector<std::optional<SlotValue>> fixed) {
  if (static_cast<int>(fixed.size()) != functor_arity(*f))
    throw std::runtime_error("curry needs one entry per slot");
  auto d = std::make_shared<FunctorDesc>();
  d->name = f->name + "|fixed";
  d->kind = FunctorKind::Curried;
  for (size_t i = 0; i < fixed.size(); ++i) {
    if (fixed[i]) {
      if (fixed[i]->shape != f->shapes[i])
        throw std::runtime_error("curried value has the wrong slot shape");
      continue;
    }
    d->shapes.push_back(f->shapes[i]);
    d->variances.push_back(f->variances[i]);
  }
  d->uncurried = std::move(f);
  d->fixed = std::move(fixed);
  return d;
}

int functor_arity(const FunctorDesc& f) { return static_cast<int>(f.shapes.size()); }

Variance functor_variance(const FunctorDesc& f, int slot) {
  if (slot < 0 || slot >= functor_arity(f)) throw std::runtime_error("slot out of range");
  return f.variances[slot];
}

AppliedObject functor_apply_basic(const FunctorHandle& f, const std::vector<SlotValue>& args) {
  if (f->kind != FunctorKind::Basic)
    throw std::runtime_error("functor_apply_basic needs a basic functor");
  check_args(*f, args);
  return apply_basic_at(*f, args);
}

Presentation functor_obj(const FunctorHandle& f, const std::vector<SlotValue>& args) {
  check_args(*f, args);
  switch (f->kind) {
    case FunctorKind::Basic:
      return apply_basic_at(*f, args).cleaned;
    case FunctorKind::Composed: {
      Presentation piece = functor_obj(f->inner, composed_inner_args(*f, args));
      return functor_obj(f->outer, composed_outer_args(*f, args, slot_object(piece)));
    }
    case FunctorKind::Derived:
      return derived_obj(*f, args);
    case FunctorKind::Curried:
      return functor_obj(f->uncurried, curried_full_args(*f, args));
  }
  throw std::logic_error("unreachable");
}

Morphism functor_map(const FunctorHandle& f, int active_slot, const SlotMorphism& m,
                     const std::vector<SlotValue>& args) {
  if (active_slot < 0 || active_slot >= functor_arity(*f))
    throw std::runtime_error("active slot out of range for " + f->name);
  if (m.from.shape != f->shapes[active_slot] || m.to.shape != f->shapes[active_slot])
    throw std::runtime_error("slot change shape mismatch for " + f->name);

  switch (f->kind) {
    case FunctorKind::Basic: {
      check_ladder(m);
      auto from_args = with_slot(args, active_slot, m.from);
      auto to_args = with_slot(args, active_slot, m.to);
      check_args(*f, from_args);
      check_args(*f, to_args);
      bool covariant = f->variances[active_slot] == Variance::Covariant;
      AppliedObject src = apply_basic_at(*f, covariant ? from_args : to_args);
      AppliedObject dst = apply_basic_at(*f, covariant ? to_args : from_args);
      Mat hull_map = f->basic_hull(active_slot, m, from_args, to_args);
      auto x = right_divide(mat_mul(src.parts.iota, hull_map), dst.parts.iota,
                            dst.parts.hull.relations);
      if (!x)
        throw std::runtime_error("hull square of " + f->name +
                                 " unexpectedly unsolvable");
      Mat conj = mat_mul(src.change.new_to_old, mat_mul(*x, dst.change.old_to_new));
      Morphism out{src.cleaned, dst.cleaned, std::move(conj)};
      if (morphism_validity(out) != MorphValidity::Valid)
        throw std::runtime_error("induced map of " + f->name + " is not a morphism");
      return out;
    }
    case FunctorKind::Composed: {
      int ni = functor_arity(*f->inner);
      if (active_slot >= f->slot && active_slot < f->slot + ni) {
        Morphism through = functor_map(f->inner, active_slot - f->slot, m,
                                       composed_inner_args(*f, args));
        Presentation placeholder = through.source;
        auto outer_args = composed_outer_args(*f, args, slot_object(placeholder));
        return functor_map(f->outer, f->slot, object_change(through), outer_args);
      }
      Presentation piece = functor_obj(f->inner, composed_inner_args(*f, args));
      auto outer_args = composed_outer_args(*f, args, slot_object(piece));
      int outer_slot = active_slot < f->slot ? active_slot : active_slot - ni + 1;
      return functor_map(f->outer, outer_slot, m, outer_args);
    }
    case FunctorKind::Derived:
      return derived_map(*f, active_slot, m, args);
    case FunctorKind::Curried: {
      auto full = curried_full_args(*f, args);
      return functor_map(f->uncurried, curried_underlying_slot(*f, active_slot), m, full);
    }
  }
  throw std::logic_error("unreachable");
}

Presentation functor_obj1(const FunctorHandle& f, const SlotValue& arg) {
  return functor_obj(f, {arg});
}

Morphism functor_map1(const FunctorHandle& f, const SlotMorphism& m) {
  std::vector<SlotValue> args = {m.from};
  return functor_map(f, 0, m, args);
}

namespace {

// The unary view of `base` with every slot but `slot` frozen from args.
struct UnaryView {
  const FunctorHandle& base;
  int slot;
  const std::vector<SlotValue>& args;

  Presentation obj(const Presentation& m) const {
    return functor_obj(base, with_slot(args, slot, slot_object(m)));
  }
  Morphism map(const Morphism& phi) const {
    return functor_map(base, slot, object_change(phi), args);
  }
};

// The two consecutive arrows whose defect is the degree-q derived object,
// with zero modules padding the ends of the resolved complex.
struct DerivedWindow {
  Morphism first;
  Morphism second;
};

DerivedWindow derived_window(const UnaryView& g, Variance var, const Resolution& res,
                             int q) {
  RingHandle ring = res.reduced.ring;
  if (var == Variance::Covariant) {
    Morphism a1 = g.map(res.boundary(q + 1));
    Morphism a2 = q == 0 ? zero_morphism(a1.target, zero_presentation(ring))
                         : g.map(res.boundary(q));
    return {std::move(a1), std::move(a2)};
  }
  Morphism a2 = g.map(res.boundary(q + 1));
  Morphism a1 = q == 0 ? zero_morphism(zero_presentation(ring), a2.source)
                       : g.map(res.boundary(q));
  return {std::move(a1), std::move(a2)};
}

Presentation derived_obj(const FunctorDesc& f, const std::vector<SlotValue>& args) {
  const Presentation& m = args[f.slot].object;
  UnaryView g{f.base, f.slot, args};
  Variance var = f.base->variances[f.slot];
  int q = f.degree;
  Resolution res = resolution_of_module(m, std::max(q, 1));
  DerivedWindow w = derived_window(g, var, res, q);

  switch (f.flavor) {
    case DerivedFlavor::General:
      return functor_obj1(defect_functor(), slot_pair(w.first, w.second));
    case DerivedFlavor::RightExactCovariant: {
      if (q == 0) return cokernel_of(w.first);
      AppliedObject ck =
          functor_apply_basic(cokernel_functor(), {slot_arrow(w.first)});
      Morphism induced = make_morphism(ck.cleaned, w.second.target,
                                       mat_mul(ck.change.new_to_old, w.second.matrix));
      return kernel_of(induced);
    }
    case DerivedFlavor::LeftExactContravariant: {
      if (q == 0) return kernel_of(w.second);
      KernelData kd = kernel_with_embedding(w.second);
      auto u = right_divide(w.first.matrix, kd.embedding.matrix,
                            w.second.source.relations);
      if (!u)
        throw std::runtime_error("derived shortcut: image does not land in the kernel");
      return cokernel_of(make_morphism(w.first.source, kd.pres, std::move(*u)));
    }
  }
  throw std::logic_error("unreachable");
}

// Change in a slot other than the derived one: the resolution stays put, so
// the ladder verticals are base-functor maps over each free level.
Morphism derived_map_fixed_module(const FunctorDesc& f, int active_slot,
                                  const SlotMorphism& m,
                                  const std::vector<SlotValue>& args) {
  const Presentation& dm = args[f.slot].object;
  Variance dvar = f.base->variances[f.slot];
  int q = f.degree;
  Resolution res = resolution_of_module(dm, std::max(q, 1));

  auto from_args = with_slot(args, active_slot, m.from);
  auto to_args = with_slot(args, active_slot, m.to);
  bool forward = f.base->variances[active_slot] == Variance::Covariant;
  UnaryView gs{f.base, f.slot, forward ? from_args : to_args};
  UnaryView gt{f.base, f.slot, forward ? to_args : from_args};
  DerivedWindow ws = derived_window(gs, dvar, res, q);
  DerivedWindow wt = derived_window(gt, dvar, res, q);

  auto level = [&](int i) {
    return functor_map(f.base, active_slot, m,
                       with_slot(args, f.slot, slot_object(res.free_module(i))));
  };
  Morphism up = level(q + 1);
  Morphism mid = level(q);
  RingHandle ring = dm.ring;
  Morphism down = q == 0 ? zero_morphism(zero_presentation(ring), zero_presentation(ring))
                         : level(q - 1);

  SlotMorphism ladder =
      dvar == Variance::Covariant
          ? pair_change(slot_pair(ws.first, ws.second), slot_pair(wt.first, wt.second),
                        up, mid, down)
          : pair_change(slot_pair(ws.first, ws.second), slot_pair(wt.first, wt.second),
                        down, mid, up);
  return functor_map1(defect_functor(), ladder);
}

Morphism derived_map(const FunctorDesc& f, int active_slot, const SlotMorphism& m,
                     const std::vector<SlotValue>& args) {
  if (active_slot != f.slot) return derived_map_fixed_module(f, active_slot, m, args);
  const Morphism& phi = m.verticals.at(0);
  UnaryView g{f.base, f.slot, args};
  Variance var = f.base->variances[f.slot];
  int q = f.degree;

  Resolution rs = resolution_of_module(phi.source, std::max(q, 1));
  Resolution rt = resolution_of_module(phi.target, std::max(q, 1));
  LiftedChainMap lift = lift_chain_map(phi, rs, rt, q + 1);

  DerivedWindow ws = derived_window(g, var, rs, q);
  DerivedWindow wt = derived_window(g, var, rt, q);

  Morphism up = g.map(lift.levels[q + 1]);
  Morphism mid = g.map(lift.levels[q]);
  RingHandle ring = phi.source.ring;
  Morphism down = q == 0 ? zero_morphism(zero_presentation(ring), zero_presentation(ring))
                         : g.map(lift.levels[q - 1]);

  SlotMorphism ladder =
      var == Variance::Covariant
          ? pair_change(slot_pair(ws.first, ws.second), slot_pair(wt.first, wt.second),
                        up, mid, down)
          : pair_change(slot_pair(wt.first, wt.second), slot_pair(ws.first, ws.second),
                        down, mid, up);
  return functor_map1(defect_functor(), ladder);
}

}  // namespace

Complex make_complex(std::vector<Presentation> objects, std::vector<Morphism> maps,
                     int low) {
  Complex c{std::move(objects), std::move(maps), low};
  if (!c.objects.empty() && c.maps.size() + 1 != c.objects.size())
    throw std::runtime_error("complex needs one map between consecutive objects");
  for (size_t i = 0; i < c.maps.size(); ++i) {
    if (c.maps[i].source.gens != c.objects[i + 1].gens ||
        c.maps[i].target.gens != c.objects[i].gens)
      throw std::runtime_error("complex maps do not chain");
  }
  return c;
}

bool complex_is_valid(const Complex& c) {
  for (size_t i = 0; i + 1 < c.maps.size(); ++i)
    if (!is_zero_morphism(compose(c.maps[i + 1], c.maps[i]))) return false;
  return true;
}

Presentation obj_slice(const Complex& c, int i) {
  if (i < 1 || i > static_cast<int>(c.objects.size()))
    throw std::runtime_error("complex object position out of range");
  return c.objects[i - 1];
}

Morphism mor_slice(const Complex& c, int i) {
  if (i < 1 || i > static_cast<int>(c.maps.size()))
    throw std::runtime_error("complex map position out of range");
  return c.maps[i - 1];
}

Complex functor_on_complex(const FunctorHandle& f, const Complex& c) {
  if (functor_arity(*f) != 1 || f->shapes[0] != SlotShape::Object)
    throw std::runtime_error("functor_on_complex needs a unary module functor");
  Complex out;
  out.low = c.low;
  int n = static_cast<int>(c.objects.size());
  if (f->variances[0] == Variance::Covariant) {
    for (const auto& obj : c.objects) out.objects.push_back(functor_obj1(f, slot_object(obj)));
    for (const auto& d : c.maps) out.maps.push_back(functor_map1(f, object_change(d)));
  } else {
    for (int i = n - 1; i >= 0; --i)
      out.objects.push_back(functor_obj1(f, slot_object(c.objects[i])));
    for (int i = static_cast<int>(c.maps.size()) - 1; i >= 0; --i)
      out.maps.push_back(functor_map1(f, object_change(c.maps[i])));
  }
  if (!complex_is_valid(out))
    throw std::runtime_error("functor image of a complex failed the zero-composite check");
  return out;
}

LiftedChainMap lift_chain_map(const Morphism& phi, Resolution source, Resolution target,
                              int levels) {
  if (levels < 0) throw std::runtime_error("lift level count must be nonnegative");
  LiftedChainMap out{std::move(source), std::move(target), {}};
  Morphism aug_s = out.source.augmentation();
  Morphism aug_t = out.target.augmentation();
  auto x0 = right_divide(mat_mul(aug_s.matrix, phi.matrix), aug_t.matrix,
                         phi.target.relations);
  if (!x0) throw std::runtime_error("chain lift failed at the free covers");
  out.levels.push_back(
      make_morphism(out.source.free_module(0), out.target.free_module(0), std::move(*x0)));
  for (int i = 1; i <= levels; ++i) {
    Mat pushed = mat_mul(out.source.map(i), out.levels.back().matrix);
    auto xi = right_divide(pushed, out.target.map(i), std::nullopt);
    if (!xi) throw std::runtime_error("chain lift failed at level " + std::to_string(i));
    out.levels.push_back(
        make_morphism(out.source.free_module(i), out.target.free_module(i), std::move(*xi)));
  }
  return out;
}

LiftedChainMap resolution_of_seq(const Morphism& phi, int q) {
  Resolution rs = resolution_of_module(phi.source, std::max(q, 1));
  Resolution rt = resolution_of_module(phi.target, std::max(q, 1));
  return lift_chain_map(phi, std::move(rs), std::move(rt), q);
}

}  // namespace fpmod
