#include "fpmod/homology.hpp"

#include <stdexcept>

namespace fpmod {

PullbackData pullback(const Morphism& phi, const Morphism& beta) {
  if (!rings_equal(*phi.source.ring, *beta.source.ring))
    throw std::runtime_error("pullback legs live over different rings");
  if (!presentations_equal(phi.target, beta.target))
    throw std::runtime_error("pullback legs need a common target");
  const RingHandle& ring = phi.source.ring;
  int ga = phi.source.gens, gb = beta.source.gens;
  Presentation sum = make_presentation(
      ring, ga + gb, diag_stack(phi.source.relations, beta.source.relations));
  Mat m = mat_stack(phi.matrix, mat_neg(beta.matrix));
  Morphism gamma = make_morphism(sum, phi.target, std::move(m));
  KernelData kd = kernel_with_embedding(gamma);
  Mat e = kd.embedding.matrix;
  Morphism p1 = make_morphism(kd.pres, phi.source, col_range(e, 0, ga));
  Morphism p2 = make_morphism(kd.pres, beta.source, col_range(e, ga, ga + gb));
  return {std::move(kd.pres), std::move(p1), std::move(p2)};
}

bool is_short_exact(const Morphism& mono, const Morphism& epi) {
  if (!rings_equal(*mono.source.ring, *epi.target.ring)) return false;
  if (mono.target.gens != epi.source.gens) return false;
  if (!presentations_equal(mono.target, epi.source)) return false;
  if (!is_zero_morphism(compose(mono, epi))) return false;
  return is_zero_module(kernel_of(mono)) && is_zero_module(cokernel_of(epi)) &&
         is_zero_module(defect_of(mono, epi));
}

ResolvedSes resolve_short_exact_seq(const Morphism& mono, const Morphism& epi,
                                    int length) {
  if (length < 0) throw std::runtime_error("resolution length must be nonnegative");
  if (!is_short_exact(mono, epi))
    throw std::runtime_error("resolve_short_exact_seq needs a short exact sequence");
  const RingHandle& ring = mono.source.ring;
  const Presentation& b = mono.target;

  ResolvedSes out;
  out.left = resolution_of_module(mono.source, length);
  out.right = resolution_of_module(epi.target, length);

  Morphism aug_a = out.left.augmentation();
  Morphism aug_c = out.right.augmentation();
  Mat am = mat_mul(aug_a.matrix, mono.matrix);
  auto w0 = right_divide(aug_c.matrix, epi.matrix, epi.target.relations);
  if (!w0) throw std::runtime_error("failed to lift the free cover through the surjection");
  Mat eta = mat_stack(am, *w0);

  Resolution mid;
  mid.module = b;
  mid.change.new_to_old = eta;
  auto section = right_divide(Mat::identity(ring, b.gens), eta, b.relations);
  if (!section) throw std::runtime_error("middle free cover misses part of the module");
  mid.change.old_to_new = *section;

  int top = length + 1;
  std::vector<Mat> xs;
  for (int i = 1; i <= top; ++i) {
    if (i > 1 && mid.maps.back().rows == 0) break;
    Mat da = out.left.map(i);
    Mat dc = out.right.map(i);
    Mat rhs = mat_neg(mat_mul(dc, i == 1 ? *w0 : xs.back()));
    Mat divisor = (i == 1) ? am : out.left.map(i - 1);
    std::optional<Mat> modulo =
        (i == 1) ? std::optional<Mat>(b.relations) : std::nullopt;
    auto xi = right_divide(rhs, divisor, modulo);
    if (!xi) throw std::runtime_error("horseshoe correction block has no solution");
    Mat dB = mat_stack(mat_concat(da, Mat::zeros(ring, da.rows, dc.cols)),
                       mat_concat(*xi, dc));
    mid.maps.push_back(std::move(dB));
    xs.push_back(*xi);
  }
  mid.reduced = make_presentation(ring, eta.rows, mid.maps[0]);
  out.middle = std::move(mid);

  for (int i = 0; i <= top; ++i) {
    int a = out.left.rank(i), c = out.right.rank(i);
    Mat inc = mat_concat(Mat::identity(ring, a), Mat::zeros(ring, a, c));
    Mat prj = mat_stack(Mat::zeros(ring, a, c), Mat::identity(ring, c));
    out.include.push_back(make_morphism(out.left.free_module(i),
                                        out.middle.free_module(i), std::move(inc)));
    out.project.push_back(make_morphism(out.middle.free_module(i),
                                        out.right.free_module(i), std::move(prj)));
  }
  return out;
}

std::vector<Presentation> complex_homology(const Complex& c) {
  std::vector<Presentation> out;
  int n = static_cast<int>(c.objects.size());
  if (n == 0) return out;
  const RingHandle& ring = c.objects[0].ring;
  for (int i = 0; i < n; ++i) {
    Morphism in = (i < static_cast<int>(c.maps.size()))
                      ? c.maps[i]
                      : zero_morphism(zero_presentation(ring), c.objects[i]);
    Morphism outm = (i == 0) ? zero_morphism(c.objects[0], zero_presentation(ring))
                             : c.maps[i - 1];
    out.push_back(defect_of(in, outm));
  }
  return out;
}

bool complex_exact_interior(const Complex& c) {
  for (size_t i = 1; i + 1 < c.objects.size(); ++i)
    if (!is_zero_module(defect_of(c.maps[i], c.maps[i - 1]))) return false;
  return true;
}

namespace {

// Functor image of one resolution tower, levels 0..top (top >= 1).
struct Tower {
  std::vector<Presentation> obj;
  std::vector<Morphism> bnd;  // bnd[i-1] is the image of boundary i

  const Morphism& d(int i) const { return bnd[i - 1]; }
};

Tower apply_tower(const FunctorHandle& f, const Resolution& r, int top,
                  bool covariant) {
  Tower t;
  for (int i = 1; i <= top; ++i)
    t.bnd.push_back(functor_map1(f, object_change(r.boundary(i))));
  t.obj.push_back(covariant ? t.bnd[0].target : t.bnd[0].source);
  for (int i = 1; i <= top; ++i)
    t.obj.push_back(covariant ? t.bnd[i - 1].source : t.bnd[i - 1].target);
  return t;
}

Mat class_embedding(const AppliedObject& h) {
  return mat_mul(h.change.new_to_old, h.parts.iota);
}

Morphism checked_connecting(Presentation src, Presentation dst, Mat v) {
  Morphism delta = make_morphism(std::move(src), std::move(dst), std::move(v));
  if (morphism_validity(delta) != MorphValidity::Valid)
    throw std::runtime_error("connecting map is not a morphism");
  return delta;
}

void audit_exactness(const Complex& les, int skip) {
  if (!complex_is_valid(les))
    throw std::runtime_error("long exact sequence composites do not vanish");
  std::vector<Presentation> h = complex_homology(les);
  for (int i = 0; i < static_cast<int>(h.size()); ++i) {
    if (i == skip) continue;
    if (!is_zero_module(h[i]))
      throw std::runtime_error("long exact sequence failed its exactness audit");
  }
}

void check_les_functor(const FunctorHandle& f, Variance need) {
  if (functor_arity(*f) != 1 || f->shapes[0] != SlotShape::Object ||
      functor_variance(*f, 0) != need)
    throw std::runtime_error(
        "long exact sequence needs a unary module functor of matching variance");
}

}  // namespace

Complex long_exact_homology_seq(const FunctorHandle& f, const Morphism& mono,
                                const Morphism& epi, int q_max) {
  check_les_functor(f, Variance::Covariant);
  if (q_max < 0) throw std::runtime_error("degree bound must be nonnegative");
  ResolvedSes rs = resolve_short_exact_seq(mono, epi, q_max);
  const RingHandle& ring = mono.source.ring;
  int top = q_max + 1;

  Tower ta = apply_tower(f, rs.left, top, true);
  Tower tb = apply_tower(f, rs.middle, top, true);
  Tower tc = apply_tower(f, rs.right, top, true);
  std::vector<Morphism> fi, fp;
  for (int i = 0; i <= top; ++i) {
    fi.push_back(functor_map1(f, object_change(rs.include[i])));
    fp.push_back(functor_map1(f, object_change(rs.project[i])));
  }

  auto pair_at = [&](const Tower& t, int q) {
    Morphism out = q == 0 ? zero_morphism(t.obj[0], zero_presentation(ring))
                          : t.d(q);
    return slot_pair(t.d(q + 1), std::move(out));
  };

  std::vector<AppliedObject> ha, hb, hc;
  for (int q = 0; q <= q_max; ++q) {
    ha.push_back(functor_apply_basic(defect_functor(), {pair_at(ta, q)}));
    hb.push_back(functor_apply_basic(defect_functor(), {pair_at(tb, q)}));
    hc.push_back(functor_apply_basic(defect_functor(), {pair_at(tc, q)}));
  }

  Morphism zz = zero_morphism(zero_presentation(ring), zero_presentation(ring));
  auto induced = [&](const Tower& from, const Tower& to,
                     const std::vector<Morphism>& col, int q) {
    Morphism v3 = q == 0 ? zz : col[q - 1];
    return functor_map1(defect_functor(), pair_change(pair_at(from, q), pair_at(to, q),
                                                      col[q + 1], col[q], v3));
  };
  auto connecting = [&](int q) {  // H_q of the right module -> H_{q-1} of the left
    Mat e = class_embedding(hc[q]);
    Mat modc = mat_stack(tc.d(q + 1).matrix, tc.obj[q].relations);
    auto y = right_divide(e, fp[q].matrix, modc);
    if (!y) throw std::runtime_error("snake chase failed on the projection side");
    Mat w = mat_mul(*y, tb.d(q).matrix);
    auto x = right_divide(w, fi[q - 1].matrix, tb.obj[q - 1].relations);
    if (!x) throw std::runtime_error("snake chase failed on the inclusion side");
    Mat ea = class_embedding(ha[q - 1]);
    Mat moda = mat_stack(ta.d(q).matrix, ta.obj[q - 1].relations);
    auto v = right_divide(*x, ea, moda);
    if (!v) throw std::runtime_error("snake chase failed to land in homology classes");
    return checked_connecting(hc[q].cleaned, ha[q - 1].cleaned, *v);
  };

  std::vector<Presentation> objects;
  std::vector<Morphism> maps;
  for (int q = 0; q <= q_max; ++q) {
    objects.push_back(hc[q].cleaned);
    objects.push_back(hb[q].cleaned);
    objects.push_back(ha[q].cleaned);
    maps.push_back(induced(tb, tc, fp, q));
    maps.push_back(induced(ta, tb, fi, q));
    if (q < q_max) maps.push_back(connecting(q + 1));
  }
  Complex les = make_complex(std::move(objects), std::move(maps), 0);
  audit_exactness(les, static_cast<int>(les.objects.size()) - 1);
  return les;
}

Complex long_exact_cohomology_seq(const FunctorHandle& f, const Morphism& mono,
                                  const Morphism& epi, int q_max) {
  check_les_functor(f, Variance::Contravariant);
  if (q_max < 0) throw std::runtime_error("degree bound must be nonnegative");
  ResolvedSes rs = resolve_short_exact_seq(mono, epi, q_max);
  const RingHandle& ring = mono.source.ring;
  int top = q_max + 1;

  Tower ta = apply_tower(f, rs.left, top, false);
  Tower tb = apply_tower(f, rs.middle, top, false);
  Tower tc = apply_tower(f, rs.right, top, false);
  std::vector<Morphism> fi, fp;  // fi[i]: image of include, now into the left tower
  for (int i = 0; i <= top; ++i) {
    fi.push_back(functor_map1(f, object_change(rs.include[i])));
    fp.push_back(functor_map1(f, object_change(rs.project[i])));
  }

  auto pair_at = [&](const Tower& t, int q) {
    Morphism in = q == 0 ? zero_morphism(zero_presentation(ring), t.obj[0])
                         : t.d(q);
    return slot_pair(std::move(in), t.d(q + 1));
  };

  std::vector<AppliedObject> ha, hb, hc;
  for (int q = 0; q <= q_max; ++q) {
    ha.push_back(functor_apply_basic(defect_functor(), {pair_at(ta, q)}));
    hb.push_back(functor_apply_basic(defect_functor(), {pair_at(tb, q)}));
    hc.push_back(functor_apply_basic(defect_functor(), {pair_at(tc, q)}));
  }

  Morphism zz = zero_morphism(zero_presentation(ring), zero_presentation(ring));
  auto induced = [&](const Tower& from, const Tower& to,
                     const std::vector<Morphism>& col, int q) {
    Morphism v1 = q == 0 ? zz : col[q - 1];
    return functor_map1(defect_functor(), pair_change(pair_at(from, q), pair_at(to, q),
                                                      v1, col[q], col[q + 1]));
  };
  auto connecting = [&](int q) {  // H^q of the left module -> H^{q+1} of the right
    Mat e = class_embedding(ha[q]);
    Mat moda = q == 0 ? ta.obj[0].relations
                      : mat_stack(ta.d(q).matrix, ta.obj[q].relations);
    auto y = right_divide(e, fi[q].matrix, moda);
    if (!y) throw std::runtime_error("snake chase failed on the inclusion side");
    Mat w = mat_mul(*y, tb.d(q + 1).matrix);
    auto x = right_divide(w, fp[q + 1].matrix, tb.obj[q + 1].relations);
    if (!x) throw std::runtime_error("snake chase failed on the projection side");
    Mat ec = class_embedding(hc[q + 1]);
    Mat modc = mat_stack(tc.d(q + 1).matrix, tc.obj[q + 1].relations);
    auto v = right_divide(*x, ec, modc);
    if (!v) throw std::runtime_error("snake chase failed to land in homology classes");
    return checked_connecting(ha[q].cleaned, hc[q + 1].cleaned, *v);
  };

  std::vector<Presentation> objects;
  std::vector<Morphism> maps;
  for (int k = 0; k <= q_max; ++k) {
    int q = q_max - k;
    objects.push_back(ha[q].cleaned);
    objects.push_back(hb[q].cleaned);
    objects.push_back(hc[q].cleaned);
    maps.push_back(induced(tb, ta, fi, q));
    maps.push_back(induced(tc, tb, fp, q));
    if (k < q_max) maps.push_back(connecting(q - 1));
  }
  Complex les = make_complex(std::move(objects), std::move(maps), 0);
  audit_exactness(les, 0);
  return les;
}

}  // namespace fpmod
