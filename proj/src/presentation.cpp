#include "fpmod/presentation.hpp"

#include <sstream>
#include <stdexcept>

namespace fpmod {

Presentation make_presentation(RingHandle r, int gens, Mat relations) {
  if (gens < 0) throw std::runtime_error("negative generator count");
  if (relations.cols != gens)
    throw std::runtime_error("relation matrix must have one column per generator");
  if (!rings_equal(*r, *relations.ring))
    throw std::runtime_error("relation matrix ring does not match the presentation ring");
  return {std::move(r), gens, std::move(relations)};
}

Presentation free_presentation(RingHandle r, int gens) {
  Mat rel = Mat::zeros(r, 0, gens);
  return {std::move(r), gens, std::move(rel)};
}

Presentation zero_presentation(RingHandle r) { return free_presentation(std::move(r), 0); }

bool presentations_equal(const Presentation& a, const Presentation& b) {
  if (!rings_equal(*a.ring, *b.ring))
    throw std::runtime_error("presentations over different rings are not comparable");
  if (a.gens != b.gens) return false;
  return decide_zero(a.relations, b.relations).is_zero &&
         decide_zero(b.relations, a.relations).is_zero;
}

bool is_zero_module(const Presentation& p) {
  if (p.gens == 0) return true;
  return decide_zero(Mat::identity(p.ring, p.gens), p.relations).is_zero;
}

Morphism make_morphism(Presentation source, Presentation target, Mat matrix) {
  Morphism phi{std::move(source), std::move(target), std::move(matrix)};
  if (morphism_validity(phi) == MorphValidity::ShapeMismatch)
    throw std::runtime_error("morphism matrix shape does not match source and target");
  return phi;
}

MorphValidity morphism_validity(const Morphism& phi) {
  if (phi.matrix.rows != phi.source.gens || phi.matrix.cols != phi.target.gens)
    return MorphValidity::ShapeMismatch;
  if (!rings_equal(*phi.source.ring, *phi.target.ring) ||
      !rings_equal(*phi.source.ring, *phi.matrix.ring))
    return MorphValidity::ShapeMismatch;
  Mat pushed = mat_mul(phi.source.relations, phi.matrix);
  if (!decide_zero(pushed, phi.target.relations).is_zero) return MorphValidity::NotInduced;
  return MorphValidity::Valid;
}

Morphism identity_morphism(const Presentation& p) {
  return {p, p, Mat::identity(p.ring, p.gens)};
}

Morphism zero_morphism(Presentation source, Presentation target) {
  Mat m = Mat::zeros(source.ring, source.gens, target.gens);
  return {std::move(source), std::move(target), std::move(m)};
}

Morphism compose(const Morphism& first, const Morphism& second) {
  if (first.target.gens != second.source.gens ||
      !rings_equal(*first.target.ring, *second.source.ring))
    throw std::runtime_error("morphisms do not compose: target and source disagree");
  return {first.source, second.target, mat_mul(first.matrix, second.matrix)};
}

bool morphisms_equal(const Morphism& a, const Morphism& b) {
  if (a.matrix.rows != b.matrix.rows || a.matrix.cols != b.matrix.cols)
    throw std::runtime_error("morphisms with different shapes are not comparable");
  return decide_zero(mat_sub(a.matrix, b.matrix), a.target.relations).is_zero;
}

bool is_zero_morphism(const Morphism& phi) {
  return decide_zero(phi.matrix, phi.target.relations).is_zero;
}

BaseChange identity_change(const Presentation& p) {
  return {Mat::identity(p.ring, p.gens), Mat::identity(p.ring, p.gens)};
}

BaseChange compose_changes(const BaseChange& first, const BaseChange& second) {
  return {mat_mul(first.old_to_new, second.old_to_new),
          mat_mul(second.new_to_old, first.new_to_old)};
}

std::pair<Presentation, BaseChange> eliminate_units(const Presentation& p) {
  Presentation cur = p;
  BaseChange total = identity_change(p);
  while (true) {
    int ui = -1, uj = -1;
    Element inv = ring_zero(*cur.ring);
    for (int j = 0; j < cur.gens && ui < 0; ++j)
      for (int i = 0; i < cur.relations.rows; ++i) {
        const Element& e = cur.relations.at(i, j);
        if (is_zero(e)) continue;
        auto maybe = try_invert(cur.ring, e);
        if (maybe) {
          ui = i;
          uj = j;
          inv = *maybe;
          break;
        }
      }
    if (ui < 0) break;

    int n = cur.gens;
    Mat otn = Mat::zeros(cur.ring, n, n - 1);
    for (int k = 0; k < n; ++k) {
      if (k == uj) continue;
      int c = k < uj ? k : k - 1;
      otn.at(k, c) = ring_one(*cur.ring);
      otn.at(uj, c) = neg(*cur.ring, mul(*cur.ring, inv, cur.relations.at(ui, k)));
    }
    Mat nto = drop_row(Mat::identity(cur.ring, n), uj);
    Mat newrel = mat_mul(drop_row(cur.relations, ui), otn);
    cur = Presentation{cur.ring, n - 1, newrel};
    total = compose_changes(total, {otn, nto});
  }
  return {cur, total};
}

std::pair<Presentation, BaseChange> better_generators(const Presentation& p) {
  Presentation cur = p;
  BaseChange total = identity_change(p);
  for (int guard = 0; guard <= p.gens + 2; ++guard) {
    Presentation prev = cur;
    auto [elim, ch] = eliminate_units(cur);
    cur = elim;
    total = compose_changes(total, ch);

    std::vector<int> keep;
    for (int i = 0; i < cur.relations.rows; ++i) {
      if (row_is_zero(cur.relations, i)) continue;
      bool dup = false;
      for (int k : keep) {
        bool same = true;
        for (int j = 0; j < cur.relations.cols && same; ++j)
          same = elements_equal(cur.relations.at(i, j), cur.relations.at(k, j));
        if (same) {
          dup = true;
          break;
        }
      }
      if (!dup) keep.push_back(i);
    }
    cur.relations = take_rows(cur.relations, keep);

    if (basis_is_reduced(*cur.ring)) cur.relations = basis_of_module(cur.relations).basis;

    if (cur.gens == prev.gens && mats_equal(cur.relations, prev.relations))
      return {cur, total};
  }
  throw std::runtime_error("generator reduction failed to stabilize");
}

Decomposition canonical_decomposition(const Presentation& p) {
  const Ring& r = *p.ring;
  switch (r.backend) {
    case Backend::Rationals:
    case Backend::PrimeField: {
      BasisResult b = basis_of_module(p.relations);
      return {{}, p.gens - b.basis.rows};
    }
    case Backend::Integers: {
      SmithResult s = smith_normal_form(p.relations);
      Decomposition out;
      int nonzero = 0;
      int n = std::min(s.d.rows, s.d.cols);
      for (int k = 0; k < n; ++k) {
        const mpz_class& d = std::get<mpz_class>(s.d.at(k, k));
        if (d == 0) continue;
        ++nonzero;
        if (d != 1) out.factors.push_back(d);
      }
      out.rank = p.gens - nonzero;
      return out;
    }
    case Backend::Residue: {
      if (r.base->backend != Backend::Integers)
        throw std::runtime_error("canonical decomposition needs integer or field coefficients");
      mpz_class g = r.ideal_basis.empty() ? mpz_class(0)
                                          : std::get<mpz_class>(r.ideal_basis[0]);
      Mat lifted = p.relations;
      lifted.ring = r.base;
      Mat gcol = Mat::zeros(r.base, g == 0 ? 0 : 1, 1);
      if (g != 0) gcol.at(0, 0) = g;
      Mat stacked = mat_stack(lifted, kronecker(Mat::identity(r.base, p.gens), gcol));
      SmithResult s = smith_normal_form(stacked);
      Decomposition out;
      int nonzero = 0;
      int n = std::min(s.d.rows, s.d.cols);
      for (int k = 0; k < n; ++k) {
        const mpz_class& d = std::get<mpz_class>(s.d.at(k, k));
        if (d == 0) continue;
        ++nonzero;
        if (g == 0) {
          if (d != 1) out.factors.push_back(d);
        } else if (d % g == 0) {
          ++out.rank;  // a full copy of the ring
        } else if (d != 1) {
          out.factors.push_back(d);
        }
      }
      if (g == 0) out.rank = p.gens - nonzero;
      return out;
    }
    case Backend::Poly:
      throw std::runtime_error("canonical decomposition needs integer or field coefficients");
  }
  throw std::logic_error("unreachable");
}

std::string decomposition_to_string(const Decomposition& d) {
  std::ostringstream os;
  os << "rank " << d.rank << " factors [";
  for (size_t i = 0; i < d.factors.size(); ++i) {
    if (i) os << ", ";
    os << d.factors[i].get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace fpmod
