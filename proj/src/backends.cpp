#include "fpmod/backends.hpp"

#include <stdexcept>

#include "internal.hpp"

namespace fpmod {

namespace detail {

namespace {

mpz_class fdiv_q(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Element inv_field(const Ring& r, const Element& e) {
  if (r.backend == Backend::Rationals) return mpq_class(1) / std::get<mpq_class>(e);
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), std::get<mpz_class>(e).get_mpz_t(), r.p.get_mpz_t()) == 0)
    throw std::runtime_error("pivot not invertible");
  return inv;
}

void sub_scaled_row(const Ring& ring, Mat& m, int dst, int src, const Element& f) {
  for (int j = 0; j < m.cols; ++j)
    m.at(dst, j) = sub(ring, m.at(dst, j), mul(ring, f, m.at(src, j)));
}

void swap_rows(Mat& m, int i, int k) {
  if (i == k) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(i, j), m.at(k, j));
}

}  // namespace

EchelonOut rref_field(const Mat& m) {
  const Ring& ring = *m.ring;
  EchelonOut out{m, Mat::identity(m.ring, m.rows), {}, 0};
  Mat& r = out.r;
  Mat& u = out.u;
  int pr = 0;
  for (int col = 0; col < r.cols && pr < r.rows; ++col) {
    int piv = -1;
    for (int i = pr; i < r.rows; ++i)
      if (!is_zero(r.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    swap_rows(r, pr, piv);
    swap_rows(u, pr, piv);
    Element inv = inv_field(ring, r.at(pr, col));
    for (int j = 0; j < r.cols; ++j) r.at(pr, j) = mul(ring, r.at(pr, j), inv);
    for (int j = 0; j < u.cols; ++j) u.at(pr, j) = mul(ring, u.at(pr, j), inv);
    for (int i = 0; i < r.rows; ++i) {
      if (i == pr || is_zero(r.at(i, col))) continue;
      Element f = r.at(i, col);
      sub_scaled_row(ring, r, i, pr, f);
      sub_scaled_row(ring, u, i, pr, f);
    }
    out.pivot_cols.push_back(col);
    ++pr;
  }
  out.rank = pr;
  return out;
}

EchelonOut hnf_int(const Mat& m) {
  const Ring& ring = *m.ring;
  EchelonOut out{m, Mat::identity(m.ring, m.rows), {}, 0};
  Mat& h = out.r;
  Mat& u = out.u;
  auto entry = [&](Mat& x, int i, int j) -> mpz_class& { return std::get<mpz_class>(x.at(i, j)); };
  auto negate_row = [&](int i) {
    for (int j = 0; j < h.cols; ++j) entry(h, i, j) = -entry(h, i, j);
    for (int j = 0; j < u.cols; ++j) entry(u, i, j) = -entry(u, i, j);
  };
  auto combine = [&](int dst, int src, const mpz_class& q) {
    // row dst -= q * row src
    if (q == 0) return;
    for (int j = 0; j < h.cols; ++j) entry(h, dst, j) -= q * entry(h, src, j);
    for (int j = 0; j < u.cols; ++j) entry(u, dst, j) -= q * entry(u, src, j);
  };
  (void)ring;
  int pr = 0;
  for (int col = 0; col < h.cols && pr < h.rows; ++col) {
    bool any = false;
    for (int i = pr; i < h.rows; ++i)
      if (entry(h, i, col) != 0) {
        any = true;
        break;
      }
    if (!any) continue;
    while (true) {
      int best = -1;
      for (int i = pr; i < h.rows; ++i) {
        if (entry(h, i, col) == 0) continue;
        if (best < 0 ||
            mpz_cmpabs(entry(h, i, col).get_mpz_t(), entry(h, best, col).get_mpz_t()) < 0)
          best = i;
      }
      if (entry(h, best, col) < 0) negate_row(best);
      swap_rows(h, pr, best);
      swap_rows(u, pr, best);
      bool done = true;
      for (int i = pr + 1; i < h.rows; ++i) {
        if (entry(h, i, col) == 0) continue;
        combine(i, pr, fdiv_q(entry(h, i, col), entry(h, pr, col)));
        if (entry(h, i, col) != 0) done = false;
      }
      if (done) break;
    }
    for (int i = 0; i < pr; ++i) combine(i, pr, fdiv_q(entry(h, i, col), entry(h, pr, col)));
    out.pivot_cols.push_back(col);
    ++pr;
  }
  out.rank = pr;
  return out;
}

}  // namespace detail

namespace {

using detail::EchelonOut;

EchelonOut echelon_of(const Mat& m) {
  if (m.ring->backend == Backend::Integers) return detail::hnf_int(m);
  return detail::rref_field(m);
}

Mat lift_mat(const Mat& m) {
  Mat out = m;
  out.ring = m.ring->base;
  return out;
}

Mat to_residue(const RingHandle& rring, const Mat& base_mat) {
  Mat out = base_mat;
  out.ring = rring;
  for (auto& e : out.a) e = rring->reduce(e);
  return out;
}

Mat ideal_block(const RingHandle& rring, int cols) {
  Mat col = Mat::zeros(rring->base, static_cast<int>(rring->ideal_basis.size()), 1);
  for (int i = 0; i < col.rows; ++i) col.at(i, 0) = rring->ideal_basis[i];
  return kronecker(Mat::identity(rring->base, cols), col);
}

BasisResult echelon_basis(const Mat& m) {
  EchelonOut e = echelon_of(m);
  return {row_range(e.r, 0, e.rank), row_range(e.u, 0, e.rank)};
}

ReductionResult echelon_decide_zero(const Mat& b, const Mat& m, bool cert) {
  const Ring& ring = *b.ring;
  bool integers = ring.backend == Backend::Integers;
  EchelonOut e = echelon_of(m);
  Mat basis = row_range(e.r, 0, e.rank);
  ReductionResult out;
  out.reduced = b;
  out.transform = Mat::zeros(b.ring, b.rows, e.rank);
  for (int i = 0; i < b.rows; ++i) {
    for (int k = 0; k < e.rank; ++k) {
      int p = e.pivot_cols[k];
      Element q;
      if (integers) {
        mpz_class qq;
        mpz_fdiv_q(qq.get_mpz_t(), std::get<mpz_class>(out.reduced.at(i, p)).get_mpz_t(),
                   std::get<mpz_class>(basis.at(k, p)).get_mpz_t());
        q = qq;
      } else {
        q = out.reduced.at(i, p);  // pivots are 1 after row reduction
      }
      if (is_zero(q)) continue;
      for (int j = 0; j < b.cols; ++j)
        out.reduced.at(i, j) = sub(ring, out.reduced.at(i, j), mul(ring, q, basis.at(k, j)));
      out.transform.at(i, k) = sub(ring, out.transform.at(i, k), q);
    }
  }
  out.is_zero = mat_is_zero(out.reduced);
  out.certified = cert;
  if (cert) {
    out.basis = basis;
    out.basis_transform = row_range(e.u, 0, e.rank);
  } else {
    out.transform = Mat::zeros(b.ring, 0, 0);
  }
  return out;
}

ReductionResult residue_decide_zero(const Mat& b, const Mat& m, bool cert) {
  RingHandle rring = b.ring;
  Mat stacked = mat_stack(lift_mat(m), ideal_block(rring, m.cols));
  ReductionResult base = decide_zero(lift_mat(b), stacked, true);
  std::vector<int> kept;
  Mat basis_res = to_residue(rring, base.basis);
  for (int i = 0; i < basis_res.rows; ++i)
    if (!row_is_zero(basis_res, i)) kept.push_back(i);
  ReductionResult out;
  out.reduced = to_residue(rring, base.reduced);
  out.is_zero = base.is_zero;
  out.certified = cert;
  if (cert) {
    out.basis = take_rows(basis_res, kept);
    out.transform = to_residue(rring, take_cols(base.transform, kept));
    out.basis_transform =
        to_residue(rring, col_range(take_rows(base.basis_transform, kept), 0, m.rows));
  }
  return out;
}

}  // namespace

bool basis_is_reduced(const Ring&) { return true; }

BasisResult basis_of_module(const Mat& m) {
  switch (m.ring->backend) {
    case Backend::Integers:
    case Backend::Rationals:
    case Backend::PrimeField:
      return echelon_basis(m);
    case Backend::Poly:
      return detail::gb_basis(m);
    case Backend::Residue: {
      RingHandle rring = m.ring;
      Mat stacked = mat_stack(lift_mat(m), ideal_block(rring, m.cols));
      BasisResult base = basis_of_module(stacked);
      Mat basis_res = to_residue(rring, base.basis);
      std::vector<int> kept;
      for (int i = 0; i < basis_res.rows; ++i)
        if (!row_is_zero(basis_res, i)) kept.push_back(i);
      return {take_rows(basis_res, kept),
              to_residue(rring, col_range(take_rows(base.transform, kept), 0, m.rows))};
    }
  }
  throw std::logic_error("unreachable");
}

ReductionResult decide_zero(const Mat& b, const Mat& m, bool with_certificate) {
  if (!rings_equal(*b.ring, *m.ring)) throw std::runtime_error("ring mismatch in decide_zero");
  if (b.cols != m.cols) throw std::runtime_error("shape mismatch in decide_zero");
  switch (b.ring->backend) {
    case Backend::Integers:
    case Backend::Rationals:
    case Backend::PrimeField:
      return echelon_decide_zero(b, m, with_certificate);
    case Backend::Poly:
      return detail::gb_decide_zero(b, m, with_certificate);
    case Backend::Residue:
      return residue_decide_zero(b, m, with_certificate);
  }
  throw std::logic_error("unreachable");
}

Mat syzygies_generators(const Mat& m, const std::optional<Mat>& modulo) {
  if (modulo) {
    if (!rings_equal(*m.ring, *modulo->ring) || modulo->cols != m.cols)
      throw std::runtime_error("shape mismatch in syzygies_generators");
    Mat stacked = mat_stack(m, *modulo);
    Mat k = syzygies_generators(stacked, std::nullopt);
    Mat proj = col_range(k, 0, m.rows);
    std::vector<int> kept;
    for (int i = 0; i < proj.rows; ++i)
      if (!row_is_zero(proj, i)) kept.push_back(i);
    return take_rows(proj, kept);
  }
  switch (m.ring->backend) {
    case Backend::Integers:
    case Backend::Rationals:
    case Backend::PrimeField: {
      EchelonOut e = echelon_of(m);
      return row_range(e.u, e.rank, e.u.rows);
    }
    case Backend::Poly:
      return detail::gb_syzygies(m);
    case Backend::Residue: {
      RingHandle rring = m.ring;
      Mat block = ideal_block(rring, m.cols);
      Mat base = syzygies_generators(lift_mat(m), block);
      Mat res = to_residue(rring, base);
      std::vector<int> kept;
      for (int i = 0; i < res.rows; ++i)
        if (!row_is_zero(res, i)) kept.push_back(i);
      return take_rows(res, kept);
    }
  }
  throw std::logic_error("unreachable");
}

RingHandle residue_class_ring(RingHandle base, const std::vector<Element>& ideal_generators) {
  if (!base) throw std::runtime_error("residue ring needs a base ring");
  if (base->backend == Backend::Residue)
    throw std::runtime_error(
        "nested residue rings are not supported; extend the ideal over the original base instead");
  Mat col = Mat::zeros(base, static_cast<int>(ideal_generators.size()), 1);
  for (int i = 0; i < col.rows; ++i) col.at(i, 0) = ideal_generators[i];
  Mat basis = basis_of_module(col).basis;

  auto r = std::make_shared<Ring>();
  r->backend = Backend::Residue;
  r->base = base;
  r->ideal = ideal_generators;
  for (int i = 0; i < basis.rows; ++i) r->ideal_basis.push_back(basis.at(i, 0));
  Mat bcol = basis;
  r->reduce = [base, bcol](const Element& e) -> Element {
    if (bcol.rows == 0) return e;
    Mat one = Mat::zeros(base, 1, 1);
    one.at(0, 0) = e;
    return decide_zero(one, bcol).reduced.at(0, 0);
  };
  if (base->theta) {
    r->theta = [](const Ring& rr, const Element& e) {
      return rr.reduce(rr.base->theta(*rr.base, e));
    };
  }
  return r;
}

std::optional<Element> try_invert(const RingHandle& r, const Element& e) {
  Mat one = Mat::zeros(r, 1, 1);
  one.at(0, 0) = ring_one(*r);
  Mat me = Mat::zeros(r, 1, 1);
  me.at(0, 0) = e;
  ReductionResult red = decide_zero(one, me, true);
  if (!red.is_zero) return std::nullopt;
  Mat cc = mat_mul(red.transform, red.basis_transform);
  Element inv = neg(*r, cc.at(0, 0));
  if (!elements_equal(mul(*r, inv, e), ring_one(*r)))
    throw std::runtime_error("inverse certificate failed to verify");
  return inv;
}

}  // namespace fpmod
