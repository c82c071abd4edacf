#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "internal.hpp"

// Groebner machinery for row modules over a polynomial ring, position-over-term
// order with earlier columns greater. Transforms are tracked so every result
// carries an exact expression in the input rows.

namespace fpmod::detail {

namespace {

using PRow = std::vector<PolyVal>;

struct Lead {
  int col = -1;
  mpq_class coeff;
  std::vector<unsigned> exps;
};

Lead lead_of(const PRow& v) {
  for (int j = 0; j < static_cast<int>(v.size()); ++j)
    if (!v[j].terms.empty()) return {j, v[j].terms[0].coeff, v[j].terms[0].exps};
  return {};
}

bool row_zero(const PRow& v) {
  for (const auto& p : v)
    if (!p.terms.empty()) return false;
  return true;
}

bool exp_divides(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<unsigned> exp_sub(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  std::vector<unsigned> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::vector<unsigned> exp_lcm(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  std::vector<unsigned> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

// Position-over-term comparison of module terms; positive when the first is greater.
int term_cmp(const Ring& r, int ca, const std::vector<unsigned>& ma, int cb,
             const std::vector<unsigned>& mb) {
  if (ca != cb) return ca < cb ? 1 : -1;
  return monomial_cmp(r, ma, mb);
}

// dst += c * x^mon * src
void row_add_scaled(const Ring& r, PRow& dst, const PRow& src, const mpq_class& c,
                    const std::vector<unsigned>& mon) {
  for (size_t j = 0; j < dst.size(); ++j)
    dst[j] = poly_add(r, dst[j], poly_mul_term(r, src[j], c, mon));
}

struct NFOut {
  PRow nf;
  std::vector<PolyVal> q;  // input = nf + sum q[k] * basis[k]
};

NFOut normal_form(const Ring& r, PRow f, const std::vector<PRow>& basis) {
  NFOut out;
  out.nf.assign(f.size(), PolyVal{});
  out.q.assign(basis.size(), PolyVal{});
  while (true) {
    Lead lf = lead_of(f);
    if (lf.col < 0) break;
    int k = -1;
    for (size_t i = 0; i < basis.size(); ++i) {
      Lead lg = lead_of(basis[i]);
      if (lg.col == lf.col && exp_divides(lg.exps, lf.exps)) {
        k = static_cast<int>(i);
        break;
      }
    }
    if (k >= 0) {
      Lead lg = lead_of(basis[k]);
      mpq_class qc = coeff_normalize(r, lf.coeff * coeff_inv(r, lg.coeff));
      std::vector<unsigned> qm = exp_sub(lf.exps, lg.exps);
      row_add_scaled(r, f, basis[k], coeff_normalize(r, -qc), qm);
      out.q[k] = poly_add(r, out.q[k], poly_from_term(qc, qm));
    } else {
      out.nf[lf.col] = poly_add(r, out.nf[lf.col], poly_from_term(lf.coeff, lf.exps));
      f[lf.col].terms.erase(f[lf.col].terms.begin());
    }
  }
  return out;
}

struct GBOut {
  std::vector<PRow> g;
  std::vector<PRow> c;  // combos over the original rows
  int orig_rows = 0;
  int cols = 0;
};

PRow unit_combo(const Ring& r, int len, int pos) {
  PRow c(len);
  c[pos] = poly_from_term(coeff_normalize(r, mpq_class(1)), std::vector<unsigned>(r.vars.size(), 0));
  return c;
}

GBOut buchberger_reduced(const Ring& r, const Mat& m) {
  GBOut out;
  out.orig_rows = m.rows;
  out.cols = m.cols;
  auto& G = out.g;
  auto& C = out.c;
  for (int i = 0; i < m.rows; ++i) {
    PRow v(m.cols);
    for (int j = 0; j < m.cols; ++j) v[j] = std::get<PolyVal>(m.at(i, j));
    if (row_zero(v)) continue;
    G.push_back(std::move(v));
    C.push_back(unit_combo(r, m.rows, i));
  }

  struct Pair {
    int i, j;
    int col;
    std::vector<unsigned> lcm;
  };
  std::vector<Pair> pairs;
  auto add_pairs = [&](int n) {
    Lead ln = lead_of(G[n]);
    for (int i = 0; i < n; ++i) {
      Lead li = lead_of(G[i]);
      if (li.col == ln.col) pairs.push_back({i, n, ln.col, exp_lcm(li.exps, ln.exps)});
    }
  };
  for (int n = 0; n < static_cast<int>(G.size()); ++n) add_pairs(n);

  while (!pairs.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      int c = term_cmp(r, pairs[k].col, pairs[k].lcm, pairs[best].col, pairs[best].lcm);
      if (c < 0 || (c == 0 && std::make_pair(pairs[k].i, pairs[k].j) <
                                  std::make_pair(pairs[best].i, pairs[best].j)))
        best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + best);

    Lead li = lead_of(G[p.i]);
    Lead lj = lead_of(G[p.j]);
    PRow s(out.cols);
    PRow sc(out.orig_rows);
    row_add_scaled(r, s, G[p.i], coeff_inv(r, li.coeff), exp_sub(p.lcm, li.exps));
    row_add_scaled(r, sc, C[p.i], coeff_inv(r, li.coeff), exp_sub(p.lcm, li.exps));
    row_add_scaled(r, s, G[p.j], coeff_normalize(r, -coeff_inv(r, lj.coeff)),
                   exp_sub(p.lcm, lj.exps));
    row_add_scaled(r, sc, C[p.j], coeff_normalize(r, -coeff_inv(r, lj.coeff)),
                   exp_sub(p.lcm, lj.exps));

    NFOut nf = normal_form(r, std::move(s), G);
    if (row_zero(nf.nf)) continue;
    for (size_t k = 0; k < G.size(); ++k)
      if (!nf.q[k].terms.empty())
        for (size_t t = 0; t < sc.size(); ++t)
          sc[t] = poly_add(r, sc[t], poly_neg(r, poly_mul(r, nf.q[k], C[k][t])));
    G.push_back(std::move(nf.nf));
    C.push_back(std::move(sc));
    add_pairs(static_cast<int>(G.size()) - 1);
  }

  // Minimal leads.
  std::vector<char> removed(G.size(), 0);
  for (size_t i = 0; i < G.size(); ++i) {
    Lead li = lead_of(G[i]);
    for (size_t j = 0; j < G.size(); ++j) {
      if (i == j || removed[j]) continue;
      Lead lj = lead_of(G[j]);
      if (lj.col != li.col || !exp_divides(lj.exps, li.exps)) continue;
      if (lj.exps != li.exps || j < i) {
        removed[i] = 1;
        break;
      }
    }
  }
  std::vector<PRow> G2, C2;
  for (size_t i = 0; i < G.size(); ++i)
    if (!removed[i]) {
      G2.push_back(std::move(G[i]));
      C2.push_back(std::move(C[i]));
    }
  G = std::move(G2);
  C = std::move(C2);

  // Tail reduction.
  for (size_t k = 0; k < G.size(); ++k) {
    std::vector<PRow> others;
    std::vector<size_t> omap;
    for (size_t t = 0; t < G.size(); ++t)
      if (t != k) {
        others.push_back(G[t]);
        omap.push_back(t);
      }
    NFOut nf = normal_form(r, G[k], others);
    G[k] = std::move(nf.nf);
    for (size_t t = 0; t < others.size(); ++t)
      if (!nf.q[t].terms.empty())
        for (size_t u = 0; u < C[k].size(); ++u)
          C[k][u] = poly_add(r, C[k][u], poly_neg(r, poly_mul(r, nf.q[t], C[omap[t]][u])));
  }

  // Monic, sorted by descending lead.
  for (size_t k = 0; k < G.size(); ++k) {
    Lead lk = lead_of(G[k]);
    mpq_class inv = coeff_inv(r, lk.coeff);
    std::vector<unsigned> one(r.vars.size(), 0);
    for (auto& e : G[k]) e = poly_mul_term(r, e, inv, one);
    for (auto& e : C[k]) e = poly_mul_term(r, e, inv, one);
  }
  std::vector<size_t> order(G.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    Lead la = lead_of(G[a]);
    Lead lb = lead_of(G[b]);
    int c = term_cmp(r, la.col, la.exps, lb.col, lb.exps);
    return c > 0;
  });
  std::vector<PRow> G3, C3;
  for (size_t k : order) {
    G3.push_back(std::move(G[k]));
    C3.push_back(std::move(C[k]));
  }
  G = std::move(G3);
  C = std::move(C3);
  return out;
}

Mat rows_to_mat(const RingHandle& ring, const std::vector<PRow>& rows, int cols) {
  Mat out = Mat::zeros(ring, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < out.rows; ++i)
    for (int j = 0; j < cols; ++j) out.at(i, j) = rows[i][j];
  return out;
}

PRow mat_row(const Mat& m, int i) {
  PRow v(m.cols);
  for (int j = 0; j < m.cols; ++j) v[j] = std::get<PolyVal>(m.at(i, j));
  return v;
}

}  // namespace

BasisResult gb_basis(const Mat& m) {
  const Ring& r = *m.ring;
  GBOut gb = buchberger_reduced(r, m);
  return {rows_to_mat(m.ring, gb.g, m.cols), rows_to_mat(m.ring, gb.c, m.rows)};
}

ReductionResult gb_decide_zero(const Mat& b, const Mat& m, bool cert) {
  const Ring& r = *b.ring;
  GBOut gb = buchberger_reduced(r, m);
  ReductionResult out;
  out.reduced = Mat::zeros(b.ring, b.rows, b.cols);
  out.transform = Mat::zeros(b.ring, b.rows, static_cast<int>(gb.g.size()));
  for (int i = 0; i < b.rows; ++i) {
    NFOut nf = normal_form(r, mat_row(b, i), gb.g);
    for (int j = 0; j < b.cols; ++j) out.reduced.at(i, j) = nf.nf[j];
    for (size_t k = 0; k < gb.g.size(); ++k)
      out.transform.at(i, static_cast<int>(k)) = poly_neg(r, nf.q[k]);
  }
  out.is_zero = mat_is_zero(out.reduced);
  out.certified = cert;
  if (cert) {
    out.basis = rows_to_mat(b.ring, gb.g, m.cols);
    out.basis_transform = rows_to_mat(b.ring, gb.c, m.rows);
  } else {
    out.transform = Mat::zeros(b.ring, 0, 0);
  }
  return out;
}

Mat gb_syzygies(const Mat& m) {
  const Ring& r = *m.ring;
  GBOut gb = buchberger_reduced(r, m);
  const auto& G = gb.g;
  const auto& C = gb.c;
  int ng = static_cast<int>(G.size());

  // Divide the original rows by the basis.
  std::vector<std::vector<PolyVal>> D(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    NFOut nf = normal_form(r, mat_row(m, i), G);
    if (!row_zero(nf.nf))
      throw std::runtime_error("input row failed to reduce against its own basis");
    D[i] = std::move(nf.q);
  }

  std::vector<PRow> syz;
  for (int i = 0; i < ng; ++i) {
    Lead li = lead_of(G[i]);
    for (int j = i + 1; j < ng; ++j) {
      Lead lj = lead_of(G[j]);
      if (lj.col != li.col) continue;
      std::vector<unsigned> lcm = exp_lcm(li.exps, lj.exps);
      PRow s(gb.cols);
      row_add_scaled(r, s, G[i], mpq_class(1), exp_sub(lcm, li.exps));
      row_add_scaled(r, s, G[j], mpq_class(-1), exp_sub(lcm, lj.exps));
      NFOut nf = normal_form(r, std::move(s), G);
      if (!row_zero(nf.nf))
        throw std::runtime_error("s-row failed to reduce against the basis");
      // ui e_i - uj e_j - q, pushed down to the original rows through C
      std::vector<PolyVal> z(ng);
      z[i] = poly_from_term(coeff_normalize(r, mpq_class(1)), exp_sub(lcm, li.exps));
      z[j] = poly_add(r, z[j],
                      poly_from_term(coeff_normalize(r, mpq_class(-1)), exp_sub(lcm, lj.exps)));
      for (int k = 0; k < ng; ++k) z[k] = poly_add(r, z[k], poly_neg(r, nf.q[k]));
      PRow srow(m.rows);
      for (int t = 0; t < m.rows; ++t)
        for (int k = 0; k < ng; ++k)
          if (!z[k].terms.empty())
            srow[t] = poly_add(r, srow[t], poly_mul(r, z[k], C[k][t]));
      if (!row_zero(srow)) syz.push_back(std::move(srow));
    }
  }

  // Rows of I - D*C complete the generating set.
  for (int i = 0; i < m.rows; ++i) {
    PRow trow(m.rows);
    trow[i] = poly_from_term(coeff_normalize(r, mpq_class(1)),
                             std::vector<unsigned>(r.vars.size(), 0));
    for (int t = 0; t < m.rows; ++t)
      for (int k = 0; k < ng; ++k)
        if (!D[i][k].terms.empty())
          trow[t] = poly_add(r, trow[t], poly_neg(r, poly_mul(r, D[i][k], C[k][t])));
    if (!row_zero(trow)) syz.push_back(std::move(trow));
  }

  return rows_to_mat(m.ring, syz, m.rows);
}

}  // namespace fpmod::detail
