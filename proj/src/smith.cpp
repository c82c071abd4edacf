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

struct IntWork {
  std::vector<std::vector<mpz_class>> d, u, v;
  int rows, cols;

  explicit IntWork(const Mat& m) : rows(m.rows), cols(m.cols) {
    d.assign(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) d[i][j] = std::get<mpz_class>(m.at(i, j));
    u.assign(rows, std::vector<mpz_class>(rows));
    for (int i = 0; i < rows; ++i) u[i][i] = 1;
    v.assign(cols, std::vector<mpz_class>(cols));
    for (int j = 0; j < cols; ++j) v[j][j] = 1;
  }

  void row_sub(int dst, int src, const mpz_class& q) {
    if (q == 0) return;
    for (int j = 0; j < cols; ++j) d[dst][j] -= q * d[src][j];
    for (int j = 0; j < rows; ++j) u[dst][j] -= q * u[src][j];
  }
  void col_sub(int dst, int src, const mpz_class& q) {
    if (q == 0) return;
    for (int i = 0; i < rows; ++i) d[i][dst] -= q * d[i][src];
    for (int i = 0; i < cols; ++i) v[i][dst] -= q * v[i][src];
  }
  void row_swap(int a, int b) {
    if (a == b) return;
    std::swap(d[a], d[b]);
    std::swap(u[a], u[b]);
  }
  void col_swap(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows; ++i) std::swap(d[i][a], d[i][b]);
    for (int i = 0; i < cols; ++i) std::swap(v[i][a], v[i][b]);
  }
  void row_negate(int i) {
    for (int j = 0; j < cols; ++j) d[i][j] = -d[i][j];
    for (int j = 0; j < rows; ++j) u[i][j] = -u[i][j];
  }
};

}  // namespace

SmithResult snf_int(const Mat& m) {
  IntWork w(m);
  int n = std::min(w.rows, w.cols);
  int k = 0;
  while (k < n) {
    int bi = -1, bj = -1;
    for (int i = k; i < w.rows; ++i)
      for (int j = k; j < w.cols; ++j) {
        if (w.d[i][j] == 0) continue;
        if (bi < 0 || mpz_cmpabs(w.d[i][j].get_mpz_t(), w.d[bi][bj].get_mpz_t()) < 0) {
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;
    w.row_swap(k, bi);
    w.col_swap(k, bj);

    while (true) {
      bool restart = false;
      for (int i = k + 1; i < w.rows && !restart; ++i) {
        if (w.d[i][k] == 0) continue;
        w.row_sub(i, k, fdiv_q(w.d[i][k], w.d[k][k]));
        if (w.d[i][k] != 0) {
          w.row_swap(i, k);
          restart = true;
        }
      }
      if (restart) continue;
      for (int j = k + 1; j < w.cols && !restart; ++j) {
        if (w.d[k][j] == 0) continue;
        w.col_sub(j, k, fdiv_q(w.d[k][j], w.d[k][k]));
        if (w.d[k][j] != 0) {
          w.col_swap(j, k);
          restart = true;
        }
      }
      if (restart) continue;
      if (w.d[k][k] < 0) w.row_negate(k);
      int badi = -1, badj = -1;
      for (int i = k + 1; i < w.rows && badi < 0; ++i)
        for (int j = k + 1; j < w.cols; ++j)
          if (w.d[i][j] % w.d[k][k] != 0) {
            badi = i;
            badj = j;
            break;
          }
      if (badi < 0) break;
      // Fold the offending row into row k and keep grinding the pivot down.
      for (int j = 0; j < w.cols; ++j) w.d[k][j] += w.d[badi][j];
      for (int j = 0; j < w.rows; ++j) w.u[k][j] += w.u[badi][j];
    }
    ++k;
  }

  SmithResult out;
  out.d = Mat::zeros(m.ring, w.rows, w.cols);
  out.u = Mat::zeros(m.ring, w.rows, w.rows);
  out.v = Mat::zeros(m.ring, w.cols, w.cols);
  for (int i = 0; i < w.rows; ++i)
    for (int j = 0; j < w.cols; ++j) out.d.at(i, j) = w.d[i][j];
  for (int i = 0; i < w.rows; ++i)
    for (int j = 0; j < w.rows; ++j) out.u.at(i, j) = w.u[i][j];
  for (int i = 0; i < w.cols; ++i)
    for (int j = 0; j < w.cols; ++j) out.v.at(i, j) = w.v[i][j];
  return out;
}

SmithResult snf_field(const Mat& m) {
  const Ring& ring = *m.ring;
  EchelonOut e = rref_field(m);
  Mat d = e.r;
  Mat v = Mat::identity(m.ring, m.cols);
  auto col_swap = [&](Mat& x, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < x.rows; ++i) std::swap(x.at(i, a), x.at(i, b));
  };
  auto col_sub = [&](Mat& x, int dst, int src, const Element& q) {
    for (int i = 0; i < x.rows; ++i)
      x.at(i, dst) = sub(ring, x.at(i, dst), mul(ring, q, x.at(i, src)));
  };
  for (int k = 0; k < e.rank; ++k) {
    // pivot columns keep their original indexes under the earlier swaps and sweeps
    int p = e.pivot_cols[k];
    col_swap(d, k, p);
    col_swap(v, k, p);
    for (int j = k + 1; j < d.cols; ++j) {
      if (is_zero(d.at(k, j))) continue;
      Element q = d.at(k, j);
      col_sub(d, j, k, q);
      col_sub(v, j, k, q);
    }
  }
  return {d, e.u, v};
}

}  // namespace detail

SmithResult smith_normal_form(const Mat& m) {
  switch (m.ring->backend) {
    case Backend::Integers:
      return detail::snf_int(m);
    case Backend::Rationals:
    case Backend::PrimeField:
      return detail::snf_field(m);
    case Backend::Residue: {
      if (m.ring->base->backend != Backend::Integers)
        throw std::runtime_error("smith normal form needs integer or field coefficients");
      Mat lifted = m;
      lifted.ring = m.ring->base;
      SmithResult base = detail::snf_int(lifted);
      auto relabel = [&](Mat x) {
        x.ring = m.ring;
        for (auto& e : x.a) e = m.ring->reduce(e);
        return x;
      };
      return {relabel(base.d), relabel(base.u), relabel(base.v)};
    }
    case Backend::Poly:
      throw std::runtime_error("smith normal form needs integer or field coefficients");
  }
  throw std::logic_error("unreachable");
}

}  // namespace fpmod
