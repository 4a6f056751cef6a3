#include "galmod/exactlin/normal_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace galmod {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_floor(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rat floor_rat(const Rat& q) { return Rat(floor_div(q.get_num(), q.get_den())); }

Rat frac(const Rat& q) { return q - floor_rat(q); }

IntVector SmithForm::diagonal() const {
  IntVector d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// col_dst -= q * col_src, only rows >= from are touched.
void axpy_col(IntVector& dst, const IntVector& src, const Int& q, std::size_t from) {
  for (std::size_t r = from; r < dst.size(); ++r)
    if (src[r] != 0) dst[r] -= q * src[r];
}

bool zero_from(const IntVector& v, std::size_t from) {
  for (std::size_t r = from; r < v.size(); ++r)
    if (v[r] != 0) return false;
  return true;
}

}  // namespace

IntMatrix hermite_columns(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    IntVector c = a.col(j);
    if (!zero_from(c, 0)) cols.push_back(std::move(c));
  }
  std::size_t k = 0;
  for (std::size_t i = 0; i < n && k < cols.size(); ++i) {
    for (;;) {
      std::size_t best = cols.size();
      for (std::size_t c = k; c < cols.size(); ++c) {
        if (cols[c][i] == 0) continue;
        if (best == cols.size() || abs(cols[c][i]) < abs(cols[best][i])) best = c;
      }
      if (best == cols.size()) break;
      std::swap(cols[k], cols[best]);
      bool done = true;
      for (std::size_t c = k + 1; c < cols.size(); ++c) {
        if (cols[c][i] == 0) continue;
        Int q = cols[c][i] / cols[k][i];
        axpy_col(cols[c], cols[k], q, i);
        if (cols[c][i] != 0) done = false;
      }
      if (done) break;
    }
    if (cols[k][i] == 0) continue;
    if (cols[k][i] < 0)
      for (std::size_t r = i; r < n; ++r) cols[k][r] = -cols[k][r];
    for (std::size_t j = 0; j < k; ++j) {
      Int q = floor_div(cols[j][i], cols[k][i]);
      if (q != 0) axpy_col(cols[j], cols[k], q, i);
    }
    ++k;
    // drop columns that became zero
    std::size_t w = k;
    for (std::size_t c = k; c < cols.size(); ++c)
      if (!zero_from(cols[c], i + 1)) {
        if (w != c) cols[w] = std::move(cols[c]);
        ++w;
      }
    cols.resize(w);
  }
  cols.resize(k);
  IntMatrix h(n, k);
  for (std::size_t j = 0; j < k; ++j) h.set_col(j, cols[j]);
  return h;
}

Rref rref(const RatMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<RatVector> rows;
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    RatVector r = a.row(i);
    if (!is_zero(r)) rows.push_back(std::move(r));
  }
  Rref out;
  std::size_t top = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < n && top < rows.size(); ++c) {
    std::size_t p = rows.size();
    for (std::size_t r = top; r < rows.size(); ++r)
      if (rows[r][c] != 0) {
        p = r;
        break;
      }
    if (p == rows.size()) continue;
    std::swap(rows[top], rows[p]);
    RatVector& piv = rows[top];
    Rat inv = 1 / piv[c];
    nz.clear();
    for (std::size_t j = c; j < n; ++j)
      if (piv[j] != 0) {
        piv[j] *= inv;
        nz.push_back(j);
      }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || rows[r][c] == 0) continue;
      Rat f = rows[r][c];
      for (std::size_t j : nz) rows[r][j] -= f * piv[j];
    }
    out.pivots.push_back(c);
    ++top;
  }
  out.R = RatMatrix(top, n);
  for (std::size_t i = 0; i < top; ++i) out.R.set_row(i, rows[i]);
  return out;
}

std::size_t rank(const RatMatrix& a) { return rref(a).pivots.size(); }
std::size_t rank(const IntMatrix& a) { return rank(to_rat(a)); }

namespace {

std::vector<std::size_t> free_columns(const Rref& r, std::size_t n) {
  std::vector<bool> is_piv(n, false);
  for (auto p : r.pivots) is_piv[p] = true;
  std::vector<std::size_t> f;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_piv[j]) f.push_back(j);
  return f;
}

// Basis of {y in Z^k : a . y = 0 mod d}, containing d Z^k.
IntMatrix congruence_kernel(const IntVector& a, const Int& d) {
  const std::size_t k = a.size();
  // unimodular transform on the row (a_1, ..., a_k, d)
  std::size_t len = k + 1;
  IntVector row(a);
  row.push_back(d);
  IntMatrix u = IntMatrix::identity(len);
  for (std::size_t j = 1; j < len; ++j) {
    if (row[j] == 0) continue;
    if (row[0] == 0) {
      std::swap(row[0], row[j]);
      for (std::size_t r = 0; r < len; ++r) std::swap(u(r, 0), u(r, j));
      continue;
    }
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row[0].get_mpz_t(), row[j].get_mpz_t());
    Int a0 = row[0] / g, aj = row[j] / g;
    for (std::size_t r = 0; r < len; ++r) {
      Int c0 = u(r, 0), cj = u(r, j);
      u(r, 0) = s * c0 + t * cj;
      u(r, j) = aj * c0 - a0 * cj;
    }
    row[0] = g;
    row[j] = 0;
  }
  IntMatrix gens(k, k + len - 1);
  for (std::size_t i = 0; i < k; ++i) gens(i, i) = d;
  for (std::size_t j = 1; j < len; ++j)
    for (std::size_t i = 0; i < k; ++i) gens(i, k + j - 1) = mod_floor(u(i, j), d);
  return hermite_columns(gens);
}

}  // namespace

RatMatrix rational_kernel(const RatMatrix& a) {
  const std::size_t n = a.cols();
  Rref r = rref(a);
  auto free = free_columns(r, n);
  RatMatrix k(n, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) k(r.pivots[i], j) = -r.R(i, free[j]);
  }
  return k;
}

IntMatrix integer_kernel(const RatMatrix& a) {
  const std::size_t n = a.cols();
  Rref r = rref(a);
  auto free = free_columns(r, n);
  const std::size_t k = free.size();
  if (k == 0) return IntMatrix(n, 0);
  Int d = 1;
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (auto f : free)
      if (r.R(i, f).get_den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), r.R(i, f).get_den_mpz_t());
  IntMatrix bz = IntMatrix::identity(k);
  if (d != 1) {
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      IntVector c(k);
      bool trivial = true;
      for (std::size_t j = 0; j < k; ++j) {
        Rat v = -r.R(i, free[j]) * d;
        c[j] = mod_floor(v.get_num(), d);
        if (c[j] != 0) trivial = false;
      }
      if (trivial) continue;
      IntVector av(bz.cols());
      for (std::size_t j = 0; j < bz.cols(); ++j) {
        Int s = 0;
        for (std::size_t l = 0; l < k; ++l)
          if (c[l] != 0 && bz(l, j) != 0) s += c[l] * bz(l, j);
        av[j] = mod_floor(s, d);
      }
      IntMatrix y = congruence_kernel(av, d);
      IntMatrix nb = (bz * y).hstack(IntMatrix::identity(k).scaled(d));
      bz = hermite_columns(nb);
    }
  }
  IntMatrix x(n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t c = 0; c < bz.cols(); ++c) x(free[j], c) = bz(j, c);
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t c = 0; c < bz.cols(); ++c) {
      Rat s = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (r.R(i, free[j]) != 0 && bz(j, c) != 0) s -= r.R(i, free[j]) * bz(j, c);
      if (s.get_den() != 1) throw std::logic_error("integer_kernel: saturation failed");
      x(r.pivots[i], c) = s.get_num();
    }
  return hermite_columns(x);
}

IntMatrix integer_kernel(const IntMatrix& a) { return integer_kernel(to_rat(a)); }

std::optional<RatVector> rational_solve(const RatMatrix& a, const RatVector& b) {
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b.at(i);
  }
  Rref r = rref(aug);
  RatVector x(a.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == a.cols()) return std::nullopt;
    x[r.pivots[i]] = r.R(i, a.cols());
  }
  return x;
}

std::optional<IntVector> integer_solve(const IntMatrix& a, const IntVector& b) {
  SmithForm s = snf(a);
  IntVector c = s.U * b;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      const Int& di = s.D(i, i);
      if (c[i] % di != 0) return std::nullopt;
      y[i] = c[i] / di;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

RatMatrix left_inverse(const RatMatrix& a) {
  RatMatrix at = a.transpose();
  RatMatrix g = at * a;
  const std::size_t r = g.rows();
  RatMatrix aug = g.hstack(RatMatrix::identity(r));
  Rref rr = rref(aug);
  if (rr.pivots.size() != r || (r > 0 && rr.pivots.back() >= r))
    throw std::domain_error("left_inverse: matrix has dependent columns");
  RatMatrix ginv = rr.R.col_range(r, 2 * r);
  return ginv * at;
}

RatMatrix span_equations(const RatMatrix& a) { return rational_kernel(a.transpose()).transpose(); }

namespace {

struct SmithWork {
  IntMatrix D, U, Uinv, V;

  void row_sub(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t j = 0; j < D.cols(); ++j)
      if (D(src, j) != 0) D(dst, j) -= q * D(src, j);
    for (std::size_t j = 0; j < U.cols(); ++j)
      if (U(src, j) != 0) U(dst, j) -= q * U(src, j);
    for (std::size_t i = 0; i < Uinv.rows(); ++i)
      if (Uinv(i, dst) != 0) Uinv(i, src) += q * Uinv(i, dst);
  }
  void row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D(a, j), D(b, j));
    for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
    for (std::size_t i = 0; i < Uinv.rows(); ++i) std::swap(Uinv(i, a), Uinv(i, b));
  }
  void row_neg(std::size_t a) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(a, j) = -D(a, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(a, j) = -U(a, j);
    for (std::size_t i = 0; i < Uinv.rows(); ++i) Uinv(i, a) = -Uinv(i, a);
  }
  void col_sub(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < D.rows(); ++i)
      if (D(i, src) != 0) D(i, dst) -= q * D(i, src);
    for (std::size_t i = 0; i < V.rows(); ++i)
      if (V(i, src) != 0) V(i, dst) -= q * V(i, src);
  }
  void col_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D(i, a), D(i, b));
    for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
  }
};

}  // namespace

SmithForm snf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithWork w{a, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& D = w.D;
  std::size_t t = 0;
  while (t < std::min(m, n)) {
    // smallest nonzero entry of the trailing block
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D(i, j) != 0 && (bi == m || abs(D(i, j)) < abs(D(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    w.row_swap(t, bi);
    w.col_swap(t, bj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i)
        if (D(i, t) != 0) {
          Int q = D(i, t) / D(t, t);
          w.row_sub(i, t, q);
          if (D(i, t) != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (D(t, j) != 0) {
          Int q = D(t, j) / D(t, t);
          w.col_sub(j, t, q);
          if (D(t, j) != 0) clean = false;
        }
      if (!clean) {
        std::size_t ri = t, cj = t;
        for (std::size_t i = t; i < m; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < abs(D(ri, cj))) {
            ri = i;
            cj = t;
          }
        for (std::size_t j = t; j < n; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < abs(D(ri, cj))) {
            ri = t;
            cj = j;
          }
        w.row_swap(t, ri);
        w.col_swap(t, cj);
        continue;
      }
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      w.row_sub(t, bad, Int(-1));
    }
    if (D(t, t) < 0) w.row_neg(t);
    ++t;
  }
  SmithForm s;
  s.rank = t;
  s.D = std::move(w.D);
  s.U = std::move(w.U);
  s.U_inv = std::move(w.Uinv);
  s.V = std::move(w.V);
  return s;
}

}  // namespace galmod
