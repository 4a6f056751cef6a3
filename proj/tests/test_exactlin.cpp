#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "galmod/exactlin.hpp"

using namespace galmod;

namespace {

Int det_leibniz(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> perm(cols.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  Int total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    Int p = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) p *= m(rows[i], cols[perm[i]]);
    total += (inv % 2) ? -p : p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

void for_subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> s(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(s);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      s[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// gcd of all k x k minors
Int determinantal_divisor(const IntMatrix& m, std::size_t k) {
  Int g = 0;
  for_subsets(m.rows(), k, [&](const std::vector<std::size_t>& r) {
    for_subsets(m.cols(), k, [&](const std::vector<std::size_t>& c) {
      Int d = det_leibniz(m, r, c);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

Int det(const IntMatrix& m) {
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return det_leibniz(m, idx, idx);
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("snf of the 2x2 worked matrix") {
  IntMatrix a = IntMatrix::from_list(2, 2, {2, 4, 6, 8});
  SmithForm s = snf(a);
  CHECK(s.diagonal() == IntVector{2, 4});
  CHECK(s.U * a * s.V == s.D);
  CHECK(abs(det(s.U)) == 1);
  CHECK(abs(det(s.V)) == 1);
  CHECK(s.U * s.U_inv == IntMatrix::identity(2));
}

TEST_CASE("snf agrees with determinantal divisors on random matrices") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a = random_matrix(rng, r, c, -6, 6);
    SmithForm s = snf(a);
    REQUIRE(s.U * a * s.V == s.D);
    CHECK(abs(det(s.U)) == 1);
    CHECK(abs(det(s.V)) == 1);
    CHECK(s.U * s.U_inv == IntMatrix::identity(r));
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    Int prod = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      prod *= s.D(k - 1, k - 1);
      CHECK(prod == determinantal_divisor(a, k));
      if (k >= 2 && s.D(k - 1, k - 1) != 0) CHECK(s.D(k - 1, k - 1) % s.D(k - 2, k - 2) == 0);
      CHECK(s.D(k - 1, k - 1) >= 0);
    }
  }
}

TEST_CASE("hermite form is canonical and spans the same lattice") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng() % 3, m = n + rng() % 3;
    IntMatrix a = random_matrix(rng, n, m, -5, 5);
    IntMatrix h = hermite_columns(a);
    // shuffling and unimodular mixing of generators does not change the form
    IntMatrix b = a;
    for (std::size_t j = 1; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i) b(i, j) += 2 * a(i, 0);
    CHECK(hermite_columns(b) == h);
    CHECK(h.cols() == rank(a));
    if (h.cols() == n) {
      Int index = 1;
      for (std::size_t j = 0; j < n; ++j) index *= h(j, j);
      CHECK(index == abs(determinantal_divisor(a, n)));
    }
    Lattice l = Lattice::from_generators(to_rat(a));
    for (std::size_t j = 0; j < m; ++j) CHECK(l.contains(to_rat(a.col(j))));
  }
}

TEST_CASE("integer kernel is saturated and of the right rank") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 3, n = r + 1 + rng() % 3;
    IntMatrix a = random_matrix(rng, r, n, -4, 4);
    IntMatrix k = integer_kernel(a);
    CHECK(k.cols() == n - rank(a));
    CHECK((a * k).is_zero());
    if (k.cols()) CHECK(determinantal_divisor(k, k.cols()) == 1);
  }
}

TEST_CASE("condition lattice membership matches brute-force enumeration") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng() % 2;
    Int d = 1 + rng() % 4;
    RatMatrix aeq(rng() % 2, n), bint(1 + rng() % 2, n);
    for (std::size_t i = 0; i < aeq.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) aeq(i, j) = int(rng() % 5) - 2;
    for (std::size_t i = 0; i < bint.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) bint(i, j) = make_rat(int(rng() % 5) - 2, 1 + rng() % 2);
    Lattice l = condition_lattice(n, d, aeq, bint);
    const int box = 4;
    std::vector<int> y(n, -box);
    for (;;) {
      RatVector x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = make_rat(Int(y[i]), d);
      bool ok = is_zero(aeq * x) && is_integral(bint * x);
      CHECK(l.contains(x) == ok);
      std::size_t p = 0;
      while (p < n && ++y[p] > box) y[p++] = -box;
      if (p == n) break;
    }
  }
}

TEST_CASE("local mid lattice for C2 at N = 2") {
  RatMatrix ones = RatMatrix::from_rows({{1, 1}});
  Lattice mid = condition_lattice(2, 2, RatMatrix(0, 2), ones);
  CHECK(mid.rank() == 2);
  CHECK(mid.contains(RatVector{make_rat(1, 2), make_rat(1, 2)}));
  CHECK_FALSE(mid.contains(RatVector{make_rat(1, 2), 0}));
  FgAbPresentation rig = FgAbPresentation::subquotient(Lattice::standard(2), mid);
  CHECK(rig.invariants().to_string() == "Z/2");
}

TEST_CASE("subquotient invariants and element arithmetic") {
  Lattice amb = Lattice::standard(2);
  Lattice sub = Lattice::from_generators(2, {{2, 0}, {0, 3}});
  FgAbPresentation g = FgAbPresentation::subquotient(sub, amb);
  CHECK(g.invariants().torsion == IntVector{6});
  CHECK(g.invariants().free_rank == 0);
  CHECK(g.order_of(RatVector{1, 1}) == 6);
  CHECK(g.order_of(RatVector{1, 0}) == 2);
  CHECK(g.is_zero(RatVector{4, 3}));
  CHECK(g.equal(RatVector{1, 1}, RatVector{3, 4}));
  auto reps = g.factor_representatives();
  REQUIRE(reps.size() == 1);
  CHECK(g.order_of(reps[0]) == 6);

  Lattice sub2 = Lattice::from_generators(3, {{2, 0, 0}});
  FgAbPresentation h = FgAbPresentation::subquotient(sub2, Lattice::standard(3));
  CHECK(h.invariants().to_string() == "Z/2 x Z^2");
  CHECK_THROWS_AS(FgAbPresentation::subquotient(Lattice::standard(2), sub), Error);
}

TEST_CASE("lattice operations") {
  Lattice a = Lattice::from_generators(2, {{2, 0}, {0, 1}});
  Lattice b = Lattice::from_generators(2, {{1, 0}, {0, 2}});
  Lattice i = a.intersect(b);
  CHECK(i == Lattice::from_generators(2, {{2, 0}, {0, 2}}));
  CHECK(a + b == Lattice::standard(2));
  RatMatrix sum = RatMatrix::from_rows({{1, 1}});
  Lattice pre = Lattice::standard(2).preimage(sum, Lattice::from_generators(1, {{2}}));
  CHECK(pre.contains(RatVector{1, 1}));
  CHECK_FALSE(pre.contains(RatVector{1, 0}));
  Lattice line = Lattice::from_generators(2, {{2, 2}});
  CHECK(Lattice::standard(2).saturate(line) == Lattice::from_generators(2, {{1, 1}}));
  CHECK(Lattice::from_generators(2, {{make_rat(1, 2), 1}}).denom() == 2);
}

TEST_CASE("rational and integer solving") {
  IntMatrix a = IntMatrix::from_list(2, 2, {2, 0, 0, 3});
  CHECK(integer_solve(a, IntVector{4, 9}).value() == IntVector{2, 3});
  CHECK_FALSE(integer_solve(a, IntVector{1, 0}).has_value());
  auto x = rational_solve(to_rat(a), RatVector{1, 1});
  REQUIRE(x);
  CHECK((*x)[0] == make_rat(1, 2));
  RatMatrix b = RatMatrix::from_rows({{1, 2}, {3, 4}, {5, 6}});
  CHECK(left_inverse(b) * b == RatMatrix::identity(2));
  CHECK(frac(make_rat(-1, 3)) == make_rat(2, 3));
  CHECK(to_string(make_rat(-3, 6)) == "-1/2");
  CHECK(parse_rat("4/6") == make_rat(2, 3));
}
