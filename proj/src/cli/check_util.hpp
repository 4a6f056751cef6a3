#pragma once

// Shared helpers for the check families.

#include <random>
#include <string>
#include <vector>

#include "galmod/cli/checks.hpp"
#include "galmod/cmpmod.hpp"
#include "galmod/gmod.hpp"
#include "galmod/sites/site.hpp"
#include "galmod/tn.hpp"

namespace galmod::checks {

inline int rnd(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline RatVector random_element(std::mt19937& rng, const Lattice& l, int bound = 3) {
  IntVector c(l.rank());
  for (auto& x : c) x = rnd(rng, -bound, bound);
  return l.combine(c);
}

inline IntMatrix random_int_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rnd(rng, lo, hi);
  return m;
}

// Product of random elementary matrices.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rnd(rng, 0, 1)) u(0, 0) = -1;
    return u;
  }
  for (int s = 0; s < steps; ++s) {
    std::size_t i = rnd(rng, 0, static_cast<int>(n) - 1), j = rnd(rng, 0, static_cast<int>(n) - 2);
    if (j >= i) ++j;
    Int k = rnd(rng, -2, 2);
    for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
  }
  return u;
}

// Fraction-free determinant.
inline Int bareiss_det(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline std::string torus_label(const NamedTorus& t) { return t.name; }

// An element g of G with <g> = G, if any.
inline bool is_cyclic(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    if (g.element_order(a) == g.order()) return true;
  return false;
}

inline std::string level_label(const std::string& group, const Int& n) { return group + " N=" + n.get_str(); }

// Ambient matrices of a module as a vector.
inline std::vector<RatMatrix> actions_of(const GModule& m) {
  std::vector<RatMatrix> a;
  for (int g = 0; g < m.group().order(); ++g) a.push_back(m.action(g));
  return a;
}

inline bool agree_on(const Lattice& l, const RatMatrix& a, const RatMatrix& b) {
  for (std::size_t j = 0; j < l.rank(); ++j)
    if (a * l.basis_vector(j) != b * l.basis_vector(j)) return false;
  return true;
}

inline bool agree_modulo(const Lattice& l, const RatMatrix& a, const RatMatrix& b, const Lattice& mod) {
  for (std::size_t j = 0; j < l.rank(); ++j)
    if (!mod.contains(sub(a * l.basis_vector(j), b * l.basis_vector(j)))) return false;
  return true;
}

// Surjections recorded in the catalog towers, upper -> lower.
inline std::vector<std::pair<std::string, GroupSurjection>> tower_surjections(const Catalog& c) {
  std::vector<std::pair<std::string, GroupSurjection>> out;
  for (const auto& t : c.towers) out.emplace_back(t.name, t.tower.surjection());
  return out;
}

// Y^mid of a global torus as integer combinations of (lambda, mu) generators.
Lattice global_mid_lattice(const GlobalTN& tn);

}  // namespace galmod::checks
