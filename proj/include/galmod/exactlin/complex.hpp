#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galmod/exactlin/lattice.hpp"

namespace galmod {

// The group top / bottom for lattices bottom <= top in a common Q^n.
struct LatticeQuotient {
  Lattice top, bottom;
  static LatticeQuotient of(Lattice top) {
    std::size_t n = top.dim();
    return {std::move(top), Lattice::zero(n)};
  }
};

// A chain A_0 -> A_1 -> ... of subquotients with maps given on the ambient
// spaces. maps[i] : A_i -> A_{i+1}.
struct LatticeComplex {
  std::string name;
  std::vector<LatticeQuotient> terms;
  std::vector<RatMatrix> maps;

  // nullopt when every map is well defined, consecutive maps compose to zero
  // and the sequence is exact at each inner term; otherwise a description of
  // the first failure.
  std::optional<std::string> exactness_failure() const;
  // Same for the short exact sequence 0 -> A_0 -> ... -> A_last -> 0.
  std::optional<std::string> short_exactness_failure() const;
};

}  // namespace galmod
