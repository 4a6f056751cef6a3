#pragma once

#include <optional>
#include <string>

#include "galmod/exactlin/lattice.hpp"

namespace galmod {

// Isomorphism type: torsion invariant factors (each > 1, dividing chain) and free rank.
struct AbelianInvariants {
  IntVector torsion;
  std::size_t free_rank = 0;
  bool operator==(const AbelianInvariants& o) const {
    return torsion == o.torsion && free_rank == o.free_rank;
  }
  bool operator!=(const AbelianInvariants& o) const { return !(*this == o); }
  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  bool is_finite() const { return free_rank == 0; }
  Int order() const;  // requires finite
  std::string to_string() const;  // e.g. "Z/2 x Z/4 x Z^1", "0"
};

// Z^n / (column span of relations), or amb/sub when built as a subquotient.
class FgAbPresentation {
 public:
  static FgAbPresentation from_relations(const IntMatrix& relations);
  static FgAbPresentation subquotient(const Lattice& sub, const Lattice& amb);

  const AbelianInvariants& invariants() const { return inv_; }
  std::size_t generators() const { return n_; }
  const IntMatrix& relations() const { return rel_; }

  // Normal form of an element given by generator coordinates: entries for
  // cyclic factors of order d reduced into [0, d), free entries kept, and
  // trivial factors dropped.
  IntVector normal_form(const IntVector& x) const;
  bool is_zero(const IntVector& x) const;
  bool equal(const IntVector& x, const IntVector& y) const;
  Int order_of(const IntVector& x) const;  // 0 for infinite order
  // Generator coordinates of the i-th cyclic/free factor generator.
  IntVector factor_generator(std::size_t i) const;
  std::size_t factor_count() const { return factor_index_.size(); }
  Int factor_order(std::size_t i) const;  // 0 for free factors

  // Subquotient interface: elements given as vectors of the ambient space.
  bool has_ambient() const { return amb_.has_value(); }
  const Lattice& ambient() const { return *amb_; }
  const Lattice& sub() const { return *sub_; }
  IntVector coords(const RatVector& x) const;  // throws if x not in amb
  RatVector representative(const IntVector& generator_coords) const;
  bool is_zero(const RatVector& x) const;
  bool equal(const RatVector& x, const RatVector& y) const;
  IntVector normal_form(const RatVector& x) const { return normal_form(coords(x)); }
  Int order_of(const RatVector& x) const { return order_of(coords(x)); }
  // Representatives of the factor generators.
  std::vector<RatVector> factor_representatives() const;

 private:
  std::size_t n_ = 0;
  IntMatrix rel_;
  SmithForm smith_;
  IntVector d_;                          // d_i per row of D (0 beyond rank)
  std::vector<std::size_t> factor_index_; // rows with d_i != 1
  AbelianInvariants inv_;
  std::optional<Lattice> amb_, sub_;
};

}  // namespace galmod
