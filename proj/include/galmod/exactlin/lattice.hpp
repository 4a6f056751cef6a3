#pragma once

#include <optional>
#include <string>

#include "galmod/exactlin/normal_form.hpp"

namespace galmod {

// A finitely generated subgroup of Q^n, stored as (1/denom) * H where H is
// the column Hermite form of the integer generators. The representation is
// canonical, so equality is structural.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t dim) : dim_(dim), basis_(dim, 0) {}

  static Lattice from_generators(const RatMatrix& gens);  // generators as columns
  static Lattice from_generators(std::size_t dim, const std::vector<RatVector>& gens);
  static Lattice standard(std::size_t dim);                // Z^dim
  static Lattice zero(std::size_t dim) { return Lattice(dim); }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.cols(); }
  const Int& denom() const { return denom_; }
  const IntMatrix& integer_basis() const { return basis_; }
  RatMatrix basis() const;              // columns
  RatVector basis_vector(std::size_t j) const;

  // Integer coordinates in the basis, if x lies in the lattice.
  std::optional<IntVector> coordinates(const RatVector& x) const;
  bool contains(const RatVector& x) const { return coordinates(x).has_value(); }
  bool contains(const Lattice& other) const;
  RatVector combine(const IntVector& coords) const;
  bool operator==(const Lattice& o) const {
    return dim_ == o.dim_ && denom_ == o.denom_ && basis_ == o.basis_;
  }
  bool operator!=(const Lattice& o) const { return !(*this == o); }

  Lattice operator+(const Lattice& o) const;
  Lattice intersect(const Lattice& o) const;
  Lattice scaled(const Rat& c) const;
  // Image under x -> a x.
  Lattice image(const RatMatrix& a) const;
  // {x in this : a x in target}.
  Lattice preimage(const RatMatrix& a, const Lattice& target) const;
  // this intersected with the Q-span of s.
  Lattice saturate(const Lattice& s) const;
  bool same_span(const Lattice& o) const;
  // Rational equations cutting out the Q-span.
  RatMatrix span_equations() const;

  std::string describe() const;

 private:
  std::size_t dim_ = 0;
  Int denom_ = 1;
  IntMatrix basis_;
};

// {x in (1/d) Z^n : a_eq x = 0, b_int x in Z^k}.
Lattice condition_lattice(std::size_t n, const Int& d, const RatMatrix& a_eq, const RatMatrix& b_int);

}  // namespace galmod
