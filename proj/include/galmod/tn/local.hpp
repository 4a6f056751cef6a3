#pragma once

#include <optional>
#include <vector>

#include "galmod/cmpmod/local.hpp"
#include "galmod/gmod/cohomology.hpp"

namespace galmod {

// Cocharacter lattice Y of a torus T, optionally with the cocharacters Y_Z
// of a subtorus Z (a saturated Gamma-stable sublattice).
struct TorusData {
  ModulePtr y;
  std::optional<Lattice> y_z;

  explicit TorusData(GModule y, std::optional<Lattice> y_z = std::nullopt);

  const GModule& module() const { return *y; }
  const FiniteGroup& group() const { return y->group(); }
  std::size_t dim() const { return y->dim(); }
  // Y_Z, or Y when no subtorus is fixed.
  const Lattice& subtorus() const { return y_z ? *y_z : y->lattice(); }
  GModule subtorus_module() const;
  TorusData restricted(const FiniteGroup::Restricted& r) const;
};

// A torsion class of (Y (x) Q) / IY. rep is canonical: its coordinates in
// the basis of IY lie in [0, 1). certificate * (input) lies in IY.
struct YRigClass {
  RatVector rep;
  Int order = 1;
  Int certificate = 1;
  bool is_zero() const { return order == 1; }
  bool operator==(const YRigClass& o) const { return rep == o.rep; }
  bool operator!=(const YRigClass& o) const { return rep != o.rep; }
};

// lambda is a representative in Y of a class of Y_Gamma.
struct YMidElement {
  RatVector lambda, mu;
};

class LocalTN {
 public:
  explicit LocalTN(TorusData t);

  const TorusData& torus() const { return t_; }
  const FiniteGroup& group() const { return t_.group(); }
  std::size_t dim() const { return t_.dim(); }
  const FgAbPresentation& y_iso() const { return sub_.coinvariants; }
  const Lattice& augmentation() const { return sub_.augmentation; }
  const RatMatrix& normalized_norm() const { return sub_.normalized_norm; }
  RatVector natural_norm(const RatVector& x) const { return sub_.normalized_norm * x; }

  // Canonical class of mu modulo IY. n defaults to |Gamma| den(mu); throws
  // NotTorsion unless n mu lies in IY.
  YRigClass rig_reduce(const RatVector& mu, const std::optional<Int>& n = std::nullopt) const;
  YRigClass rig_add(const YRigClass& a, const YRigClass& b) const;
  YRigClass rig_neg(const YRigClass& a) const;

  IntVector iso_class(const RatVector& lambda) const { return y_iso().normal_form(lambda); }
  bool iso_equal(const RatVector& a, const RatVector& b) const { return y_iso().equal(a, b); }

  bool mid_check(const YMidElement& x) const;
  YMidElement iso_to_mid(const RatVector& lambda) const;
  YRigClass mid_to_rig(const YMidElement& x) const;
  YRigClass defect(const YMidElement& x) const;

  // {lambda in Y : N lambda = 0} / IY, the torsion of Y_Gamma.
  FgAbPresentation torsion_kernel() const;
  // The kernel of Y^mid -> (Y (x) M^mid)^Gamma, pairs (lambda, 0) modulo IY.
  FgAbPresentation mid_kernel(const Int& n) const;

  // Y^mid_N -> Y^iso x_{(Y (x) M^iso)^Gamma} (Y (x) M^mid_N)^Gamma with
  // mu in (1/N) Y, sending (lambda, mu) to (lambda, sum s(mu) (x) s).
  // Pairs are flattened as lambda then mu, resp. lambda then s * dim + y.
  LatticeComplex cartesian_square(const Int& n) const;

 private:
  TorusData t_;
  CanonicalSubmodules sub_;
};

// Lift (lambda, mu) through a surjection p : Ytilde -> Y: lambda is lifted
// integrally, mu rationally, and mu is corrected by
// eps = N(lambda~) - N(mu~_0), which lies in ker p (x) Q.
YMidElement lift_through(const LocalTN& cover, const GMap& p, const YMidElement& x);

// Image of a pair under an equivariant map of lattices.
YMidElement push_forward(const GMap& f, const YMidElement& x);

}  // namespace galmod
