#pragma once

#include <vector>

#include "galmod/cmpmod/global.hpp"
#include "galmod/tn/local.hpp"

namespace galmod {

// lambda in Y[S_E]_0 flattened as point * dim Y + coordinate; mu in
// (M^mid (x) Y_Z)^Gamma flattened as pair * dim Y + coordinate.
struct YMidGlobal {
  RatVector lambda, mu;
};

class GlobalTN {
 public:
  GlobalTN(TorusData t, const GlobalSite& site);

  const TorusData& torus() const { return t_; }
  const GlobalLevel& level() const { return level_; }
  const GlobalSite& site() const { return level_.site; }
  std::size_t dim() const { return t_.dim(); }
  std::size_t lambda_dim() const { return site().size() * dim(); }
  std::size_t mu_dim() const { return level_.pair_count() * dim(); }

  // Y[S_E]_0 and its coinvariants.
  const GModule& points_module() const { return *points_; }
  const FgAbPresentation& y_iso() const { return sub_.coinvariants; }
  const Lattice& augmentation() const { return sub_.augmentation; }
  // (M^mid (x) Y_Z)^Gamma.
  const Lattice& mid_lattice() const { return mid_fixed_; }

  // N(lambda)(w) = sum_s s(lambda(s^-1 w)).
  RatVector norm(const RatVector& lambda) const;
  // sum_s mu(s, w).
  RatVector column_sums(const RatVector& mu) const;
  bool mid_check(const YMidGlobal& x) const;

  // Invariant mu with mu(1, vdot) = mu_v.
  RatVector mu_from_places(const std::vector<RatVector>& mu_v) const;
  RatVector mu_at(const RatVector& mu, int place) const;
  // (lambda, (s_iso (x) 1)(N lambda)); throws CoverConditionFails.
  YMidGlobal lift_iso(const RatVector& lambda) const;
  // Representative of the class of lambda supported on the dotted points.
  RatVector dotted_representative(const RatVector& lambda) const;
  // mu in (M^mid (x) Y_Z)^Gamma with vanishing column sums.
  Lattice mid_kernel() const;

  LocalTN local_torus(int place) const;
  // (lambda_w, mu_w) at w = vdot, summing over right cosets of Gamma_v with
  // least (or greatest) representatives.
  YMidElement localize(const YMidGlobal& x, int place, bool greatest_reps = false) const;
  // sum_v mu(1, vdot); zero for every element.
  RatVector product_defect_sum(const YMidGlobal& x) const;

  // Y^mid -> Y^iso x_{(M^iso (x) Y)^Gamma} (M^mid (x) Y_Z)^Gamma. The source
  // is cut out by the defining identity, the target by the module norm and
  // c^iso (x) 1; the map is the identity on (lambda, mu).
  LatticeComplex cartesian_square() const;

 private:
  TorusData t_;
  GlobalLevel level_;
  ModulePtr points_;
  CanonicalSubmodules sub_;
  Lattice mid_fixed_;

  RatMatrix norm_matrix() const;
  RatMatrix column_sum_matrix() const;
};

// Corrected lift for an invariant eps in (K (x) Q)[S_E]_0: an element eps'
// supported on the dotted points with N-natural(eps') = eps. Throws
// CoverConditionFails, and InvalidArgument when eps is not invariant.
RatVector dotted_correction(const GlobalSite& site, const GModule& k, const RatVector& eps);

// Transition maps between Y^iso at the two levels of a tower.
class IsoTransition {
 public:
  IsoTransition(const Tower& tower, const TorusData& lower);

  const Tower& tower() const { return tower_; }
  const GlobalTN& lower() const { return lower_; }
  const GlobalTN& upper() const { return upper_; }

  // j(f)(w) = sum over u above w of f(u). Throws PlaceMismatch when f is
  // nonzero above a place outside the lower place set.
  RatVector j(const RatVector& f) const;
  // For each lower point, the least upper point above it.
  std::vector<int> least_section() const;
  std::vector<int> greatest_section() const;
  // s_!(f): f(w) placed at s(w).
  RatVector push(const RatVector& f, const std::vector<int>& section) const;
  // s_! for the least section followed by normalization to the dotted set.
  RatVector bang(const RatVector& f) const;

 private:
  Tower tower_;
  GlobalTN lower_, upper_;
};

}  // namespace galmod
