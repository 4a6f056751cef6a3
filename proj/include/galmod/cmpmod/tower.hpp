#pragma once

#include "galmod/cmpmod/global.hpp"

namespace galmod {

// Support-normalizing operators on a two-level tower F <- E_0 <- E_1 with
// the same places at both levels. Y is a Gamma_0-module, inflated to
// Gamma_1 at the upper level. Representatives are least-index:
//   r(0, w): least g in Gamma_1 with p(g) w dotted, for w in V_{E_0};
//   r(1, u): least g in ker p with g u dotted, for u over a dotted point;
//   vdot: the first place whose decomposition group contains the image of r.
class TowerSplitting {
 public:
  TowerSplitting(const Tower& tower, const GModule& y);

  const Tower& tower() const { return tower_; }
  const GModule& y_lower() const { return y0_; }
  const GModule& y_upper() const { return y1_; }
  const GlobalLevel& lower_level() const { return lower_; }
  const GlobalLevel& upper_level() const { return upper_; }

  // Flattened Y-valued functions (point * dim Y + coordinate).
  RatVector pi0(const RatVector& f) const;
  RatVector pi10(const RatVector& f) const;
  RatVector pi11(const RatVector& f) const;
  RatVector pi1(const RatVector& f) const { return pi11(pi10(f)); }
  // j(f)(w) = sum over u above w of f(u).
  RatVector j(const RatVector& f) const;
  // p(f)(u) = [K_u : E_w] f(w).
  RatVector p(const RatVector& f) const;

  // s_i(f)(s, v) = |Gamma_i|^-1 s(pi_i(f)(vdot)), in M^mid (x) Y flattened
  // as pair * dim Y + coordinate.
  RatVector s0(const RatVector& f) const;
  RatVector s1(const RatVector& f) const;
  // Global mid inflation tensored with the identity of Y.
  RatMatrix mid_inflation() const;

  // The modules Y[V_{E_i}] and M^mid (x) Y at both levels.
  GModule y_points_lower() const { return y_points(lower_.site, y0_); }
  GModule y_points_upper() const { return y_points(upper_.site, y1_); }
  GModule mid_y_lower() const { return tensor(*lower_.mid, y0_); }
  GModule mid_y_upper() const { return tensor(*upper_.mid, y1_); }

 private:
  Tower tower_;
  GModule y0_, y1_;
  GlobalLevel lower_, upper_;
  std::vector<int> r0_, v0_, r1_, v1_;  // per point, -1 where unused

  RatVector splitting(const GlobalLevel& level, const GModule& y, const RatVector& pi) const;
};

}  // namespace galmod
