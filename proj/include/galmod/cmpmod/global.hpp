#pragma once

#include <optional>
#include <vector>

#include "galmod/cmpmod/local.hpp"

namespace galmod {

// Global modules of a site. M^iso = Z[S_E]_0 lives in Q^{S_E}. M^mid and
// M^rig live on the allowed pairs (s, w) with s^-1 w dotted; there is one
// such w for each place, so pairs are indexed by s * |places| + v and
// Gamma acts by t (s, v) = (t s, v). Values lie in (1/|Gamma|)Z.
struct GlobalLevel {
  GlobalSite site;
  Int modulus;  // |Gamma|
  ModulePtr iso, mid, rig;
  GMap c_iso, c_rig;
  std::optional<int> cover_witness;

  const FiniteGroup& group() const { return site.group(); }
  std::size_t places() const { return site.places().size(); }
  std::size_t pair_count() const { return group().order() * places(); }
  int pair_index(int s, int place) const { return s * static_cast<int>(places()) + place; }
  int pair_sigma(int index) const { return index / static_cast<int>(places()); }
  int pair_place(int index) const { return index % static_cast<int>(places()); }
  // The point w = s . (dotted point of the place).
  int pair_point(int index) const { return site.act(pair_sigma(index), site.dotted(pair_place(index))); }
};

GlobalLevel build_global(const GlobalSite& site);

// The lift of the surjectivity proof: w_s is the first place, other entries
// are the [0,1) lifts of -f^rig and the entry at w_s balances the row.
RatVector lift_crig(const GlobalLevel& level, const RatVector& f_rig);

// Kernel of c^rig with its induced witness {delta_(1,v) - delta_(1,0)}.
struct RigKernel {
  ModulePtr module;
  std::vector<RatVector> witness;
};
RigKernel rig_kernel(const GlobalLevel& level);

// Y-valued functions on S_E are flattened as point * dim(Y) + coordinate.
GModule y_points(const GlobalSite& site, const GModule& y);

// One correction term (s - 1)(y delta_w - y delta_vdot).
struct SupportMove {
  int sigma = 0;
  int point = 0;
  int dotted_point = 0;
  RatVector value;
};

struct NormalizedSupport {
  RatVector value;
  std::vector<SupportMove> moves;
};

// For each w outside the dotted set, s_w is the least element with s_w w
// dotted and vdot_w the first place whose decomposition group contains s_w.
// Throws CoverConditionFails (witness s_w) when no such place exists.
NormalizedSupport normalize_support(const GlobalSite& site, const GModule& y, const RatVector& f);
// f + sum of the moves, with the action of a given module on Y.
RatVector apply_moves(const GlobalSite& site, const GModule& y, const RatVector& f, const std::vector<SupportMove>& moves);

// Splitting of c^iso, s(x)(s, w) = |Gamma|^-1 (s fdot(s^-1 w))(x) where
// fdot normalizes the identity of M^iso. Throws CoverConditionFails.
GMap s_iso_global(const GlobalLevel& level);

// Inflation along a tower; sources are inflated to the upper group.
InflationMaps inflate_global(const GlobalLevel& lower, const GlobalLevel& upper, const Tower& tower);

// Localization at a dotted point into the local level (Gamma_v, |Gamma|).
struct Localization {
  int point = 0;
  FiniteGroup::Restricted restriction;
  LocalLevel local;
  GMap iso, mid, rig;  // sources are the global modules restricted to Gamma_v
};
Localization localize(const GlobalLevel& level, int point);

// Inflation restricted to M^o = ker c^iso: multiplication by [K:E] followed
// by [K:E]^-1 times inflation.
Factorization global_factorization(const GlobalLevel& lower, const GlobalLevel& upper, const Tower& tower);

}  // namespace galmod
