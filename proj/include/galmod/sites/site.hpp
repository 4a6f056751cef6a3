#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galmod/error.hpp"
#include "galmod/gmod/group.hpp"

namespace galmod {

struct Place {
  std::string name;
  Subgroup decomposition;  // decomposition group of the dotted place above
};

// A point w of S_E: the coset g Gamma_v of a place v.
struct SitePoint {
  int place = 0;
  std::vector<int> coset;  // sorted
  int rep = 0;             // least element of the coset
  bool dotted() const { return rep == 0; }
};

// Finite model of a global Galois set S_E = disjoint union of Gamma / Gamma_v.
class GlobalSite {
 public:
  GlobalSite(GroupPtr group, std::vector<Place> places, std::string name = "site");

  const std::string& name() const { return name_; }
  const GroupPtr& group_ptr() const { return group_; }
  const FiniteGroup& group() const { return *group_; }
  const std::vector<Place>& places() const { return places_; }
  const std::vector<SitePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  int place_index(const std::string& name) const;  // throws PlaceMismatch

  // Index of g . w.
  int act(int g, int w) const { return act_[g][w]; }
  const std::vector<std::vector<int>>& action_table() const { return act_; }
  int dotted(int place) const { return dotted_[place]; }
  bool is_dotted(int w) const { return points_[w].dotted(); }
  std::string point_label(int w) const;

  // First group element (by index) outside every decomposition group, if any.
  std::optional<int> cover_witness() const;
  void check_cover() const;  // throws CoverConditionFails
  // Least element sigma with sigma . w dotted.
  int least_to_dotted(int w) const;
  // Least-index place whose decomposition group contains g; -1 if none.
  int fixed_place(int g) const;

 private:
  std::string name_;
  GroupPtr group_;
  std::vector<Place> places_;
  std::vector<SitePoint> points_;
  std::vector<int> dotted_;
  std::vector<std::vector<int>> act_;
};

GlobalSite build_site(GroupPtr group, const std::vector<Place>& places, std::string name = "site");

// A surjection of groups upper -> lower.
struct GroupSurjection {
  GroupPtr upper, lower;
  std::vector<int> map;

  GroupSurjection(GroupPtr upper, GroupPtr lower, std::vector<int> map);
  int degree() const { return upper->order() / lower->order(); }
  Subgroup kernel() const;
  Subgroup image(const Subgroup& h) const;
  // Restriction to a subgroup of the upper group onto its image.
  GroupSurjection restrict_to(const Subgroup& h) const;
};

// Sites E with places S and K with places S' containing S, with
// Gamma_K -> Gamma_E surjective and p(Gamma'_v) = Gamma_v for v in S.
class Tower {
 public:
  Tower(GlobalSite lower, GlobalSite upper, std::vector<int> proj);

  const GlobalSite& lower() const { return lower_; }
  const GlobalSite& upper() const { return upper_; }
  const GroupSurjection& surjection() const { return surj_; }
  int proj(int g) const { return surj_.map[g]; }
  int degree() const { return surj_.degree(); }
  // Lower place index for an upper place, or -1 for places outside S.
  int lower_place(int upper_place) const { return place_map_[upper_place]; }
  // Image in S_E of an upper point over S, or -1.
  int project_point(int u) const { return point_map_[u]; }
  // [K_u : E_w] for the places over v.
  int local_degree(int upper_place) const;

 private:
  GlobalSite lower_, upper_;
  GroupSurjection surj_;
  std::vector<int> place_map_, point_map_;
};

// Choose a conjugate of each listed subgroup so that their union is the
// whole group; conjugates are tried in the order of the sorted class.
std::optional<std::vector<Subgroup>> search_lifts(const FiniteGroup& g, const std::vector<Subgroup>& classes);
// Exhaustive version used as a cross-check.
bool lifts_exist_brute_force(const FiniteGroup& g, const std::vector<Subgroup>& classes);
bool covers(const FiniteGroup& g, const std::vector<Subgroup>& subgroups);

// Least g with g Gamma_v g^-1 = Gamma'_v for every place of two sites over
// the same group with the same place names, if one exists.
std::optional<int> simultaneous_conjugator(const GlobalSite& a, const GlobalSite& b);

}  // namespace galmod
