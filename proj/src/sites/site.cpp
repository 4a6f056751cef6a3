#include "galmod/sites/site.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "galmod/error.hpp"

namespace galmod {

GlobalSite::GlobalSite(GroupPtr group, std::vector<Place> places, std::string name)
    : name_(std::move(name)), group_(std::move(group)), places_(std::move(places)) {
  if (places_.empty()) throw Error(ErrorKind::EmptyPlaceSet, name_ + " has no places");
  std::set<std::string> names;
  for (std::size_t v = 0; v < places_.size(); ++v) {
    auto& p = places_[v];
    if (!names.insert(p.name).second) throw Error(ErrorKind::PlaceMismatch, "duplicate place " + p.name);
    p.decomposition = group_->check_subgroup(p.decomposition);
    for (auto& c : group_->left_cosets(p.decomposition)) {
      SitePoint pt;
      pt.place = static_cast<int>(v);
      pt.rep = c.front();
      pt.coset = std::move(c);
      if (pt.rep == 0) dotted_.push_back(static_cast<int>(points_.size()));
      points_.push_back(std::move(pt));
    }
  }
  const int n = group_->order();
  act_.assign(n, std::vector<int>(points_.size()));
  for (int g = 0; g < n; ++g)
    for (std::size_t w = 0; w < points_.size(); ++w) {
      int target = group_->mul(g, points_[w].rep);
      int pl = points_[w].place;
      for (std::size_t u = 0; u < points_.size(); ++u)
        if (points_[u].place == pl && std::binary_search(points_[u].coset.begin(), points_[u].coset.end(), target)) {
          act_[g][w] = static_cast<int>(u);
          break;
        }
    }
}

int GlobalSite::place_index(const std::string& name) const {
  for (std::size_t v = 0; v < places_.size(); ++v)
    if (places_[v].name == name) return static_cast<int>(v);
  throw Error(ErrorKind::PlaceMismatch, "no place named " + name + " in " + name_);
}

std::string GlobalSite::point_label(int w) const {
  const auto& p = points_.at(w);
  const auto& v = places_[p.place].name;
  return p.dotted() ? v : group_->label(p.rep) + "." + v;
}

std::optional<int> GlobalSite::cover_witness() const {
  for (int g = 0; g < group_->order(); ++g)
    if (fixed_place(g) < 0) return g;
  return std::nullopt;
}

void GlobalSite::check_cover() const {
  if (auto w = cover_witness())
    throw Error(ErrorKind::CoverConditionFails,
                "decomposition groups of " + name_ + " do not cover the group; " + group_->label(*w) + " is missing",
                group_->label(*w));
}

int GlobalSite::least_to_dotted(int w) const {
  for (int g = 0; g < group_->order(); ++g)
    if (is_dotted(act(g, w))) return g;
  throw std::logic_error("no element moves the point to a dotted point");
}

int GlobalSite::fixed_place(int g) const {
  for (std::size_t v = 0; v < places_.size(); ++v) {
    const auto& d = places_[v].decomposition;
    if (std::binary_search(d.begin(), d.end(), g)) return static_cast<int>(v);
  }
  return -1;
}

GlobalSite build_site(GroupPtr group, const std::vector<Place>& places, std::string name) {
  return GlobalSite(std::move(group), places, std::move(name));
}

GroupSurjection::GroupSurjection(GroupPtr up, GroupPtr low, std::vector<int> m)
    : upper(std::move(up)), lower(std::move(low)), map(std::move(m)) {
  if (!upper->is_homomorphism(*lower, map)) throw Error(ErrorKind::TowerMismatch, "projection is not a homomorphism");
  std::set<int> img(map.begin(), map.end());
  if (static_cast<int>(img.size()) != lower->order()) throw Error(ErrorKind::TowerMismatch, "projection is not surjective");
}

Subgroup GroupSurjection::kernel() const {
  Subgroup k;
  for (int g = 0; g < upper->order(); ++g)
    if (map[g] == 0) k.push_back(g);
  return k;
}

Subgroup GroupSurjection::image(const Subgroup& h) const {
  std::set<int> s;
  for (int x : h) s.insert(map.at(x));
  return Subgroup(s.begin(), s.end());
}

GroupSurjection GroupSurjection::restrict_to(const Subgroup& h) const {
  auto up = upper->restrict_to(h);
  auto low = lower->restrict_to(image(h));
  std::vector<int> m;
  for (int x : up.embedding) {
    int y = map[x];
    auto it = std::find(low.embedding.begin(), low.embedding.end(), y);
    m.push_back(static_cast<int>(it - low.embedding.begin()));
  }
  return GroupSurjection(up.group, low.group, std::move(m));
}

Tower::Tower(GlobalSite lower, GlobalSite upper, std::vector<int> proj)
    : lower_(std::move(lower)), upper_(std::move(upper)), surj_(upper_.group_ptr(), lower_.group_ptr(), std::move(proj)) {
  place_map_.assign(upper_.places().size(), -1);
  std::vector<bool> seen(lower_.places().size(), false);
  for (std::size_t v = 0; v < upper_.places().size(); ++v)
    for (std::size_t w = 0; w < lower_.places().size(); ++w)
      if (upper_.places()[v].name == lower_.places()[w].name) {
        place_map_[v] = static_cast<int>(w);
        seen[w] = true;
        if (surj_.image(upper_.places()[v].decomposition) != lower_.places()[w].decomposition)
          throw Error(ErrorKind::TowerMismatch,
                      "decomposition group of " + lower_.places()[w].name + " does not project onto the lower one");
      }
  for (std::size_t w = 0; w < seen.size(); ++w)
    if (!seen[w]) throw Error(ErrorKind::TowerMismatch, "place " + lower_.places()[w].name + " missing upstairs");
  point_map_.assign(upper_.size(), -1);
  for (std::size_t u = 0; u < upper_.size(); ++u) {
    int lp = place_map_[upper_.points()[u].place];
    if (lp < 0) continue;
    point_map_[u] = lower_.act(surj_.map[upper_.points()[u].rep], lower_.dotted(lp));
  }
}

int Tower::local_degree(int upper_place) const {
  int lp = place_map_.at(upper_place);
  if (lp < 0) throw Error(ErrorKind::PlaceMismatch, "place is outside the lower place set");
  return static_cast<int>(upper_.places()[upper_place].decomposition.size() /
                          lower_.places()[lp].decomposition.size());
}

bool covers(const FiniteGroup& g, const std::vector<Subgroup>& subgroups) {
  std::vector<bool> hit(g.order(), false);
  for (const auto& h : subgroups)
    for (int x : h) hit[x] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::optional<std::vector<Subgroup>> search_lifts(const FiniteGroup& g, const std::vector<Subgroup>& classes) {
  std::vector<std::vector<Subgroup>> options;
  for (const auto& h : classes) options.push_back(g.conjugacy_class(g.check_subgroup(h)));
  std::vector<Subgroup> chosen;
  std::vector<int> count(g.order(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == options.size()) return std::all_of(count.begin(), count.end(), [](int c) { return c > 0; });
    // prune: the remaining subgroups cannot cover the missing elements
    std::size_t missing = std::count(count.begin(), count.end(), 0);
    std::size_t room = 0;
    for (std::size_t j = i; j < options.size(); ++j) room += options[j].front().size();
    if (missing > room) return false;
    for (const auto& h : options[i]) {
      for (int x : h) ++count[x];
      chosen.push_back(h);
      if (rec(i + 1)) return true;
      chosen.pop_back();
      for (int x : h) --count[x];
    }
    return false;
  };
  if (rec(0)) return chosen;
  return std::nullopt;
}

bool lifts_exist_brute_force(const FiniteGroup& g, const std::vector<Subgroup>& classes) {
  std::vector<std::vector<Subgroup>> options;
  for (const auto& h : classes) options.push_back(g.conjugacy_class(g.check_subgroup(h)));
  std::vector<std::size_t> idx(options.size(), 0);
  for (;;) {
    std::vector<Subgroup> pick;
    for (std::size_t i = 0; i < options.size(); ++i) pick.push_back(options[i][idx[i]]);
    if (covers(g, pick)) return true;
    std::size_t p = 0;
    while (p < idx.size() && ++idx[p] == options[p].size()) idx[p++] = 0;
    if (p == idx.size()) return false;
  }
}

std::optional<int> simultaneous_conjugator(const GlobalSite& a, const GlobalSite& b) {
  if (a.group().order() != b.group().order())
    throw Error(ErrorKind::PlaceMismatch, "sites live over different groups");
  if (a.places().size() != b.places().size()) throw Error(ErrorKind::PlaceMismatch, "place sets differ");
  std::vector<int> match;
  for (const auto& p : a.places()) match.push_back(b.place_index(p.name));
  const FiniteGroup& g = a.group();
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (std::size_t v = 0; v < match.size() && ok; ++v)
      ok = g.conjugate(x, a.places()[v].decomposition) == b.places()[match[v]].decomposition;
    if (ok) return x;
  }
  return std::nullopt;
}

}  // namespace galmod
