#include "galmod/cmpmod/tower.hpp"

#include "galmod/error.hpp"

namespace galmod {

namespace {

int first_place_containing(const GlobalSite& site, int g) {
  int v = site.fixed_place(g);
  if (v < 0)
    throw Error(ErrorKind::CoverConditionFails,
                site.group().label(g) + " lies in no decomposition group of " + site.name(), site.group().label(g));
  return v;
}

}  // namespace

TowerSplitting::TowerSplitting(const Tower& tower, const GModule& y)
    : tower_(tower),
      y0_(y),
      y1_(inflate_module(y, tower.upper().group_ptr(), tower.surjection().map)),
      lower_(build_global(tower.lower())),
      upper_(build_global(tower.upper())) {
  const GlobalSite& lo = tower_.lower();
  const GlobalSite& up = tower_.upper();
  if (y.group().order() != lo.group().order()) throw Error(ErrorKind::InvalidArgument, "Y is not a module for the lower group");
  if (up.places().size() != lo.places().size())
    throw Error(ErrorKind::PlaceMismatch, "the tower levels have different place sets");
  for (std::size_t v = 0; v < up.places().size(); ++v)
    if (tower_.lower_place(static_cast<int>(v)) != static_cast<int>(v))
      throw Error(ErrorKind::PlaceMismatch, "places must appear in the same order at both levels");
  const FiniteGroup& g1 = up.group();
  r0_.assign(lo.size(), -1);
  v0_.assign(lo.size(), -1);
  for (std::size_t w = 0; w < lo.size(); ++w) {
    if (lo.is_dotted(static_cast<int>(w))) continue;
    for (int g = 0; g < g1.order() && r0_[w] < 0; ++g)
      if (lo.is_dotted(lo.act(tower_.proj(g), static_cast<int>(w)))) r0_[w] = g;
    v0_[w] = first_place_containing(lo, tower_.proj(r0_[w]));
  }
  Subgroup ker = tower_.surjection().kernel();
  r1_.assign(up.size(), -1);
  v1_.assign(up.size(), -1);
  for (std::size_t u = 0; u < up.size(); ++u) {
    if (up.is_dotted(static_cast<int>(u)) || !lo.is_dotted(tower_.project_point(static_cast<int>(u)))) continue;
    for (int g : ker)
      if (up.is_dotted(up.act(g, static_cast<int>(u)))) {
        r1_[u] = g;
        break;
      }
    if (r1_[u] < 0) throw std::logic_error("no kernel element moves the point to a dotted point");
    v1_[u] = first_place_containing(up, r1_[u]);
  }
}

RatVector TowerSplitting::pi0(const RatVector& f) const {
  const GlobalSite& lo = tower_.lower();
  const std::size_t d = y0_.dim();
  std::vector<SupportMove> moves;
  for (std::size_t w = 0; w < lo.size(); ++w) {
    if (r0_[w] < 0) continue;
    RatVector val(f.begin() + w * d, f.begin() + (w + 1) * d);
    moves.push_back({tower_.proj(r0_[w]), static_cast<int>(w), lo.dotted(v0_[w]), std::move(val)});
  }
  return apply_moves(lo, y0_, f, moves);
}

RatVector TowerSplitting::pi10(const RatVector& f) const {
  const GlobalSite& up = tower_.upper();
  const std::size_t d = y1_.dim();
  std::vector<SupportMove> moves;
  for (std::size_t u = 0; u < up.size(); ++u) {
    int w = tower_.project_point(static_cast<int>(u));
    if (r0_[w] < 0) continue;
    RatVector val(f.begin() + u * d, f.begin() + (u + 1) * d);
    moves.push_back({r0_[w], static_cast<int>(u), up.dotted(v0_[w]), std::move(val)});
  }
  return apply_moves(up, y1_, f, moves);
}

RatVector TowerSplitting::pi11(const RatVector& f) const {
  const GlobalSite& up = tower_.upper();
  const std::size_t d = y1_.dim();
  std::vector<SupportMove> moves;
  for (std::size_t u = 0; u < up.size(); ++u) {
    if (r1_[u] < 0) continue;
    RatVector val(f.begin() + u * d, f.begin() + (u + 1) * d);
    moves.push_back({r1_[u], static_cast<int>(u), up.dotted(v1_[u]), std::move(val)});
  }
  return apply_moves(up, y1_, f, moves);
}

RatVector TowerSplitting::j(const RatVector& f) const {
  const std::size_t d = y0_.dim();
  RatVector out(tower_.lower().size() * d);
  for (std::size_t u = 0; u < tower_.upper().size(); ++u) {
    int w = tower_.project_point(static_cast<int>(u));
    for (std::size_t k = 0; k < d; ++k) out[w * d + k] += f[u * d + k];
  }
  return out;
}

RatVector TowerSplitting::p(const RatVector& f) const {
  const std::size_t d = y0_.dim();
  const GlobalSite& up = tower_.upper();
  RatVector out(up.size() * d);
  for (std::size_t u = 0; u < up.size(); ++u) {
    int w = tower_.project_point(static_cast<int>(u));
    Rat c = tower_.local_degree(up.points()[u].place);
    for (std::size_t k = 0; k < d; ++k) out[u * d + k] = c * f[w * d + k];
  }
  return out;
}

RatVector TowerSplitting::splitting(const GlobalLevel& level, const GModule& y, const RatVector& pi) const {
  const std::size_t d = y.dim();
  RatVector out(level.pair_count() * d);
  Rat inv = Rat(1) / Rat(level.modulus);
  for (std::size_t i = 0; i < level.pair_count(); ++i) {
    int s = level.pair_sigma(static_cast<int>(i));
    int w = level.site.dotted(level.pair_place(static_cast<int>(i)));
    RatVector val = y.act(s, RatVector(pi.begin() + w * d, pi.begin() + (w + 1) * d));
    for (std::size_t k = 0; k < d; ++k) out[i * d + k] = inv * val[k];
  }
  return out;
}

RatVector TowerSplitting::s0(const RatVector& f) const { return splitting(lower_, y0_, pi0(f)); }

RatVector TowerSplitting::s1(const RatVector& f) const { return splitting(upper_, y1_, pi1(f)); }

RatMatrix TowerSplitting::mid_inflation() const {
  InflationMaps infl = inflate_global(lower_, upper_, tower_);
  return kronecker(infl.mid.matrix, RatMatrix::identity(y0_.dim()));
}

}  // namespace galmod
