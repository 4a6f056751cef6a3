#include "galmod/cmpmod/global.hpp"

#include "galmod/error.hpp"

namespace galmod {

namespace {

RatMatrix row_sums(const GlobalLevel& l) {
  RatMatrix m(l.group().order(), l.pair_count());
  for (std::size_t i = 0; i < l.pair_count(); ++i) m(l.pair_sigma(static_cast<int>(i)), i) = 1;
  return m;
}

RatMatrix column_sums(const GlobalLevel& l) {
  RatMatrix m(l.site.size(), l.pair_count());
  for (std::size_t i = 0; i < l.pair_count(); ++i) m(l.pair_point(static_cast<int>(i)), i) = 1;
  return m;
}

std::vector<RatMatrix> pair_action(const GlobalLevel& l) {
  const FiniteGroup& g = l.group();
  std::vector<RatMatrix> act;
  for (int t = 0; t < g.order(); ++t) {
    RatMatrix m(l.pair_count(), l.pair_count());
    for (std::size_t i = 0; i < l.pair_count(); ++i) {
      int s = l.pair_sigma(static_cast<int>(i)), v = l.pair_place(static_cast<int>(i));
      m(l.pair_index(g.mul(t, s), v), i) = 1;
    }
    act.push_back(std::move(m));
  }
  return act;
}

RatVector block(const RatVector& f, std::size_t i, std::size_t d) {
  return RatVector(f.begin() + i * d, f.begin() + (i + 1) * d);
}

void add_block(RatVector& f, std::size_t i, const RatVector& x, const Rat& c) {
  for (std::size_t k = 0; k < x.size(); ++k) f[i * x.size() + k] += c * x[k];
}

}  // namespace

GlobalLevel build_global(const GlobalSite& site) {
  GlobalLevel l{site, Int(site.group().order()), nullptr, nullptr, nullptr, {}, {}, site.cover_witness()};
  const GroupPtr& g = site.group_ptr();
  const std::size_t s = site.size(), a = l.pair_count();
  RatMatrix ones(1, s);
  for (std::size_t i = 0; i < s; ++i) ones(0, i) = 1;
  GModule points = GModule::permutation(g, site.action_table(), "Z[S_E]");
  l.iso = std::make_shared<GModule>(points.with_lattice(condition_lattice(s, 1, ones, RatMatrix(0, s)),
                                                        "Miso[" + site.name() + "]"));
  auto act = pair_action(l);
  RatMatrix rows = row_sums(l), cols = column_sums(l);
  Lattice mid = condition_lattice(a, l.modulus, rows, cols);
  Lattice rig = condition_lattice(a, l.modulus, RatMatrix(0, a), rows.vstack(cols));
  l.mid = std::make_shared<GModule>(g, mid, act, "Mmid[" + site.name() + "]");
  l.rig = std::make_shared<GModule>(g, rig, Lattice::standard(a), act, "Mrig[" + site.name() + "]");
  l.c_iso = GMap{l.mid, l.iso, cols};
  l.c_rig = GMap{l.mid, l.rig, RatMatrix::identity(a).scaled(Rat(-1))};
  return l;
}

RatVector lift_crig(const GlobalLevel& level, const RatVector& f_rig) {
  if (!level.rig->lattice().contains(f_rig)) throw Error(ErrorKind::NotASublattice, "element is not in M^rig");
  RatVector out(level.pair_count());
  const int places = static_cast<int>(level.places());
  for (int s = 0; s < level.group().order(); ++s) {
    Rat total = 0;
    for (int v = 1; v < places; ++v) {
      int i = level.pair_index(s, v);
      out[i] = frac(-f_rig[i]);
      total += out[i];
    }
    out[level.pair_index(s, 0)] = -total;
  }
  return out;
}

RigKernel rig_kernel(const GlobalLevel& level) {
  RigKernel k;
  std::vector<RatMatrix> act;
  for (int g = 0; g < level.group().order(); ++g) act.push_back(level.mid->action(g));
  k.module = std::make_shared<GModule>(level.site.group_ptr(), level.c_rig.kernel(), act, "ker c^rig");
  for (std::size_t v = 1; v < level.places(); ++v) {
    RatVector x(level.pair_count());
    x[level.pair_index(0, static_cast<int>(v))] = 1;
    x[level.pair_index(0, 0)] = -1;
    k.witness.push_back(x);
  }
  return k;
}

GModule y_points(const GlobalSite& site, const GModule& y) {
  return tensor(GModule::permutation(site.group_ptr(), site.action_table(), "Z[S_E]"), y);
}

NormalizedSupport normalize_support(const GlobalSite& site, const GModule& y, const RatVector& f) {
  const std::size_t d = y.dim();
  if (f.size() != site.size() * d) throw Error(ErrorKind::InvalidArgument, "function has wrong length");
  NormalizedSupport out;
  for (std::size_t w = 0; w < site.size(); ++w) {
    if (site.is_dotted(static_cast<int>(w))) continue;
    RatVector val = block(f, w, d);
    if (is_zero(val)) continue;
    int s = site.least_to_dotted(static_cast<int>(w));
    int v = site.fixed_place(s);
    if (v < 0)
      throw Error(ErrorKind::CoverConditionFails,
                  site.group().label(s) + " lies in no decomposition group of " + site.name(), site.group().label(s));
    out.moves.push_back({s, static_cast<int>(w), site.dotted(v), std::move(val)});
  }
  out.value = apply_moves(site, y, f, out.moves);
  return out;
}

RatVector apply_moves(const GlobalSite& site, const GModule& y, const RatVector& f, const std::vector<SupportMove>& moves) {
  RatVector out = f;
  for (const auto& m : moves) {
    RatVector sy = y.act(m.sigma, m.value);
    add_block(out, site.act(m.sigma, m.point), sy, 1);
    add_block(out, m.point, m.value, -1);
    add_block(out, site.act(m.sigma, m.dotted_point), sy, -1);
    add_block(out, m.dotted_point, m.value, 1);
  }
  return out;
}

GMap s_iso_global(const GlobalLevel& level) {
  level.site.check_cover();
  const GlobalSite& site = level.site;
  const std::size_t n = site.size();
  GModule y = GModule::permutation(site.group_ptr(), site.action_table(), "Z[S_E]");
  RatVector f(n * n);
  for (std::size_t w = 0; w < n; ++w) f[w * n + w] = 1;
  RatVector fdot = normalize_support(site, y, f).value;
  RatMatrix m(level.pair_count(), n);
  Rat inv = Rat(1) / Rat(level.modulus);
  for (std::size_t i = 0; i < level.pair_count(); ++i) {
    int s = level.pair_sigma(static_cast<int>(i));
    RatVector col = y.act(s, block(fdot, site.dotted(level.pair_place(static_cast<int>(i))), n));
    for (std::size_t x = 0; x < n; ++x) m(i, x) = inv * col[x];
  }
  return GMap{level.iso, level.mid, m};
}

InflationMaps inflate_global(const GlobalLevel& lower, const GlobalLevel& upper, const Tower& tower) {
  if (tower.lower().size() != lower.site.size() || tower.upper().size() != upper.site.size() ||
      tower.lower().group().order() != lower.group().order() || tower.upper().group().order() != upper.group().order())
    throw Error(ErrorKind::TowerMismatch, "levels do not belong to the tower");
  const GlobalSite& up = upper.site;
  RatMatrix iso(up.size(), lower.site.size());
  for (std::size_t u = 0; u < up.size(); ++u) {
    int w = tower.project_point(static_cast<int>(u));
    if (w >= 0) iso(u, w) = tower.local_degree(up.points()[u].place);
  }
  RatMatrix mid(upper.pair_count(), lower.pair_count());
  for (std::size_t i = 0; i < upper.pair_count(); ++i) {
    int lp = tower.lower_place(upper.pair_place(static_cast<int>(i)));
    if (lp >= 0) mid(i, lower.pair_index(tower.proj(upper.pair_sigma(static_cast<int>(i))), lp)) = 1;
  }
  auto inflate = [&](const ModulePtr& m) {
    return std::make_shared<GModule>(inflate_module(*m, up.group_ptr(), tower.surjection().map));
  };
  return {GMap{inflate(lower.iso), upper.iso, iso}, GMap{inflate(lower.mid), upper.mid, mid},
          GMap{inflate(lower.rig), upper.rig, mid}};
}

Localization localize(const GlobalLevel& level, int point) {
  const GlobalSite& site = level.site;
  if (point < 0 || point >= static_cast<int>(site.size()) || !site.is_dotted(point))
    throw Error(ErrorKind::PlaceNotInDottedSet,
                (point >= 0 && point < static_cast<int>(site.size()) ? site.point_label(point) : std::to_string(point)) +
                    " is not a dotted point");
  const int v = site.points()[point].place;
  const Subgroup& d = site.places()[v].decomposition;
  Localization loc;
  loc.point = point;
  loc.restriction = site.group().restrict_to(d);
  loc.local = build_local(loc.restriction.group, level.modulus);
  RatMatrix iso(1, site.size());
  iso(0, point) = 1;
  RatMatrix mid(d.size(), level.pair_count());
  for (std::size_t i = 0; i < d.size(); ++i) mid(i, level.pair_index(d[i], v)) = 1;
  auto restrict = [&](const ModulePtr& m) { return std::make_shared<GModule>(restrict_module(*m, loc.restriction)); };
  loc.iso = GMap{restrict(level.iso), loc.local.iso, iso};
  loc.mid = GMap{restrict(level.mid), loc.local.mid, mid};
  loc.rig = GMap{restrict(level.rig), loc.local.rig, mid};
  return loc;
}

Factorization global_factorization(const GlobalLevel& lower, const GlobalLevel& upper, const Tower& tower) {
  InflationMaps infl = inflate_global(lower, upper, tower);
  Factorization f;
  f.source = lower.c_iso.kernel();
  f.target = upper.c_iso.kernel();
  f.first_factor = tower.degree();
  f.composite = infl.mid.matrix;
  f.second_factor = infl.mid.matrix.scaled(Rat(1) / Rat(f.first_factor));
  f.integral = f.target.contains(f.source.image(f.second_factor));
  f.agrees = f.second_factor.scaled(Rat(f.first_factor)) == f.composite;
  return f;
}

}  // namespace galmod
