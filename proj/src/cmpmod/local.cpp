#include "galmod/cmpmod/local.hpp"

#include "galmod/error.hpp"

namespace galmod {

namespace {

std::vector<RatMatrix> regular_action(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<RatMatrix> act;
  for (int t = 0; t < n; ++t) {
    RatMatrix m(n, n);
    for (int s = 0; s < n; ++s) m(g.mul(t, s), s) = 1;
    act.push_back(std::move(m));
  }
  return act;
}

RatMatrix ones_row(std::size_t n) {
  RatMatrix r(1, n);
  for (std::size_t i = 0; i < n; ++i) r(0, i) = 1;
  return r;
}

}  // namespace

LocalLevel build_local(GroupPtr g, const Int& n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  const std::size_t k = g->order();
  auto act = regular_action(*g);
  Lattice mid = condition_lattice(k, n, RatMatrix(0, k), ones_row(k));
  LocalLevel l;
  l.group = g;
  l.modulus = n;
  std::string tag = g->name() + ",N=" + n.get_str();
  l.iso = std::make_shared<GModule>(GModule::trivial(g).renamed("Miso[" + g->name() + "]"));
  l.mid = std::make_shared<GModule>(g, mid, act, "Mmid[" + tag + "]");
  l.rig = std::make_shared<GModule>(g, mid, Lattice::standard(k), act, "Mrig[" + tag + "]");
  l.c_iso = GMap{l.mid, l.iso, ones_row(k)};
  l.c_rig = GMap{l.mid, l.rig, RatMatrix::identity(k).scaled(Rat(-1))};
  return l;
}

std::vector<RatVector> local_mid_basis(const FiniteGroup& g, const Int& n) {
  const std::size_t k = g.order();
  std::vector<RatVector> b{unit_vector(k, 0)};
  for (std::size_t s = 1; s < k; ++s) {
    RatVector v(k);
    v[s] = Rat(1) / Rat(n);
    v[0] = -Rat(1) / Rat(n);
    b.push_back(v);
  }
  return b;
}

GMap s_iso_local(const LocalLevel& level) {
  const int k = level.order();
  if (level.modulus % k != 0)
    throw Error(ErrorKind::DivisibilityRequired,
                "|Gamma| = " + std::to_string(k) + " does not divide N = " + level.modulus.get_str());
  RatMatrix m(k, 1);
  for (int s = 0; s < k; ++s) m(s, 0) = make_rat(1, k);
  return GMap{level.iso, level.mid, m};
}

RatVector reduce_mod_one(const RatVector& x) {
  RatVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = frac(x[i]);
  return r;
}

RatVector lift_crig_local(const LocalLevel& level, const RatVector& f_rig) {
  if (!level.rig->lattice().contains(f_rig)) throw Error(ErrorKind::NotASublattice, "element is not in M^rig");
  RatVector neg(f_rig.size());
  for (std::size_t i = 0; i < f_rig.size(); ++i) neg[i] = -f_rig[i];
  return reduce_mod_one(neg);
}

InflationMaps inflate_local(const LocalLevel& lower, const LocalLevel& upper, const GroupSurjection& p) {
  if (p.lower->order() != lower.order() || p.upper->order() != upper.order())
    throw Error(ErrorKind::TowerMismatch, "levels do not match the surjection");
  if (upper.modulus % lower.modulus != 0)
    throw Error(ErrorKind::DivisibilityRequired,
                "N = " + lower.modulus.get_str() + " does not divide M = " + upper.modulus.get_str());
  auto up = [&](const ModulePtr& m) {
    return std::make_shared<GModule>(inflate_module(*m, upper.group, p.map));
  };
  const std::size_t ku = upper.order(), kl = lower.order();
  RatMatrix mid(ku, kl);
  for (std::size_t t = 0; t < ku; ++t) mid(t, p.map[t]) = 1;
  RatMatrix iso(1, 1);
  iso(0, 0) = p.degree();
  return {GMap{up(lower.iso), upper.iso, iso}, GMap{up(lower.mid), upper.mid, mid}, GMap{up(lower.rig), upper.rig, mid}};
}

DualMid dual_mid(const LocalLevel& level) {
  const std::size_t k = level.order();
  const Int& n = level.modulus;
  RatVector ones(k, Rat(1));
  Lattice zg = Lattice::standard(k);
  Lattice nzg = zg.scaled(Rat(n));
  DualMid d;
  d.lattice = nzg + Lattice::from_generators(k, {ones});
  const Lattice& mid = level.mid->lattice();
  d.gram = mid.basis().transpose() * d.lattice.basis();
  if (!is_integral(d.gram)) throw std::logic_error("pairing is not integral");
  IntMatrix gi = to_int(d.gram);
  d.gram_det = 1;
  for (const auto& x : snf(gi).diagonal()) d.gram_det *= x;

  Lattice inv_n = zg.scaled(Rat(1) / Rat(n));
  Lattice q1 = Lattice::from_generators(1, {{Rat(1) / Rat(n)}});
  Lattice z1 = Lattice::standard(1);
  RatMatrix sum(1, k);
  for (std::size_t i = 0; i < k; ++i) sum(0, i) = 1;
  RatMatrix id = RatMatrix::identity(k);
  RatMatrix eval_e(1, k);
  eval_e(0, 0) = 1;
  d.sequences.push_back({"M^mid -> (1/N)Z[G] -> (1/N)Z/Z",
                         {LatticeQuotient::of(mid), LatticeQuotient::of(inv_n), {q1, z1}},
                         {id, sum}});
  d.sequences.push_back({"Z[G] -> M^mid -> ((1/N)Z/Z)[G]_0",
                         {LatticeQuotient::of(zg), LatticeQuotient::of(mid), {mid, zg}},
                         {id, id}});
  d.sequences.push_back({"N Z[G] -> M^mid,v -> Z/NZ",
                         {LatticeQuotient::of(nzg), LatticeQuotient::of(d.lattice), {z1, z1.scaled(Rat(n))}},
                         {id, eval_e}});
  d.sequences.push_back({"M^mid,v -> Z[G] -> (Z/N)[G]/(Z/N)",
                         {LatticeQuotient::of(d.lattice), LatticeQuotient::of(zg), {zg, d.lattice}},
                         {id, id}});
  d.norm_of_delta_e = level.mid->norm(level.group->whole()) * unit_vector(k, 0);
  return d;
}

RatMatrix dual_inflation(const GroupSurjection& p) {
  RatMatrix m(p.lower->order(), p.upper->order());
  for (int t = 0; t < p.upper->order(); ++t) m(p.map[t], t) = 1;
  return m;
}

Lattice dual_norm_image(const LocalLevel& level) {
  const std::size_t k = level.order();
  RatMatrix sum(1, k);
  for (std::size_t i = 0; i < k; ++i) sum(0, i) = 1;
  return dual_mid(level).lattice.image(sum);
}

Factorization local_factorization(const LocalLevel& level) {
  const std::size_t k = level.order();
  Int m = level.modulus * static_cast<long>(k);
  LocalLevel big = build_local(level.group, m);
  Factorization f;
  f.source = level.c_iso.kernel();
  f.target = big.c_iso.kernel();
  f.first_factor = static_cast<long>(k);
  f.second_factor = RatMatrix::identity(k).scaled(make_rat(1, static_cast<long>(k)));
  f.composite = RatMatrix::identity(k);
  f.integral = f.target.contains(f.source.image(f.second_factor));
  f.agrees = f.second_factor.scaled(Rat(f.first_factor)) == f.composite;
  return f;
}

}  // namespace galmod
