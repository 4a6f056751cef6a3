#include <numeric>

#include "check_util.hpp"
#include "galmod/error.hpp"

namespace galmod {

using nlohmann::json;
using namespace checks;

namespace {

Int ipow(const Int& b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Count f : G -> {0, ..., N-1} with sum f = 0 mod N.
long count_rig(int g, long n) {
  long count = 0;
  std::vector<long> f(g, 0);
  for (;;) {
    if (std::accumulate(f.begin(), f.end(), 0L) % n == 0) ++count;
    int p = 0;
    while (p < g && ++f[p] == n) f[p++] = 0;
    if (p == g) break;
  }
  return count;
}

FgAbPresentation rig_group(const GModule& rig) { return FgAbPresentation::subquotient(rig.relations(), rig.lattice()); }

template <class F>
void for_levels(const Catalog& c, F&& f) {
  for (const auto& [gname, g] : c.groups)
    for (const auto& n : c.levels) f(gname, g, n);
}

void check_local_closed_forms(CheckContext& c) {
  for_levels(c.catalog, [&](const std::string& gname, const GroupPtr& g, const Int& n) {
    std::string inst = level_label(gname, n);
    LocalLevel l = build_local(g, n);
    Int order = rig_group(*l.rig).invariants().order();
    c.out.expect(order == ipow(n, g->order() - 1), inst, "|M^rig| differs from N^(|G|-1)", order.get_str());
    if (ipow(n, g->order()) <= 50000)
      c.out.expect(order == count_rig(g->order(), n.get_si()), inst, "|M^rig| differs from enumeration", order.get_str());
    c.out.expect(l.mid->rank() == static_cast<std::size_t>(g->order()), inst, "rank of M^mid is not |G|");
    c.out.expect(l.c_iso.is_surjective(), inst, "c^iso is not surjective");
    c.out.expect(l.c_rig.is_surjective(), inst, "c^rig is not surjective");
    GModule ker(g, l.c_rig.kernel(), actions_of(*l.mid), "ker c^rig");
    auto w = induced_witness(ker, std::vector<RatVector>{unit_vector(g->order(), 0)});
    c.out.expect(is_induced_basis(ker, w.generators), inst, "ker c^rig has no induced witness");
    c.out.expect(ker.lattice() == Lattice::standard(g->order()), inst, "ker c^rig is not Z[G]");
  });
}

void check_global_closed_forms(CheckContext& c) {
  for (const auto& site : c.catalog.sites) {
    GlobalLevel l = build_global(site);
    const std::size_t n = site.group().order(), places = site.places().size();
    c.out.expect(l.iso->rank() == site.size() - 1, site.name(), "rank of M^iso is not |S_E| - 1",
                 {{"rank", l.iso->rank()}, {"points", site.size()}});
    c.out.expect(l.mid->rank() == n * (places - 1), site.name(), "rank of M^mid is not |G| (|S| - 1)",
                 {{"rank", l.mid->rank()}});
    c.out.expect(l.c_rig.is_surjective(), site.name(), "c^rig is not surjective");
    if (!l.cover_witness) c.out.expect(l.c_iso.is_surjective(), site.name(), "c^iso is not surjective");
    RigKernel k = rig_kernel(l);
    c.out.expect(k.module->rank() == n * (places - 1), site.name(), "rank of ker c^rig");
    if (k.module->rank() > 0)
      c.out.expect(is_induced_basis(*k.module, induced_witness(*k.module, k.witness).generators), site.name(),
                   "ker c^rig has no induced witness");
  }
}

void check_lifts(CheckContext& c) {
  for_levels(c.catalog, [&](const std::string& gname, const GroupPtr& g, const Int& n) {
    std::string inst = level_label(gname, n);
    LocalLevel l = build_local(g, n);
    for (const auto& f : rig_group(*l.rig).factor_representatives()) {
      RatVector lift = lift_crig_local(l, f);
      c.out.expect(l.mid->lattice().contains(lift), inst, "lift outside M^mid", witness_vector(f));
      c.out.expect(Lattice::standard(g->order()).contains(sub(l.c_rig.apply(lift), f)), inst, "lift misses its class",
                   witness_vector(f));
    }
  });
  for (const auto& site : c.catalog.sites) {
    GlobalLevel l = build_global(site);
    for (const auto& f : rig_group(*l.rig).factor_representatives()) {
      RatVector m = lift_crig(l, f);
      c.out.expect(l.mid->lattice().contains(m), site.name(), "lift outside M^mid", witness_vector(f));
      c.out.expect(l.rig->relations().contains(sub(l.c_rig.apply(m), f)), site.name(), "lift misses its class",
                   witness_vector(f));
    }
    c.out.pass(site.name());
  }
}

void check_local_splitting(CheckContext& c) {
  for_levels(c.catalog, [&](const std::string& gname, const GroupPtr& g, const Int& n) {
    std::string inst = level_label(gname, n);
    LocalLevel l = build_local(g, n);
    if (n % g->order() != 0) {
      try {
        s_iso_local(l);
        c.out.fail(inst, "splitting exists although |G| does not divide N");
      } catch (const Error& e) {
        if (!c.out.expect(e.kind() == ErrorKind::DivisibilityRequired, inst, e.what())) return;
        c.out.skip(inst, "|G| does not divide N", {{"order", g->order()}, {"N", n.get_str()}});
      }
      return;
    }
    GMap s = s_iso_local(l);
    c.out.expect(compose(l.c_iso, s).matrix == RatMatrix::identity(1), inst, "c^iso s != id", witness_matrix(s.matrix));
    c.out.expect(s.image() == fixed_lattice(*l.mid, g->whole()), inst, "image of s is not (M^mid)^G",
                 witness_matrix(s.matrix));
  });
}

void check_global_splitting(CheckContext& c) {
  for (const auto& site : c.catalog.sites) {
    GlobalLevel l = build_global(site);
    auto oracle = site.cover_witness();
    try {
      GMap s = s_iso_global(l);
      c.out.expect(!oracle, site.name(), "splitting built without the cover condition");
      c.out.expect(agree_on(l.iso->lattice(), l.c_iso.matrix * s.matrix, RatMatrix::identity(site.size())),
                   site.name(), "c^iso s != id", witness_matrix(s.matrix));
      c.out.expect(l.mid->lattice().contains(l.iso->lattice().image(s.matrix)), site.name(),
                   "splitting leaves M^mid", witness_matrix(s.matrix));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CoverConditionFails) throw;
      bool same = oracle && e.witness() == site.group().label(*oracle);
      if (c.out.expect(same, site.name(), "cover failure witness differs from direct search", e.witness()))
        c.out.skip(site.name(), "cover condition fails", e.witness());
    }
  }
}

void check_exactness(CheckContext& c) {
  for_levels(c.catalog, [&](const std::string& gname, const GroupPtr& g, const Int& n) {
    std::string inst = level_label(gname, n);
    DualMid d = dual_mid(build_local(g, n));
    c.out.expect(d.gram_det * d.gram_det == 1, inst, "pairing is not perfect",
                 {{"det", d.gram_det.get_str()}, {"gram", witness_matrix(d.gram)}});
    for (const auto& seq : d.sequences) {
      auto failure = seq.short_exactness_failure();
      c.out.expect(!failure, inst, seq.name + ": " + failure.value_or(""));
    }
    c.out.expect(d.norm_of_delta_e == RatVector(g->order(), Rat(1)), inst, "norm of delta_e is not constant 1",
                 witness_vector(d.norm_of_delta_e));
  });
}

void check_dual_norm_image(CheckContext& c) {
  for_levels(c.catalog, [&](const std::string& gname, const GroupPtr& g, const Int& n) {
    Int expect = gcd(n, Int(g->order()));
    Lattice img = dual_norm_image(build_local(g, n));
    c.out.expect(img == Lattice::from_generators(1, {{Rat(expect)}}), level_label(gname, n),
                 "norm image is not gcd(N, |G|) Z", img.describe());
  });
  for (const auto& [tname, p] : tower_surjections(c.catalog)) {
    const int order = p.upper->order();
    RatMatrix sum_e(1, p.lower->order());
    for (int s = 0; s < p.lower->order(); ++s) sum_e(0, s) = 1;
    for (const auto& n : c.catalog.levels)
      for (const auto& m : c.catalog.levels) {
        if (m % n != 0) continue;
        std::string inst = tname + " N=" + n.get_str() + " M=" + m.get_str();
        DualMid dk = dual_mid(build_local(p.upper, m)), de = dual_mid(build_local(p.lower, n));
        c.out.expect(de.lattice.contains(dk.lattice.image(dual_inflation(p))), inst,
                     "dual inflation leaves the lower dual lattice");
        Lattice img = dk.lattice.image(sum_e * dual_inflation(p));
        c.out.expect(img == Lattice::from_generators(1, {{Rat(gcd(m, Int(order)))}}), inst,
                     "norm image is not gcd(M, |G_K|) Z", img.describe());
      }
  }
}

void check_local_inflation(CheckContext& c) {
  for (const auto& [tname, p] : tower_surjections(c.catalog))
    for (const auto& n : c.catalog.levels)
      for (const auto& m : c.catalog.levels) {
        std::string inst = tname + " N=" + n.get_str() + " M=" + m.get_str();
        LocalLevel e = build_local(p.lower, n), k = build_local(p.upper, m);
        if (m % n != 0) {
          try {
            inflate_local(e, k, p);
            c.out.fail(inst, "inflation built although N does not divide M");
          } catch (const Error&) {
            c.out.pass(inst);
          }
          continue;
        }
        InflationMaps f = inflate_local(e, k, p);
        c.out.expect(f.iso.maps_lattices() && f.mid.maps_lattices() && f.rig.maps_lattices(), inst,
                     "inflation does not map lattices");
        c.out.expect(f.mid.is_equivariant() && f.rig.is_equivariant(), inst, "inflation is not equivariant");
        const Lattice& mid = e.mid->lattice();
        c.out.expect(agree_on(mid, k.c_iso.matrix * f.mid.matrix, f.iso.matrix * e.c_iso.matrix), inst,
                     "c^iso square does not commute", witness_matrix(k.c_iso.matrix * f.mid.matrix));
        c.out.expect(agree_modulo(mid, k.c_rig.matrix * f.mid.matrix, f.rig.matrix * e.c_rig.matrix, k.rig->relations()),
                     inst, "c^rig square does not commute", witness_matrix(f.rig.matrix));
      }
}

void check_global_inflation(CheckContext& c) {
  for (const auto& nt : c.catalog.towers) {
    const Tower& t = nt.tower;
    GlobalLevel e = build_global(t.lower()), k = build_global(t.upper());
    InflationMaps f = inflate_global(e, k, t);
    c.out.expect(f.iso.maps_lattices() && f.mid.maps_lattices() && f.rig.maps_lattices(), nt.name,
                 "inflation does not map lattices");
    const Lattice& mid = e.mid->lattice();
    c.out.expect(agree_on(mid, k.c_iso.matrix * f.mid.matrix, f.iso.matrix * e.c_iso.matrix), nt.name,
                 "c^iso square does not commute", witness_matrix(f.mid.matrix));
    c.out.expect(agree_modulo(mid, k.c_rig.matrix * f.mid.matrix, f.rig.matrix * e.c_rig.matrix, k.rig->relations()),
                 nt.name, "c^rig square does not commute", witness_matrix(f.rig.matrix));
  }
}

void check_localization(CheckContext& c) {
  for (const auto& site : c.catalog.sites) {
    GlobalLevel g = build_global(site);
    for (std::size_t v = 0; v < site.places().size(); ++v) {
      std::string inst = site.name() + " at " + site.places()[v].name;
      Localization loc = localize(g, site.dotted(static_cast<int>(v)));
      c.out.expect(loc.local.modulus == Int(site.group().order()), inst, "local modulus is not |G|");
      c.out.expect(loc.mid.maps_lattices() && loc.iso.maps_lattices() && loc.rig.maps_lattices(), inst,
                   "localization does not map lattices");
      const Lattice& mid = g.mid->lattice();
      c.out.expect(agree_on(mid, loc.local.c_iso.matrix * loc.mid.matrix, loc.iso.matrix * g.c_iso.matrix), inst,
                   "c^iso square does not commute", witness_matrix(loc.mid.matrix));
      c.out.expect(agree_modulo(mid, loc.local.c_rig.matrix * loc.mid.matrix, loc.rig.matrix * g.c_rig.matrix,
                                loc.local.rig->relations()),
                   inst, "c^rig square does not commute", witness_matrix(loc.rig.matrix));
    }
  }
  for (const auto& nt : c.catalog.towers) {
    const Tower& t = nt.tower;
    GlobalLevel e = build_global(t.lower()), k = build_global(t.upper());
    InflationMaps ginf = inflate_global(e, k, t);
    for (std::size_t v = 0; v < t.upper().places().size(); ++v) {
      if (t.lower_place(static_cast<int>(v)) < 0) continue;
      std::string inst = nt.name + " at " + t.upper().places()[v].name;
      int u = t.upper().dotted(static_cast<int>(v));
      Localization lk = localize(k, u), le = localize(e, t.project_point(u));
      GroupSurjection pr = t.surjection().restrict_to(t.upper().places()[v].decomposition);
      InflationMaps linf = inflate_local(le.local, lk.local, pr);
      c.out.expect(lk.mid.matrix * ginf.mid.matrix == linf.mid.matrix * le.mid.matrix, inst,
                   "localization does not commute with mid inflation",
                   witness_matrix(lk.mid.matrix * ginf.mid.matrix - linf.mid.matrix * le.mid.matrix));
      c.out.expect(lk.iso.matrix * ginf.iso.matrix == linf.iso.matrix * le.iso.matrix, inst,
                   "localization does not commute with iso inflation");
      c.out.expect(lk.rig.matrix * ginf.rig.matrix == linf.rig.matrix * le.rig.matrix, inst,
                   "localization does not commute with rig inflation");
    }
  }
}

void check_factorization(CheckContext& c) {
  for_levels(c.catalog, [&](const std::string& gname, const GroupPtr& g, const Int& n) {
    Factorization f = local_factorization(build_local(g, n));
    std::string inst = level_label(gname, n);
    c.out.expect(f.integral, inst, "second factor is not integral", witness_matrix(f.second_factor));
    c.out.expect(f.agrees, inst, "factorization does not recover inflation", witness_matrix(f.composite));
  });
  for (const auto& nt : c.catalog.towers) {
    const Tower& t = nt.tower;
    Factorization f = global_factorization(build_global(t.lower()), build_global(t.upper()), t);
    c.out.expect(f.integral, nt.name, "second factor is not integral", witness_matrix(f.second_factor));
    c.out.expect(f.agrees, nt.name, "factorization does not recover inflation", witness_matrix(f.composite));
  }
}

GModule sum_zero(const GModule& ypts, std::size_t points, std::size_t d) {
  RatMatrix ones(1, points);
  for (std::size_t i = 0; i < points; ++i) ones(0, i) = 1;
  RatMatrix sum = kronecker(ones, RatMatrix::identity(d));
  return ypts.with_lattice(ypts.lattice().preimage(sum, Lattice::zero(d)), "Y[S]_0");
}

void check_tower_coherence(CheckContext& c) {
  for (const auto& nt : c.catalog.towers) {
    const Tower& t = nt.tower;
    if (t.upper().places().size() != t.lower().places().size()) {
      c.out.skip(nt.name, "levels have different place sets");
      continue;
    }
    const GroupPtr& g0 = t.lower().group_ptr();
    const GroupPtr& g1 = t.upper().group_ptr();
    for (const auto& nm : c.catalog.modules) {
      if (nm.module->group_ptr() != g0 || !nm.module->torsion_free()) continue;
      const GModule& y = *nm.module;
      std::string inst = nt.name + " / " + nm.name;
      TowerSplitting ts(t, y);
      const std::size_t d = y.dim();
      const GlobalSite& lo = t.lower();
      const GlobalSite& up = t.upper();
      for (std::size_t i = 0; i < up.size() * d; ++i) {
        RatVector f = unit_vector(up.size() * d, i);
        c.out.expect(ts.j(ts.pi1(f)) == ts.pi0(ts.j(f)), inst, "j pi_1 != pi_0 j", witness_vector(f));
      }
      GModule lo0 = sum_zero(ts.y_points_lower(), lo.size(), d);
      GModule up0 = sum_zero(ts.y_points_upper(), up.size(), d);
      Lattice aug0 = augmentation_lattice(lo0, g0->whole());
      Lattice aug1 = augmentation_lattice(up0, g1->whole());
      for (std::size_t k = 0; k < lo0.rank(); ++k) {
        RatVector f = lo0.lattice().basis_vector(k);
        RatVector pf = ts.pi1(ts.p(f));
        RatVector p0 = ts.pi0(f);
        for (std::size_t u = 0; u < up.size(); ++u) {
          int w = up.is_dotted(static_cast<int>(u)) ? t.project_point(static_cast<int>(u)) : -1;
          for (std::size_t x = 0; x < d; ++x) {
            Rat expect = w < 0 ? Rat(0) : Rat(t.degree()) * p0[w * d + x];
            c.out.expect(pf[u * d + x] == expect, inst, "pi_1 p(f) differs from [K:E] pi_0(f)", witness_vector(f));
          }
        }
        c.out.expect(aug0.contains(sub(p0, f)), inst, "pi_0(f) - f outside I Y[S]_0", witness_vector(f));
      }
      for (std::size_t k = 0; k < up0.rank(); ++k) {
        RatVector f = up0.lattice().basis_vector(k);
        RatVector g = ts.pi10(f);
        c.out.expect(aug1.contains(sub(g, f)), inst, "pi_10(f) - f outside I Y[S]_0", witness_vector(f));
        c.out.expect(aug1.contains(sub(ts.pi11(g), g)), inst, "pi_11(f) - f outside I Y[S]_0", witness_vector(g));
      }
      Lattice inv = fixed_lattice(lo0, g0->whole());
      Lattice fixed_mid0 = fixed_lattice(ts.mid_y_lower(), g0->whole());
      RatMatrix ciso0 = kronecker(ts.lower_level().c_iso.matrix, RatMatrix::identity(d));
      for (std::size_t k = 0; k < inv.rank(); ++k) {
        RatVector f = inv.basis_vector(k);
        RatVector s0 = ts.s0(f);
        c.out.expect(fixed_mid0.contains(s0), inst, "s_0(f) is not an invariant of M^mid (x) Y", witness_vector(f));
        c.out.expect(ciso0 * s0 == f, inst, "c^iso s_0(f) != f", witness_vector(f));
        c.out.expect(ts.s1(ts.p(f)) == ts.mid_inflation() * s0, inst, "s_1 p != inflation s_0", witness_vector(f));
      }
    }
  }
}

}  // namespace

void add_cmpmod_checks(std::vector<CheckSpec>& out) {
  out.push_back({"cmpmod.local_closed_forms", {1},
                 "local levels: |M^rig| = N^(|G|-1), c^iso and c^rig onto, ker c^rig induced", check_local_closed_forms});
  out.push_back({"cmpmod.global_closed_forms", {1},
                 "global levels: ranks from coset counts, c^rig onto, ker c^rig induced", check_global_closed_forms});
  out.push_back({"cmpmod.lifts", {1}, "explicit lifts through c^rig, local and global", check_lifts});
  out.push_back({"cmpmod.local_splitting", {2}, "c^iso s^iso = id with image (M^mid)^G when |G| divides N",
                 check_local_splitting});
  out.push_back({"cmpmod.global_splitting", {2}, "c^iso s = id on sites with cover; uncovered element otherwise",
                 check_global_splitting});
  out.push_back({"cmpmod.exactness", {3}, "dual sequences exact, perfect pairing, norm(delta_e) = 1", check_exactness});
  out.push_back({"cmpmod.dual_norm_image", {3}, "norm image of the dual of M^mid is gcd(M, |G|) Z",
                 check_dual_norm_image});
  out.push_back({"cmpmod.local_inflation", {4}, "local inflation squares commute", check_local_inflation});
  out.push_back({"cmpmod.global_inflation", {4}, "global inflation squares commute", check_global_inflation});
  out.push_back({"cmpmod.localization", {4}, "localization squares commute, also with inflation", check_localization});
  out.push_back({"cmpmod.factorization", {3}, "inflation on M^o is [K:E] times an integral map", check_factorization});
  out.push_back({"cmpmod.tower_coherence", {8}, "splitting operators are coherent along the tower",
                 check_tower_coherence});
}

}  // namespace galmod
