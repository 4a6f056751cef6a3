#include <algorithm>

#include "check_util.hpp"
#include "galmod/error.hpp"
#include "galmod/exactlin.hpp"

namespace galmod {

using nlohmann::json;
using namespace checks;

namespace checks {

Lattice global_mid_lattice(const GlobalTN& tn) {
  const Lattice& pts = tn.points_module().lattice();
  const Lattice& mid = tn.mid_lattice();
  const std::size_t a = tn.lambda_dim(), b = tn.mu_dim();
  RatMatrix eq(a, pts.rank() + mid.rank());
  for (std::size_t j = 0; j < pts.rank(); ++j) eq.set_col(j, tn.norm(pts.basis_vector(j)));
  for (std::size_t j = 0; j < mid.rank(); ++j) eq.set_col(pts.rank() + j, scale(tn.column_sums(mid.basis_vector(j)), Rat(-1)));
  IntMatrix ker = integer_kernel(eq);
  std::vector<RatVector> gens;
  for (const auto& col : ker.columns()) {
    IntVector cl(col.begin(), col.begin() + pts.rank()), cm(col.begin() + pts.rank(), col.end());
    RatVector v = pts.combine(cl), m = mid.combine(cm);
    v.insert(v.end(), m.begin(), m.end());
    gens.push_back(std::move(v));
  }
  return Lattice::from_generators(a + b, gens);
}

}  // namespace checks

namespace {

// A random (lambda, mu) in Y^mid: mu = N(lambda) + (z - N z) / k with z in Y_Z.
YMidElement random_mid(std::mt19937& rng, const LocalTN& t) {
  const Lattice& y = t.torus().subtorus();
  RatVector lambda = random_element(rng, t.torus().y_z ? y : t.torus().module().lattice());
  RatVector z = random_element(rng, y);
  RatVector mu = add(t.natural_norm(lambda), scale(sub(z, t.natural_norm(z)), Rat(1, rnd(rng, 1, 6))));
  return {lambda, mu};
}

json mid_witness(const YMidElement& x) { return {{"lambda", witness_vector(x.lambda)}, {"mu", witness_vector(x.mu)}}; }

json rig_witness(const YRigClass& r) { return {{"rep", witness_vector(r.rep)}, {"order", r.order.get_str()}}; }

GMap induced_cover(const TorusData& t) {
  const int g = t.group().order();
  auto cover = std::make_shared<const GModule>(tensor(GModule::regular(t.module().group_ptr()), t.module()));
  RatMatrix p(t.dim(), g * t.dim());
  for (int s = 0; s < g; ++s)
    for (std::size_t k = 0; k < t.dim(); ++k) p(k, s * t.dim() + k) = 1;
  return GMap{cover, t.y, p};
}

IntVector add_classes(const FgAbPresentation& p, const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int d = p.factor_order(i);
    out[i] = d == 0 ? Int(a[i] + b[i]) : mod_floor(a[i] + b[i], d);
  }
  return out;
}

long brute_force_order(const Lattice& l, const RatVector& x) {
  for (long k = 1; k <= 10000; ++k)
    if (l.contains(scale(x, Rat(k)))) return k;
  return 0;
}

template <class F>
void for_tori(const Catalog& c, F&& f) {
  for (const auto& [gname, g] : c.groups)
    for (const auto& t : c.tori_over(g)) f(g, t);
}

template <class F>
void for_site_tori(const Catalog& c, F&& f) {
  for (const auto& s : c.sites)
    for (const auto& t : c.tori_over(s.group_ptr())) f(s, t);
}

std::string site_torus(const GlobalSite& s, const NamedTorus& t) { return s.name() + " / " + t.name; }

void check_cartesian_local(CheckContext& c) {
  for_tori(c.catalog, [&](const GroupPtr& g, const NamedTorus& nt) {
    LocalTN tn(nt.torus);
    AbelianInvariants tor{tn.y_iso().invariants().torsion, 0};
    c.out.expect(tn.torsion_kernel().invariants() == tor, nt.name, "kernel column differs from the torsion of Y_G",
                 tn.torsion_kernel().invariants().to_string());
    std::vector<Int> levels = c.catalog.levels;
    if (std::find(levels.begin(), levels.end(), Int(g->order())) == levels.end()) levels.push_back(g->order());
    for (const auto& n : levels) {
      std::string inst = nt.name + " N=" + n.get_str();
      auto failure = tn.cartesian_square(n).short_exactness_failure();
      c.out.expect(!failure, inst, "not a bijection onto the fibre product: " + failure.value_or(""));
      c.out.expect(tn.mid_kernel(n).invariants() == tor, inst, "kernel of Y^mid differs from the torsion of Y_G",
                   tn.mid_kernel(n).invariants().to_string());
    }
  });
}

void check_cartesian_global(CheckContext& c) {
  for_site_tori(c.catalog, [&](const GlobalSite& s, const NamedTorus& nt) {
    GlobalTN tn(nt.torus, s);
    auto failure = tn.cartesian_square().short_exactness_failure();
    c.out.expect(!failure, site_torus(s, nt), "not a bijection onto the fibre product: " + failure.value_or(""));
  });
}

void check_consistency(CheckContext& c) {
  for_tori(c.catalog, [&](const GroupPtr&, const NamedTorus& nt) {
    LocalTN tn(nt.torus);
    for (int i = 0; i < 100; ++i) {
      YMidElement x = random_mid(c.rng, tn);
      if (!c.out.expect(tn.mid_check(x), nt.name, "sampled pair is not in Y^mid", mid_witness(x))) continue;
      YMidElement iso = tn.iso_to_mid(x.lambda);
      c.out.expect(tn.mid_check(iso), nt.name, "iso_to_mid leaves Y^mid", witness_vector(x.lambda));
      c.out.expect(tn.defect(iso).is_zero(), nt.name, "defect of iso_to_mid is nonzero", witness_vector(x.lambda));
      YRigClass lhs = tn.rig_add(tn.mid_to_rig(x), tn.rig_neg(tn.mid_to_rig(iso)));
      YRigClass rhs = tn.rig_neg(tn.defect(x));
      c.out.expect(lhs == rhs, nt.name, "(lambda - mu) - (lambda - N lambda) != -(mu - N mu)",
                   {{"pair", mid_witness(x)}, {"lhs", rig_witness(lhs)}, {"rhs", rig_witness(rhs)}});
    }
  });
}

void check_well_defined(CheckContext& c) {
  for_tori(c.catalog, [&](const GroupPtr&, const NamedTorus& nt) {
    LocalTN tn(nt.torus);
    for (int i = 0; i < 20; ++i) {
      YMidElement x = random_mid(c.rng, tn);
      RatVector iy = random_element(c.rng, tn.augmentation());
      YMidElement x2{add(x.lambda, random_element(c.rng, tn.augmentation())), x.mu};
      if (nt.torus.y_z && !tn.mid_check(x2)) x2.lambda = x.lambda;
      c.out.expect(tn.mid_to_rig(x2) == tn.mid_to_rig(x), nt.name, "mid_to_rig depends on the representative of lambda",
                   mid_witness(x));
      c.out.expect(tn.defect(x2) == tn.defect(x), nt.name, "defect depends on the representative of lambda",
                   mid_witness(x));
      YMidElement x3{x.lambda, add(x.mu, iy)};
      if (tn.mid_check(x3)) {
        c.out.expect(tn.mid_to_rig(x3) == tn.mid_to_rig(x), nt.name, "mid_to_rig changes when I Y is added to mu",
                     mid_witness(x));
        c.out.expect(tn.defect(x3) == tn.defect(x), nt.name, "defect changes when I Y is added to mu", mid_witness(x));
      }
      RatVector q = scale(random_element(c.rng, tn.augmentation()), Rat(1, rnd(c.rng, 1, 7)));
      YRigClass r = tn.rig_reduce(q);
      long order = brute_force_order(tn.augmentation(), q);
      c.out.expect(r.order == order, nt.name, "class order differs from direct search", witness_vector(q));
      c.out.expect(tn.augmentation().contains(sub(r.rep, q)), nt.name, "representative left the class",
                   witness_vector(q));
    }
  });
}

void check_functoriality(CheckContext& c) {
  for (const auto& [gname, g] : c.catalog.groups) {
    auto tori = c.catalog.tori_over(g);
    for (const auto& a : tori)
      for (const auto& b : tori) {
        if (a.torus.y_z || b.torus.y_z) continue;
        LocalTN ta(a.torus), tb(b.torus);
        std::string inst = a.name + " -> " + b.name;
        for (const auto& m : equivariant_hom_lattice(a.torus.module(), b.torus.module()).maps) {
          GMap f{a.torus.y, b.torus.y, m};
          for (int i = 0; i < 3; ++i) {
            YMidElement x = random_mid(c.rng, ta);
            YMidElement fx = push_forward(f, x);
            json w = {{"map", witness_matrix(m)}, {"pair", mid_witness(x)}};
            if (!c.out.expect(tb.mid_check(fx), inst, "image leaves Y^mid", w)) continue;
            c.out.expect(tb.mid_to_rig(fx) == tb.rig_reduce(f.apply(ta.mid_to_rig(x).rep)), inst,
                         "mid_to_rig does not commute with the map", w);
            c.out.expect(tb.defect(fx) == tb.rig_reduce(f.apply(ta.defect(x).rep)), inst,
                         "defect does not commute with the map", w);
            c.out.expect(tb.iso_to_mid(f.apply(x.lambda)).mu == f.apply(ta.iso_to_mid(x.lambda).mu), inst,
                         "iso_to_mid does not commute with the map", w);
          }
        }
      }
    for (const auto& t : tori) {
      if (t.torus.y_z) continue;
      LocalTN tn(t.torus);
      GMap p = induced_cover(t.torus);
      LocalTN cover{TorusData(*p.source)};
      std::string inst = t.name + " induced cover";
      for (int i = 0; i < 5; ++i) {
        YMidElement x = random_mid(c.rng, tn);
        YMidElement lift = lift_through(cover, p, x);
        c.out.expect(cover.mid_check(lift), inst, "lift is not in Y~^mid", mid_witness(x));
        YMidElement back = push_forward(p, lift);
        c.out.expect(back.lambda == x.lambda && back.mu == x.mu, inst, "lift does not map back", mid_witness(x));
        c.out.expect(tn.mid_to_rig(x) == tn.rig_reduce(p.apply(cover.mid_to_rig(lift).rep)), inst,
                     "mid_to_rig does not commute with the cover", mid_witness(x));
      }
    }
  }
}

void check_induced_vanishing(CheckContext& c) {
  for_tori(c.catalog, [&](const GroupPtr& g, const NamedTorus& nt) {
    if (nt.torus.y_z) return;
    try {
      induced_witness(nt.torus.module());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::KernelNotInduced && e.kind() != ErrorKind::RankTooLargeForSearch) throw;
      return;
    }
    LocalTN tn(nt.torus);
    c.out.expect(tn.torsion_kernel().invariants().is_trivial(), nt.name, "torsion of Y_G is nonzero",
                 tn.torsion_kernel().invariants().to_string());
    c.out.expect(tn.mid_kernel(Int(g->order())).invariants().is_trivial(), nt.name, "kernel of Y^mid is nonzero");
    GMap id{nt.torus.y, nt.torus.y, RatMatrix::identity(nt.torus.dim())};
    for (int i = 0; i < 4; ++i) {
      YMidElement x = random_mid(c.rng, tn);
      YMidElement l = lift_through(tn, id, x);
      c.out.expect(l.lambda == x.lambda && l.mu == x.mu, nt.name, "lift needed a correction", mid_witness(x));
    }
  });
}

// The C2 site with one split and one inert place, with Y = Z.
void check_worked_fixture(CheckContext& c) {
  for (const auto& s : c.catalog.sites) {
    const FiniteGroup& g = s.group();
    if (g.order() != 2 || s.places().size() != 2 || s.places()[0].decomposition.size() != 2 ||
        s.places()[1].decomposition.size() != 1)
      continue;
    GlobalTN tn(TorusData(GModule::trivial(s.group_ptr())), s);
    const std::string inst = s.name();
    // points: w1, w2, s w2; pairs: (1,v1), (1,v2), (s,v1), (s,v2)
    YMidGlobal x{{1, -1, 0}, {1, -1, 1, -1}};
    c.out.expect(tn.mid_check(x), inst, "fixture element is not in Y^mid");
    c.out.expect(tn.mu_from_places({{1}, {-1}}) == x.mu, inst, "mu from place values");
    c.out.expect(tn.lift_iso(x.lambda).mu == x.mu, inst, "lift of lambda", witness_vector(tn.lift_iso(x.lambda).mu));
    c.out.expect(tn.mid_kernel().rank() == 0, inst, "kernel of Y^mid -> Y^iso is nonzero");
    c.out.expect(!tn.mid_check({x.lambda, {2, -2, 2, -2}}), inst, "wrong mu accepted");
    c.out.expect(is_zero(tn.product_defect_sum(x)), inst, "product formula");
    auto l1 = tn.localize(x, 0), l2 = tn.localize(x, 1);
    c.out.expect(l1.lambda == RatVector{1} && l1.mu == RatVector{1}, inst, "localization at v1", mid_witness(l1));
    c.out.expect(l2.lambda == RatVector{-1} && l2.mu == RatVector{-1}, inst, "localization at v2", mid_witness(l2));
    c.out.expect(tn.local_torus(0).mid_check(l1) && tn.local_torus(1).mid_check(l2), inst,
                 "localizations are not in local Y^mid");
  }
}

// Functions on the points with values in Y_Z and total sum zero.
Lattice subtorus_points(const GlobalSite& s, const TorusData& t) {
  GModule yp = y_points(s, t.subtorus_module());
  const std::size_t d = t.dim();
  RatMatrix ones(1, s.size());
  for (std::size_t i = 0; i < s.size(); ++i) ones(0, i) = 1;
  return yp.lattice().preimage(kronecker(ones, RatMatrix::identity(d)), Lattice::zero(d));
}

void check_global_surjectivity(CheckContext& c) {
  for_site_tori(c.catalog, [&](const GlobalSite& s, const NamedTorus& nt) {
    std::string inst = site_torus(s, nt);
    GlobalTN tn(nt.torus, s);
    Lattice src = subtorus_points(s, nt.torus);
    std::vector<RatVector> targets;
    for (const auto& r : tn.y_iso().factor_representatives())
      if (!nt.torus.y_z) targets.push_back(r);
    for (int i = 0; i < 10; ++i) targets.push_back(random_element(c.rng, src));
    try {
      for (const auto& lambda : targets) {
        YMidGlobal x = tn.lift_iso(lambda);
        c.out.expect(tn.mid_check(x), inst, "lift is not in Y^mid", witness_vector(lambda));
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CoverConditionFails) throw;
      auto oracle = s.cover_witness();
      if (c.out.expect(oracle && e.witness() == s.group().label(*oracle), inst, "unexpected cover failure", e.witness()))
        c.out.skip(inst, "cover condition fails", e.witness());
    }
  });
}

void check_iso_transition(CheckContext& c) {
  for (const auto& nt : c.catalog.towers) {
    const Tower& tower = nt.tower;
    bool same_places = tower.upper().places().size() == tower.lower().places().size();
    for (const auto& t : c.catalog.tori_over(tower.lower().group_ptr())) {
      if (t.torus.y_z) continue;
      std::string inst = nt.name + " / " + t.name;
      IsoTransition tr(tower, t.torus);
      const auto& up = tr.upper();
      const auto& low = tr.lower();
      const std::size_t d = t.torus.dim();
      for (int i = 0; i < 10; ++i) {
        RatVector f = random_element(c.rng, low.points_module().lattice());
        RatVector bf = tr.bang(f);
        c.out.expect(low.y_iso().equal(tr.j(bf), f), inst, "j(f!) is not f", witness_vector(f));
        for (std::size_t u = 0; u < tower.upper().size(); ++u)
          if (!tower.upper().is_dotted(static_cast<int>(u)))
            c.out.expect(is_zero(RatVector(bf.begin() + u * d, bf.begin() + (u + 1) * d)), inst,
                         "f! is supported off the dotted set", witness_vector(f));
        c.out.expect(up.y_iso().equal(tr.push(f, tr.least_section()), tr.push(f, tr.greatest_section())), inst,
                     "push forward depends on the section", witness_vector(f));
        RatVector x = random_element(c.rng, low.points_module().lattice());
        int g = rnd(c.rng, 0, tower.lower().group().order() - 1);
        RatVector moved = add(f, sub(low.points_module().act(g, x), x));
        c.out.expect(up.y_iso().equal(tr.bang(moved), bf), inst, "! is not defined on classes", witness_vector(f));
        if (same_places) {
          RatVector big = random_element(c.rng, up.points_module().lattice());
          c.out.expect(up.y_iso().equal(tr.bang(tr.j(big)), big), inst, "! j is not the identity on classes",
                       witness_vector(big));
        }
      }
      if (!same_places) {
        // mass above a place outside the lower place set
        std::size_t u = 0;
        while (u < tower.upper().size() && tower.project_point(static_cast<int>(u)) >= 0) ++u;
        RatVector f(up.lambda_dim());
        f[0] = 1;
        f[u * d] = -1;
        try {
          tr.j(f);
          c.out.fail(inst, "j accepted mass outside S", witness_vector(f));
        } catch (const Error& e) {
          c.out.expect(e.kind() == ErrorKind::PlaceMismatch, inst, e.what());
        }
      }
    }
  }
}

void check_localization(CheckContext& c) {
  for (const auto& s : c.catalog.sites) {
    auto tori = c.catalog.tori_over(s.group_ptr());
    if (tori.empty()) continue;
    const int per = static_cast<int>((50 + tori.size() - 1) / tori.size());
    int total = 0;
    for (const auto& nt : tori) {
      std::string inst = site_torus(s, nt);
      GlobalTN tn(nt.torus, s);
      Lattice mid = global_mid_lattice(tn);
      const std::size_t a = tn.lambda_dim();
      for (int i = 0; i < per; ++i, ++total) {
        RatVector v = random_element(c.rng, mid);
        YMidGlobal x{RatVector(v.begin(), v.begin() + a), RatVector(v.begin() + a, v.end())};
        json w = {{"lambda", witness_vector(x.lambda)}, {"mu", witness_vector(x.mu)}};
        if (!c.out.expect(tn.mid_check(x), inst, "sampled element is not in Y^mid", w)) continue;
        c.out.expect(is_zero(tn.product_defect_sum(x)), inst, "sum of mu(1, v) is nonzero", w);
        for (std::size_t p = 0; p < s.places().size(); ++p) {
          int place = static_cast<int>(p);
          LocalTN loc = tn.local_torus(place);
          auto l1 = tn.localize(x, place), l2 = tn.localize(x, place, true);
          c.out.expect(loc.mid_check(l1), inst, "localization at " + s.places()[p].name + " is not in local Y^mid", w);
          c.out.expect(loc.iso_equal(l1.lambda, l2.lambda), inst, "localization depends on coset representatives", w);
          RatVector mu = tn.mu_at(x.mu, place);
          c.out.expect(loc.defect(l1) == loc.rig_reduce(sub(mu, loc.natural_norm(mu))), inst,
                       "defect does not commute with localization", w);
        }
      }
    }
    c.out.expect(total >= 50, s.name(), "fewer than 50 samples", total);
  }
}

void check_epsilon_correction(CheckContext& c) {
  for_site_tori(c.catalog, [&](const GlobalSite& s, const NamedTorus& nt) {
    if (nt.torus.y_z) return;
    std::string inst = site_torus(s, nt);
    if (auto w = s.cover_witness()) {
      c.out.skip(inst, "cover condition fails", s.group().label(*w));
      return;
    }
    GMap p = induced_cover(nt.torus);
    GModule k = p.source->with_lattice(p.kernel(), "K");
    if (k.rank() == 0) return;
    if (k.dim() > 16) {
      c.out.skip(inst, "induced kernel of dimension " + std::to_string(k.dim()) + " is above the size limit of 16");
      return;
    }
    GModule kp = y_points(s, k);
    const std::size_t d = k.dim();
    RatMatrix nn = kp.normalized_norm(s.group().whole());
    for (int i = 0; i < 3; ++i) {
      RatVector x(kp.dim());
      for (std::size_t w = 0; w < s.size(); ++w) {
        RatVector val = scale(random_element(c.rng, k.lattice()), Rat(1, rnd(c.rng, 1, 4)));
        std::copy(val.begin(), val.end(), x.begin() + w * d);
      }
      for (std::size_t w = 1; w < s.size(); ++w)
        for (std::size_t j = 0; j < d; ++j) x[j] -= x[w * d + j];
      RatVector eps = nn * x;
      RatVector e = dotted_correction(s, k, eps);
      for (std::size_t w = 0; w < s.size(); ++w)
        if (!s.is_dotted(static_cast<int>(w)))
          for (std::size_t j = 0; j < d; ++j)
            c.out.expect(e[w * d + j] == 0, inst, "correction supported off the dotted set", witness_vector(eps));
      c.out.expect(nn * e == eps, inst, "N(eps') != eps", witness_vector(eps));
    }
  });
}

void check_semiadelic(CheckContext& c) {
  for (const auto& s : c.catalog.sites) {
    std::vector<NamedTorus> tori;
    for (const auto& t : c.catalog.tori_over(s.group_ptr()))
      if (!t.torus.y_z) tori.push_back(t);
    if (tori.empty()) continue;
    const int per = static_cast<int>((30 + tori.size() - 1) / tori.size());
    for (const auto& nt : tori) {
      std::string inst = site_torus(s, nt);
      const TorusData& t = nt.torus;
      SemiAdelic sa(t, s);
      const LocalTN& whole = sa.global_torus();
      Lattice tors = t.module().lattice().preimage(whole.normalized_norm(), Lattice::zero(t.dim()));
      auto random_family = [&] {
        std::vector<RatVector> l;
        RatVector rest(t.dim());
        for (std::size_t v = 1; v < s.places().size(); ++v) {
          l.push_back(random_element(c.rng, t.module().lattice()));
          rest = add(rest, l.back());
        }
        l.insert(l.begin(), sub(random_element(c.rng, tors), rest));
        return l;
      };
      auto fam_witness = [](const std::vector<RatVector>& f) {
        json j = json::array();
        for (const auto& x : f) j.push_back(witness_vector(x));
        return j;
      };
      bool cover = !s.cover_witness();
      for (int i = 0; i < per; ++i) {
        auto a = random_family(), b = random_family();
        if (!c.out.expect(sa.iso_member(a), inst, "constructed family is not in Y^iso_sa", fam_witness(a))) continue;
        auto mu = sa.mid_preimage(a);
        if (!mu) {
          c.out.expect(!cover, inst, "no Y^mid_sa preimage", fam_witness(a));
          if (!cover) c.out.skip(inst, "no preimage without the cover condition", s.group().label(*s.cover_witness()));
        } else {
          c.out.expect(sa.mid_member(a, *mu), inst, "preimage is not in Y^mid_sa", fam_witness(a));
        }
        std::vector<RatVector> ab;
        for (std::size_t v = 0; v < a.size(); ++v) ab.push_back(add(a[v], b[v]));
        c.out.expect(sa.iota(ab) == add_classes(whole.y_iso(), sa.iota(a), sa.iota(b)), inst, "iota is not additive",
                     {{"a", fam_witness(a)}, {"b", fam_witness(b)}});
        auto ia = sa.iota(a);
        for (std::size_t k = 0; k < ia.size(); ++k)
          if (whole.y_iso().factor_order(k) == 0)
            c.out.expect(ia[k] == 0, inst, "iota lands outside the torsion", fam_witness(a));
      }
      // families with a broken torsion or sum condition are rejected
      for (std::size_t v = 0; v < s.places().size(); ++v) {
        const Lattice& aug = sa.local_torus(static_cast<int>(v)).augmentation();
        for (std::size_t j = 0; j < aug.rank(); ++j) {
          RatVector a = aug.basis_vector(j);
          std::vector<RatVector> fam(s.places().size(), RatVector(t.dim()));
          fam[v] = a;
          c.out.expect(sa.rig_member(fam), inst, "integral torsion family rejected", fam_witness(fam));
          int k = 2;
          while (t.module().lattice().contains(scale(a, Rat(1, k)))) ++k;
          fam[v] = scale(a, Rat(1, k));
          c.out.expect(!sa.rig_member(fam), inst, "family with non-integral sum accepted", fam_witness(fam));
        }
      }
      Lattice inv = fixed_lattice(t.module(), s.group().whole());
      for (std::size_t j = 0; j < inv.rank(); ++j) {
        std::vector<RatVector> fam(s.places().size(), RatVector(t.dim()));
        fam[0] = inv.basis_vector(j);
        c.out.expect(!sa.iso_member(fam), inst, "family with nonzero norm accepted", fam_witness(fam));
        if (inv.rank() == t.dim()) {
          // Y fixed pointwise: a non-torsion value is caught locally
          fam[0] = scale(inv.basis_vector(j), Rat(1, 2));
          if (s.places()[0].decomposition.size() > 1)
            c.out.expect(!sa.rig_member(fam), inst, "non-torsion local value accepted", fam_witness(fam));
        }
      }
    }
  }
}

}  // namespace

void add_tn_checks(std::vector<CheckSpec>& out) {
  out.push_back({"tn.cartesian_local", {6}, "local Y^mid is the fibre product over (Y (x) M^iso)^G", check_cartesian_local});
  out.push_back({"tn.cartesian_global", {6}, "global Y^mid is the fibre product over (M^iso (x) Y_Z)^G",
                 check_cartesian_global});
  out.push_back({"tn.consistency", {6}, "(lambda - mu) - (lambda - N lambda) = -(mu - N mu) on 100 pairs per torus",
                 check_consistency});
  out.push_back({"tn.well_defined", {6}, "mid_to_rig and defect do not depend on representatives", check_well_defined});
  out.push_back({"tn.functoriality", {6}, "maps of tori and induced covers commute with the comparison maps",
                 check_functoriality});
  out.push_back({"tn.induced_vanishing", {6}, "induced tori: no torsion and no correction", check_induced_vanishing});
  out.push_back({"tn.worked_fixture", {6}, "worked C2 example with one split and one inert place", check_worked_fixture});
  out.push_back({"tn.global_surjectivity", {6}, "every class of Y^iso lifts to Y^mid on sites with cover",
                 check_global_surjectivity});
  out.push_back({"tn.iso_transition", {6}, "j and ! between tower levels", check_iso_transition});
  out.push_back({"tn.epsilon_correction", {6}, "invariant correction terms have dotted lifts", check_epsilon_correction});
  out.push_back({"tn.localization", {7}, "localizations lie in local Y^mid and sum of mu(1, v) is 0",
                 check_localization});
  out.push_back({"tn.semiadelic", {9}, "semi-adelic membership, iota additivity and lifts to Y^mid_sa",
                 check_semiadelic});
}

}  // namespace galmod
