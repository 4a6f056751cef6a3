#include <algorithm>

#include "check_util.hpp"
#include "galmod/error.hpp"
#include "galmod/exactlin.hpp"

namespace galmod {

using nlohmann::json;
using namespace checks;

namespace {

void check_snf(CheckContext& c) {
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = rnd(c.rng, 1, 8), n = rnd(c.rng, 1, 8);
    IntMatrix a = random_int_matrix(c.rng, r, n, -50, 50);
    if (trial % 5 == 0 && r > 1)  // force rank deficiency now and then
      for (std::size_t j = 0; j < n; ++j) a(r - 1, j) = a(0, j) * 2;
    std::string inst = "random " + std::to_string(r) + "x" + std::to_string(n);
    SmithForm s = snf(a);
    c.out.expect(s.U * a * s.V == s.D, inst, "U A V != D", {{"A", witness_matrix(a)}});
    Int du = bareiss_det(s.U), dv = bareiss_det(s.V);
    c.out.expect(du * du == 1 && dv * dv == 1, inst, "transform not unimodular",
                 {{"det_U", du.get_str()}, {"det_V", dv.get_str()}, {"A", witness_matrix(a)}});
    bool diag = true;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && s.D(i, j) != 0) diag = false;
    c.out.expect(diag, inst, "D is not diagonal", {{"D", witness_matrix(s.D)}});
    IntVector d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      bool ok = d[i] >= 0 && (d[i] == 0 ? d[i + 1] == 0 : d[i + 1] % d[i] == 0);
      c.out.expect(ok, inst, "divisibility chain broken", {{"D", witness_matrix(s.D)}});
    }
    if (r == n) {
      Int prod = 1;
      for (const auto& x : d) prod *= x;
      Int det = bareiss_det(a);
      c.out.expect(prod == abs(det), inst, "diagonal product differs from |det A|", {{"A", witness_matrix(a)}});
    }
  }
}

void check_condition_lattice(CheckContext& c) {
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = rnd(c.rng, 2, 4);
    Int d = rnd(c.rng, 1, 4);
    RatMatrix aeq(rnd(c.rng, 0, 1), n), bint(rnd(c.rng, 1, 2), n);
    for (std::size_t i = 0; i < aeq.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) aeq(i, j) = rnd(c.rng, -2, 2);
    for (std::size_t i = 0; i < bint.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) bint(i, j) = make_rat(rnd(c.rng, -2, 2), rnd(c.rng, 1, 2));
    std::string inst = "instance " + std::to_string(trial);
    json w = {{"n", n}, {"d", d.get_str()}, {"equations", witness_matrix(aeq)}, {"integrality", witness_matrix(bint)}};
    Lattice l = condition_lattice(n, d, aeq, bint);
    auto ok = [&](const RatVector& x) {
      RatVector dx = scale(x, Rat(d));
      return is_integral(dx) && is_zero(aeq * x) && is_integral(bint * x);
    };
    for (std::size_t j = 0; j < l.rank(); ++j) {
      RatVector b = l.basis_vector(j);
      c.out.expect(ok(b), inst, "basis vector violates the conditions", {{"instance", w}, {"vector", witness_vector(b)}});
      c.out.expect(l.contains(scale(b, Rat(-1))), inst, "not closed under negation", w);
      if (j > 0) c.out.expect(l.contains(add(b, l.basis_vector(j - 1))), inst, "not closed under addition", w);
    }
    // points of the scaled integer system: y in Z^n, aeq y = 0, bint y = 0 mod d
    IntMatrix ker = integer_kernel(aeq.rows() ? aeq : RatMatrix(1, n));
    Lattice sol = Lattice::from_generators(n, ker.columns().empty() ? std::vector<RatVector>{} : [&] {
      std::vector<RatVector> cols;
      for (const auto& col : ker.columns()) cols.push_back(to_rat(col));
      return cols;
    }());
    for (int s = 0; s < 60; ++s) {
      RatVector y = s % 2 ? random_element(c.rng, sol, 6) : to_rat([&] {
        IntVector v(n);
        for (auto& x : v) x = rnd(c.rng, -6, 6);
        return v;
      }());
      RatVector x = scale(y, Rat(1, 1) / Rat(d));
      bool expect = ok(x);
      c.out.expect(l.contains(x) == expect, inst, expect ? "solution is not a member" : "non-solution is a member",
                   {{"instance", w}, {"point", witness_vector(x)}});
    }
  }
}

void check_subquotient(CheckContext& c) {
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = rnd(c.rng, 1, 5), k = rnd(c.rng, 0, n);
    std::string inst = "instance " + std::to_string(trial);
    IntMatrix rel = random_int_matrix(c.rng, n, k, -6, 6);
    FgAbPresentation base = FgAbPresentation::from_relations(rel);
    IntMatrix u = random_unimodular(c.rng, n), v = random_unimodular(c.rng, k);
    FgAbPresentation moved = FgAbPresentation::from_relations(u * rel * v);
    c.out.expect(base.invariants() == moved.invariants(), inst, "invariants change under unimodular change of basis",
                 {{"relations", witness_matrix(rel)}, {"U", witness_matrix(u)}, {"V", witness_matrix(v)}});
    // the same group as a subquotient of a skewed ambient lattice
    RatMatrix t = to_rat(random_unimodular(c.rng, n));
    for (std::size_t i = 0; i < n; ++i) {
      Rat k = rnd(c.rng, 1, 3);
      for (std::size_t j = 0; j < n; ++j) t(j, i) *= k;
    }
    Rat shrink = make_rat(1, rnd(c.rng, 1, 4));
    std::vector<RatVector> amb_gens, sub_gens;
    for (std::size_t j = 0; j < n; ++j) amb_gens.push_back(scale(t.col(j), shrink));
    RatMatrix sub_m = t * to_rat(rel);
    for (std::size_t j = 0; j < k; ++j) sub_gens.push_back(scale(sub_m.col(j), shrink));
    FgAbPresentation sq =
        FgAbPresentation::subquotient(Lattice::from_generators(n, sub_gens), Lattice::from_generators(n, amb_gens));
    c.out.expect(sq.invariants() == base.invariants(), inst, "subquotient invariants depend on the basis",
                 {{"relations", witness_matrix(rel)}, {"ambient", witness_matrix(t)}});
  }
}

// gmod

void check_module_axioms(CheckContext& c) {
  for (const auto& nm : c.catalog.modules) {
    const GModule& m = *nm.module;
    const FiniteGroup& g = m.group();
    const std::size_t d = m.dim();
    c.out.expect(m.action(0) == RatMatrix::identity(d), nm.name, "identity does not act trivially",
                 witness_matrix(m.action(0)));
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        c.out.expect(m.action(a) * m.action(b) == m.action(g.mul(a, b)), nm.name,
                     "action is not a homomorphism at (" + g.label(a) + ", " + g.label(b) + ")",
                     witness_matrix(m.action(a) * m.action(b) - m.action(g.mul(a, b))));
    for (int a = 0; a < g.order(); ++a) {
      c.out.expect(m.lattice().contains(m.lattice().image(m.action(a))), nm.name,
                   "lattice not stable under " + g.label(a), witness_matrix(m.action(a)));
      c.out.expect(m.relations().contains(m.relations().image(m.action(a))), nm.name,
                   "relations not stable under " + g.label(a), witness_matrix(m.action(a)));
    }
    c.out.expect(m.lattice().contains(m.relations()), nm.name, "relations outside the lattice");
  }
}

void check_periodicity(CheckContext& c) {
  for (const auto& [gname, g] : c.catalog.groups) {
    if (!is_cyclic(*g)) continue;
    std::vector<std::pair<std::string, GModule>> mods;
    for (const auto& nm : c.catalog.modules)
      if (nm.group == gname) mods.emplace_back(nm.name, *nm.module);
    for (const auto& n : c.catalog.levels) mods.emplace_back("M^mid " + level_label(gname, n), *build_local(g, n).mid);
    for (const auto& [name, m] : mods)
      for (const auto& h : g->all_subgroups()) {
        std::string inst = name + " over " + subgroup_label(*g, h);
        auto h1 = tate_cohomology(m, h, 1).invariants(), hm1 = tate_cohomology(m, h, -1).invariants();
        auto h2 = tate_cohomology(m, h, 2).invariants(), h0 = tate_cohomology(m, h, 0).invariants();
        c.out.expect(h1 == hm1, inst, "H^1 differs from H^-1", {{"H^1", h1.to_string()}, {"H^-1", hm1.to_string()}});
        c.out.expect(h2 == h0, inst, "H^2 differs from H^0", {{"H^2", h2.to_string()}, {"H^0", h0.to_string()}});
      }
  }
}

void check_induced_vanishing(CheckContext& c) {
  for (const auto& [gname, g] : c.catalog.groups) {
    if (g->order() > 6) continue;
    for (std::size_t r = 1; r <= 3; ++r) {
      GModule ind = GModule::induced_from_trivial(g, r);
      std::string base = "Ind(" + gname + ", Z^" + std::to_string(r) + ")";
      for (const auto& h : g->all_subgroups())
        for (int deg : {-1, 0, 1}) {
          auto inv = tate_cohomology(ind, h, deg).invariants();
          c.out.expect(inv.is_trivial(), base + " over " + subgroup_label(*g, h),
                       "degree " + std::to_string(deg) + " does not vanish", inv.to_string());
        }
      std::vector<RatVector> hint;
      for (std::size_t i = 0; i < r; ++i) hint.push_back(unit_vector(ind.dim(), i * g->order()));
      auto w = induced_witness(ind, hint);
      c.out.expect(is_induced_basis(ind, w.generators), base, "witness is not an induced basis");
    }
  }
}

void check_pinned_h0(CheckContext& c) {
  for (const auto& [gname, g] : c.catalog.groups) {
    if (g->order() != 2) continue;
    LocalLevel l = build_local(g, 2);
    auto h0 = tate_cohomology(*l.mid, g->whole(), 0).invariants();
    c.out.expect(h0.to_string() == "Z/2", "M^mid " + level_label(gname, 2), "expected Z/2", h0.to_string());
  }
}

void check_norm_idempotent(CheckContext& c) {
  for (const auto& nm : c.catalog.modules) {
    const GModule& m = *nm.module;
    for (const auto& h : m.group().all_subgroups()) {
      std::string inst = nm.name + " over " + subgroup_label(m.group(), h);
      RatMatrix n = m.normalized_norm(h);
      c.out.expect(n * n == n, inst, "normalized norm is not idempotent", witness_matrix(n));
      // statements about M (x) Q hold modulo the Q-span of the relations
      const Lattice& rel = m.relations();
      RatMatrix eqs = rel.rank() == 0 ? RatMatrix::identity(m.dim()) : rel.span_equations();
      Lattice inv = fixed_lattice(m, h);
      for (std::size_t j = 0; j < inv.rank(); ++j)
        c.out.expect(is_zero(eqs * sub(n * inv.basis_vector(j), inv.basis_vector(j))), inst,
                     "normalized norm moves an invariant", witness_vector(inv.basis_vector(j)));
      for (int a : h)
        c.out.expect(m.action(a) * n == n, inst, "image of the normalized norm is not invariant", witness_matrix(n));
      // rank over Q of the image equals the rank of the invariants
      Lattice img = m.lattice().image(n) + rel;
      c.out.expect(img.rank() == inv.rank(), inst, "image rank differs from the invariant rank",
                   {{"image", img.rank() - rel.rank()}, {"invariants", inv.rank() - rel.rank()}});
    }
  }
}

void check_canonical_submodules(CheckContext& c) {
  for (const auto& nm : c.catalog.modules) {
    const GModule& m = *nm.module;
    const FiniteGroup& g = m.group();
    for (const auto& h : g.all_subgroups()) {
      std::string inst = nm.name + " over " + subgroup_label(g, h);
      CanonicalSubmodules cs = canonical_submodules(m, h);
      c.out.expect(cs.invariants == fixed_lattice(m, h), inst, "invariants differ from the fixed lattice");
      for (std::size_t j = 0; j < m.lattice().rank(); ++j) {
        RatVector x = m.lattice().basis_vector(j);
        c.out.expect(cs.invariants.contains(cs.norm * x), inst, "N(M) not inside M^H", witness_vector(x));
        for (int a : h) {
          RatVector ix = sub(m.act(a, x), x);
          c.out.expect(m.relations().contains(cs.norm * ix), inst, "I M not inside ker N", witness_vector(ix));
          c.out.expect(cs.augmentation.contains(ix), inst, "(g - 1) x outside the augmentation", witness_vector(ix));
        }
      }
      c.out.expect(cs.coinvariants.invariants().free_rank + m.relations().rank() == cs.invariants.rank(), inst,
                   "free rank of coinvariants differs from the rank of invariants",
                   cs.coinvariants.invariants().to_string());
    }
  }
}

void check_hom_rank(CheckContext& c) {
  for (const auto& a : c.catalog.modules)
    for (const auto& b : c.catalog.modules) {
      if (a.group != b.group) continue;
      if (!a.module->torsion_free() || !b.module->torsion_free()) continue;
      std::string inst = a.name + " -> " + b.name;
      HomLattice hom = equivariant_hom_lattice(*a.module, *b.module);
      std::size_t expect = fixed_lattice(tensor(dual(*a.module), *b.module), a.module->group().whole()).rank();
      c.out.expect(hom.rank() == expect, inst, "rank differs from the invariants of X^dual (x) M",
                   {{"hom", hom.rank()}, {"invariants", expect}});
      for (const auto& f : hom.maps)
        for (int g = 0; g < a.module->group().order(); ++g)
          c.out.expect(f * a.module->action(g) == b.module->action(g) * f, inst, "basis map is not equivariant",
                       witness_matrix(f));
    }
}

// sites

void check_point_counts(CheckContext& c) {
  for (const auto& s : c.catalog.sites) {
    const FiniteGroup& g = s.group();
    std::size_t expect = 0;
    for (const auto& p : s.places()) expect += g.order() / p.decomposition.size();
    c.out.expect(s.size() == expect, s.name(), "point count differs from the sum of indices",
                 {{"points", s.size()}, {"expected", expect}});
    for (std::size_t v = 0; v < s.places().size(); ++v) {
      int w = s.dotted(static_cast<int>(v));
      Subgroup stab;
      for (int a = 0; a < g.order(); ++a)
        if (s.act(a, w) == w) stab.push_back(a);
      c.out.expect(stab == s.places()[v].decomposition, s.name(),
                   "stabilizer of the dotted point of " + s.places()[v].name + " is not its decomposition group",
                   subgroup_label(g, stab));
    }
  }
}

void check_cover(CheckContext& c) {
  for (const auto& s : c.catalog.sites) {
    const FiniteGroup& g = s.group();
    std::optional<int> oracle;
    for (int a = 0; a < g.order() && !oracle; ++a) {
      bool inside = false;
      for (const auto& p : s.places()) inside |= std::binary_search(p.decomposition.begin(), p.decomposition.end(), a);
      if (!inside) oracle = a;
    }
    c.out.expect(s.cover_witness() == oracle, s.name(), "cover witness differs from direct search",
                 oracle ? json(g.label(*oracle)) : json(nullptr));
    bool all_ok = true;
    std::string seen;
    GModule z = GModule::trivial(s.group_ptr());
    for (std::size_t w = 1; w < s.size(); ++w) {
      RatVector b(s.size());
      b[w] = 1;
      b[0] = -1;
      try {
        auto res = normalize_support(s, z, b);
        for (std::size_t u = 0; u < s.size(); ++u)
          if (!s.is_dotted(static_cast<int>(u)))
            c.out.expect(res.value[u] == 0, s.name(), "normalized value supported off the dotted set", witness_vector(b));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::CoverConditionFails) throw;
        all_ok = false;
        seen = e.witness();
      }
    }
    c.out.expect(all_ok == !oracle.has_value(), s.name(), "normalization success disagrees with the cover condition",
                 oracle ? json(g.label(*oracle)) : json(nullptr));
  }
}

void check_tower_equivariance(CheckContext& c) {
  for (const auto& nt : c.catalog.towers) {
    const Tower& t = nt.tower;
    const GlobalSite& up = t.upper();
    const GlobalSite& lo = t.lower();
    for (std::size_t u = 0; u < up.size(); ++u) {
      int w = t.project_point(static_cast<int>(u));
      if (w < 0) {
        c.out.expect(t.lower_place(up.points()[u].place) < 0, nt.name, "point over S has no image");
        continue;
      }
      if (up.is_dotted(static_cast<int>(u)))
        c.out.expect(lo.is_dotted(w), nt.name, "dotted point maps outside the dotted set", up.point_label(static_cast<int>(u)));
      for (int g = 0; g < up.group().order(); ++g)
        c.out.expect(t.project_point(up.act(g, static_cast<int>(u))) == lo.act(t.proj(g), w), nt.name,
                     "point map is not equivariant",
                     {{"element", up.group().label(g)}, {"point", up.point_label(static_cast<int>(u))}});
    }
  }
}

void check_search_lifts(CheckContext& c) {
  bool pinned = false;
  for (const auto& [gname, g] : c.catalog.groups) {
    if (g->order() > 12) continue;
    auto subs = g->all_subgroups();
    // the S3 configurations: a transposition class with the rotation subgroup
    if (g->order() == 6 && !is_cyclic(*g)) {
      pinned = true;
      Subgroup t, r;
      for (const auto& h : subs) {
        if (h.size() == 2 && t.empty()) t = h;
        if (h.size() == 3) r = h;
      }
      auto two = search_lifts(*g, {t, r});
      c.out.expect(!two.has_value(), gname + " {t, r}", "search found a cover");
      c.out.expect(!lifts_exist_brute_force(*g, {t, r}), gname + " {t, r}", "enumeration found a cover");
      auto four = search_lifts(*g, {t, t, t, r});
      c.out.expect(four.has_value(), gname + " {t, t, t, r}", "search found no cover");
      if (four) c.out.expect(covers(*g, *four), gname + " {t, t, t, r}", "result does not cover");
      c.out.expect(lifts_exist_brute_force(*g, {t, t, t, r}), gname + " {t, t, t, r}", "enumeration found no cover");
    }
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Subgroup> classes;
      int places = rnd(c.rng, 1, 5);
      for (int i = 0; i < places; ++i) {
        Subgroup h = subs[rnd(c.rng, 0, static_cast<int>(subs.size()) - 1)];
        if (h.size() == static_cast<std::size_t>(g->order()) && g->order() > 1) h = g->trivial();
        classes.push_back(h);
      }
      json w = json::array();
      for (const auto& h : classes) w.push_back(subgroup_label(*g, h));
      auto res = search_lifts(*g, classes);
      bool brute = lifts_exist_brute_force(*g, classes);
      c.out.expect(res.has_value() == brute, gname + " random", "search disagrees with enumeration", w);
      if (res) {
        c.out.expect(covers(*g, *res), gname + " random", "result does not cover", w);
        for (std::size_t i = 0; i < classes.size(); ++i) {
          auto cls = g->conjugacy_class(classes[i]);
          c.out.expect(std::find(cls.begin(), cls.end(), (*res)[i]) != cls.end(), gname + " random",
                       "chosen subgroup is not conjugate to the requested one", w);
        }
      }
    }
  }
  if (!pinned) c.out.skip("S3 configurations", "no nonabelian group of order 6 in the catalog");
}

}  // namespace

void add_exactlin_checks(std::vector<CheckSpec>& out) {
  out.push_back({"exactlin.snf", {3}, "Smith form: U A V = D, unimodular U and V, divisibility chain", check_snf});
  out.push_back({"exactlin.condition_lattice", {3},
                 "condition lattice: basis satisfies the conditions, membership matches sampled solutions",
                 check_condition_lattice});
  out.push_back({"exactlin.subquotient_basis_independence", {3},
                 "invariant factors of a subquotient do not depend on the chosen bases", check_subquotient});
}

void add_gmod_checks(std::vector<CheckSpec>& out) {
  out.push_back({"gmod.module_axioms", {5}, "catalog modules: identity, homomorphism, stable lattice and relations",
                 check_module_axioms});
  out.push_back({"gmod.periodicity", {5}, "cyclic groups: H^1 = H^-1 and H^2 = H^0", check_periodicity});
  out.push_back({"gmod.induced_vanishing", {5}, "induced modules: Tate groups vanish in degrees -1, 0, 1",
                 check_induced_vanishing});
  out.push_back({"gmod.pinned_h0", {5}, "H^0(C2, M^mid at N = 2) = Z/2", check_pinned_h0});
  out.push_back({"gmod.norm_idempotent", {5}, "normalized norm is idempotent with image the rational invariants",
                 check_norm_idempotent});
  out.push_back({"gmod.canonical_submodules", {5}, "N(M) inside M^H and I M inside ker N", check_canonical_submodules});
  out.push_back({"gmod.hom_rank", {5}, "rank of Hom_G(X, M) equals rank of (X^dual (x) M)^G", check_hom_rank});
}

void add_sites_checks(std::vector<CheckSpec>& out) {
  out.push_back({"sites.point_counts", {1}, "|S_E| is the sum of indices; dotted stabilizers are decomposition groups",
                 check_point_counts});
  out.push_back({"sites.cover_iff_normalize", {2}, "cover condition holds iff support normalization succeeds",
                 check_cover});
  out.push_back({"sites.tower_equivariance", {4}, "tower point maps are equivariant and keep dotted points dotted",
                 check_tower_equivariance});
  out.push_back({"sites.search_lifts", {10}, "lift search agrees with exhaustive enumeration", check_search_lifts});
}

}  // namespace galmod
