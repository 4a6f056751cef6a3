#include <doctest.h>

#include <random>

#include "galmod/sites.hpp"

using namespace galmod;

namespace {

GroupPtr group(const FiniteGroup& g) { return std::make_shared<FiniteGroup>(g); }

Subgroup gen(const FiniteGroup& g, const std::vector<std::string>& labels) {
  std::vector<int> x;
  for (const auto& l : labels) x.push_back(g.index_of(l));
  return g.generated(x);
}

// Number of cosets by counting orbits of the site action directly.
std::size_t orbit_count(const GlobalSite& s) {
  std::vector<bool> seen(s.size(), false);
  std::size_t orbits = 0;
  for (std::size_t w = 0; w < s.size(); ++w) {
    if (seen[w]) continue;
    ++orbits;
    for (int g = 0; g < s.group().order(); ++g) seen[s.act(g, static_cast<int>(w))] = true;
  }
  return orbits;
}

}  // namespace

TEST_CASE("point counts of sites") {
  auto c2 = group(FiniteGroup::cyclic(2));
  GlobalSite a(c2, {{"v1", c2->whole()}, {"v2", c2->trivial()}});
  CHECK(a.size() == 3);
  CHECK(orbit_count(a) == 2);
  auto c1 = group(FiniteGroup::cyclic(1));
  CHECK(GlobalSite(c1, {{"v", {0}}}).size() == 1);
  auto s3 = group(FiniteGroup::symmetric(3));
  GlobalSite b(s3, {{"v0", s3->trivial()}, {"v1", gen(*s3, {"(1 2)"})}, {"v2", gen(*s3, {"(1 2 3)"})}});
  CHECK(b.size() == 11);
  CHECK(orbit_count(b) == 3);
  CHECK_THROWS_AS(GlobalSite(c2, {}), Error);
  CHECK_THROWS_AS(GlobalSite(s3, {{"v", {0, 1, 2}}}), Error);
  CHECK_THROWS_AS(GlobalSite(c2, {{"v", {0}}, {"v", {0}}}), Error);
}

TEST_CASE("stabilizer of each dotted point is its decomposition group") {
  auto s3 = group(FiniteGroup::symmetric(3));
  for (const auto& h : s3->all_subgroups()) {
    GlobalSite s(s3, {{"v", h}, {"u", s3->trivial()}});
    Subgroup stab;
    for (int g = 0; g < s3->order(); ++g)
      if (s.act(g, s.dotted(0)) == s.dotted(0)) stab.push_back(g);
    CHECK(stab == h);
    for (std::size_t w = 0; w < s.size(); ++w) {
      int g = s.least_to_dotted(static_cast<int>(w));
      CHECK(s.is_dotted(s.act(g, static_cast<int>(w))));
      for (int x = 0; x < s3->order(); ++x)
        for (int y = 0; y < s3->order(); ++y)
          CHECK(s.act(s3->mul(x, y), static_cast<int>(w)) == s.act(x, s.act(y, static_cast<int>(w))));
    }
  }
}

TEST_CASE("cover condition") {
  auto s3 = group(FiniteGroup::symmetric(3));
  GlobalSite bad(s3, {{"v0", s3->trivial()}, {"v1", gen(*s3, {"(1 2)"})}, {"v2", gen(*s3, {"(1 2 3)"})}});
  REQUIRE(bad.cover_witness().has_value());
  CHECK(s3->label(*bad.cover_witness()) == "(2 3)");
  try {
    bad.check_cover();
    FAIL("expected CoverConditionFails");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CoverConditionFails);
    CHECK(e.witness() == "(2 3)");
  }
  auto c2 = group(FiniteGroup::cyclic(2));
  CHECK_NOTHROW(GlobalSite(c2, {{"v1", c2->whole()}, {"v2", c2->trivial()}}).check_cover());
  for (const auto& h : s3->all_subgroups()) {
    GlobalSite s(s3, {{"a", h}, {"b", s3->whole()}});
    CHECK_FALSE(s.cover_witness().has_value());
  }
}

TEST_CASE("lift search agrees with enumeration") {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  Subgroup t = gen(s3, {"(1 2)"});
  Subgroup r = gen(s3, {"(1 2 3)"});
  CHECK_FALSE(search_lifts(s3, {t, r}).has_value());
  CHECK_FALSE(lifts_exist_brute_force(s3, {t, r}));
  auto four = search_lifts(s3, {t, t, t, r});
  REQUIRE(four.has_value());
  std::vector<Subgroup> expect = {gen(s3, {"(1 2)"}), gen(s3, {"(1 3)"}), gen(s3, {"(2 3)"}), r};
  std::sort(expect.begin(), expect.end());
  auto got = *four;
  std::sort(got.begin(), got.end());
  CHECK(got == expect);
  CHECK(covers(s3, *four));
  CHECK(lifts_exist_brute_force(s3, {t, t, t, r}));
  auto whole = search_lifts(s3, {s3.whole()});
  REQUIRE(whole.has_value());
  CHECK(whole->front() == s3.whole());

  // random configurations over small groups
  std::mt19937 rng(7);
  std::vector<FiniteGroup> groups = {FiniteGroup::cyclic(4), s3,
                                     FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))};
  for (int trial = 0; trial < 60; ++trial) {
    const auto& g = groups[trial % groups.size()];
    auto subs = g.all_subgroups();
    std::vector<Subgroup> classes;
    int places = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < places; ++i) {
      auto h = subs[rng() % subs.size()];
      if (h.size() == static_cast<std::size_t>(g.order())) h = g.trivial();
      classes.push_back(h);
    }
    auto res = search_lifts(g, classes);
    CHECK(res.has_value() == lifts_exist_brute_force(g, classes));
    if (res) {
      CHECK(covers(g, *res));
      for (std::size_t i = 0; i < classes.size(); ++i) {
        auto cls = g.conjugacy_class(classes[i]);
        CHECK(std::find(cls.begin(), cls.end(), (*res)[i]) != cls.end());
      }
    }
  }
}

TEST_CASE("covering lifts need not be conjugate") {
  auto s3 = group(FiniteGroup::symmetric(3));
  Subgroup t12 = gen(*s3, {"(1 2)"}), t13 = gen(*s3, {"(1 3)"}), r = gen(*s3, {"(1 2 3)"});
  Subgroup t23 = gen(*s3, {"(2 3)"});
  GlobalSite a(s3, {{"v1", t12}, {"v2", t12}, {"v3", r}, {"v4", t13}, {"v5", t23}});
  GlobalSite b(s3, {{"v1", t12}, {"v2", t13}, {"v3", r}, {"v4", t13}, {"v5", t23}});
  CHECK_FALSE(a.cover_witness().has_value());
  CHECK_FALSE(b.cover_witness().has_value());
  CHECK_FALSE(simultaneous_conjugator(a, b).has_value());
  // conjugating every place by one element is always detected
  for (int g = 0; g < s3->order(); ++g) {
    std::vector<Place> moved;
    for (const auto& p : a.places()) moved.push_back({p.name, s3->conjugate(g, p.decomposition)});
    GlobalSite c(s3, moved);
    auto x = simultaneous_conjugator(a, c);
    REQUIRE(x.has_value());
    for (std::size_t v = 0; v < moved.size(); ++v) CHECK(s3->conjugate(*x, a.places()[v].decomposition) == moved[v].decomposition);
  }
}

TEST_CASE("tower point map is equivariant") {
  auto c2 = group(FiniteGroup::cyclic(2));
  auto v4 = group(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
  GlobalSite lower(c2, {{"v1", c2->whole()}, {"v2", c2->trivial()}});
  std::vector<int> proj(4);
  for (int g = 0; g < 4; ++g) proj[g] = g / 2;
  GlobalSite upper(v4, {{"v1", v4->whole()}, {"v2", v4->generated({v4->index_of("(e,g)")})}, {"v3", v4->trivial()}});
  Tower t(lower, upper, proj);
  CHECK(t.degree() == 2);
  CHECK(t.local_degree(0) == 2);
  CHECK(t.local_degree(1) == 2);
  CHECK(t.lower_place(2) == -1);
  for (std::size_t u = 0; u < upper.size(); ++u) {
    int w = t.project_point(static_cast<int>(u));
    if (upper.points()[u].place == 2) {
      CHECK(w == -1);
      continue;
    }
    if (upper.is_dotted(static_cast<int>(u))) CHECK(lower.is_dotted(w));
    for (int g = 0; g < 4; ++g) CHECK(t.project_point(upper.act(g, static_cast<int>(u))) == lower.act(proj[g], w));
  }
  // decomposition groups that do not project onto the lower ones
  GlobalSite wrong(v4, {{"v1", v4->generated({v4->index_of("(e,g)")})}, {"v2", v4->trivial()}});
  CHECK_THROWS_AS(Tower(lower, wrong, proj), Error);
  CHECK_THROWS_AS(Tower(lower, upper, {0, 0, 0, 0}), Error);
  GlobalSite missing(v4, {{"v1", v4->whole()}});
  CHECK_THROWS_AS(Tower(lower, missing, proj), Error);
}
