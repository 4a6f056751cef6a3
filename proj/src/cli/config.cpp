#include "galmod/cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "galmod/error.hpp"

namespace galmod {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw Error(ErrorKind::ConfigError, where + ": " + msg);
}

const json& member(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

void only(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }))
      fail(where, "unknown field '" + it.key() + "'");
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

long integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long>();
}

Rat rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const std::exception&) {
      fail(where, "malformed rational '" + j.get<std::string>() + "'");
    }
  }
  fail(where, "expected an integer or a \"p/q\" string");
}

std::vector<RatVector> vectors(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of vectors");
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != dim) fail(at, "expected a vector of length " + std::to_string(dim));
    RatVector v;
    for (std::size_t k = 0; k < dim; ++k) v.push_back(rational(j[i][k], at + "[" + std::to_string(k) + "]"));
    out.push_back(std::move(v));
  }
  return out;
}

RatMatrix matrix(const json& j, std::size_t dim, const std::string& where) {
  auto rows = vectors(j, dim, where);
  if (rows.size() != dim) fail(where, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
  return RatMatrix::from_rows(rows);
}

int element(const FiniteGroup& g, const json& j, const std::string& where) {
  std::string label = text(j, where);
  for (int a = 0; a < g.order(); ++a)
    if (g.label(a) == label) return a;
  fail(where, "unknown element '" + label + "' of " + g.name());
}

// Run a construction, turning library errors into located config errors.
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConfigError) throw;
    fail(where, e.what());
  }
}

GroupPtr parse_group(const json& j, const std::string& where, const Catalog& c) {
  only(j, {"name", "cyclic", "product", "permutations", "table", "labels"}, where);
  if (j.contains("cyclic") + j.contains("product") + j.contains("permutations") + j.contains("table") != 1)
    fail(where, "give exactly one of 'cyclic', 'product', 'permutations', 'table'");
  if (j.contains("labels") && !j.contains("table")) fail(where + ".labels", "labels are only given with a table");
  std::string name = text(member(j, "name", where), where + ".name");
  auto make = [&](FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); };
  if (j.contains("cyclic")) {
    long n = integer(j["cyclic"], where + ".cyclic");
    if (n < 1 || n > 64) fail(where + ".cyclic", "order must be between 1 and 64");
    auto g = FiniteGroup::cyclic(static_cast<int>(n));
    return make(FiniteGroup(name, [&] {
      std::vector<std::vector<int>> t(n, std::vector<int>(n));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = g.mul(a, b);
      return t;
    }(), g.labels()));
  }
  if (j.contains("product")) {
    const json& p = j["product"];
    if (!p.is_array() || p.size() != 2) fail(where + ".product", "expected two group names");
    auto a = c.group(text(p[0], where + ".product[0]"));
    auto b = c.group(text(p[1], where + ".product[1]"));
    auto g = FiniteGroup::direct_product(*a, *b);
    return make(FiniteGroup(name, [&] {
      std::vector<std::vector<int>> t(g.order(), std::vector<int>(g.order()));
      for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) t[x][y] = g.mul(x, y);
      return t;
    }(), g.labels()));
  }
  if (j.contains("permutations")) {
    std::string at = where + ".permutations";
    const json& p = j["permutations"];
    only(p, {"degree", "generators"}, at);
    long degree = integer(member(p, "degree", at), at + ".degree");
    if (degree < 1 || degree > 8) fail(at + ".degree", "degree must be between 1 and 8");
    const json& gens = member(p, "generators", at);
    if (!gens.is_array()) fail(at + ".generators", "expected an array");
    std::vector<std::vector<int>> perms;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::string gat = at + ".generators[" + std::to_string(i) + "]";
      if (!gens[i].is_array() || static_cast<long>(gens[i].size()) != degree)
        fail(gat, "expected a list of " + std::to_string(degree) + " images");
      std::vector<int> img;
      std::set<int> seen;
      for (const auto& x : gens[i]) {
        long v = integer(x, gat);
        if (v < 1 || v > degree || !seen.insert(static_cast<int>(v)).second) fail(gat, "not a permutation");
        img.push_back(static_cast<int>(v - 1));
      }
      perms.push_back(std::move(img));
    }
    if (perms.empty()) perms.push_back([&] {
        std::vector<int> id(degree);
        for (int i = 0; i < degree; ++i) id[i] = i;
        return id;
      }());
    return located(at, [&] { return make(FiniteGroup::from_permutations(name, perms)); });
  }
  if (j.contains("table")) {
    const json& t = j["table"];
    if (!t.is_array() || t.empty()) fail(where + ".table", "expected a square array");
    std::vector<std::vector<int>> tab;
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::string at = where + ".table[" + std::to_string(i) + "]";
      if (!t[i].is_array() || t[i].size() != t.size()) fail(at, "table is not square");
      std::vector<int> row;
      for (const auto& x : t[i]) row.push_back(static_cast<int>(integer(x, at)));
      tab.push_back(std::move(row));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      const json& l = j["labels"];
      if (!l.is_array() || l.size() != t.size()) fail(where + ".labels", "need one label per element");
      for (const auto& x : l) labels.push_back(text(x, where + ".labels"));
    } else {
      for (std::size_t i = 0; i < t.size(); ++i) labels.push_back(i == 0 ? "e" : "x" + std::to_string(i));
    }
    return located(where + ".table", [&] { return make(FiniteGroup(name, tab, labels)); });
  }
  fail(where, "group needs one of 'cyclic', 'product', 'permutations', 'table'");
}

std::vector<int> element_list(const FiniteGroup& g, const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of element labels");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(element(g, j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Subgroup subgroup_field(const FiniteGroup& g, const json& j, const std::string& where) {
  if (j.contains("subgroup")) {
    auto elems = element_list(g, j["subgroup"], where + ".subgroup");
    return located(where + ".subgroup", [&] { return g.check_subgroup(elems); });
  }
  if (j.contains("generators")) return g.generated(element_list(g, j["generators"], where + ".generators"));
  fail(where, "missing field 'subgroup' (or 'generators')");
}

NamedModule parse_module(const json& j, const std::string& where, const Catalog& c) {
  std::string name = text(member(j, "name", where), where + ".name");
  std::string gname = text(member(j, "group", where), where + ".group");
  GroupPtr g = located(where + ".group", [&] { return c.group(gname); });
  std::string kind = text(member(j, "kind", where), where + ".kind");
  if (kind == "trivial" || kind == "induced")
    only(j, {"name", "group", "kind", "rank"}, where);
  else if (kind == "regular")
    only(j, {"name", "group", "kind"}, where);
  else if (kind == "character")
    only(j, {"name", "group", "kind", "values"}, where);
  else if (kind == "lattice")
    only(j, {"name", "group", "kind", "dim", "lattice", "action", "relations"}, where);
  auto done = [&](GModule m) { return NamedModule{name, gname, std::make_shared<const GModule>(m.renamed(name))}; };
  if (kind == "trivial") {
    long rank = j.contains("rank") ? integer(j["rank"], where + ".rank") : 1;
    if (rank < 1 || rank > 8) fail(where + ".rank", "rank must be between 1 and 8");
    return done(GModule::trivial(g, static_cast<std::size_t>(rank)));
  }
  if (kind == "regular") return done(GModule::regular(g));
  if (kind == "induced") {
    long rank = integer(member(j, "rank", where), where + ".rank");
    if (rank < 1 || rank > 4) fail(where + ".rank", "rank must be between 1 and 4");
    return done(GModule::induced_from_trivial(g, static_cast<std::size_t>(rank)));
  }
  std::string at = where + ".action";
  const json& act = member(j, kind == "character" ? "values" : "action", where);
  if (!act.is_object()) fail(at, "expected an object keyed by element labels");
  std::vector<int> gens;
  std::vector<RatMatrix> mats;
  if (kind == "character") {
    at = where + ".values";
    for (auto it = act.begin(); it != act.end(); ++it) {
      gens.push_back(element(*g, it.key(), at));
      long v = integer(it.value(), at + "." + it.key());
      if (v != 1 && v != -1) fail(at + "." + it.key(), "character values must be 1 or -1");
      mats.push_back(RatMatrix::from_list(1, 1, {v}));
    }
    if (gens.empty()) return done(GModule::trivial(g));
    return located(at, [&] { return done(GModule::from_generator_action(g, Lattice::standard(1), gens, mats, name)); });
  }
  if (kind != "lattice") fail(where + ".kind", "unknown module kind '" + kind + "'");
  long dim = integer(member(j, "dim", where), where + ".dim");
  if (dim < 1 || dim > 24) fail(where + ".dim", "dimension must be between 1 and 24");
  std::size_t d = static_cast<std::size_t>(dim);
  Lattice lat = j.contains("lattice") ? Lattice::from_generators(d, vectors(j["lattice"], d, where + ".lattice"))
                                      : Lattice::standard(d);
  for (auto it = act.begin(); it != act.end(); ++it) {
    gens.push_back(element(*g, it.key(), at));
    mats.push_back(matrix(it.value(), d, at + "." + it.key()));
  }
  GModule base = located(at, [&] {
    if (gens.empty()) return GModule(g, lat, std::vector<RatMatrix>(g->order(), RatMatrix::identity(d)), name);
    return GModule::from_generator_action(g, lat, gens, mats, name);
  });
  if (!j.contains("relations")) return done(base);
  Lattice rel = Lattice::from_generators(d, vectors(j["relations"], d, where + ".relations"));
  return located(where + ".relations", [&] {
    std::vector<RatMatrix> all;
    for (int x = 0; x < g->order(); ++x) all.push_back(base.action(x));
    return done(GModule(g, lat, rel, all, name));
  });
}

}  // namespace

GroupPtr Catalog::group(const std::string& n) const {
  for (const auto& [k, g] : groups)
    if (k == n) return g;
  throw Error(ErrorKind::ConfigError, "unknown group '" + n + "'");
}

const NamedModule& Catalog::module(const std::string& n) const {
  for (const auto& m : modules)
    if (m.name == n) return m;
  throw Error(ErrorKind::ConfigError, "unknown module '" + n + "'");
}

const GlobalSite& Catalog::site(const std::string& n) const {
  for (const auto& s : sites)
    if (s.name() == n) return s;
  throw Error(ErrorKind::ConfigError, "unknown site '" + n + "'");
}

std::vector<NamedTorus> Catalog::tori_over(const GroupPtr& g) const {
  std::vector<NamedTorus> out;
  for (const auto& t : tori)
    if (group(t.group) == g) out.push_back(t);
  return out;
}

Catalog load_config(const json& j) {
  Catalog c;
  if (!j.is_object()) fail("$", "config must be a JSON object");
  only(j, {"name", "groups", "modules", "subtori", "sites", "towers", "levels", "filter", "seed"}, "$");
  c.name = j.contains("name") ? text(j["name"], "$.name") : "config";
  std::set<std::string> names;
  auto unique = [&](const std::string& kind, const std::string& n, const std::string& where) {
    if (!names.insert(kind + ":" + n).second) fail(where, "duplicate " + kind + " name '" + n + "'");
  };

  const json& groups = member(j, "groups", "$");
  if (!groups.is_array()) fail("$.groups", "expected an array");
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::string where = "$.groups[" + std::to_string(i) + "]";
    GroupPtr g = parse_group(groups[i], where, c);
    unique("group", g->name(), where);
    c.groups.emplace_back(g->name(), g);
  }

  if (j.contains("modules")) {
    const json& mods = j["modules"];
    if (!mods.is_array()) fail("$.modules", "expected an array");
    for (std::size_t i = 0; i < mods.size(); ++i) {
      std::string where = "$.modules[" + std::to_string(i) + "]";
      NamedModule m = parse_module(mods[i], where, c);
      unique("module", m.name, where);
      if (m.module->torsion_free()) c.tori.push_back({m.name, m.group, TorusData(*m.module)});
      c.modules.push_back(std::move(m));
    }
  }

  if (j.contains("subtori")) {
    const json& subs = j["subtori"];
    if (!subs.is_array()) fail("$.subtori", "expected an array");
    for (std::size_t i = 0; i < subs.size(); ++i) {
      std::string where = "$.subtori[" + std::to_string(i) + "]";
      only(subs[i], {"name", "module", "lattice"}, where);
      std::string name = text(member(subs[i], "name", where), where + ".name");
      const NamedModule& m = located(where + ".module", [&]() -> const NamedModule& {
        return c.module(text(member(subs[i], "module", where), where + ".module"));
      });
      Lattice l = Lattice::from_generators(m.module->dim(),
                                           vectors(member(subs[i], "lattice", where), m.module->dim(), where + ".lattice"));
      unique("module", name, where);
      c.tori.push_back({name, m.group, located(where, [&] { return TorusData(*m.module, l); })});
    }
  }

  if (j.contains("sites")) {
    const json& sites = j["sites"];
    if (!sites.is_array()) fail("$.sites", "expected an array");
    for (std::size_t i = 0; i < sites.size(); ++i) {
      std::string where = "$.sites[" + std::to_string(i) + "]";
      const json& s = sites[i];
      only(s, {"name", "group", "places"}, where);
      std::string name = text(member(s, "name", where), where + ".name");
      GroupPtr g = located(where + ".group", [&] { return c.group(text(member(s, "group", where), where + ".group")); });
      const json& places = member(s, "places", where);
      if (!places.is_array()) fail(where + ".places", "expected an array");
      std::vector<Place> ps;
      for (std::size_t k = 0; k < places.size(); ++k) {
        std::string pat = where + ".places[" + std::to_string(k) + "]";
        only(places[k], {"name", "subgroup", "generators"}, pat);
        if (places[k].contains("subgroup") && places[k].contains("generators"))
          fail(pat, "give either 'subgroup' or 'generators'");
        ps.push_back({text(member(places[k], "name", pat), pat + ".name"), subgroup_field(*g, places[k], pat)});
      }
      unique("site", name, where);
      c.sites.push_back(located(where, [&] { return GlobalSite(g, ps, name); }));
    }
  }

  if (j.contains("towers")) {
    const json& towers = j["towers"];
    if (!towers.is_array()) fail("$.towers", "expected an array");
    for (std::size_t i = 0; i < towers.size(); ++i) {
      std::string where = "$.towers[" + std::to_string(i) + "]";
      const json& t = towers[i];
      only(t, {"name", "lower", "upper", "projection"}, where);
      std::string name = text(member(t, "name", where), where + ".name");
      const GlobalSite& lower =
          located(where + ".lower", [&]() -> const GlobalSite& { return c.site(text(member(t, "lower", where), where + ".lower")); });
      const GlobalSite& upper =
          located(where + ".upper", [&]() -> const GlobalSite& { return c.site(text(member(t, "upper", where), where + ".upper")); });
      const json& proj = member(t, "projection", where);
      std::string pat = where + ".projection";
      if (!proj.is_object()) fail(pat, "expected an object mapping upper labels to lower labels");
      std::vector<int> map(upper.group().order(), -1);
      for (auto it = proj.begin(); it != proj.end(); ++it)
        map[element(upper.group(), it.key(), pat)] = element(lower.group(), it.value(), pat + "." + it.key());
      for (int x = 0; x < upper.group().order(); ++x)
        if (map[x] < 0) fail(pat, "no image for '" + upper.group().label(x) + "'");
      unique("tower", name, where);
      c.towers.push_back({name, located(where, [&] { return Tower(lower, upper, map); })});
    }
  }

  if (j.contains("levels")) {
    const json& l = j["levels"];
    if (!l.is_array()) fail("$.levels", "expected an array");
    for (std::size_t i = 0; i < l.size(); ++i) {
      long n = integer(l[i], "$.levels[" + std::to_string(i) + "]");
      if (n < 1 || n > 64) fail("$.levels[" + std::to_string(i) + "]", "levels must be between 1 and 64");
      c.levels.push_back(Int(n));
    }
  }
  if (j.contains("filter")) c.filter = text(j["filter"], "$.filter");
  if (j.contains("seed")) {
    long s = integer(j["seed"], "$.seed");
    if (s < 0 || s > 0xffffffffL) fail("$.seed", "seed must be a 32-bit unsigned integer");
    c.seed = static_cast<std::uint32_t>(s);
  }
  return c;
}

Catalog load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ConfigError, path + ": cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ConfigError, path + ": " + e.what());
  }
  return load_config(j);
}

Subgroup parse_subgroup(const FiniteGroup& g, const std::string& t) {
  if (t == "whole") return g.whole();
  if (t == "trivial") return g.trivial();
  std::vector<int> elems;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto b = item.find_first_not_of(' ');
    auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) continue;
    elems.push_back(located("--subgroup", [&] { return g.index_of(item.substr(b, e - b + 1)); }));
  }
  return located("--subgroup", [&] { return g.check_subgroup(elems); });
}

json default_config() {
  json perm = {{"degree", 3}, {"generators", {{2, 1, 3}, {2, 3, 1}}}};
  json groups = json::array({
      {{"name", "C1"}, {"cyclic", 1}},
      {{"name", "C2"}, {"cyclic", 2}},
      {{"name", "C3"}, {"cyclic", 3}},
      {{"name", "C4"}, {"cyclic", 4}},
      {{"name", "C2xC2"}, {"product", {"C2", "C2"}}},
      {{"name", "S3"}, {"permutations", perm}},
  });
  json modules = json::array();
  for (const char* g : {"C1", "C2", "C3", "C4", "C2xC2", "S3"}) {
    modules.push_back({{"name", std::string("Z-") + g}, {"group", g}, {"kind", "trivial"}});
    modules.push_back({{"name", std::string("Z[") + g + "]"}, {"group", g}, {"kind", "regular"}});
  }
  modules.push_back({{"name", "sign-C2"}, {"group", "C2"}, {"kind", "character"}, {"values", {{"g", -1}}}});
  modules.push_back({{"name", "chi-C4"}, {"group", "C4"}, {"kind", "character"}, {"values", {{"g", -1}}}});
  modules.push_back(
      {{"name", "chi-C2xC2"}, {"group", "C2xC2"}, {"kind", "character"}, {"values", {{"(g,e)", -1}, {"(e,g)", 1}}}});
  modules.push_back(
      {{"name", "sign-S3"}, {"group", "S3"}, {"kind", "character"}, {"values", {{"(1 2)", -1}, {"(1 2 3)", 1}}}});
  modules.push_back({{"name", "norm-one-C2"},
                     {"group", "C2"},
                     {"kind", "lattice"},
                     {"dim", 2},
                     {"lattice", {{1, -1}}},
                     {"action", {{"g", {{0, 1}, {1, 0}}}}}});
  json subtori = json::array({{{"name", "Gm-in-R(C2)"}, {"module", "Z[C2]"}, {"lattice", {{1, 1}}}}});

  auto place = [](const std::string& n, json elems) { return json{{"name", n}, {"subgroup", std::move(elems)}}; };
  json sites = json::array({
      {{"name", "C2-worked"}, {"group", "C2"}, {"places", {place("v1", {"e", "g"}), place("v2", {"e"})}}},
      {{"name", "C2-inert"}, {"group", "C2"}, {"places", {place("v1", {"e", "g"}), place("v2", {"e", "g"})}}},
      {{"name", "C2-extra"},
       {"group", "C2"},
       {"places", {place("v1", {"e", "g"}), place("v2", {"e"}), place("v3", {"e", "g"})}}},
      {{"name", "C1-two"}, {"group", "C1"}, {"places", {place("v1", {"e"}), place("v2", {"e"})}}},
      {{"name", "C3-split"}, {"group", "C3"}, {"places", {place("v1", {"e", "g", "g^2"}), place("v2", {"e"})}}},
      {{"name", "C4-mixed"},
       {"group", "C4"},
       {"places", {place("v1", {"e", "g", "g^2", "g^3"}), place("v2", {"e", "g^2"})}}},
      {{"name", "S3-example"},
       {"group", "S3"},
       {"places", {place("v0", {"()"}), place("v1", {"()", "(1 2)"}), place("v2", {"()", "(1 2 3)", "(1 3 2)"})}}},
      {{"name", "S3-cover"},
       {"group", "S3"},
       {"places", {place("v1", {"()", "(1 2)"}), place("v2", {"()", "(1 3)"}), place("v3", {"()", "(2 3)"}),
                   place("v4", {"()", "(1 2 3)", "(1 3 2)"})}}},
      {{"name", "C2xC2-upper"},
       {"group", "C2xC2"},
       {"places", {place("v1", {"(e,e)", "(e,g)", "(g,e)", "(g,g)"}), place("v2", {"(e,e)", "(e,g)"})}}},
  });
  json towers = json::array({
      {{"name", "C2-to-C2xC2"},
       {"lower", "C2-worked"},
       {"upper", "C2xC2-upper"},
       {"projection", {{"(e,e)", "e"}, {"(e,g)", "e"}, {"(g,e)", "g"}, {"(g,g)", "g"}}}},
      {{"name", "C2-extra-place"}, {"lower", "C2-worked"}, {"upper", "C2-extra"}, {"projection", {{"e", "e"}, {"g", "g"}}}},
  });
  return json{{"name", "default-catalog"}, {"groups", groups},   {"modules", modules}, {"subtori", subtori},
              {"sites", sites},            {"towers", towers},   {"levels", {1, 2, 4, 6}}, {"seed", 20240611}};
}

}  // namespace galmod
