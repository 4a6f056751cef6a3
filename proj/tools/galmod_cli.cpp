// galmod command line: check, cohomology, dotv, fixtures.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "galmod/cli/checks.hpp"
#include "galmod/cli/config.hpp"
#include "galmod/error.hpp"
#include "galmod/gmod/cohomology.hpp"
#include "galmod/sites/site.hpp"

using namespace galmod;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Failure = 1, BadConfig = 2 };

Catalog load(const std::string& path) { return path.empty() ? load_config(default_config()) : load_config_file(path); }

void write(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorKind::ConfigError, out + ": cannot write file");
  f << text;
}

int cmd_check(const std::string& config, const std::string& filter, const std::string& format,
              const std::string& out, bool timings, unsigned jobs) {
  if (format != "text" && format != "json") throw Error(ErrorKind::ConfigError, "--format must be text or json");
  Catalog c = load(config);
  Report r = run_suite(c, filter.empty() ? std::nullopt : std::optional<std::string>(filter), registry(), jobs);
  write(emit(r, format, timings), out);
  return r.failed() ? Failure : Ok;
}

int cmd_cohomology(const std::string& config, const std::string& module, const std::string& subgroup,
                   std::optional<int> degree, const std::string& out) {
  Catalog c = load(config);
  const NamedModule& m = c.module(module);
  const FiniteGroup& g = m.module->group();
  Subgroup h = parse_subgroup(g, subgroup);
  std::vector<int> degrees = degree ? std::vector<int>{*degree} : std::vector<int>{-1, 0, 1, 2};
  for (int d : degrees)
    if (d < -1 || d > 2) throw Error(ErrorKind::ConfigError, "--degree must be between -1 and 2");
  std::string text;
  text += "module " + m.name + " over " + g.name() + ", subgroup " + subgroup_label(g, h) + "\n";
  for (int d : degrees) {
    auto inv = tate_cohomology(*m.module, h, d).invariants();
    text += (d < 1 ? "  H^" : "  H^") + std::to_string(d) + (d < 1 ? " (Tate)" : "") + ": " + inv.to_string() + "\n";
  }
  write(text, out);
  return Ok;
}

// Classes file: a JSON array, each entry a list of element labels of a subgroup.
int cmd_dotv(const std::string& config, const std::string& group, const std::string& classes_path,
             const std::string& out) {
  Catalog c = load(config);
  GroupPtr g = c.group(group);
  std::ifstream in(classes_path);
  if (!in) throw Error(ErrorKind::ConfigError, classes_path + ": cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ConfigError, classes_path + ": " + e.what());
  }
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::ConfigError, classes_path + ": expected a nonempty array");
  std::vector<Subgroup> classes;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string where = classes_path + ": [" + std::to_string(i) + "]";
    if (!j[i].is_array()) throw Error(ErrorKind::ConfigError, where + ": expected a list of element labels");
    std::vector<int> elems;
    try {
      for (const auto& x : j[i]) elems.push_back(g->index_of(x.get<std::string>()));
      classes.push_back(g->check_subgroup(elems));
    } catch (const Error& e) {
      throw Error(ErrorKind::ConfigError, where + ": " + e.what());
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ConfigError, where + ": " + e.what());
    }
  }
  auto res = search_lifts(*g, classes);
  json rep = {{"group", g->name()}, {"status", res ? "cover" : "unsat"}};
  if (g->order() <= 12 && classes.size() <= 5) rep["exhaustive"] = lifts_exist_brute_force(*g, classes) ? "cover" : "unsat";
  if (res) {
    json lifts = json::array();
    for (const auto& h : *res) {
      json l = json::array();
      for (int x : h) l.push_back(g->label(x));
      lifts.push_back(l);
    }
    rep["lifts"] = lifts;
  }
  write(rep.dump(2) + "\n", out);
  return res ? Ok : Failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois module comparison and Tate-Nakayama verification"};
  app.require_subcommand(1);
  std::string config, filter, format = "text", out, module, subgroup = "whole", group, classes;
  bool timings = false;
  unsigned jobs = 0;
  std::optional<int> degree;

  auto* check = app.add_subcommand("check", "run the verification suite");
  check->add_option("--config", config, "catalog config (JSON); the built-in catalog by default");
  check->add_option("--filter", filter, "glob on check ids, e.g. 'tn.*'");
  check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  check->add_option("--out", out, "write the report here instead of stdout");
  check->add_flag("--timings", timings, "include wall time per check");
  check->add_option("--jobs", jobs, "worker threads (0: one per core)");

  auto* coh = app.add_subcommand("cohomology", "Tate cohomology of a catalog module");
  coh->add_option("--config", config, "catalog config (JSON)");
  coh->add_option("--module", module, "module name")->required();
  coh->add_option("--subgroup", subgroup, "'whole', 'trivial' or element labels separated by ';'");
  coh->add_option("--degree", degree, "-1, 0, 1 or 2; all four by default");
  coh->add_option("--out", out, "output path");

  auto* dotv = app.add_subcommand("dotv", "choose conjugates of decomposition groups that cover the group");
  dotv->add_option("--config", config, "catalog config (JSON)");
  dotv->add_option("--group", group, "group name")->required();
  dotv->add_option("--classes", classes, "JSON array of subgroups given by element labels")->required();
  dotv->add_option("--out", out, "output path");

  auto* fixtures = app.add_subcommand("fixtures", "print the built-in catalog config");
  fixtures->add_option("--out", out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Ok : BadConfig;
  }

  try {
    if (*check) return cmd_check(config, filter, format, out, timings, jobs);
    if (*coh) return cmd_cohomology(config, module, subgroup, degree, out);
    if (*dotv) return cmd_dotv(config, group, classes, out);
    if (*fixtures) {
      write(default_config().dump(2) + "\n", out);
      return Ok;
    }
  } catch (const Error& e) {
    std::cerr << "galmod: " << e.what() << "\n";
    return e.kind() == ErrorKind::ConfigError ? BadConfig : Failure;
  }
  return Ok;
}
