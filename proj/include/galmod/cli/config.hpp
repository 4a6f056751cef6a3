#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "galmod/gmod/module.hpp"
#include "galmod/sites/site.hpp"
#include "galmod/tn/local.hpp"

namespace galmod {

struct NamedModule {
  std::string name;
  std::string group;
  ModulePtr module;
};

struct NamedTorus {
  std::string name;
  std::string group;
  TorusData torus;
};

struct NamedTower {
  std::string name;
  Tower tower;
};

// Validated configuration. Every reference is resolved and every module,
// site and tower has been constructed.
struct Catalog {
  std::string name;
  std::vector<std::pair<std::string, GroupPtr>> groups;
  std::vector<NamedModule> modules;
  std::vector<NamedTorus> tori;  // torsion-free modules and declared subtori
  std::vector<GlobalSite> sites;
  std::vector<NamedTower> towers;
  std::vector<Int> levels;
  std::optional<std::string> filter;
  std::uint32_t seed = 20240611;

  GroupPtr group(const std::string& name) const;  // throws ConfigError
  const NamedModule& module(const std::string& name) const;
  const GlobalSite& site(const std::string& name) const;
  std::vector<NamedTorus> tori_over(const GroupPtr& g) const;
};

// Throws Error(ConfigError) whose message starts with the JSON location.
Catalog load_config(const nlohmann::json& j);
Catalog load_config_file(const std::string& path);

// The built-in catalog.
nlohmann::json default_config();

// Subgroup given as "whole", "trivial" or element labels separated by ";".
Subgroup parse_subgroup(const FiniteGroup& g, const std::string& text);

}  // namespace galmod
