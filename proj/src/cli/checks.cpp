#include "galmod/cli/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "galmod/error.hpp"

namespace galmod {

using nlohmann::json;

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

InstanceResult& Recorder::at(const std::string& instance) {
  auto it = index_.find(instance);
  if (it != index_.end()) return results_[it->second];
  index_[instance] = results_.size();
  results_.push_back({instance, Status::Pass, 0, {}, nullptr});
  return results_.back();
}

bool Recorder::expect(bool ok, const std::string& instance, const std::string& detail, const json& witness) {
  InstanceResult& r = at(instance);
  ++r.assertions;
  if (!ok && r.status != Status::Fail) {
    r.status = Status::Fail;
    r.detail = detail.empty() ? "assertion failed" : detail;
    r.witness = witness;
  }
  return ok;
}

void Recorder::skip(const std::string& instance, const std::string& reason, const json& witness) {
  InstanceResult& r = at(instance);
  if (r.status == Status::Fail) return;
  r.status = Status::Skip;
  r.detail = reason;
  r.witness = witness;
}

bool Report::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.status == Status::Fail; });
}

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> specs = [] {
    std::vector<CheckSpec> s;
    add_exactlin_checks(s);
    add_gmod_checks(s);
    add_sites_checks(s);
    add_cmpmod_checks(s);
    add_tn_checks(s);
    std::sort(s.begin(), s.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.id < b.id; });
    verify_registry(s);
    return s;
  }();
  return specs;
}

const std::vector<std::string>& required_check_ids() {
  static const std::vector<std::string> ids = {
      "exactlin.condition_lattice",
      "exactlin.snf",
      "exactlin.subquotient_basis_independence",
      "gmod.canonical_submodules",
      "gmod.hom_rank",
      "gmod.induced_vanishing",
      "gmod.module_axioms",
      "gmod.norm_idempotent",
      "gmod.periodicity",
      "gmod.pinned_h0",
      "sites.cover_iff_normalize",
      "sites.point_counts",
      "sites.search_lifts",
      "sites.tower_equivariance",
      "cmpmod.dual_norm_image",
      "cmpmod.exactness",
      "cmpmod.factorization",
      "cmpmod.global_closed_forms",
      "cmpmod.global_inflation",
      "cmpmod.global_splitting",
      "cmpmod.lifts",
      "cmpmod.local_closed_forms",
      "cmpmod.local_inflation",
      "cmpmod.local_splitting",
      "cmpmod.localization",
      "cmpmod.tower_coherence",
      "tn.cartesian_global",
      "tn.cartesian_local",
      "tn.consistency",
      "tn.epsilon_correction",
      "tn.functoriality",
      "tn.global_surjectivity",
      "tn.induced_vanishing",
      "tn.iso_transition",
      "tn.localization",
      "tn.semiadelic",
      "tn.well_defined",
      "tn.worked_fixture",
  };
  return ids;
}

void verify_registry(const std::vector<CheckSpec>& specs) {
  std::set<std::string> have;
  for (const auto& s : specs) {
    if (!s.run) throw std::logic_error("check " + s.id + " has no implementation");
    if (!have.insert(s.id).second) throw std::logic_error("check " + s.id + " registered twice");
  }
  std::set<std::string> need(required_check_ids().begin(), required_check_ids().end());
  for (const auto& id : need)
    if (!have.count(id)) throw std::logic_error("check " + id + " is required but not registered");
  for (const auto& id : have)
    if (!need.count(id)) throw std::logic_error("check " + id + " is registered but not listed as required");
}

bool matches_filter(const std::string& id, const std::string& pattern) {
  // iterative glob with backtracking on the last '*'
  std::size_t i = 0, p = 0, star = std::string::npos, mark = 0;
  while (i < id.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == id[i])) {
      ++i;
      ++p;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = i;
    } else if (star != std::string::npos) {
      p = star + 1;
      i = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

namespace {

std::uint32_t fnv1a(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

CheckReport run_one(const CheckSpec& spec, const Catalog& catalog) {
  CheckReport rep{spec.id, spec.criteria, spec.reference, Status::Pass, {}, 0};
  Recorder rec;
  std::mt19937 rng(catalog.seed ^ fnv1a(spec.id));
  CheckContext ctx{catalog, rec, rng};
  auto start = std::chrono::steady_clock::now();
  try {
    spec.run(ctx);
  } catch (const Error& e) {
    rec.fail("(uncaught)", e.what(), e.witness().empty() ? json(nullptr) : json(e.witness()));
  } catch (const std::exception& e) {
    rec.fail("(uncaught)", e.what());
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rep.results = rec.results();
  bool any_fail = false, all_skip = !rep.results.empty();
  for (const auto& r : rep.results) {
    any_fail |= r.status == Status::Fail;
    all_skip &= r.status == Status::Skip;
  }
  if (rep.results.empty()) {
    rep.status = Status::Skip;
    rep.results.push_back({"(catalog)", Status::Skip, 0, "no applicable instances in the catalog", nullptr});
  } else {
    rep.status = any_fail ? Status::Fail : all_skip ? Status::Skip : Status::Pass;
  }
  return rep;
}

}  // namespace

Report run_suite(const Catalog& catalog, const std::optional<std::string>& filter, const std::vector<CheckSpec>& specs,
                 unsigned jobs) {
  std::vector<const CheckSpec*> chosen;
  std::optional<std::string> pat = filter ? filter : catalog.filter;
  for (const auto& s : specs)
    if (!pat || matches_filter(s.id, *pat)) chosen.push_back(&s);
  std::sort(chosen.begin(), chosen.end(), [](const CheckSpec* a, const CheckSpec* b) { return a->id < b->id; });

  Report r;
  r.catalog = catalog.name;
  r.checks.resize(chosen.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, chosen.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < chosen.size();) r.checks[i] = run_one(*chosen[i], catalog);
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return r;
}

json witness_rat(const Rat& x) { return to_string(x); }

json witness_vector(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) {
    if (x.get_den() == 1 && x.get_num().fits_slong_p())
      out.push_back(x.get_num().get_si());
    else
      out.push_back(to_string(x));
  }
  return out;
}

json witness_matrix(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(witness_vector(m.row(i)));
  return out;
}

json witness_matrix(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& x : m.row(i)) {
      if (x.fits_slong_p())
        row.push_back(x.get_si());
      else
        row.push_back(x.get_str());
    }
    out.push_back(row);
  }
  return out;
}

json report_json(const Report& r, bool timings) {
  json checks = json::array();
  long counts[3] = {0, 0, 0};
  for (const auto& c : r.checks) {
    ++counts[static_cast<int>(c.status)];
    json results = json::array();
    for (const auto& x : c.results) {
      json e = {{"instance", x.instance}, {"status", status_name(x.status)}, {"assertions", x.assertions}};
      if (!x.detail.empty()) e["detail"] = x.detail;
      if (!x.witness.is_null()) e["witness"] = x.witness;
      results.push_back(e);
    }
    json rec = {{"id", c.id},
                {"criteria", c.criteria},
                {"reference", c.reference},
                {"status", status_name(c.status)},
                {"results", results}};
    if (timings) rec["wall_ms"] = static_cast<long>(c.wall_ms + 0.5);
    checks.push_back(rec);
  }
  return {{"catalog", r.catalog},
          {"status", r.failed() ? "fail" : "pass"},
          {"summary", {{"pass", counts[0]}, {"fail", counts[1]}, {"skip", counts[2]}}},
          {"checks", checks}};
}

std::string emit(const Report& r, const std::string& format, bool timings) {
  if (format == "json") return report_json(r, timings).dump(2) + "\n";
  if (format != "text") throw Error(ErrorKind::ConfigError, "unknown format '" + format + "'");
  std::ostringstream os;
  std::size_t w = 8;
  for (const auto& c : r.checks) w = std::max(w, c.id.size());
  os << "catalog: " << r.catalog << "\n";
  long counts[3] = {0, 0, 0};
  for (const auto& c : r.checks) {
    ++counts[static_cast<int>(c.status)];
    os << std::string(status_name(c.status)) << "  " << c.id << std::string(w - c.id.size() + 2, ' ') << c.reference;
    if (timings) os << "  [" << static_cast<long>(c.wall_ms + 0.5) << " ms]";
    os << "\n";
    for (const auto& x : c.results) {
      if (x.status == Status::Pass) continue;
      os << "      " << status_name(x.status) << " " << x.instance << ": " << x.detail;
      if (!x.witness.is_null()) os << "  witness " << x.witness.dump();
      os << "\n";
    }
  }
  os << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped\n";
  return os.str();
}

}  // namespace galmod
