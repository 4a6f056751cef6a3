#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "galmod/cli/config.hpp"
#include "galmod/exactlin/matrix.hpp"

namespace galmod {

enum class Status { Pass, Fail, Skip };
const char* status_name(Status s);

// Outcome for one instance (a torus, a site, a level...) of a check.
struct InstanceResult {
  std::string instance;
  Status status = Status::Pass;
  long assertions = 0;
  std::string detail;
  nlohmann::json witness;  // null unless the instance failed or was skipped
};

class Recorder {
 public:
  // Records one assertion; the first failure of an instance keeps its witness.
  bool expect(bool ok, const std::string& instance, const std::string& detail = {},
              const nlohmann::json& witness = nullptr);
  void pass(const std::string& instance) { expect(true, instance); }
  void fail(const std::string& instance, const std::string& detail, const nlohmann::json& witness = nullptr) {
    expect(false, instance, detail, witness);
  }
  void skip(const std::string& instance, const std::string& reason, const nlohmann::json& witness = nullptr);
  const std::vector<InstanceResult>& results() const { return results_; }

 private:
  std::vector<InstanceResult> results_;
  std::map<std::string, std::size_t> index_;
  InstanceResult& at(const std::string& instance);
};

struct CheckContext {
  const Catalog& catalog;
  Recorder& out;
  std::mt19937& rng;
};

struct CheckSpec {
  std::string id;
  std::vector<int> criteria;  // acceptance criteria the check contributes to
  std::string reference;      // the property being verified, in words
  std::function<void(CheckContext&)> run;
};

struct CheckReport {
  std::string id;
  std::vector<int> criteria;
  std::string reference;
  Status status = Status::Pass;
  std::vector<InstanceResult> results;
  double wall_ms = 0;
};

struct Report {
  std::string catalog;
  std::vector<CheckReport> checks;  // sorted by id
  bool failed() const;
};

// Every property that must have an implementation.
const std::vector<std::string>& required_check_ids();
const std::vector<CheckSpec>& registry();
// Throws std::logic_error on a missing, unknown or duplicated id.
void verify_registry(const std::vector<CheckSpec>& specs);

// Glob with '*' and '?'.
bool matches_filter(const std::string& id, const std::string& pattern);

Report run_suite(const Catalog& catalog, const std::optional<std::string>& filter = std::nullopt,
                 const std::vector<CheckSpec>& specs = registry(), unsigned jobs = 0);

// Keys are sorted; wall time is included only on request.
nlohmann::json report_json(const Report& r, bool timings = false);
std::string emit(const Report& r, const std::string& format, bool timings = false);

// Witness encodings: integer arrays when integral, "p/q" strings otherwise.
nlohmann::json witness_rat(const Rat& x);
nlohmann::json witness_vector(const RatVector& v);
nlohmann::json witness_matrix(const RatMatrix& m);
nlohmann::json witness_matrix(const IntMatrix& m);

// Check families, one per library module.
void add_exactlin_checks(std::vector<CheckSpec>& out);
void add_gmod_checks(std::vector<CheckSpec>& out);
void add_sites_checks(std::vector<CheckSpec>& out);
void add_cmpmod_checks(std::vector<CheckSpec>& out);
void add_tn_checks(std::vector<CheckSpec>& out);

}  // namespace galmod
