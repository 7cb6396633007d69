#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hodgeint/hurwitz.hpp"
#include "hodgeint/identities.hpp"
#include "hodgeint/mv_engine.hpp"

namespace hodgeint {

// Optional scope overrides for a verification suite.  Each suite has its own
// defaults; an unset field keeps the default.
struct SuiteOptions {
  std::optional<int> max_genus;
  std::optional<int> max_weight;
  std::optional<long> order;
};

struct SuiteResult {
  std::string suite;
  bool pass = true;
  std::vector<IdentityReport> reports;
};

// Caches the expensive shared objects (generating series, extraction tables)
// so that running several suites in one process builds each of them once.
class SuiteContext {
 public:
  const MVSeries& mv(int weight_bound, long lambda_order);
  const PartitionSeries& phi(int weight_bound, long order);
  const DddExtraction& ddd(int genus_max, long order);

 private:
  std::map<std::pair<int, long>, std::unique_ptr<MVSeries>> mv_cache_;
  std::map<std::pair<int, long>, std::unique_ptr<PartitionSeries>> phi_cache_;
  std::map<std::pair<int, long>, std::unique_ptr<DddExtraction>> ddd_cache_;
};

// Names of all suites, in execution order for "all".
const std::vector<std::string>& suite_names();

// Runs one named suite.  Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts,
                      SuiteContext& ctx);

// Runs "all" suites or a single named one; results in execution order.
std::vector<SuiteResult> run_suites(const std::string& selection,
                                    const SuiteOptions& opts,
                                    SuiteContext& ctx);

}  // namespace hodgeint
