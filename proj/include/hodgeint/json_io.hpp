#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hodgeint/hurwitz.hpp"
#include "hodgeint/suites.hpp"

namespace hodgeint {

// Insertion-ordered JSON keeps every dump byte-deterministic.
using Json = nlohmann::ordered_json;

Json rat_json(const Rat& r);       // "num/den"
Json gauss_json(const GaussRat& v);  // {"re": "num/den", "im": "num/den"}
Json partition_json(const Partition& mu);  // decreasing integer array

// {"minExp", "order", "coeffs": [[tau-degree-ascending Gaussian rationals]]},
// truncated to the requested order (a zero tau-polynomial becomes []).
Json series_json(const LambdaSeries& s, long order);

// Map from canonical partition keys ("a.b.c", decreasing parts) to series
// objects, in canonical partition order.
Json partition_series_json(const PartitionSeries& ps, long order);

// Rows {"g", "mu", "r", "H", "method"}; zero values dropped unless asked for.
Json hurwitz_json(const HurwitzTable& t, bool include_zeros = false);
// Header g,mu,r,H,method with the canonical "a.b.c" partition key.
std::string hurwitz_csv(const HurwitzTable& t, bool include_zeros = false);

// Cross-check of the three constructions: rows {"g", "mu", "r", "values":
// {"burnside", "cutjoin", "oracle"}, "agree"} plus a "diffs" section; an
// entry outside the brute-force budget reports "infeasible" and is excluded
// from the agreement test.
Json hurwitz_cross_json(const HurwitzTable& burnside,
                        const HurwitzTable& cutjoin,
                        const HurwitzTable& oracle,
                        bool include_zeros = false);
// Wide header g,mu,r,burnside,cutjoin,oracle,agree.
std::string hurwitz_cross_csv(const HurwitzTable& burnside,
                              const HurwitzTable& cutjoin,
                              const HurwitzTable& oracle,
                              bool include_zeros = false);

Json report_json(const IdentityReport& r);
// Flat array of reports, each tagged with its suite name first.
Json suite_reports_json(const std::vector<SuiteResult>& suites);

}  // namespace hodgeint
