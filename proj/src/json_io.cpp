#include "hodgeint/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace hodgeint {

Json rat_json(const Rat& r) { return rat_to_string(r); }

Json gauss_json(const GaussRat& v) {
  Json j = Json::object();
  j["re"] = rat_to_string(v.re);
  j["im"] = rat_to_string(v.im);
  return j;
}

Json partition_json(const Partition& mu) {
  Json j = Json::array();
  for (int p : mu) j.push_back(p);
  return j;
}

Json series_json(const LambdaSeries& s, long order) {
  long o = std::min(order, s.order());
  long lo = s.is_zero() ? 0 : s.min_exp();
  Json j = Json::object();
  j["minExp"] = lo;
  j["order"] = o;
  Json coeffs = Json::array();
  for (long k = lo; k <= o; ++k) {
    Json col = Json::array();
    const TauPoly& q = s.coeff(k);
    for (long t = 0; t <= q.degree(); ++t) col.push_back(gauss_json(q.coeff(static_cast<int>(t))));
    coeffs.push_back(std::move(col));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json partition_series_json(const PartitionSeries& ps, long order) {
  Json j = Json::object();
  for (const Partition& mu : partitions_up_to(ps.weight_bound)) {
    const LambdaSeries* s = ps.coeff_ptr(mu);
    if (s == nullptr) continue;
    j[partition_key(mu)] = series_json(*s, order);
  }
  return j;
}

namespace {

bool keep_entry(const Rat& value, bool include_zeros) {
  return include_zeros || value != 0;
}

}  // namespace

Json hurwitz_json(const HurwitzTable& t, bool include_zeros) {
  Json rows = Json::array();
  for (const auto& [key, e] : t.entries) {
    if (!keep_entry(e.value, include_zeros)) continue;
    Json row = Json::object();
    row["g"] = key.g;
    row["mu"] = partition_json(key.mu);
    row["r"] = e.r;
    row["H"] = rat_json(e.value);
    row["method"] = e.method;
    rows.push_back(std::move(row));
  }
  Json j = Json::object();
  j["table"] = std::move(rows);
  return j;
}

std::string hurwitz_csv(const HurwitzTable& t, bool include_zeros) {
  std::ostringstream out;
  out << "g,mu,r,H,method\n";
  for (const auto& [key, e] : t.entries) {
    if (!keep_entry(e.value, include_zeros)) continue;
    out << key.g << ',' << partition_key(key.mu) << ',' << e.r << ','
        << rat_to_string(e.value) << ',' << e.method << '\n';
  }
  return out.str();
}

namespace {

struct CrossRow {
  int g;
  Partition mu;
  long r;
  const Rat* burnside;
  const Rat* cutjoin;
  const Rat* oracle;  // nullptr = outside the brute-force budget
  bool agree;
};

std::vector<CrossRow> cross_rows(const HurwitzTable& b, const HurwitzTable& c,
                                 const HurwitzTable& o, bool include_zeros) {
  std::vector<CrossRow> rows;
  for (const auto& [key, e] : b.entries) {
    CrossRow row{key.g, key.mu, e.r, &e.value, nullptr, nullptr, true};
    auto itc = c.entries.find(key);
    if (itc != c.entries.end()) row.cutjoin = &itc->second.value;
    auto ito = o.entries.find(key);
    if (ito != o.entries.end()) row.oracle = &ito->second.value;
    bool any_nonzero = e.value != 0 ||
                       (row.cutjoin != nullptr && *row.cutjoin != 0) ||
                       (row.oracle != nullptr && *row.oracle != 0);
    if (!include_zeros && !any_nonzero) continue;
    row.agree = (row.cutjoin == nullptr || *row.cutjoin == e.value) &&
                (row.oracle == nullptr || *row.oracle == e.value);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json hurwitz_cross_json(const HurwitzTable& b, const HurwitzTable& c,
                        const HurwitzTable& o, bool include_zeros) {
  Json rows = Json::array();
  Json diffs = Json::array();
  for (const CrossRow& row : cross_rows(b, c, o, include_zeros)) {
    Json values = Json::object();
    values["burnside"] = rat_json(*row.burnside);
    values["cutjoin"] =
        row.cutjoin != nullptr ? rat_json(*row.cutjoin) : Json("missing");
    values["oracle"] =
        row.oracle != nullptr ? rat_json(*row.oracle) : Json("infeasible");
    Json jrow = Json::object();
    jrow["g"] = row.g;
    jrow["mu"] = partition_json(row.mu);
    jrow["r"] = row.r;
    jrow["values"] = std::move(values);
    jrow["agree"] = row.agree;
    rows.push_back(std::move(jrow));
    if (!row.agree) {
      Json d = Json::object();
      d["g"] = row.g;
      d["mu"] = partition_json(row.mu);
      diffs.push_back(std::move(d));
    }
  }
  Json j = Json::object();
  j["table"] = std::move(rows);
  j["diffs"] = std::move(diffs);
  return j;
}

std::string hurwitz_cross_csv(const HurwitzTable& b, const HurwitzTable& c,
                              const HurwitzTable& o, bool include_zeros) {
  std::ostringstream out;
  out << "g,mu,r,burnside,cutjoin,oracle,agree\n";
  for (const CrossRow& row : cross_rows(b, c, o, include_zeros)) {
    out << row.g << ',' << partition_key(row.mu) << ',' << row.r << ','
        << rat_to_string(*row.burnside) << ','
        << (row.cutjoin != nullptr ? rat_to_string(*row.cutjoin) : "missing")
        << ','
        << (row.oracle != nullptr ? rat_to_string(*row.oracle) : "infeasible")
        << ',' << (row.agree ? "true" : "false") << '\n';
  }
  return out.str();
}

namespace {

void fill_report(Json& j, const IdentityReport& r) {
  j["identity"] = r.identity;
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = std::move(params);
  j["left"] = r.left;
  j["right"] = r.right;
  j["leftProvenance"] = r.left_provenance;
  j["rightProvenance"] = r.right_provenance;
  j["pass"] = r.pass;
}

}  // namespace

Json report_json(const IdentityReport& r) {
  Json j = Json::object();
  fill_report(j, r);
  return j;
}

Json suite_reports_json(const std::vector<SuiteResult>& suites) {
  Json arr = Json::array();
  for (const SuiteResult& s : suites) {
    for (const IdentityReport& r : s.reports) {
      Json j = Json::object();
      j["suite"] = s.suite;
      fill_report(j, r);
      arr.push_back(std::move(j));
    }
  }
  return arr;
}

}  // namespace hodgeint
