#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hodgeint/json_io.hpp"

namespace {

using namespace hodgeint;

// Writes to stdout when no path is given; a relative path is resolved
// against HODGEINT_OUTPUT_DIR when that variable is set.
int write_output(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return 0;
  }
  std::filesystem::path p(output);
  if (p.is_relative()) {
    const char* dir = std::getenv("HODGEINT_OUTPUT_DIR");
    if (dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
  }
  std::ofstream f(p);
  if (!f) {
    std::cerr << "cannot open output file: " << p.string() << "\n";
    return 1;
  }
  f << text;
  f.flush();
  if (!f.good()) {
    std::cerr << "write failed: " << p.string() << "\n";
    return 1;
  }
  return 0;
}

bool parse_partition_arg(const std::string& s, Partition& out,
                         std::string& err) {
  out.clear();
  if (s.empty()) {
    err = "empty partition";
    return false;
  }
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t dot = s.find('.', pos);
    std::string tok = s.substr(pos, dot == std::string::npos ? std::string::npos
                                                             : dot - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      err = "partition must be dot-separated positive integers, e.g. \"3.1.1\"";
      return false;
    }
    long v = std::stol(tok);
    if (v < 1 || v > 64) {
      err = "partition parts must lie in 1..64";
      return false;
    }
    out.push_back(static_cast<int>(v));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  for (size_t i = 1; i < out.size(); ++i) {
    if (out[i] > out[i - 1]) {
      err = "partition parts must be non-increasing";
      return false;
    }
  }
  return true;
}

int cmd_hurwitz(int max_weight, int max_genus, const std::string& method,
                const std::string& format, const std::string& output,
                bool include_zeros) {
  std::string text;
  if (method == "all") {
    HurwitzTable b = burnside_hurwitz(max_weight, max_genus);
    HurwitzTable c = cutjoin_hurwitz(max_weight, max_genus);
    HurwitzTable o = oracle_hurwitz_table(max_weight, max_genus);
    text = format == "csv"
               ? hurwitz_cross_csv(b, c, o, include_zeros)
               : hurwitz_cross_json(b, c, o, include_zeros).dump(2) + "\n";
  } else {
    HurwitzTable t = method == "burnside"
                         ? burnside_hurwitz(max_weight, max_genus)
                         : (method == "cutjoin"
                                ? cutjoin_hurwitz(max_weight, max_genus)
                                : oracle_hurwitz_table(max_weight, max_genus));
    text = format == "csv" ? hurwitz_csv(t, include_zeros)
                           : hurwitz_json(t, include_zeros).dump(2) + "\n";
  }
  return write_output(text, output);
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts,
               const std::string& output) {
  SuiteContext ctx;
  std::vector<SuiteResult> results;
  try {
    results = run_suites(suite, opts, ctx);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  int rc = write_output(suite_reports_json(results).dump(2) + "\n", output);
  if (rc != 0) return rc;
  for (const SuiteResult& s : results) {
    if (s.pass) continue;
    for (const IdentityReport& r : s.reports) {
      if (r.pass) continue;
      std::cerr << "FAIL " << s.suite << "/" << r.identity;
      for (const auto& [k, v] : r.parameters) std::cerr << " " << k << "=" << v;
      std::cerr << ": left=" << r.left << " right=" << r.right << "\n";
      return 1;
    }
  }
  return 0;
}

int cmd_series(const std::string& target, const std::string& partition_arg,
               int max_weight, long order, const std::string& output) {
  Json j = Json::object();
  j["target"] = target;

  Partition mu;
  if (target == "V" || target == "limit-lambda-g") {
    if (partition_arg.empty()) {
      std::cerr << "--partition is required for target " << target << "\n";
      return 2;
    }
    std::string err;
    if (!parse_partition_arg(partition_arg, mu, err)) {
      std::cerr << err << "\n";
      return 2;
    }
  } else if (!partition_arg.empty()) {
    std::cerr << "--partition does not apply to target " << target << "\n";
    return 2;
  }

  if (target == "V") {
    j["partition"] = partition_json(mu);
    j["order"] = order;
    j["series"] = series_json(quantum_dim(mu, order), order);
  } else if (target == "limit-lambda-g") {
    j["partition"] = partition_json(mu);
    j["order"] = order;
    int w = weight(mu);
    long mo = std::max(order, order + length(mu) - 4);
    MVSeries mv = build_R(w, mo);
    j["series"] = series_json(limit_lambda_g(mv, mu, order), order);
  } else if (target == "R") {
    j["maxWeight"] = max_weight;
    j["order"] = order;
    MVSeries mv = build_R(max_weight, order);
    j["series"] = partition_series_json(mv.R, order);
  } else if (target == "Phi") {
    j["maxWeight"] = max_weight;
    j["order"] = order;
    j["series"] = partition_series_json(burnside_phi(max_weight, order), order);
  } else if (target == "limit-elsv") {
    j["maxWeight"] = max_weight;
    j["order"] = order;
    MVSeries mv = build_R(max_weight, order);
    j["series"] = partition_series_json(limit_elsv(mv, order), order);
  } else {
    std::cerr << "unknown target: " << target << "\n";
    return 2;
  }
  return write_output(j.dump(2) + "\n", output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generating-series toolkit: Hurwitz tables, Hodge-class "
               "identity suites, and series dumps"};
  app.require_subcommand(1);

  auto* hur = app.add_subcommand("hurwitz", "tabulate simple Hurwitz numbers");
  int h_weight = 6;
  int h_genus = 3;
  std::string h_method = "burnside";
  std::string h_format = "json";
  std::string h_output;
  bool h_zeros = false;
  hur->add_option("--max-weight", h_weight, "largest partition weight")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  hur->add_option("--max-genus", h_genus, "largest genus")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  hur->add_option("--method", h_method, "construction to tabulate")
      ->check(CLI::IsMember({"burnside", "cutjoin", "oracle", "all"}))
      ->capture_default_str();
  hur->add_option("--format", h_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  hur->add_option("--output", h_output, "output file (default: stdout)");
  hur->add_flag("--include-zeros", h_zeros, "keep rows whose value is zero");

  auto* ver = app.add_subcommand("verify", "run identity suites");
  std::string v_suite = "all";
  int v_genus = 0;
  int v_weight = 0;
  long v_order = 0;
  std::string v_output;
  {
    std::vector<std::string> allowed = {"all"};
    for (const std::string& n : suite_names()) allowed.push_back(n);
    ver->add_option("--suite", v_suite, "suite selection")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
  }
  auto* vg = ver->add_option("--max-genus", v_genus,
                             "override the suite genus bound")
                 ->check(CLI::NonNegativeNumber);
  auto* vw = ver->add_option("--max-weight", v_weight,
                             "override the suite weight bound")
                 ->check(CLI::PositiveNumber);
  auto* vo = ver->add_option("--order", v_order,
                             "override the series order")
                 ->check(CLI::PositiveNumber);
  ver->add_option("--output", v_output, "output file (default: stdout)");

  auto* ser = app.add_subcommand("series", "dump an exact series as JSON");
  std::string s_target;
  std::string s_partition;
  int s_weight = 6;
  long s_order = 8;
  std::string s_output;
  ser->add_option("--target", s_target, "series to dump")
      ->required()
      ->check(CLI::IsMember({"R", "Phi", "V", "limit-elsv", "limit-lambda-g"}));
  ser->add_option("--partition", s_partition,
                  "partition as dot-separated parts, e.g. \"3.1.1\"");
  ser->add_option("--max-weight", s_weight, "largest partition weight")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ser->add_option("--order", s_order, "series order")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ser->add_option("--output", s_output, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*hur)
      return cmd_hurwitz(h_weight, h_genus, h_method, h_format, h_output,
                         h_zeros);
    if (*ver) {
      SuiteOptions opts;
      if (vg->count() > 0) opts.max_genus = v_genus;
      if (vw->count() > 0) opts.max_weight = v_weight;
      if (vo->count() > 0) opts.order = v_order;
      return cmd_verify(v_suite, opts, v_output);
    }
    if (*ser) return cmd_series(s_target, s_partition, s_weight, s_order,
                                s_output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
