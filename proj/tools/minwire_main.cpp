// Command-line front end: min-set computation, uniqueness certificates,
// experiment suggestions, oracle cross-checks, and the timing benchmark.
//
// Exit codes: 0 success, 2 validation error, 3 capacity refusal,
// 4 oracle mismatch.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "minwire/bench.hpp"
#include "minwire/io.hpp"
#include "minwire/minwire.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_capacity = 3;
constexpr int exit_oracle_mismatch = 4;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  return std::strtoull(raw, nullptr, 10);
}

struct Caps {
  std::uint64_t oracle_completions = env_u64("MINWIRE_ORACLE_CAP", minwire::default_completion_cap);
  int max_type_points = static_cast<int>(env_u64("MINWIRE_MAX_TYPE_POINTS", 8));
  std::uint64_t baseline = env_u64("MINWIRE_BASELINE_CAP", minwire::default_baseline_cap);
  std::uint64_t grid = env_u64("MINWIRE_GRID_CAP", minwire::default_grid_cap);
};

std::string describe_sets(const std::vector<minwire::Component>& sets) {
  std::string out;
  for (const auto& c : sets) out += " " + minwire::literal_set_utf8(c);
  return out.empty() ? " (none)" : out;
}

int run_minsets(const std::string& path, const std::string& format, std::optional<int> q) {
  const minwire::ParsedInput input = minwire::parse_input(path, q);
  const minwire::DataSet& data = input.as_dataset();
  const minwire::MinSetReport report = minwire::minsets(data);
  if (format == "json")
    std::cout << minwire::minsets_to_json(report).dump(2) << "\n";
  else if (format == "dot")
    std::cout << minwire::minsets_to_dot(report);
  else
    std::cout << minwire::minsets_to_text(data, report);
  return exit_ok;
}

int run_certify(const std::string& path, const std::string& format, std::optional<int> q,
                int max_type_points) {
  const minwire::ParsedInput input = minwire::parse_input(path, q);
  if (input.has_outputs())
    std::cerr << "note: certify works on the input points; outputs in the file are ignored\n";
  const minwire::Certificate cert = minwire::certify(input.as_input_set(), max_type_points);
  if (format == "json")
    std::cout << minwire::certificate_to_json(cert).dump(2) << "\n";
  else
    std::cout << minwire::certificate_to_text(cert);
  return exit_ok;
}

int run_suggest(const std::string& path, const std::string& format, std::optional<int> q, int k,
                std::uint64_t grid_cap) {
  const minwire::ParsedInput input = minwire::parse_input(path, q);
  if (input.has_outputs())
    std::cerr << "note: suggest works on the input points; outputs in the file are ignored\n";
  const minwire::SuggestResult result =
      minwire::suggest_extensions(input.as_input_set(), k, grid_cap);
  if (format == "json")
    std::cout << minwire::suggest_to_json(result).dump(2) << "\n";
  else
    std::cout << minwire::suggest_to_text(result);
  return exit_ok;
}

int run_oracle(const std::string& path, const std::string& format, std::optional<int> q,
               std::uint64_t completion_cap) {
  const minwire::ParsedInput input = minwire::parse_input(path, q);
  const minwire::DataSet& data = input.as_dataset();
  const minwire::MinSetReport pipeline = minwire::minsets(data);
  const minwire::OracleResult uns =
      minwire::oracle_minsets(data, minwire::MinsetKind::unsigned_sets, completion_cap);
  const minwire::OracleResult sgn =
      minwire::oracle_minsets(data, minwire::MinsetKind::signed_sets, completion_cap);

  const bool unsigned_ok = pipeline.unsigned_minsets == uns.minsets;
  const bool signed_ok = pipeline.signed_minsets == sgn.minsets &&
                         pipeline.signed_consistent == sgn.signed_consistent;

  if (format == "json") {
    minwire::ordered_json doc;
    doc["command"] = "oracle";
    doc["unsigned"] = unsigned_ok ? "PASS" : "FAIL";
    doc["signed"] = signed_ok ? "PASS" : "FAIL";
    if (!unsigned_ok) {
      doc["unsigned_pipeline"] = minwire::ordered_json::array();
      for (const auto& c : pipeline.unsigned_minsets)
        doc["unsigned_pipeline"].push_back(minwire::literal_set_to_json(c));
      doc["unsigned_oracle"] = minwire::ordered_json::array();
      for (const auto& c : uns.minsets)
        doc["unsigned_oracle"].push_back(minwire::literal_set_to_json(c));
    }
    if (!signed_ok) {
      doc["signed_pipeline"] = minwire::ordered_json::array();
      for (const auto& c : pipeline.signed_minsets)
        doc["signed_pipeline"].push_back(minwire::literal_set_to_json(c));
      doc["signed_oracle"] = minwire::ordered_json::array();
      for (const auto& c : sgn.minsets)
        doc["signed_oracle"].push_back(minwire::literal_set_to_json(c));
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "unsigned: " << (unsigned_ok ? "PASS" : "FAIL") << "\n";
    if (!unsigned_ok) {
      std::cout << "  pipeline:" << describe_sets(pipeline.unsigned_minsets) << "\n";
      std::cout << "  oracle:  " << describe_sets(uns.minsets) << "\n";
    }
    std::cout << "signed:   " << (signed_ok ? "PASS" : "FAIL") << "\n";
    if (!signed_ok) {
      std::cout << "  pipeline:" << describe_sets(pipeline.signed_minsets) << "\n";
      std::cout << "  oracle:  " << describe_sets(sgn.minsets) << "\n";
    }
  }
  return unsigned_ok && signed_ok ? exit_ok : exit_oracle_mismatch;
}

int run_bench_cmd(const minwire::BenchConfig& config) {
  const minwire::BenchReport report = minwire::run_bench(config);
  std::cout << minwire::bench_to_json(report).dump(2) << "\n";
  return report.all_equal ? exit_ok : exit_oracle_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minwire: minimal wiring diagrams of finite dynamical systems from data"};
  app.require_subcommand(1);
  Caps caps;

  std::string path, format = "text";
  std::optional<int> q_override;

  auto* cmd_minsets =
      app.add_subcommand("minsets", "all minimal unsigned and signed wiring diagrams of a data set");
  cmd_minsets->add_option("file", path, "input file (JSON or CSV)")->required();
  cmd_minsets->add_option("--format", format, "text | json | dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  cmd_minsets->add_option("--q", q_override, "number of states (CSV inputs)");

  auto* cmd_certify =
      app.add_subcommand("certify", "uniqueness certificate for an input set");
  cmd_certify->add_option("file", path, "input file (JSON or CSV)")->required();
  cmd_certify->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_certify->add_option("--q", q_override, "number of states (CSV inputs)");
  cmd_certify->add_option("--max-type-points", caps.max_type_points,
                          "largest input set classified by weak-order enumeration");

  int k = 1;
  auto* cmd_suggest =
      app.add_subcommand("suggest", "experiments whose addition guarantees a unique min-set");
  cmd_suggest->add_option("file", path, "input file (JSON or CSV)")->required();
  cmd_suggest->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_suggest->add_option("--q", q_override, "number of states (CSV inputs)");
  cmd_suggest->add_option("--k", k, "maximum number of added experiments");

  auto* cmd_oracle =
      app.add_subcommand("oracle", "cross-check the pipeline against exhaustive enumeration");
  cmd_oracle->add_option("file", path, "input file (JSON or CSV)")->required();
  cmd_oracle->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_oracle->add_option("--q", q_override, "number of states (CSV inputs)");

  minwire::BenchConfig bench;
  bench.baseline_cap = caps.baseline;
  auto* cmd_bench =
      app.add_subcommand("bench", "timing comparison of the extended pipeline vs the naive baseline");
  cmd_bench->add_option("--n", bench.n, "number of variables")->required();
  cmd_bench->add_option("--q", bench.q, "number of states")->required();
  cmd_bench->add_option("--vsize", bench.v_size, "input points per trial")->required();
  cmd_bench->add_option("--trials", bench.trials, "number of trials")->required();
  cmd_bench->add_option("--seed", bench.seed, "random seed")->required();
  cmd_bench->add_option("--baseline-cap", bench.baseline_cap,
                        "choice-set cap before the baseline refuses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_validation;
  }

  try {
    if (cmd_minsets->parsed()) return run_minsets(path, format, q_override);
    if (cmd_certify->parsed()) return run_certify(path, format, q_override, caps.max_type_points);
    if (cmd_suggest->parsed()) return run_suggest(path, format, q_override, k, caps.grid);
    if (cmd_oracle->parsed()) return run_oracle(path, format, q_override, caps.oracle_completions);
    if (cmd_bench->parsed()) return run_bench_cmd(bench);
  } catch (const minwire::capacity_error& e) {
    std::cerr << "capacity refusal: " << e.what() << "\n";
    return exit_capacity;
  } catch (const minwire::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_validation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_validation;
  }
  return exit_ok;
}
