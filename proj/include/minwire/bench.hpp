#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "minwire/decompose.hpp"
#include "minwire/io.hpp"
#include "minwire/random.hpp"

namespace minwire {

struct BenchConfig {
  int n = 5;
  int q = 2;
  int v_size = 8;
  int trials = 100;
  std::uint64_t seed = 0;
  std::uint64_t baseline_cap = default_baseline_cap;
};

struct BenchTrial {
  int index = 0;
  std::size_t generators = 0;
  std::size_t signed_minsets = 0;
  bool baseline_refused = false;
  /// Fast pipeline and baseline agreed on the signed min-sets; empty when
  /// the baseline refused and there was nothing to compare.
  std::optional<bool> equal;
  double extended_us = 0.0;
  double baseline_us = 0.0;
};

struct BenchReport {
  BenchConfig config;
  std::vector<BenchTrial> trials;
  int refused = 0;
  bool all_equal = true;
  double median_extended_us = 0.0;
  double median_baseline_us = 0.0;  // over trials where the baseline ran
};

namespace detail {

inline double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : (xs[mid - 1] + xs[mid]) / 2.0;
}

template <typename Fn>
double time_us(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::micro>(stop - start).count();
}

}  // namespace detail

/// Runs the timing comparison between the extended pipeline (one squarefree
/// decomposition, then projection) and the naive signed baseline on seeded
/// random instances, asserting on every trial that both produce the same
/// signed min-sets. Instances come from one seeded stream; the measured
/// sections run single-threaded, after an untimed warm-up evaluation of the
/// same computation.
inline BenchReport run_bench(const BenchConfig& config) {
  if (config.trials < 1) throw validation_error("bench: trials must be at least 1");
  if (config.v_size < 1) throw validation_error("bench: vsize must be at least 1");
  const FieldSpec spec(config.q, config.n);
  if (static_cast<std::uint64_t>(config.v_size) > grid_size(spec))
    throw validation_error("bench: vsize exceeds the grid");

  SeededRng rng(config.seed);
  BenchReport report;
  report.config = config;
  std::vector<double> ext_times, base_times;

  for (int t = 0; t < config.trials; ++t) {
    const DataSet data = random_dataset(rng, spec, static_cast<std::size_t>(config.v_size));

    BenchTrial trial;
    trial.index = t;
    trial.generators = build_ideal(data, Alphabet::extended).generators.size();

    // warm-up evaluations, also used for the equality check
    const MinSetReport fast = minsets(data);
    trial.signed_minsets = fast.signed_minsets.size();
    std::vector<Component> slow;
    try {
      // the baseline's empty list means "no signed min-set", matching the
      // report's consistency flag, so list equality covers both
      slow = baseline_signed_decomposition(data, config.baseline_cap);
      trial.equal = slow == fast.signed_minsets;
    } catch (const capacity_error&) {
      trial.baseline_refused = true;
      ++report.refused;
    }

    trial.extended_us = detail::time_us([&] { (void)minsets(data); });
    ext_times.push_back(trial.extended_us);
    if (!trial.baseline_refused) {
      trial.baseline_us =
          detail::time_us([&] { (void)baseline_signed_decomposition(data, config.baseline_cap); });
      base_times.push_back(trial.baseline_us);
    }
    if (trial.equal.has_value() && !*trial.equal) report.all_equal = false;
    report.trials.push_back(trial);
  }

  report.median_extended_us = detail::median(ext_times);
  report.median_baseline_us = detail::median(base_times);
  return report;
}

/// Everything seed-determined sits outside the "timing" subtree, so two
/// runs with the same seed and config agree byte-for-byte once "timing" is
/// dropped.
inline ordered_json bench_to_json(const BenchReport& report) {
  ordered_json doc;
  doc["command"] = "bench";
  doc["config"] = {{"n", report.config.n},
                   {"q", report.config.q},
                   {"vsize", report.config.v_size},
                   {"trials", report.config.trials},
                   {"seed", report.config.seed},
                   {"baseline_cap", report.config.baseline_cap}};
  doc["trials"] = ordered_json::array();
  for (const BenchTrial& t : report.trials) {
    ordered_json row = {{"trial", t.index},
                        {"generators", t.generators},
                        {"signed_minsets", t.signed_minsets},
                        {"baseline_refused", t.baseline_refused}};
    if (t.equal.has_value())
      row["equal"] = *t.equal;
    else
      row["equal"] = nullptr;
    doc["trials"].push_back(row);
  }
  doc["aggregate"] = {{"trials", static_cast<int>(report.trials.size())},
                      {"baseline_refused", report.refused},
                      {"all_equal", report.all_equal}};

  ordered_json timing;
  ordered_json per_trial = ordered_json::array();
  for (const BenchTrial& t : report.trials) {
    ordered_json row = {{"trial", t.index}, {"extended_us", t.extended_us}};
    if (!t.baseline_refused) row["baseline_us"] = t.baseline_us;
    per_trial.push_back(row);
  }
  timing["per_trial"] = per_trial;
  timing["median_us"] = {{"extended", report.median_extended_us},
                         {"baseline", report.median_baseline_us}};

  // log-scale histogram: bucket k counts trials with time in [2^k, 2^(k+1)) us
  std::map<int, std::pair<int, int>> buckets;
  for (const BenchTrial& t : report.trials) {
    const int ke = static_cast<int>(std::floor(std::log2(std::max(t.extended_us, 1.0))));
    buckets[ke].first++;
    if (!t.baseline_refused) {
      const int kb = static_cast<int>(std::floor(std::log2(std::max(t.baseline_us, 1.0))));
      buckets[kb].second++;
    }
  }
  ordered_json hist = ordered_json::array();
  for (auto [k, counts] : buckets)
    hist.push_back({{"bucket_pow2_us", k}, {"extended", counts.first}, {"baseline", counts.second}});
  timing["histogram_log2_us"] = hist;
  doc["timing"] = timing;
  return doc;
}

}  // namespace minwire
