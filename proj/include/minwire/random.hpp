#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "minwire/datamodel.hpp"

namespace minwire {

/// Deterministic seeded generator. Bounded draws use rejection sampling on
/// the raw 64-bit stream instead of std::uniform_int_distribution, whose
/// output is implementation-defined; identical seeds give identical
/// instances everywhere.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform draw from [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return draw % bound;
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

private:
  std::mt19937_64 engine_;
};

/// r distinct points drawn uniformly from the grid (partial Fisher-Yates
/// over point ranks).
inline std::vector<Point> random_points(SeededRng& rng, const FieldSpec& spec, std::size_t r) {
  const std::uint64_t cells = grid_size(spec);
  if (r > cells) throw validation_error("random_points: more points requested than the grid has");
  std::vector<std::uint64_t> ranks(cells);
  for (std::uint64_t i = 0; i < cells; ++i) ranks[i] = i;
  std::vector<Point> out;
  out.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint64_t j = i + rng.below(cells - i);
    std::swap(ranks[i], ranks[j]);
    out.push_back(point_at(spec, ranks[i]));
  }
  return out;
}

inline InputSet random_input_set(SeededRng& rng, const FieldSpec& spec, std::size_t r) {
  return InputSet(spec, random_points(rng, spec, r));
}

/// Random data set: r distinct inputs, outputs uniform over the state set.
inline DataSet random_dataset(SeededRng& rng, const FieldSpec& spec, std::size_t r) {
  std::vector<Row> rows;
  rows.reserve(r);
  for (Point& p : random_points(rng, spec, r))
    rows.push_back({std::move(p), rng.below_int(spec.q)});
  return DataSet(spec, std::move(rows));
}

}  // namespace minwire
