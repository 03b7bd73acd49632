#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minwire/datamodel.hpp"
#include "minwire/uniqueness.hpp"

namespace minwire {

/// True iff adding the points makes the set cylindrically connected, which
/// guarantees a unique unsigned min-set for every possible outcome of the
/// new experiments (and a unique signed one on Boolean grids).
inline bool verify_extension(const InputSet& v, const std::vector<Point>& added) {
  std::vector<Point> merged = v.points();
  for (const Point& p : added) {
    if (!v.spec().in_range(p))
      throw validation_error("verify_extension: point " + point_to_string(p) +
                             " is outside the grid");
    if (v.contains(p))
      throw validation_error("verify_extension: point " + point_to_string(p) +
                             " is already in the input set");
    merged.push_back(p);
  }
  return is_cylindrically_connected(InputSet(v.spec(), std::move(merged))).connected;
}

/// A candidate batch of additional experiments. Ranked by fewest added
/// points first, then lexicographically.
struct Suggestion {
  std::vector<Point> added;
  bool resulting_unique = true;

  bool operator==(const Suggestion&) const = default;
};

struct SuggestResult {
  /// The input set was cylindrically connected to begin with; no
  /// suggestions are needed or produced.
  bool already_unique = false;
  std::vector<Suggestion> suggestions;

  bool operator==(const SuggestResult&) const = default;
};

constexpr std::uint64_t default_grid_cap = std::uint64_t{1} << 20;
constexpr std::uint64_t default_subset_cap = std::uint64_t{1} << 24;

/// Enumerates every batch of at most k new points whose addition makes the
/// set cylindrically connected, smallest batches first and lexicographic
/// within a size. Grid and subset-count guards keep the search exact or
/// refused, never approximate.
inline SuggestResult suggest_extensions(const InputSet& v, int k,
                                        std::uint64_t grid_cap = default_grid_cap,
                                        std::uint64_t subset_cap = default_subset_cap) {
  if (k < 1) throw validation_error("suggest_extensions: k must be at least 1");
  const std::uint64_t cells = grid_size(v.spec());
  if (cells > grid_cap)
    throw capacity_error("suggest_extensions: grid of " + std::to_string(cells) +
                         " points exceeds the cap of " + std::to_string(grid_cap));
  if (is_cylindrically_connected(v).connected) return {true, {}};

  std::vector<Point> candidates;
  candidates.reserve(cells - v.size());
  for (std::uint64_t i = 0; i < cells; ++i) {
    Point p = point_at(v.spec(), i);
    if (!v.contains(p)) candidates.push_back(std::move(p));
  }

  auto next_combination = [](std::vector<std::size_t>& pick, std::size_t n) {
    const std::size_t k = pick.size();
    for (std::size_t i = k; i-- > 0;) {
      if (pick[i] < n - k + i) {
        ++pick[i];
        for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  SuggestResult out;
  std::uint64_t examined = 0;
  for (int size = 1; size <= k && static_cast<std::size_t>(size) <= candidates.size(); ++size) {
    std::vector<std::size_t> pick(static_cast<std::size_t>(size));
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
    do {
      if (++examined > subset_cap)
        throw capacity_error("suggest_extensions: more than " + std::to_string(subset_cap) +
                             " candidate batches");
      std::vector<Point> batch;
      batch.reserve(pick.size());
      for (std::size_t idx : pick) batch.push_back(candidates[idx]);
      std::vector<Point> merged = v.points();
      merged.insert(merged.end(), batch.begin(), batch.end());
      if (is_cylindrically_connected(InputSet(v.spec(), std::move(merged))).connected)
        out.suggestions.push_back({std::move(batch), true});
    } while (next_combination(pick, candidates.size()));
  }
  return out;
}

}  // namespace minwire
