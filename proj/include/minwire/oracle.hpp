#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "minwire/datamodel.hpp"

namespace minwire {

/// A fully specified function {0..q-1}^n -> {0..q-1}, tabulated in
/// lexicographic input order (first coordinate most significant).
class FunctionTable {
public:
  FunctionTable(FieldSpec spec, std::vector<int> values) : spec_(spec), values_(std::move(values)) {
    if (values_.size() != grid_size(spec_))
      throw validation_error("FunctionTable: expected q^n values");
    for (int v : values_)
      if (v < 0 || v >= spec_.q)
        throw validation_error("FunctionTable: value outside 0..q-1");
  }

  template <typename Fn>
  static FunctionTable tabulate(FieldSpec spec, Fn&& fn) {
    const std::uint64_t cells = grid_size(spec);
    std::vector<int> values;
    values.reserve(cells);
    for (std::uint64_t i = 0; i < cells; ++i) values.push_back(fn(point_at(spec, i)));
    return FunctionTable(spec, std::move(values));
  }

  const FieldSpec& spec() const { return spec_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(const Point& p) const { return values_[index_of(spec_, p)]; }

private:
  FieldSpec spec_;
  std::vector<int> values_;
};

namespace detail {

/// Walks every adjacent pair along coordinate `var` (1-based) and reports
/// the observed directions: +1 for an increase somewhere, -1 for a
/// decrease, 0 for constant. Mixed directions come back as both flags set.
struct CoordinateTrend {
  bool increases = false;
  bool decreases = false;
};

inline CoordinateTrend coordinate_trend(const FieldSpec& spec, const std::vector<int>& values,
                                        int var) {
  CoordinateTrend trend;
  std::uint64_t stride = 1;
  for (int i = var; i < spec.n; ++i) stride *= static_cast<std::uint64_t>(spec.q);
  const std::uint64_t cells = values.size();
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    const int digit = static_cast<int>((idx / stride) % static_cast<std::uint64_t>(spec.q));
    if (digit == spec.q - 1) continue;
    const int here = values[idx];
    const int next = values[idx + stride];
    if (here < next) trend.increases = true;
    if (here > next) trend.decreases = true;
  }
  return trend;
}

}  // namespace detail

/// Variables the function actually depends on: those along which some
/// fiber is non-constant.
inline std::vector<int> support(const FunctionTable& f) {
  std::vector<int> vars;
  for (int var = 1; var <= f.spec().n; ++var) {
    const auto trend = detail::coordinate_trend(f.spec(), f.values(), var);
    if (trend.increases || trend.decreases) vars.push_back(var);
  }
  return vars;
}

/// Signed support of a unate function: a plain literal per variable the
/// function is non-decreasing in (on every fiber), a barred literal per
/// variable it is non-increasing in. Returns nothing when some variable
/// acts in both directions, i.e. the function is not unate. Variables that
/// are constant on every fiber are excluded.
inline std::optional<LiteralSet> signed_support(const FunctionTable& f) {
  LiteralSet lits;
  for (int var = 1; var <= f.spec().n; ++var) {
    const auto trend = detail::coordinate_trend(f.spec(), f.values(), var);
    if (trend.increases && trend.decreases) return std::nullopt;
    if (trend.increases) lits.insert(plain(var));
    if (trend.decreases) lits.insert(barred(var));
  }
  return lits;
}

/// Size of the model space, q^(q^n - m): exact when it fits 64 bits,
/// otherwise only the (base, exponent) pair.
struct ModelCount {
  int base = 2;
  std::uint64_t exponent = 0;
  std::optional<std::uint64_t> exact;

  std::string to_string() const {
    if (exact) return std::to_string(*exact);
    return std::to_string(base) + "^" + std::to_string(exponent);
  }
};

inline ModelCount count_model_space(const DataSet& data) {
  ModelCount out;
  out.base = data.spec().q;
  out.exponent = grid_size(data.spec()) - data.size();
  std::uint64_t value = 1;
  bool fits = true;
  for (std::uint64_t i = 0; i < out.exponent; ++i) {
    if (value > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(out.base)) {
      fits = false;
      break;
    }
    value *= static_cast<std::uint64_t>(out.base);
  }
  if (fits) out.exact = value;
  return out;
}

enum class MinsetKind { unsigned_sets, signed_sets };

struct OracleResult {
  std::vector<Component> minsets;
  /// For the signed kind: whether any unate function fits at all.
  bool signed_consistent = true;
  /// Number of fitting functions seen, when the route enumerates them
  /// (completions that fit for the unsigned kind, unate fits for signed).
  std::optional<std::uint64_t> fits_counted;
};

constexpr std::uint64_t default_completion_cap = std::uint64_t{1} << 24;

/// Ground truth by enumerating every completion of the partial table
/// (q^(q^n - m) of them), collecting the (signed) supports of the fitting
/// functions and keeping the inclusion-minimal ones.
inline OracleResult oracle_minsets_by_completion(const DataSet& data, MinsetKind kind,
                                                 std::uint64_t max_completions = default_completion_cap) {
  const FieldSpec& spec = data.spec();
  const std::uint64_t cells = grid_size(spec);
  const std::uint64_t unspecified = cells - data.size();

  std::uint64_t completions = 1;
  for (std::uint64_t i = 0; i < unspecified; ++i) {
    if (completions > max_completions / static_cast<std::uint64_t>(spec.q))
      throw capacity_error("oracle_minsets_by_completion: " + count_model_space(data).to_string() +
                           " completions exceed the cap of " + std::to_string(max_completions));
    completions *= static_cast<std::uint64_t>(spec.q);
  }

  std::vector<int> values(cells, 0);
  std::vector<bool> specified(cells, false);
  for (const Row& r : data.rows()) {
    values[index_of(spec, r.input)] = r.output;
    specified[index_of(spec, r.input)] = true;
  }
  std::vector<std::uint64_t> free_cells;
  for (std::uint64_t i = 0; i < cells; ++i)
    if (!specified[i]) free_cells.push_back(i);

  std::set<std::uint64_t> supports;
  std::uint64_t fits = 0;
  std::vector<int> digits(free_cells.size(), 0);
  for (std::uint64_t step = 0; step < completions; ++step) {
    if (kind == MinsetKind::unsigned_sets) {
      LiteralSet s;
      for (int var = 1; var <= spec.n; ++var) {
        const auto trend = detail::coordinate_trend(spec, values, var);
        if (trend.increases || trend.decreases) s.insert(plain(var));
      }
      supports.insert(s.mask());
      ++fits;
    } else {
      LiteralSet s;
      bool unate = true;
      for (int var = 1; var <= spec.n && unate; ++var) {
        const auto trend = detail::coordinate_trend(spec, values, var);
        if (trend.increases && trend.decreases) unate = false;
        if (trend.increases) s.insert(plain(var));
        if (trend.decreases) s.insert(barred(var));
      }
      if (unate) {
        supports.insert(s.mask());
        ++fits;
      }
    }
    // advance the odometer over the unspecified cells
    for (std::size_t d = 0; d < free_cells.size(); ++d) {
      if (++digits[d] < spec.q) {
        values[free_cells[d]] = digits[d];
        break;
      }
      digits[d] = 0;
      values[free_cells[d]] = 0;
    }
  }

  std::vector<Component> collected;
  collected.reserve(supports.size());
  for (std::uint64_t mask : supports) collected.push_back(Component::from_mask(mask));
  OracleResult out;
  out.minsets = minimal_sets(std::move(collected));
  out.signed_consistent = kind == MinsetKind::unsigned_sets || fits > 0;
  if (!out.signed_consistent) out.minsets.clear();
  out.fits_counted = fits;
  return out;
}

namespace detail {

/// A variable set Y is feasible iff some function depending only on Y fits
/// the data, i.e. no two rows agree on Y but disagree in output.
inline bool unsigned_feasible(const DataSet& data, std::uint64_t var_mask) {
  const auto& rows = data.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[i].output == rows[j].output) continue;
      bool agree = true;
      for (int var = 1; var <= data.spec().n && agree; ++var)
        if ((var_mask >> (var - 1)) & 1)
          agree = rows[i].input[static_cast<std::size_t>(var - 1)] ==
                  rows[j].input[static_cast<std::size_t>(var - 1)];
      if (agree) return false;
    }
  return true;
}

/// A conflict-free literal set W is feasible iff some unate function with
/// signed support inside W fits the data. That holds exactly when the rows
/// are order-consistent under the W-twisted product order (barred
/// coordinates compared downward, others ignored): the pointwise maximum
/// extension then realizes it.
inline bool signed_feasible(const DataSet& data, const LiteralSet& w) {
  const auto& rows = data.rows();
  const int n = data.spec().n;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (i == j || rows[i].output <= rows[j].output) continue;
      // i has the larger output; i <=_W j must therefore fail
      bool below = true;
      for (int var = 1; var <= n && below; ++var) {
        const int a = rows[i].input[static_cast<std::size_t>(var - 1)];
        const int b = rows[j].input[static_cast<std::size_t>(var - 1)];
        if (w.contains(plain(var)))
          below = a <= b;
        else if (w.contains(barred(var)))
          below = a >= b;
      }
      if (below) return false;
    }
  return true;
}

}  // namespace detail

/// Ground truth by direct feasibility: every candidate variable set (or
/// conflict-free sign pattern) is tested against the data from first
/// principles, without enumerating functions. Exact, and independent of
/// the table-completion route.
inline OracleResult oracle_minsets_by_feasibility(const DataSet& data, MinsetKind kind) {
  const int n = data.spec().n;
  if (kind == MinsetKind::unsigned_sets && n > 20)
    throw capacity_error("oracle_minsets_by_feasibility: 2^" + std::to_string(n) +
                         " variable sets exceed the guard (n <= 20)");
  if (kind == MinsetKind::signed_sets && n > 12)
    throw capacity_error("oracle_minsets_by_feasibility: 3^" + std::to_string(n) +
                         " sign patterns exceed the guard (n <= 12)");

  std::vector<Component> feasible;
  if (kind == MinsetKind::unsigned_sets) {
    for (std::uint64_t var_mask = 0; var_mask < (std::uint64_t{1} << n); ++var_mask) {
      if (!detail::unsigned_feasible(data, var_mask)) continue;
      LiteralSet s;
      for (int var = 1; var <= n; ++var)
        if ((var_mask >> (var - 1)) & 1) s.insert(plain(var));
      feasible.push_back(s);
    }
    return {minimal_sets(std::move(feasible)), true, std::nullopt};
  }

  std::uint64_t patterns = 1;
  for (int i = 0; i < n; ++i) patterns *= 3;
  for (std::uint64_t code = 0; code < patterns; ++code) {
    LiteralSet w;
    std::uint64_t rest = code;
    for (int var = 1; var <= n; ++var) {
      const int trit = static_cast<int>(rest % 3);
      rest /= 3;
      if (trit == 1) w.insert(plain(var));
      if (trit == 2) w.insert(barred(var));
    }
    if (detail::signed_feasible(data, w)) feasible.push_back(w);
  }
  OracleResult out;
  out.signed_consistent = !feasible.empty();
  out.minsets = minimal_sets(std::move(feasible));
  return out;
}

/// Exact min-sets from first principles. Uses completion enumeration when
/// it fits the cap, otherwise falls back to the feasibility route; refuses
/// only when both guards are exceeded.
inline OracleResult oracle_minsets(const DataSet& data, MinsetKind kind,
                                   std::uint64_t max_completions = default_completion_cap) {
  const FieldSpec& spec = data.spec();
  const std::uint64_t unspecified = grid_size(spec) - data.size();
  bool completions_fit = true;
  std::uint64_t completions = 1;
  for (std::uint64_t i = 0; i < unspecified && completions_fit; ++i) {
    if (completions > max_completions / static_cast<std::uint64_t>(spec.q))
      completions_fit = false;
    else
      completions *= static_cast<std::uint64_t>(spec.q);
  }
  if (completions_fit) return oracle_minsets_by_completion(data, kind, max_completions);
  return oracle_minsets_by_feasibility(data, kind);
}

struct WiringEdge {
  int from = 0;
  int to = 0;
  enum class Sign { activator, inhibitor, unsigned_edge } sign = Sign::unsigned_edge;

  friend auto operator<=>(const WiringEdge&, const WiringEdge&) = default;
};

struct WiringDiagram {
  std::vector<WiringEdge> edges;
  /// Coordinates whose function is not unate; their edges carry no sign.
  std::vector<int> non_unate;
};

/// Wiring diagram of a full system, one table per coordinate function: an
/// edge i -> j whenever variable i is in the support of coordinate j,
/// signed by the direction of the dependence when available.
inline WiringDiagram wiring_diagram(const std::vector<FunctionTable>& system) {
  WiringDiagram wd;
  for (std::size_t j = 0; j < system.size(); ++j) {
    const int target = static_cast<int>(j) + 1;
    if (auto ss = signed_support(system[j])) {
      for (Literal l : ss->literals())
        wd.edges.push_back({l.var, target,
                            l.pol == Polarity::plain ? WiringEdge::Sign::activator
                                                     : WiringEdge::Sign::inhibitor});
    } else {
      wd.non_unate.push_back(target);
      for (int var : support(system[j]))
        wd.edges.push_back({var, target, WiringEdge::Sign::unsigned_edge});
    }
  }
  std::sort(wd.edges.begin(), wd.edges.end());
  return wd;
}

}  // namespace minwire
