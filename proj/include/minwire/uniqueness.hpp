#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "minwire/datamodel.hpp"
#include "minwire/decompose.hpp"
#include "minwire/ideals.hpp"

namespace minwire {

/// An axis-aligned slice of the grid: the points agreeing with `fixed` on
/// its keys (1-based coordinates). An empty map is the whole grid.
struct Cylinder {
  std::map<int, int> fixed;

  bool contains(const Point& p) const {
    for (auto [coord, value] : fixed)
      if (p[static_cast<std::size_t>(coord - 1)] != value) return false;
    return true;
  }

  bool operator==(const Cylinder&) const = default;
};

/// The smallest cylinder containing both points: exactly the coordinates
/// where they agree are fixed.
inline Cylinder cylinder_of(const Point& p, const Point& q) {
  if (p.size() != q.size())
    throw validation_error("cylinder_of: points have different dimensions");
  Cylinder c;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == q[i]) c.fixed.emplace(static_cast<int>(i) + 1, p[i]);
  return c;
}

/// Connectivity under unit Hamming steps. The empty set and singletons are
/// connected.
inline bool is_connected(const std::vector<Point>& points) {
  if (points.size() <= 1) return true;
  std::vector<bool> reached(points.size(), false);
  std::vector<std::size_t> queue{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const std::size_t at = queue.back();
    queue.pop_back();
    for (std::size_t j = 0; j < points.size(); ++j)
      if (!reached[j] && hamming_distance(points[at], points[j]) == 1) {
        reached[j] = true;
        ++count;
        queue.push_back(j);
      }
  }
  return count == points.size();
}

struct ConnectivityWitness {
  Cylinder cylinder;
  Point a;
  Point b;

  bool operator==(const ConnectivityWitness&) const = default;
};

struct ConnectivityResult {
  bool connected = true;
  std::optional<ConnectivityWitness> witness;

  bool operator==(const ConnectivityResult&) const = default;
};

namespace detail {

inline bool pair_reachable_in(const std::vector<Point>& members, const Point& from,
                              const Point& to) {
  std::vector<bool> reached(members.size(), false);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == from) {
      reached[i] = true;
      queue.push_back(i);
    }
  while (!queue.empty()) {
    const std::size_t at = queue.back();
    queue.pop_back();
    if (members[at] == to) return true;
    for (std::size_t j = 0; j < members.size(); ++j)
      if (!reached[j] && hamming_distance(members[at], members[j]) == 1) {
        reached[j] = true;
        queue.push_back(j);
      }
  }
  return false;
}

}  // namespace detail

/// Whether every cylinder's intersection with V is connected. Checking the
/// spanning cylinder C(p,q) of every pair suffices: any cylinder containing
/// p and q contains C(p,q), so a pair disconnected in some cylinder is
/// already disconnected in its own spanning cylinder. On failure the
/// witness carries the cylinder and the two unreachable points.
inline ConnectivityResult is_cylindrically_connected(const InputSet& v) {
  const auto& pts = v.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Cylinder c = cylinder_of(pts[i], pts[j]);
      std::vector<Point> members;
      for (const Point& p : pts)
        if (c.contains(p)) members.push_back(p);
      if (!detail::pair_reachable_in(members, pts[i], pts[j]))
        return {false, ConnectivityWitness{c, pts[i], pts[j]}};
    }
  return {true, std::nullopt};
}

struct DiagonalInfo {
  /// max over p in V of the minimum Hamming distance from p to the rest;
  /// V has a diagonal iff this is at least 2.
  int length = 0;
  Point witness;
  /// Whether the witness sits at a corner of the grid (every coordinate 0
  /// or q-1). Among witnesses of maximal length, corner points win the tie.
  bool corner = false;

  bool operator==(const DiagonalInfo&) const = default;
};

inline DiagonalInfo diagonal_length(const InputSet& v) {
  if (v.size() < 2)
    throw validation_error("diagonal_length: undefined for fewer than two points");
  const auto& pts = v.points();
  const int q = v.spec().q;
  auto is_corner = [&](const Point& p) {
    for (int x : p)
      if (x != 0 && x != q - 1) return false;
    return true;
  };
  DiagonalInfo best{-1, {}, false};
  for (const Point& p : pts) {
    int nearest = std::numeric_limits<int>::max();
    for (const Point& r : pts)
      if (r != p) nearest = std::min(nearest, hamming_distance(p, r));
    const bool corner = is_corner(p);
    if (nearest > best.length || (nearest == best.length && corner && !best.corner))
      best = DiagonalInfo{nearest, p, corner};
  }
  return best;
}

/// Bell numbers (set partitions); empty when the value overflows 64 bits.
inline std::optional<std::uint64_t> bell_number(int m) {
  if (m < 0) return std::nullopt;
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= m; ++i) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(i) + 1);
    next[0] = row.back();
    for (std::size_t j = 0; j + 1 < next.size(); ++j) {
      if (next[j] > std::numeric_limits<std::uint64_t>::max() - row[j]) return std::nullopt;
      next[j + 1] = next[j] + row[j];
    }
    row = std::move(next);
  }
  return row[0];
}

/// Ordered Bell (Fubini) numbers (weak orders); empty on overflow.
inline std::optional<std::uint64_t> ordered_bell_number(int m) {
  if (m < 0) return std::nullopt;
  std::vector<std::uint64_t> a(static_cast<std::size_t>(m) + 1, 0);
  a[0] = 1;
  for (int i = 1; i <= m; ++i) {
    std::uint64_t binom = 1;
    for (int k = 1; k <= i; ++k) {
      // binom = C(i, k)
      if (binom > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(i - k + 1))
        return std::nullopt;
      binom = binom * static_cast<std::uint64_t>(i - k + 1) / static_cast<std::uint64_t>(k);
      const std::uint64_t term_base = a[static_cast<std::size_t>(i - k)];
      if (term_base != 0 && binom > std::numeric_limits<std::uint64_t>::max() / term_base)
        return std::nullopt;
      const std::uint64_t term = binom * term_base;
      if (a[static_cast<std::size_t>(i)] > std::numeric_limits<std::uint64_t>::max() - term)
        return std::nullopt;
      a[static_cast<std::size_t>(i)] += term;
    }
  }
  return a[static_cast<std::size_t>(m)];
}

/// Visits every set partition of {0..m-1} as a class vector (restricted
/// growth order). Classes are unordered labels 0..k-1.
template <typename Fn>
void for_each_partition(int m, Fn&& fn) {
  if (m <= 0) {
    std::vector<int> empty;
    fn(static_cast<const std::vector<int>&>(empty));
    return;
  }
  std::vector<int> cls(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == m) {
      fn(static_cast<const std::vector<int>&>(cls));
      return;
    }
    for (int c = 0; c <= used; ++c) {
      cls[static_cast<std::size_t>(i)] = c;
      self(self, i + 1, std::max(used, c + 1));
    }
  };
  rec(rec, 0, 0);
}

/// Visits every weak order (ordered set partition) of {0..m-1} as a class
/// vector where the class index is the rank: all members of class 0 come
/// before class 1, and so on. `max_classes` < 0 means no bound.
template <typename Fn>
void for_each_weak_order(int m, Fn&& fn, int max_classes = -1) {
  for_each_partition(m, [&](const std::vector<int>& cls) {
    int k = 0;
    for (int c : cls) k = std::max(k, c + 1);
    if (max_classes >= 0 && k > max_classes) return;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> ranked(cls.size());
    do {
      for (std::size_t i = 0; i < cls.size(); ++i)
        ranked[i] = perm[static_cast<std::size_t>(cls[i])];
      fn(static_cast<const std::vector<int>&>(ranked));
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
}

enum class ClassKind { partition, weak_order };

/// Materialized output-class assignments for m rows, guarded by `cap` since
/// the counts grow as Bell / ordered Bell numbers.
inline std::vector<std::vector<int>> enumerate_output_classes(int m, ClassKind kind, int cap = 8) {
  if (m > cap) {
    const auto count =
        kind == ClassKind::partition ? bell_number(m) : ordered_bell_number(m);
    throw capacity_error("enumerate_output_classes: " + std::to_string(m) + " rows would need " +
                         (count ? std::to_string(*count) : std::string("more than 2^64")) +
                         (kind == ClassKind::partition ? " partitions" : " weak orders") +
                         "; cap is " + std::to_string(cap) + " rows");
  }
  std::vector<std::vector<int>> out;
  if (kind == ClassKind::partition)
    for_each_partition(m, [&](const std::vector<int>& cls) { out.push_back(cls); });
  else
    for_each_weak_order(m, [&](const std::vector<int>& cls) { out.push_back(cls); });
  return out;
}

enum class TypeClass { type1, type2, type3a, type3b };

inline const char* to_string(TypeClass t) {
  switch (t) {
    case TypeClass::type1: return "1";
    case TypeClass::type2: return "2";
    case TypeClass::type3a: return "3a";
    case TypeClass::type3b: return "3b";
  }
  return "?";
}

struct TypeResult {
  TypeClass type = TypeClass::type1;
  /// Type 2: a multivariate candidate monomial with no univariate candidate
  /// dividing it.
  std::optional<Monomial> offending_monomial;
  /// Type 3b: an output weak order (ranks aligned with the sorted points)
  /// whose extended ideal is not prime.
  std::optional<std::vector<int>> witness_weak_order;

  bool operator==(const TypeResult&) const = default;
};

/// Classifies the candidate multiset of an input set. Type 1: every
/// candidate monomial is univariate. Type 2: some multivariate candidate
/// has no univariate candidate dividing it. Otherwise every output weak
/// order is tried: all extended ideals prime gives Type 3a, any non-prime
/// one gives Type 3b with the witnessing order.
inline TypeResult classify_type(const InputSet& v, int max_points = 8) {
  const int m = static_cast<int>(v.size());
  if (m > max_points) {
    const auto count = ordered_bell_number(m);
    throw capacity_error("classify_type: " + std::to_string(m) + " points would need " +
                         (count ? std::to_string(*count) : std::string("more than 2^64")) +
                         " weak orders; cap is " + std::to_string(max_points) + " points");
  }
  const CandidateMultiset candidates = candidate_multiset(v);
  if (candidates.all_univariate()) return {TypeClass::type1, std::nullopt, std::nullopt};

  for (const CandidateEntry& e : candidates.entries) {
    if (e.monomial.degree() <= 1) continue;
    bool divisible = false;
    for (const CandidateEntry& u : candidates.entries)
      if (u.monomial.degree() == 1 && u.monomial.divides(e.monomial)) {
        divisible = true;
        break;
      }
    if (!divisible) return {TypeClass::type2, e.monomial, std::nullopt};
  }

  const auto& pts = v.points();
  std::optional<std::vector<int>> witness;
  for_each_weak_order(m, [&](const std::vector<int>& ranks) {
    if (witness) return;
    const Ideal ext = ideal_from_labels(v.spec().n, pts, ranks, Alphabet::extended);
    if (!is_prime(ext)) witness = ranks;
  });
  if (witness) return {TypeClass::type3b, std::nullopt, witness};
  return {TypeClass::type3a, std::nullopt, std::nullopt};
}

/// Exactly one unsigned min-set for every output assignment iff the input
/// set is cylindrically connected; valid for any number of states.
inline bool unsigned_unique_all_outputs(const InputSet& v) {
  return is_cylindrically_connected(v).connected;
}

enum class Verdict { yes, no, unknown };

struct SignedUniquenessResult {
  enum class Method { cylindrical, exhaustive, none };

  Verdict at_most_one = Verdict::unknown;
  Method method = Method::none;
  /// For a `no` verdict found by enumeration: the output ranks producing
  /// two or more signed min-sets.
  std::optional<std::vector<int>> counterexample;

  bool operator==(const SignedUniquenessResult&) const = default;
};

/// At most one signed min-set for every output assignment. Boolean input
/// sets are decided by cylindrical connectivity; beyond two states the
/// question is open in general, so the answer comes from exhaustive
/// enumeration of realizable output weak orders when the point count is
/// within `max_points`, and is `unknown` otherwise.
inline SignedUniquenessResult signed_unique_all_outputs(const InputSet& v, int max_points = 8) {
  const int q = v.spec().q;
  if (q == 2) {
    const bool cc = is_cylindrically_connected(v).connected;
    return {cc ? Verdict::yes : Verdict::no, SignedUniquenessResult::Method::cylindrical,
            std::nullopt};
  }
  const int m = static_cast<int>(v.size());
  if (m > max_points) return {Verdict::unknown, SignedUniquenessResult::Method::none, std::nullopt};
  const auto& pts = v.points();
  std::optional<std::vector<int>> counterexample;
  for_each_weak_order(
      m,
      [&](const std::vector<int>& ranks) {
        if (counterexample) return;
        const Ideal ext = ideal_from_labels(v.spec().n, pts, ranks, Alphabet::extended);
        const SignedProjection sp = project_signed(minimal_transversals(ext));
        if (sp.minsets.size() > 1) counterexample = ranks;
      },
      std::min(q, m));
  if (counterexample)
    return {Verdict::no, SignedUniquenessResult::Method::exhaustive, counterexample};
  return {Verdict::yes, SignedUniquenessResult::Method::exhaustive, std::nullopt};
}

/// Everything the uniqueness machinery can certify about an input set.
struct Certificate {
  FieldSpec spec;
  std::size_t points = 0;
  ConnectivityResult connectivity;
  /// Present iff the set has a diagonal (two or more points and length >= 2).
  std::optional<DiagonalInfo> diagonal;
  /// Absent when classification was skipped because of the weak-order cap.
  std::optional<TypeResult> type;
  bool type_skipped_cap = false;
  bool unsigned_unique_for_all_outputs = false;
  SignedUniquenessResult signed_uniqueness;

  bool operator==(const Certificate&) const = default;
};

inline Certificate certify(const InputSet& v, int max_type_points = 8) {
  Certificate cert;
  cert.spec = v.spec();
  cert.points = v.size();
  cert.connectivity = is_cylindrically_connected(v);
  cert.unsigned_unique_for_all_outputs = cert.connectivity.connected;
  if (v.size() >= 2) {
    const DiagonalInfo d = diagonal_length(v);
    if (d.length >= 2) cert.diagonal = d;
  }
  try {
    cert.type = classify_type(v, max_type_points);
  } catch (const capacity_error&) {
    cert.type_skipped_cap = true;
  }
  cert.signed_uniqueness = signed_unique_all_outputs(v, max_type_points);
  return cert;
}

}  // namespace minwire
