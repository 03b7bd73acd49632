#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <compare>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "minwire/errors.hpp"

namespace minwire {

/// A point of the state grid {0..q-1}^n. Points compare lexicographically.
using Point = std::vector<int>;

/// Shape of the state grid: q states per variable, n variables.
struct FieldSpec {
  int q = 2;
  int n = 1;

  FieldSpec() = default;
  FieldSpec(int q_, int n_) : q(q_), n(n_) {
    if (q < 2) throw validation_error("FieldSpec: q must be at least 2");
    if (n < 1) throw validation_error("FieldSpec: n must be at least 1");
    if (n > 32) throw validation_error("FieldSpec: at most 32 variables supported");
    std::uint64_t size = 1;
    for (int i = 0; i < n; ++i) {
      if (size > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(q))
        throw validation_error("FieldSpec: domain size q^n is not representable");
      size *= static_cast<std::uint64_t>(q);
    }
  }

  bool operator==(const FieldSpec&) const = default;

  bool in_range(const Point& p) const {
    if (static_cast<int>(p.size()) != n) return false;
    for (int v : p)
      if (v < 0 || v >= q) return false;
    return true;
  }
};

/// q^n, guaranteed representable by FieldSpec construction.
inline std::uint64_t grid_size(const FieldSpec& spec) {
  std::uint64_t size = 1;
  for (int i = 0; i < spec.n; ++i) size *= static_cast<std::uint64_t>(spec.q);
  return size;
}

/// Point with lexicographic rank `index` (first coordinate most significant).
inline Point point_at(const FieldSpec& spec, std::uint64_t index) {
  Point p(static_cast<std::size_t>(spec.n));
  for (int i = spec.n - 1; i >= 0; --i) {
    p[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(spec.q));
    index /= static_cast<std::uint64_t>(spec.q);
  }
  return p;
}

inline std::uint64_t index_of(const FieldSpec& spec, const Point& p) {
  std::uint64_t index = 0;
  for (int v : p) index = index * static_cast<std::uint64_t>(spec.q) + static_cast<std::uint64_t>(v);
  return index;
}

inline std::string point_to_string(const Point& p) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out << ',';
    out << p[i];
  }
  out << ')';
  return out.str();
}

/// Number of coordinates in which two points differ.
inline int hamming_distance(const Point& a, const Point& b) {
  if (a.size() != b.size())
    throw validation_error("hamming_distance: points have different dimensions");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) ++d;
  return d;
}

enum class Polarity : unsigned char { plain = 0, barred = 1 };

/// A variable index (1-based) with a polarity. Plain literals stand for
/// activators and render as the factor (x-1); barred literals stand for
/// inhibitors and render as (x+1).
struct Literal {
  int var = 1;
  Polarity pol = Polarity::plain;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal plain(int var) { return Literal{var, Polarity::plain}; }
inline Literal barred(int var) { return Literal{var, Polarity::barred}; }

/// A squarefree set of literals over the doubled alphabet
/// {x1..xn, x̄1..x̄n}, carried as a 64-bit mask (bit 2(v-1) is the plain
/// literal of variable v, bit 2(v-1)+1 the barred one). Serves both as a
/// monomial (a generator) and as a prime component (a transversal).
class LiteralSet {
public:
  static constexpr int max_vars = 32;

  LiteralSet() = default;

  static LiteralSet of(std::initializer_list<Literal> lits) {
    LiteralSet s;
    for (Literal l : lits) s.insert(l);
    return s;
  }

  static LiteralSet from_mask(std::uint64_t bits) {
    LiteralSet s;
    s.bits_ = bits;
    return s;
  }

  std::uint64_t mask() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int degree() const { return std::popcount(bits_); }

  void insert(Literal l) {
    check_var(l.var);
    bits_ |= bit_of(l);
  }

  LiteralSet with(Literal l) const {
    LiteralSet s = *this;
    s.insert(l);
    return s;
  }

  bool contains(Literal l) const { return (bits_ & bit_of(l)) != 0; }
  bool subset_of(const LiteralSet& other) const { return (bits_ & ~other.bits_) == 0; }
  /// Divisibility of squarefree monomials is containment of literal sets.
  bool divides(const LiteralSet& other) const { return subset_of(other); }
  bool intersects(const LiteralSet& other) const { return (bits_ & other.bits_) != 0; }

  LiteralSet united(const LiteralSet& other) const { return from_mask(bits_ | other.bits_); }

  /// True iff some variable appears with both polarities.
  bool conflicted() const { return (bits_ & (bits_ >> 1) & plain_bits) != 0; }

  /// Whether any barred literal is present (plain-alphabet check).
  bool has_barred() const { return (bits_ & barred_bits) != 0; }

  /// Replace every barred literal by its plain counterpart.
  LiteralSet bars_dropped() const {
    return from_mask((bits_ & plain_bits) | ((bits_ >> 1) & plain_bits));
  }

  /// Swap the polarity of every literal.
  LiteralSet bar_flipped() const {
    return from_mask(((bits_ & plain_bits) << 1) | ((bits_ >> 1) & plain_bits));
  }

  /// Flip the polarity of the literals of one variable (used by the
  /// monotone-negation coordinate map, which turns activators of that
  /// variable into inhibitors and vice versa).
  LiteralSet polarity_flipped(int var) const {
    check_var(var);
    const std::uint64_t pair = std::uint64_t{3} << (2 * (var - 1));
    const std::uint64_t inside = bits_ & pair;
    const std::uint64_t swapped = ((inside << 1) | (inside >> 1)) & pair;
    return from_mask((bits_ & ~pair) | swapped);
  }

  /// Literals sorted by (variable, polarity), plain before barred.
  std::vector<Literal> literals() const {
    std::vector<Literal> out;
    out.reserve(static_cast<std::size_t>(degree()));
    std::uint64_t b = bits_;
    while (b) {
      const int idx = std::countr_zero(b);
      out.push_back(Literal{idx / 2 + 1, static_cast<Polarity>(idx % 2)});
      b &= b - 1;
    }
    return out;
  }

  friend bool operator==(const LiteralSet&, const LiteralSet&) = default;

  /// Lexicographic order on the sorted literal sequences; the canonical
  /// order for generator lists and component lists.
  static bool lex_less(const LiteralSet& a, const LiteralSet& b) {
    std::uint64_t x = a.bits_, y = b.bits_;
    while (x && y) {
      const int ix = std::countr_zero(x), iy = std::countr_zero(y);
      if (ix != iy) return ix < iy;
      x &= x - 1;
      y &= y - 1;
    }
    return x == 0 && y != 0;
  }

private:
  static constexpr std::uint64_t plain_bits = 0x5555555555555555ull;
  static constexpr std::uint64_t barred_bits = ~plain_bits;

  static void check_var(int var) {
    if (var < 1 || var > max_vars)
      throw validation_error("Literal: variable index out of range");
  }

  static std::uint64_t bit_of(Literal l) {
    check_var(l.var);
    return std::uint64_t{1} << (2 * (l.var - 1) + static_cast<int>(l.pol));
  }

  std::uint64_t bits_ = 0;
};

using Monomial = LiteralSet;
using Component = LiteralSet;

/// Inclusion-minimal elements of a family of literal sets, deduplicated and
/// in canonical order. This single filter implements generator minimization,
/// transversal reduction, and min-set extraction.
inline std::vector<LiteralSet> minimal_sets(std::vector<LiteralSet> sets) {
  std::sort(sets.begin(), sets.end(),
            [](const LiteralSet& a, const LiteralSet& b) { return a.mask() < b.mask(); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<LiteralSet> out;
  out.reserve(sets.size());
  for (const LiteralSet& s : sets) {
    bool has_proper_subset = false;
    for (const LiteralSet& t : sets)
      if (t != s && t.subset_of(s)) {
        has_proper_subset = true;
        break;
      }
    if (!has_proper_subset) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), LiteralSet::lex_less);
  return out;
}

enum class Alphabet { plain, extended };

/// A squarefree monomial ideal given by a finite generator list. An empty
/// generator list is the zero ideal; a generator with no literals marks the
/// unit ideal and is rejected by the operations that need a proper ideal.
struct Ideal {
  Alphabet alphabet = Alphabet::plain;
  int num_vars = 1;
  std::vector<Monomial> generators;

  bool operator==(const Ideal&) const = default;
};

/// Result of the min-set pipeline. `signed_consistent` is false exactly when
/// no sign assignment fits the data (the signed model space is empty), in
/// which case `signed_minsets` is empty.
struct MinSetReport {
  std::vector<Component> unsigned_minsets;
  std::vector<Component> signed_minsets;
  bool signed_consistent = true;

  bool operator==(const MinSetReport&) const = default;
};

struct Row {
  Point input;
  int output = 0;

  friend auto operator<=>(const Row&, const Row&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::string message;
  std::size_t row = 0;  // first offending row, 0-based

  explicit operator bool() const { return ok; }
};

/// Checks ranges and input distinctness. Duplicate inputs with equal outputs
/// are allowed (merged later); with different outputs no function can fit.
inline ValidationReport validate_dataset(const FieldSpec& spec, const std::vector<Row>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].input.size()) != spec.n)
      return {false, "range error: row " + std::to_string(i + 1) + " has " +
                         std::to_string(rows[i].input.size()) + " coordinates, expected " +
                         std::to_string(spec.n),
              i};
    if (!spec.in_range(rows[i].input))
      return {false, "range error: row " + std::to_string(i + 1) + " input " +
                         point_to_string(rows[i].input) + " is outside {0.." +
                         std::to_string(spec.q - 1) + "}^" + std::to_string(spec.n),
              i};
    if (rows[i].output < 0 || rows[i].output >= spec.q)
      return {false, "range error: row " + std::to_string(i + 1) + " output " +
                         std::to_string(rows[i].output) + " is outside 0.." +
                         std::to_string(spec.q - 1),
              i};
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[i].input == rows[j].input && rows[i].output != rows[j].output)
        return {false, "contradictory data: rows " + std::to_string(i + 1) + " and " +
                           std::to_string(j + 1) + " repeat input " +
                           point_to_string(rows[i].input) + " with outputs " +
                           std::to_string(rows[i].output) + " and " +
                           std::to_string(rows[j].output),
                j};
  return {};
}

/// Input-output data over a fixed grid. Construction validates, merges
/// duplicate rows, and sorts rows by (output, input) so that downstream
/// generator lists come out in one canonical order.
class DataSet {
public:
  DataSet() = default;

  DataSet(FieldSpec spec, std::vector<Row> rows) : spec_(spec) {
    if (auto v = validate_dataset(spec, rows); !v) throw validation_error(v.message);
    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return std::tie(a.output, a.input) < std::tie(b.output, b.input); });
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    rows_ = std::move(rows);
  }

  const FieldSpec& spec() const { return spec_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  bool operator==(const DataSet&) const = default;

private:
  FieldSpec spec_;
  std::vector<Row> rows_;
};

/// A set of distinct input points (a DataSet with the outputs stripped).
/// Points are kept sorted.
class InputSet {
public:
  InputSet() = default;

  InputSet(FieldSpec spec, std::vector<Point> points) : spec_(spec) {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (!spec.in_range(points[i]))
        throw validation_error("range error: point " + std::to_string(i + 1) + " " +
                               point_to_string(points[i]) + " is outside the grid");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    points_ = std::move(points);
  }

  const FieldSpec& spec() const { return spec_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
  }

  bool operator==(const InputSet&) const = default;

private:
  FieldSpec spec_;
  std::vector<Point> points_;
};

inline InputSet inputs_of(const DataSet& data) {
  std::vector<Point> pts;
  pts.reserve(data.size());
  for (const Row& r : data.rows()) pts.push_back(r.input);
  return InputSet(data.spec(), std::move(pts));
}

/// Applies one bijection of the state set per coordinate. Bijections
/// preserve pairwise Hamming distances and therefore every connectivity and
/// diagonal property of the set.
inline InputSet apply_coordinate_maps(const InputSet& v, const std::vector<std::vector<int>>& maps) {
  const FieldSpec& spec = v.spec();
  if (static_cast<int>(maps.size()) != spec.n)
    throw validation_error("apply_coordinate_maps: expected one map per variable");
  for (const auto& m : maps) {
    if (static_cast<int>(m.size()) != spec.q)
      throw validation_error("apply_coordinate_maps: map is not defined on all states");
    std::vector<bool> hit(static_cast<std::size_t>(spec.q), false);
    for (int image : m) {
      if (image < 0 || image >= spec.q || hit[static_cast<std::size_t>(image)])
        throw validation_error("apply_coordinate_maps: map is not a bijection on the state set");
      hit[static_cast<std::size_t>(image)] = true;
    }
  }
  std::vector<Point> out;
  out.reserve(v.size());
  for (const Point& p : v.points()) {
    Point image(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      image[i] = maps[i][static_cast<std::size_t>(p[i])];
    out.push_back(std::move(image));
  }
  return InputSet(spec, std::move(out));
}

}  // namespace minwire
