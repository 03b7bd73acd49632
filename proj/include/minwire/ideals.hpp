#pragma once

#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "minwire/datamodel.hpp"

namespace minwire {

/// Plain squarefree monomial recording which coordinates differ between two
/// points. Symmetric in its arguments.
inline Monomial unsigned_generator(const Point& a, const Point& b) {
  if (a.size() != b.size())
    throw validation_error("unsigned_generator: points have different dimensions");
  Monomial m;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) m.insert(plain(static_cast<int>(i) + 1));
  if (m.empty())
    throw validation_error("unsigned_generator: points are equal (empty monomial)");
  return m;
}

/// Monomial over the doubled alphabet recording the direction of every
/// coordinate change from `low` to `high`: plain literal where the
/// coordinate increases, barred literal where it decreases. Callers order
/// the arguments so that the output of `low` is the smaller one. Swapping
/// the arguments bar-flips every literal.
inline Monomial extended_generator(const Point& low, const Point& high) {
  if (low.size() != high.size())
    throw validation_error("extended_generator: points have different dimensions");
  Monomial m;
  for (std::size_t i = 0; i < low.size(); ++i) {
    const int var = static_cast<int>(i) + 1;
    if (low[i] < high[i])
      m.insert(plain(var));
    else if (low[i] > high[i])
      m.insert(barred(var));
  }
  if (m.empty())
    throw validation_error("extended_generator: points are equal (empty monomial)");
  return m;
}

/// Renders an extended-alphabet monomial as a product of linear factors,
/// plain x_k as "(xk-1)" and barred x_k as "(xk+1)", ordered by variable.
inline std::string render_pseudomonomial(const Monomial& m) {
  std::ostringstream out;
  for (Literal l : m.literals())
    out << "(x" << l.var << (l.pol == Polarity::plain ? "-1" : "+1") << ")";
  return out.str();
}

/// Core ideal builder. Outputs enter only through order comparisons, so any
/// integer labels work: Plain takes one generator per unordered pair with
/// different labels; Extended takes one generator per ordered pair with
/// labels increasing from the first argument to the second. The result is
/// deduplicated but not minimized.
inline std::vector<Monomial> collect_generators(std::span<const Point> points,
                                                std::span<const int> labels, Alphabet alphabet) {
  if (points.size() != labels.size())
    throw validation_error("collect_generators: one label per point required");
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (alphabet == Alphabet::plain && !(i < j && labels[i] != labels[j])) continue;
      if (alphabet == Alphabet::extended && !(labels[i] < labels[j])) continue;
      gens.push_back(alphabet == Alphabet::plain ? unsigned_generator(points[i], points[j])
                                                 : extended_generator(points[i], points[j]));
    }
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.mask() < b.mask(); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::sort(gens.begin(), gens.end(), LiteralSet::lex_less);
  return gens;
}

inline std::vector<Monomial> collect_generators(const DataSet& data, Alphabet alphabet) {
  std::vector<Point> points;
  std::vector<int> labels;
  points.reserve(data.size());
  labels.reserve(data.size());
  for (const Row& r : data.rows()) {
    points.push_back(r.input);
    labels.push_back(r.output);
  }
  return collect_generators(points, labels, alphabet);
}

/// Ideal from points plus integer labels, minimized. An empty generator
/// list (fewer than two distinct labels) is the zero ideal.
inline Ideal ideal_from_labels(int num_vars, std::span<const Point> points,
                               std::span<const int> labels, Alphabet alphabet) {
  Ideal ideal{alphabet, num_vars, collect_generators(points, labels, alphabet)};
  ideal.generators = minimal_sets(std::move(ideal.generators));
  return ideal;
}

/// Ideal of non-disposable sets of a data set: Plain yields the unsigned
/// ideal, Extended the doubled-alphabet ideal whose decomposition carries
/// both the unsigned and the signed min-sets.
inline Ideal build_ideal(const DataSet& data, Alphabet alphabet) {
  std::vector<Point> points;
  std::vector<int> labels;
  points.reserve(data.size());
  labels.reserve(data.size());
  for (const Row& r : data.rows()) {
    points.push_back(r.input);
    labels.push_back(r.output);
  }
  return ideal_from_labels(data.spec().n, points, labels, alphabet);
}

/// One entry of the all-pairs candidate multiset: the extended monomial the
/// ordered pair (from, to) of input points would contribute if the output of
/// `from` were below the output of `to`.
struct CandidateEntry {
  std::size_t from = 0;
  std::size_t to = 0;
  Monomial monomial;

  bool operator==(const CandidateEntry&) const = default;
};

/// All monomials any output assignment could produce, one entry per ordered
/// pair of distinct points (so both orderings appear and entries number
/// r(r-1)). Multiplicity is kept: the type classifier reasons about which
/// pairs produce which monomial.
struct CandidateMultiset {
  std::vector<CandidateEntry> entries;

  bool all_univariate() const {
    for (const CandidateEntry& e : entries)
      if (e.monomial.degree() > 1) return false;
    return true;
  }
};

inline CandidateMultiset candidate_multiset(const InputSet& v) {
  CandidateMultiset m;
  const auto& pts = v.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (i != j) m.entries.push_back({i, j, extended_generator(pts[i], pts[j])});
  return m;
}

}  // namespace minwire
