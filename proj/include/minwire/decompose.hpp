#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "minwire/datamodel.hpp"
#include "minwire/ideals.hpp"

namespace minwire {

/// Drops every generator divisible by another generator. The result is a
/// divisibility antichain generating the same ideal; idempotent.
inline std::vector<Monomial> minimize_generators(std::vector<Monomial> generators) {
  return minimal_sets(std::move(generators));
}

inline Ideal minimize_generators(Ideal ideal) {
  ideal.generators = minimal_sets(std::move(ideal.generators));
  return ideal;
}

/// True iff some generator divides the monomial. The zero ideal contains
/// nothing.
inline bool contains_monomial(const Ideal& ideal, const Monomial& m) {
  if (ideal.alphabet == Alphabet::plain && m.has_barred())
    throw validation_error("contains_monomial: barred literal against a plain-alphabet ideal");
  for (const Monomial& g : ideal.generators)
    if (g.divides(m)) return true;
  return false;
}

/// Primality test for squarefree monomial ideals: every multivariate
/// generator must have a univariate generator dividing it. On a minimized
/// generator list this means all generators are univariate. The zero ideal
/// counts as prime (one trivial component).
inline bool is_prime(const Ideal& ideal) {
  for (const Monomial& g : ideal.generators)
    if (g.empty()) throw validation_error("is_prime: unit ideal (empty generator)");
  for (const Monomial& g : ideal.generators) {
    if (g.degree() <= 1) continue;
    bool covered = false;
    for (const Monomial& u : ideal.generators)
      if (u.degree() == 1 && u.divides(g)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

/// All inclusion-minimal literal sets hitting every generator's support.
/// These are exactly the prime components of the ideal: the complements of
/// the maximal faces of the associated complex. Incremental construction:
/// fold in one generator at a time, keeping the family an antichain. The
/// zero ideal yields the single empty component.
inline std::vector<Component> minimal_transversals(const Ideal& ideal) {
  for (const Monomial& g : ideal.generators)
    if (g.empty())
      throw validation_error("minimal_transversals: unit ideal (empty generator)");
  std::vector<Component> acc{Component{}};
  for (const Monomial& g : ideal.generators) {
    std::vector<Component> next;
    next.reserve(acc.size());
    for (const Component& t : acc) {
      if (t.intersects(g)) {
        next.push_back(t);
      } else {
        for (Literal l : g.literals()) next.push_back(t.with(l));
      }
    }
    acc = minimal_sets(std::move(next));
  }
  return acc;
}

/// Drops bars from extended components and removes the resulting redundant
/// (superset) components. The survivors are the unsigned min-sets.
inline std::vector<Component> project_unsigned(const std::vector<Component>& components) {
  std::vector<Component> plain;
  plain.reserve(components.size());
  for (const Component& c : components) plain.push_back(c.bars_dropped());
  return minimal_sets(std::move(plain));
}

struct SignedProjection {
  std::vector<Component> minsets;
  /// False exactly when every component was conflicted: no sign assignment
  /// fits and the signed model space is empty.
  bool consistent = true;
};

/// Removes components that contain a variable together with its conjugate
/// (those map to the whole ring) and then redundant supersets. The
/// survivors are the signed min-sets.
inline SignedProjection project_signed(const std::vector<Component>& components) {
  std::vector<Component> keep;
  keep.reserve(components.size());
  for (const Component& c : components)
    if (!c.conflicted()) keep.push_back(c);
  SignedProjection out;
  out.minsets = minimal_sets(std::move(keep));
  out.consistent = !(out.minsets.empty() && !components.empty());
  return out;
}

namespace detail {

/// Every signed min-set, with bars dropped, must contain an unsigned
/// min-set; a violation means the decomposition itself is wrong.
inline void check_shadow_property(const MinSetReport& report) {
  for (const Component& w : report.signed_minsets) {
    const Component shadow = w.bars_dropped();
    bool contains_some = false;
    for (const Component& u : report.unsigned_minsets)
      if (u.subset_of(shadow)) {
        contains_some = true;
        break;
      }
    if (!contains_some)
      throw std::logic_error("shadow property violated for signed min-set " +
                             render_pseudomonomial(w));
  }
}

}  // namespace detail

/// The unified pipeline: one extended ideal, one decomposition, both kinds
/// of min-sets projected from it.
inline MinSetReport minsets(const DataSet& data) {
  const Ideal ext = build_ideal(data, Alphabet::extended);
  const std::vector<Component> components = minimal_transversals(ext);
  SignedProjection sp = project_signed(components);
  MinSetReport report{project_unsigned(components), std::move(sp.minsets), sp.consistent};
  detail::check_shadow_property(report);
  return report;
}

constexpr std::uint64_t default_baseline_cap = 10'000'000;

/// Slow reference decomposition of the signed ideal: walk the full
/// Cartesian product choosing one literal from each generator, discard
/// conflicted choice sets, keep the inclusion-minimal rest. Exists to be
/// benchmarked against the extended pipeline, so it refuses beyond
/// `max_choice_sets` leaves instead of trying to be clever.
inline std::vector<Component> baseline_signed_decomposition(
    const DataSet& data, std::uint64_t max_choice_sets = default_baseline_cap) {
  const Ideal ext = build_ideal(data, Alphabet::extended);
  for (const Monomial& g : ext.generators)
    if (g.empty())
      throw validation_error("baseline_signed_decomposition: unit ideal (empty generator)");

  std::uint64_t leaves = 1;
  for (const Monomial& g : ext.generators) {
    if (leaves > max_choice_sets / static_cast<std::uint64_t>(g.degree()))
      throw capacity_error("baseline_signed_decomposition: more than " +
                           std::to_string(max_choice_sets) + " choice sets");
    leaves *= static_cast<std::uint64_t>(g.degree());
  }

  std::vector<std::vector<Literal>> choices;
  choices.reserve(ext.generators.size());
  for (const Monomial& g : ext.generators) choices.push_back(g.literals());

  std::vector<Component> collected;
  std::vector<std::uint64_t> seen;
  Component current;
  auto walk = [&](auto&& self, std::size_t depth, Component acc) -> void {
    if (depth == choices.size()) {
      if (!acc.conflicted()) seen.push_back(acc.mask());
      return;
    }
    for (Literal l : choices[depth]) self(self, depth + 1, acc.with(l));
  };
  walk(walk, 0, current);

  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  collected.reserve(seen.size());
  for (std::uint64_t mask : seen) collected.push_back(Component::from_mask(mask));
  return minimal_sets(std::move(collected));
}

}  // namespace minwire
