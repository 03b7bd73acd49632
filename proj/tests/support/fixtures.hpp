#pragma once

// Shared fixture data sets used across the unit and acceptance suites.

#include "minwire/minwire.hpp"

namespace fixtures {

using namespace minwire;

// q=4, n=3: inputs (0,2,1),(1,0,3),(3,0,3),(2,3,0) with outputs 0,0,2,3.
// Unsigned min-set {x1}; signed min-sets {x1,x2} and {x1,x̄3}.
inline DataSet non_boolean_table() {
  return DataSet(FieldSpec(4, 3),
                 {{{0, 2, 1}, 0}, {{1, 0, 3}, 0}, {{3, 0, 3}, 2}, {{2, 3, 0}, 3}});
}

// q=2, n=3: three rows, 32 completions, unsigned min-sets {x1,x3},{x2,x3},
// signed {x1,x̄3},{x2,x̄3}.
inline DataSet boolean_three_rows() {
  return DataSet(FieldSpec(2, 3), {{{1, 1, 1}, 0}, {{0, 0, 0}, 0}, {{1, 1, 0}, 1}});
}

// q=5, n=5: four extended components, four unsigned min-sets, two signed.
inline DataSet five_state_table() {
  return DataSet(FieldSpec(5, 5), {{{0, 1, 2, 1, 0}, 0},
                                   {{0, 1, 2, 1, 1}, 0},
                                   {{0, 1, 2, 1, 4}, 1},
                                   {{3, 0, 0, 0, 0}, 3},
                                   {{1, 1, 1, 1, 3}, 4}});
}

// q=2, n=3: two unsigned min-sets but only one signed min-set.
inline DataSet more_unsigned_than_signed() {
  return DataSet(FieldSpec(2, 3),
                 {{{0, 0, 0}, 0}, {{1, 0, 1}, 0}, {{1, 1, 0}, 1}, {{0, 1, 1}, 1}});
}

// q=3, n=3: one unsigned min-set but two signed min-sets.
inline DataSet more_signed_than_unsigned() {
  return DataSet(FieldSpec(3, 3),
                 {{{1, 0, 1}, 0}, {{0, 0, 0}, 0}, {{0, 2, 0}, 1}, {{2, 1, 1}, 2}});
}

// q=3, n=3: x2 appears in both polarities; no sign pattern fits.
inline DataSet no_signed_minsets() {
  return DataSet(FieldSpec(3, 3),
                 {{{1, 1, 0}, 0}, {{1, 2, 0}, 1}, {{1, 2, 2}, 1}, {{1, 0, 0}, 2}});
}

// Plain-alphabet ideal <x1 x2, x2 x3>, decomposing as <x2> ∩ <x1, x3>.
inline Ideal xy_yz_ideal() {
  return Ideal{Alphabet::plain, 3,
               {Monomial::of({plain(1), plain(2)}), Monomial::of({plain(2), plain(3)})}};
}

// q=2, n=3: pairwise distance-2 set with outputs 0,0,0,1; three unsigned
// and three signed min-sets, one more than the diagonal length.
inline DataSet three_minsets_table() {
  return DataSet(FieldSpec(2, 3),
                 {{{0, 0, 0}, 0}, {{1, 1, 0}, 0}, {{0, 1, 1}, 0}, {{1, 0, 1}, 1}});
}

// q=3, n=3: candidate multiset of Type 3a.
inline InputSet type3a_inputs() {
  return InputSet(FieldSpec(3, 3), {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 2, 2}});
}

// q=3, n=2: four corners plus the center; diagonal of length 2 at (1,1),
// disconnected, yet every output assignment gives at most one signed
// min-set.
inline InputSet corners_plus_center() {
  return InputSet(FieldSpec(3, 2), {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}});
}

// q=3, n=3: cylindrically connected, yet one assignment produces two
// signed min-sets.
inline InputSet staircase_inputs() {
  return InputSet(FieldSpec(3, 3), {{0, 0, 0}, {0, 2, 0}, {2, 2, 0}, {2, 2, 1}, {2, 1, 1}});
}

inline DataSet staircase_two_signed() {
  return DataSet(FieldSpec(3, 3),
                 {{{0, 0, 0}, 1}, {{0, 2, 0}, 1}, {{2, 2, 0}, 1}, {{2, 2, 1}, 1}, {{2, 1, 1}, 0}});
}

// q=2, n=3: the design example on the cube. Data generated by x1 ∨ x̄3;
// adding (0,0,1) is the only single extension guaranteeing uniqueness.
inline InputSet cube_design_inputs() {
  return InputSet(FieldSpec(2, 3), {{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {0, 1, 1}});
}

inline DataSet cube_design_data() {
  return DataSet(FieldSpec(2, 3),
                 {{{0, 0, 0}, 1}, {{1, 0, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 0}});
}

// q=3, n=2: the design example in the plane; extensions 02, 10, 22 work.
inline InputSet plane_design_inputs() {
  return InputSet(FieldSpec(3, 2), {{0, 0}, {2, 0}, {1, 2}});
}

inline DataSet plane_design_data() {
  return DataSet(FieldSpec(3, 2), {{{0, 0}, 0}, {{2, 0}, 0}, {{1, 2}, 2}});
}

}  // namespace fixtures
