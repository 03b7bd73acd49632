#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "minwire/minwire.hpp"
#include "support/fixtures.hpp"
#include "support/test_oracles.hpp"

using namespace minwire;

namespace {

// A staircase tube through {0,1,2}^3; cylindrically connected.
InputSet staircase_tube() {
  return InputSet(FieldSpec(3, 3), {{0, 0, 0},
                                    {1, 0, 0},
                                    {2, 0, 0},
                                    {2, 1, 0},
                                    {2, 2, 0},
                                    {2, 2, 1},
                                    {2, 2, 2}});
}

// Connected through the middle layer s2=0 but with the slice s2=1 holding
// two far-apart points; fails cylindrical connectivity exactly there.
InputSet broken_middle_slice() {
  return InputSet(FieldSpec(3, 3), {{0, 1, 0},
                                    {0, 0, 0},
                                    {1, 0, 0},
                                    {1, 0, 1},
                                    {2, 0, 1},
                                    {2, 0, 2},
                                    {2, 1, 2}});
}

}  // namespace

TEST_CASE("cylinders", "[uniqueness]") {
  SECTION("equal points fix everything") {
    const Cylinder c = cylinder_of({1, 2, 0}, {1, 2, 0});
    CHECK(c.fixed == std::map<int, int>{{1, 1}, {2, 2}, {3, 0}});
  }
  SECTION("agreement coordinates are fixed") {
    const Cylinder c = cylinder_of({0, 2, 1}, {2, 2, 1});
    CHECK(c.fixed == std::map<int, int>{{2, 2}, {3, 1}});
    CHECK(c.contains({0, 2, 1}));
    CHECK(c.contains({2, 2, 1}));
    CHECK(c.contains({1, 2, 1}));
    CHECK_FALSE(c.contains({1, 0, 1}));
  }
  SECTION("points differing everywhere span the whole grid") {
    CHECK(cylinder_of({0, 0, 0}, {1, 2, 1}).fixed.empty());
  }
}

TEST_CASE("connectivity under unit steps", "[uniqueness]") {
  CHECK(is_connected({{0, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}, {3, 2}}));
  CHECK_FALSE(is_connected({{0, 0}, {1, 0}, {2, 2}, {3, 2}}));
  CHECK_FALSE(is_connected(fixtures::corners_plus_center().points()));
  CHECK(is_connected({{1, 1, 1}}));
  CHECK(is_connected({}));
}

TEST_CASE("cylindrical connectivity", "[uniqueness]") {
  SECTION("staircase tube is cylindrically connected") {
    CHECK(is_cylindrically_connected(staircase_tube()).connected);
    CHECK(test_oracles::cylindrically_connected_exhaustive(staircase_tube()));
  }
  SECTION("the broken middle slice is caught with its cylinder") {
    const ConnectivityResult r = is_cylindrically_connected(broken_middle_slice());
    REQUIRE_FALSE(r.connected);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->cylinder.fixed == std::map<int, int>{{2, 1}});
    CHECK_FALSE(test_oracles::cylindrically_connected_exhaustive(broken_middle_slice()));
  }
  SECTION("the cube design set fails in the slice s1=0") {
    const ConnectivityResult r = is_cylindrically_connected(fixtures::cube_design_inputs());
    REQUIRE_FALSE(r.connected);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->cylinder.fixed == std::map<int, int>{{1, 0}});
  }
  SECTION("pairwise spanning cylinders agree with exhaustive cylinder scan") {
    SeededRng rng(53);
    for (int t = 0; t < 120; ++t) {
      const FieldSpec spec(2 + rng.below_int(2), 1 + rng.below_int(3));
      const std::size_t r = 1 + rng.below(std::min<std::uint64_t>(grid_size(spec), 6));
      const InputSet v = random_input_set(rng, spec, r);
      CHECK(is_cylindrically_connected(v).connected ==
            test_oracles::cylindrically_connected_exhaustive(v));
    }
  }
}

TEST_CASE("diagonals", "[uniqueness]") {
  SECTION("corners plus center has a length-2 diagonal at the center") {
    const DiagonalInfo d = diagonal_length(fixtures::corners_plus_center());
    CHECK(d.length == 2);
    CHECK(d.witness == Point{1, 1});
    CHECK_FALSE(d.corner);
  }
  SECTION("the pairwise distance-2 Boolean set has length 2 at a corner") {
    const InputSet v(FieldSpec(2, 3), {{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    const DiagonalInfo d = diagonal_length(v);
    CHECK(d.length == 2);
    CHECK(d.corner);
  }
  SECTION("a close pair keeps its points at min-distance 1 but not the max") {
    const InputSet v(FieldSpec(3, 3), {{0, 0, 0}, {0, 0, 1}, {2, 2, 2}});
    const DiagonalInfo d = diagonal_length(v);
    CHECK(d.length == 3);
    CHECK(d.witness == Point{2, 2, 2});
  }
  SECTION("undefined below two points") {
    CHECK_THROWS_AS(diagonal_length(InputSet(FieldSpec(2, 2), {{0, 0}})), validation_error);
  }
}

TEST_CASE("output class enumeration", "[uniqueness]") {
  CHECK(enumerate_output_classes(3, ClassKind::partition).size() == 5);
  CHECK(enumerate_output_classes(3, ClassKind::weak_order).size() == 13);
  CHECK(enumerate_output_classes(0, ClassKind::weak_order).size() == 1);

  SECTION("weak orders match a direct surjection enumeration for m=4") {
    std::set<std::vector<int>> direct;
    for (int code = 0; code < 4 * 4 * 4 * 4; ++code) {
      std::vector<int> f{code % 4, code / 4 % 4, code / 16 % 4, code / 64 % 4};
      int k = 0;
      for (int v : f) k = std::max(k, v + 1);
      bool onto = true;
      for (int c = 0; c < k; ++c)
        if (std::find(f.begin(), f.end(), c) == f.end()) onto = false;
      if (onto) direct.insert(f);
    }
    CHECK(direct.size() == 75);
    const auto enumerated = enumerate_output_classes(4, ClassKind::weak_order);
    CHECK(enumerated.size() == 75);
    CHECK(std::set<std::vector<int>>(enumerated.begin(), enumerated.end()) == direct);
  }
  SECTION("the cap names the ordered Bell count") {
    try {
      enumerate_output_classes(9, ClassKind::weak_order, 8);
      FAIL("expected a capacity error");
    } catch (const capacity_error& e) {
      CHECK(std::string(e.what()).find("7087261") != std::string::npos);
    }
  }
  CHECK(*bell_number(3) == 5);
  CHECK(*ordered_bell_number(3) == 13);
  CHECK(*ordered_bell_number(8) == 545835);
}

TEST_CASE("candidate type classification", "[uniqueness]") {
  SECTION("collinear points are Type 1") {
    const InputSet v(FieldSpec(3, 2), {{0, 0}, {1, 0}, {2, 0}});
    CHECK(classify_type(v).type == TypeClass::type1);
  }
  SECTION("two points at distance 1 are Type 1") {
    const InputSet v(FieldSpec(2, 3), {{0, 0, 0}, {0, 1, 0}});
    CHECK(classify_type(v).type == TypeClass::type1);
  }
  SECTION("the all-distance-2 Boolean set is Type 2") {
    const TypeResult t = classify_type(inputs_of(fixtures::more_unsigned_than_signed()));
    CHECK(t.type == TypeClass::type2);
    REQUIRE(t.offending_monomial.has_value());
    CHECK(t.offending_monomial->degree() >= 2);
  }
  SECTION("the step set is Type 3a") {
    CHECK(classify_type(fixtures::type3a_inputs()).type == TypeClass::type3a);
  }
  SECTION("the corners-plus-center set is Type 3b") {
    // the center-low assignment generates only degree-2 monomials
    const TypeResult t = classify_type(fixtures::corners_plus_center());
    CHECK(t.type == TypeClass::type3b);
    REQUIRE(t.witness_weak_order.has_value());
    const Ideal ext = ideal_from_labels(2, fixtures::corners_plus_center().points(),
                                        *t.witness_weak_order, Alphabet::extended);
    CHECK_FALSE(is_prime(ext));
  }
  SECTION("the cap names the ordered Bell count") {
    try {
      classify_type(fixtures::corners_plus_center(), 4);
      FAIL("expected a capacity error");
    } catch (const capacity_error& e) {
      CHECK(std::string(e.what()).find("541") != std::string::npos);
    }
  }
}

TEST_CASE("unsigned uniqueness verdicts", "[uniqueness]") {
  CHECK(unsigned_unique_all_outputs(staircase_tube()));
  CHECK_FALSE(unsigned_unique_all_outputs(fixtures::plane_design_inputs()));
  CHECK(unsigned_unique_all_outputs(InputSet(FieldSpec(3, 2), {{1, 1}})));
}

TEST_CASE("signed uniqueness verdicts", "[uniqueness]") {
  SECTION("Boolean sets are decided by cylindrical connectivity") {
    const InputSet extended_cube(FieldSpec(2, 3),
                                 {{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 1}});
    const SignedUniquenessResult r = signed_unique_all_outputs(extended_cube);
    CHECK(r.at_most_one == Verdict::yes);
    CHECK(r.method == SignedUniquenessResult::Method::cylindrical);
    CHECK(signed_unique_all_outputs(fixtures::cube_design_inputs()).at_most_one == Verdict::no);
  }
  SECTION("corners plus center: disconnected yet at most one signed min-set") {
    const SignedUniquenessResult r = signed_unique_all_outputs(fixtures::corners_plus_center());
    CHECK(r.at_most_one == Verdict::yes);
    CHECK(r.method == SignedUniquenessResult::Method::exhaustive);
  }
  SECTION("the staircase set: connected yet two signed min-sets exist") {
    const SignedUniquenessResult r = signed_unique_all_outputs(fixtures::staircase_inputs());
    CHECK(r.at_most_one == Verdict::no);
    REQUIRE(r.counterexample.has_value());
    const auto sp =
        test_oracles::signed_minsets_for_labels(fixtures::staircase_inputs(), *r.counterexample);
    CHECK(sp.minsets.size() > 1);
  }
  SECTION("beyond the cap the verdict is unknown") {
    SeededRng rng(61);
    const InputSet big = random_input_set(rng, FieldSpec(3, 3), 9);
    const SignedUniquenessResult r = signed_unique_all_outputs(big, 8);
    CHECK(r.at_most_one == Verdict::unknown);
    CHECK(r.method == SignedUniquenessResult::Method::none);
  }
}

TEST_CASE("type 1 and 3a imply at most one signed min-set per assignment", "[uniqueness]") {
  for (const InputSet& v :
       {InputSet(FieldSpec(3, 2), {{0, 0}, {1, 0}, {2, 0}}), fixtures::type3a_inputs()}) {
    const TypeResult t = classify_type(v);
    REQUIRE((t.type == TypeClass::type1 || t.type == TypeClass::type3a));
    for_each_weak_order(
        static_cast<int>(v.size()),
        [&](const std::vector<int>& ranks) {
          CHECK(test_oracles::signed_minsets_for_labels(v, ranks).minsets.size() <= 1);
        },
        v.spec().q);
  }
}

TEST_CASE("diagonal bounds on fixtures", "[uniqueness]") {
  SECTION("corners plus center: some assignment has at least two unsigned min-sets") {
    const InputSet v = fixtures::corners_plus_center();
    const DiagonalInfo d = diagonal_length(v);
    REQUIRE(d.length == 2);
    std::vector<int> labels;
    for (const Point& p : v.points()) labels.push_back(p == d.witness ? 0 : 1);
    CHECK(test_oracles::unsigned_minsets_for_labels(v, labels).size() >=
          static_cast<std::size_t>(d.length));
  }
  SECTION("Boolean distance-2 set: the 0/1 assignment has at least two signed min-sets") {
    const InputSet v = inputs_of(fixtures::three_minsets_table());
    const DiagonalInfo d = diagonal_length(v);
    REQUIRE(d.length == 2);
    REQUIRE(d.corner);
    // normalize the witness to the origin by flipping its 1-coordinates
    std::vector<std::vector<int>> maps;
    for (std::size_t c = 0; c < d.witness.size(); ++c)
      maps.push_back(d.witness[c] == 1 ? std::vector<int>{1, 0} : std::vector<int>{0, 1});
    const InputSet w = apply_coordinate_maps(v, maps);
    std::vector<int> labels;
    for (const Point& p : w.points())
      labels.push_back(p == Point(v.spec().n, 0) ? 0 : 1);
    CHECK(test_oracles::signed_minsets_for_labels(w, labels).minsets.size() >=
          static_cast<std::size_t>(d.length));
  }
}

TEST_CASE("monotone negation flips signed min-set polarities", "[uniqueness]") {
  SeededRng rng(67);
  for (int t = 0; t < 50; ++t) {
    const int q = 2 + rng.below_int(2);
    const int n = 1 + rng.below_int(3);
    const FieldSpec spec(q, n);
    const std::size_t m = 1 + rng.below(std::min<std::uint64_t>(grid_size(spec), 5));
    const DataSet data = random_dataset(rng, spec, m);
    const int coord = 1 + rng.below_int(n);

    std::vector<Row> negated_rows;
    for (const Row& r : data.rows()) {
      Row nr = r;
      nr.input[static_cast<std::size_t>(coord - 1)] =
          (q - 1) - nr.input[static_cast<std::size_t>(coord - 1)];
      negated_rows.push_back(std::move(nr));
    }
    const DataSet negated(spec, std::move(negated_rows));

    const MinSetReport before = minsets(data);
    const MinSetReport after = minsets(negated);
    CHECK(before.unsigned_minsets == after.unsigned_minsets);
    CHECK(before.signed_consistent == after.signed_consistent);
    std::vector<Component> flipped;
    for (const Component& c : before.signed_minsets) flipped.push_back(c.polarity_flipped(coord));
    std::sort(flipped.begin(), flipped.end(), LiteralSet::lex_less);
    CHECK(flipped == after.signed_minsets);
  }
}

TEST_CASE("the extension property holds for the staircase inputs", "[uniqueness]") {
  CHECK(test_oracles::extension_property_holds(fixtures::staircase_inputs()));
  // cylindrical connectivity always implies the extension property
  CHECK(test_oracles::extension_property_holds(staircase_tube()));
  CHECK_FALSE(test_oracles::extension_property_holds(fixtures::corners_plus_center()));
}

TEST_CASE("certificates compose the verdicts", "[uniqueness]") {
  SECTION("the step set") {
    const Certificate cert = certify(fixtures::type3a_inputs());
    CHECK(cert.connectivity.connected);
    CHECK(cert.unsigned_unique_for_all_outputs);
    REQUIRE(cert.type.has_value());
    CHECK(cert.type->type == TypeClass::type3a);
    CHECK(cert.signed_uniqueness.at_most_one == Verdict::yes);
    CHECK_FALSE(cert.diagonal.has_value());
  }
  SECTION("a singleton certifies trivially") {
    const Certificate cert = certify(InputSet(FieldSpec(2, 2), {{0, 1}}));
    CHECK(cert.connectivity.connected);
    CHECK(cert.unsigned_unique_for_all_outputs);
    CHECK(cert.signed_uniqueness.at_most_one == Verdict::yes);
    CHECK_FALSE(cert.diagonal.has_value());
    REQUIRE(cert.type.has_value());
    CHECK(cert.type->type == TypeClass::type1);
  }
  SECTION("oversize sets skip classification but keep the rest") {
    SeededRng rng(71);
    const InputSet big = random_input_set(rng, FieldSpec(2, 4), 12);
    const Certificate cert = certify(big, 8);
    CHECK(cert.type_skipped_cap);
    CHECK_FALSE(cert.type.has_value());
    CHECK(cert.unsigned_unique_for_all_outputs == cert.connectivity.connected);
  }
}
