#include <catch2/catch_amalgamated.hpp>

#include "minwire/minwire.hpp"
#include "support/fixtures.hpp"

using namespace minwire;

TEST_CASE("extension verification", "[design]") {
  const InputSet cube = fixtures::cube_design_inputs();
  CHECK(verify_extension(cube, {{0, 0, 1}}));
  CHECK_FALSE(verify_extension(cube, {{1, 1, 0}}));
  CHECK_THROWS_AS(verify_extension(cube, {{1, 0, 0}}), validation_error);
  CHECK_THROWS_AS(verify_extension(cube, {{0, 0, 2}}), validation_error);

  const InputSet connected(FieldSpec(2, 2), {{0, 0}, {0, 1}});
  CHECK(verify_extension(connected, {}));
}

TEST_CASE("suggestions on the cube", "[design]") {
  const SuggestResult r = suggest_extensions(fixtures::cube_design_inputs(), 1);
  CHECK_FALSE(r.already_unique);
  REQUIRE(r.suggestions.size() == 1);
  CHECK(r.suggestions[0].added == std::vector<Point>{{0, 0, 1}});
  CHECK(r.suggestions[0].resulting_unique);
}

TEST_CASE("suggestions in the plane", "[design]") {
  const SuggestResult r = suggest_extensions(fixtures::plane_design_inputs(), 1);
  REQUIRE(r.suggestions.size() == 3);
  CHECK(r.suggestions[0].added == std::vector<Point>{{0, 2}});
  CHECK(r.suggestions[1].added == std::vector<Point>{{1, 0}});
  CHECK(r.suggestions[2].added == std::vector<Point>{{2, 2}});
}

TEST_CASE("size-1 suggestions are complete", "[design]") {
  for (const InputSet& v : {fixtures::cube_design_inputs(), fixtures::plane_design_inputs()}) {
    const SuggestResult r = suggest_extensions(v, 1);
    std::vector<Point> suggested;
    for (const Suggestion& s : r.suggestions) suggested.push_back(s.added.front());
    for (std::uint64_t i = 0; i < grid_size(v.spec()); ++i) {
      const Point p = point_at(v.spec(), i);
      if (v.contains(p)) continue;
      const bool works = verify_extension(v, {p});
      const bool listed =
          std::find(suggested.begin(), suggested.end(), p) != suggested.end();
      CHECK(works == listed);
    }
  }
}

TEST_CASE("suggestions are ranked by size then lexicographically", "[design]") {
  const SuggestResult r = suggest_extensions(fixtures::plane_design_inputs(), 2);
  REQUIRE(r.suggestions.size() >= 4);
  for (std::size_t i = 1; i < r.suggestions.size(); ++i) {
    const auto& prev = r.suggestions[i - 1];
    const auto& here = r.suggestions[i];
    CHECK(prev.added.size() <= here.added.size());
    if (prev.added.size() == here.added.size()) CHECK(prev.added < here.added);
  }
  for (const Suggestion& s : r.suggestions) CHECK(verify_extension(fixtures::plane_design_inputs(), s.added));
}

TEST_CASE("a cylindrically connected set needs nothing", "[design]") {
  const InputSet path(FieldSpec(2, 2), {{0, 0}, {0, 1}, {1, 1}});
  const SuggestResult r = suggest_extensions(path, 1);
  CHECK(r.already_unique);
  CHECK(r.suggestions.empty());
}

TEST_CASE("design regressions against the generating functions", "[design]") {
  SECTION("cube: the suggested experiment pins the signed min-set") {
    // data generated by x1 ∨ x̄3, so the new point (0,0,1) gets output 0
    std::vector<Row> rows = fixtures::cube_design_data().rows();
    rows.push_back({{0, 0, 1}, 0});
    const MinSetReport r = minsets(DataSet(FieldSpec(2, 3), std::move(rows)));
    CHECK(r.signed_minsets == std::vector<Component>{Component::of({plain(1), barred(3)})});
    CHECK(r.signed_consistent);
  }
  SECTION("plane: each suggested experiment pins the unsigned min-set") {
    // data generated by x1^2 + x1 mod 3: outputs 0, 2, 0 for x1 = 0, 1, 2
    const auto f = [](const Point& p) { return (p[0] * p[0] + p[0]) % 3; };
    for (const Point& added : {Point{0, 2}, Point{1, 0}, Point{2, 2}}) {
      std::vector<Row> rows = fixtures::plane_design_data().rows();
      rows.push_back({added, f(added)});
      const MinSetReport r = minsets(DataSet(FieldSpec(3, 2), std::move(rows)));
      CHECK(r.unsigned_minsets == std::vector<Component>{Component::of({plain(1)})});
    }
  }
  SECTION("the unsuggested extensions keep two unsigned min-sets here") {
    const auto f = [](const Point& p) { return (p[0] * p[0] + p[0]) % 3; };
    for (const Point& added : {Point{0, 1}, Point{1, 1}, Point{2, 1}}) {
      std::vector<Row> rows = fixtures::plane_design_data().rows();
      rows.push_back({added, f(added)});
      const MinSetReport r = minsets(DataSet(FieldSpec(3, 2), std::move(rows)));
      CHECK(r.unsigned_minsets.size() == 2);
    }
  }
}

TEST_CASE("design guards", "[design]") {
  CHECK_THROWS_AS(suggest_extensions(fixtures::plane_design_inputs(), 0), validation_error);
  CHECK_THROWS_AS(suggest_extensions(fixtures::plane_design_inputs(), 1, /*grid_cap=*/4),
                  capacity_error);
}
