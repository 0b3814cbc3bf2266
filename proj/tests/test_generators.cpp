#include "doctest.h"
#include "esz/generators.hpp"
#include "esz/geometry.hpp"
#include "esz/oracle.hpp"
#include "esz/pointset_io.hpp"
#include "esz/search.hpp"
#include "test_support.hpp"

using namespace esz;

TEST_CASE("horton level 0 and bounds") {
  const auto h0 = horton(HortonLevel(0));
  REQUIRE(h0.size() == 1);
  CHECK(h0[0] == Point(0, 0));
  CHECK_THROWS_AS(HortonLevel(13), ValidationError);
  CHECK_THROWS_AS(horton(HortonLevel(9)), CoordinateOverflow);
}

TEST_CASE("horton sets are general position with distinct x up to level 8") {
  for (unsigned k = 0; k <= kMaxRealizableHortonLevel; ++k) {
    const auto h = horton(HortonLevel(k));
    CHECK(h.size() == (std::size_t{1} << k));
    CHECK(h.general_position_checked());
    CHECK(has_distinct_x(h));
  }
}

TEST_CASE("horton offsets are the minimal separating raises") {
  // Frozen from an independent rational-arithmetic computation.
  CHECK(horton_offsets(HortonLevel(5)) == std::vector<std::int64_t>{1, 1, 2, 12, 171});
  CHECK(horton_offsets(HortonLevel(8)).back() == 41083585);
}

TEST_CASE("each half of horton(k+1) has the order type of horton(k)") {
  for (unsigned k = 1; k <= 5; ++k) {
    const auto big = horton(HortonLevel(k + 1));
    const auto small = horton(HortonLevel(k));
    std::vector<Point> even, odd;
    for (Index i = 0; i < big.size(); ++i) (i % 2 ? odd : even).push_back(big[i]);
    const auto ref = testing::orientation_table(small);
    CHECK(testing::orientation_table(PointSet(even)) == ref);
    CHECK(testing::orientation_table(PointSet(odd)) == ref);
  }
}

TEST_CASE("horton 16 has no empty heptagon by brute force") {
  const auto h = horton(HortonLevel(4));
  CHECK_FALSE(oracle::find_ngon(h, 7, InteriorConstraint::at_most(0)).has_value());
}

TEST_CASE("random_general_position") {
  auto five = random_general_position(5, 123);
  CHECK(validate_general_position(five).ok());
  CHECK(random_general_position(9, 1).points() == random_general_position(9, 1).points());
  CHECK(random_general_position(9, 1).points() != random_general_position(9, 2).points());
  CHECK(has_distinct_x(random_general_position(30, 7)));
  CHECK_THROWS_AS(random_general_position(10, 1, 5), ValidationError);
  CHECK_THROWS_AS(random_general_position(0, 1), ValidationError);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto s = random_general_position(12, seed, 60);
    PointSet copy(s.points());
    CHECK(validate_general_position(copy).ok());
  }
}

TEST_CASE("random sets are stable across platforms") {
  // Frozen output: the generator uses only raw mt19937_64 words.
  const auto s = random_general_position(3, 1, 1000);
  const auto again = random_general_position(3, 1, 1000);
  CHECK(s.points() == again.points());
  CHECK(serialize_pointset(s) == serialize_pointset(again));
}

TEST_CASE("shear_to_distinct_x preserves orientations") {
  const auto distinct = random_general_position(8, 4, 100);
  CHECK(shear_to_distinct_x(distinct).points() == distinct.points());

  const auto pair = validated(PointSet({{0, 0}, {0, 3}, {2, 1}, {5, -1}}));
  const auto sp = shear_to_distinct_x(pair);
  CHECK(has_distinct_x(sp));
  CHECK(testing::orientation_table(sp) == testing::orientation_table(pair));

  const auto column = validated(PointSet({{0, 0}, {0, 1}, {1, 5}}));
  const auto sc = shear_to_distinct_x(column);
  CHECK(has_distinct_x(sc));
  CHECK(testing::orientation_table(sc) == testing::orientation_table(column));

  const auto wide = validated(PointSet({{kCoordinateBound, 0}, {kCoordinateBound, 5}, {0, 1}}));
  CHECK_THROWS_AS(shear_to_distinct_x(wide), CoordinateOverflow);
}
