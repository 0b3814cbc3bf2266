#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "esz/generators.hpp"
#include "esz/geometry.hpp"
#include "test_support.hpp"

using namespace esz;

TEST_CASE("orient on the unit axes and a line") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == Orientation::Left);
  CHECK(orient({0, 0}, {1, 1}, {2, 2}) == Orientation::Collinear);
  // (1)(-1) - (0)(1) = -1
  CHECK(orient({0, 0}, {1, 0}, {1, -1}) == Orientation::Right);
}

TEST_CASE("orient is exact at the coordinate bound") {
  const auto b = kCoordinateBound;
  CHECK(orient({-b, -b}, {b, b}, {b - 1, b}) == Orientation::Left);
  CHECK(orient({-b, -b}, {b, b}, {b, b - 1}) == Orientation::Right);
  CHECK(orient({-b, -b}, {0, 0}, {b, b}) == Orientation::Collinear);
  CHECK_THROWS_AS(Point(b + 1, 0), CoordinateOverflow);
  CHECK_THROWS_AS(Point(0, -b - 1), CoordinateOverflow);
}

TEST_CASE("orient symmetries over random triples") {
  std::mt19937_64 rng(11);
  auto coord = [&] { return static_cast<std::int64_t>(rng() % 2001) - 1000; };
  for (int trial = 0; trial < 500; ++trial) {
    const Point a(coord(), coord()), b(coord(), coord()), c(coord(), coord());
    const auto o = orient(a, b, c);
    CHECK(orient(b, c, a) == o);
    CHECK(orient(c, a, b) == o);
    CHECK(static_cast<int>(orient(a, c, b)) == -static_cast<int>(o));

    const auto m = testing::random_unimodular(rng);
    const auto tx = coord(), ty = coord();
    auto map = [&](const Point& p) {
      return Point(m.a * p.x + m.b * p.y + tx, m.c * p.x + m.d * p.y + ty);
    };
    CHECK(orient(map(a), map(b), map(c)) == o);
  }
}

TEST_CASE("validate_general_position") {
  PointSet tri({{0, 0}, {1, 0}, {0, 1}});
  CHECK(validate_general_position(tri).ok());
  CHECK(tri.general_position_checked());

  PointSet line({{0, 0}, {1, 1}, {2, 2}, {0, 1}});
  const auto r = validate_general_position(line);
  CHECK(r.kind == ValidationResult::Kind::Collinear);
  CHECK(r.offending == std::vector<Index>{0, 1, 2});
  CHECK_FALSE(line.general_position_checked());

  // Duplicates are reported before any collinearity.
  PointSet dup({{0, 0}, {1, 1}, {2, 2}, {1, 1}});
  const auto d = validate_general_position(dup);
  CHECK(d.kind == ValidationResult::Kind::Duplicate);
  CHECK(d.offending == std::vector<Index>{1, 3});

  auto h = horton(HortonLevel(5));
  CHECK(validate_general_position(h).ok());
}

TEST_CASE("convex hull") {
  const auto t = validated(PointSet({{0, 0}, {4, 0}, {0, 4}}));
  const auto w = convex_hull(t);
  CHECK(w.vertex_indices.size() == 3);
  CHECK(w.interior_count == 0);

  const auto k = validated(PointSet({{0, 0}, {6, 0}, {0, 6}, {1, 1}}));
  const auto kw = convex_hull(k);
  CHECK(kw.vertex_indices == std::vector<Index>{0, 1, 2});
  CHECK(kw.interior_count == 1);

  CHECK_THROWS_AS(convex_hull(validated(PointSet({{0, 0}, {1, 0}}))), ValidationError);
}

TEST_CASE("hull conservation and order independence on random sets") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = random_general_position(20, seed, 500);
    const auto w = convex_hull(s);
    CHECK(w.vertex_indices.size() + w.interior_count == s.size());
    CHECK(testing::halfplane_interior(s, w.vertex_indices) == w.interior_count);

    // Permute and compare the hull as a set of points.
    std::vector<Index> perm(s.size());
    std::iota(perm.begin(), perm.end(), Index{0});
    std::shuffle(perm.begin(), perm.end(), std::mt19937_64(seed));
    std::vector<Point> shuffled;
    for (Index i : perm) shuffled.push_back(s[i]);
    const auto ps = validated(PointSet(shuffled));
    const auto pw = convex_hull(ps);
    std::vector<Point> a, b;
    for (Index i : w.vertex_indices) a.push_back(s[i]);
    for (Index i : pw.vertex_indices) b.push_back(ps[i]);
    CHECK(a == b);  // both start at the lexicographic minimum
  }
}

TEST_CASE("is_convex_position") {
  const auto k = validated(PointSet({{0, 0}, {6, 0}, {0, 6}, {1, 1}, {9, 8}}));
  CHECK(is_convex_position(k, std::vector<Index>{0, 1, 3}));
  CHECK_FALSE(is_convex_position(k, std::vector<Index>{0, 1, 2, 3}));
  CHECK_THROWS_AS(is_convex_position(k, std::vector<Index>{0, 7}), ValidationError);
  CHECK_THROWS_AS(is_convex_position(k, std::vector<Index>{0, 0, 1}), ValidationError);

  // Integer hexagon; checked against the hull.
  const auto hex = validated(PointSet({{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}}));
  CHECK(is_convex_position(hex, std::vector<Index>{0, 1, 2, 3, 4, 5}));
  CHECK(convex_hull(hex).vertex_indices.size() == 6);
}

TEST_CASE("interior_count matches a half-plane brute force") {
  const auto t = validated(PointSet({{0, 0}, {4, 0}, {0, 4}}));
  CHECK(interior_count(t, ConvexWitness{{0, 1, 2}, 0}) == 0);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = random_general_position(12, seed, 100);
    const auto w = convex_hull(s);
    CHECK(interior_count(s, w) == s.size() - w.vertex_indices.size());

    // Every convex 5-subset of the first 8 points.
    std::vector<Index> sub{0, 1, 2, 3, 4};
    if (is_convex_position(s, sub)) {
      const auto ccw = ccw_order(s, sub);
      CHECK(interior_count(s, ConvexWitness{ccw, 0}) == testing::halfplane_interior(s, ccw));
    }
  }
  const auto k = validated(PointSet({{0, 0}, {6, 0}, {0, 6}, {1, 1}}));
  CHECK_THROWS_AS(interior_count(k, ConvexWitness{{0, 1, 2, 3}, 0}), ValidationError);
}
