#include <random>

#include "doctest.h"
#include "esz/generators.hpp"
#include "esz/geometry.hpp"
#include "esz/oracle.hpp"
#include "esz/search.hpp"
#include "test_support.hpp"

using namespace esz;

TEST_CASE("interior constraints") {
  const auto at1 = InteriorConstraint::at_most(1);
  CHECK(at1.admits(0));
  CHECK(at1.admits(1));
  CHECK_FALSE(at1.admits(2));
  const auto m3 = InteriorConstraint::zero_mod(3);
  CHECK(m3.admits(0));
  CHECK(m3.admits(6));
  CHECK_FALSE(m3.admits(4));
  const auto m3n = InteriorConstraint::zero_mod(3, false);
  CHECK_FALSE(m3n.admits(0));
  CHECK(m3n.admits(3));
  CHECK_THROWS_AS(InteriorConstraint::zero_mod(1), ValidationError);
}

TEST_CASE("searches refuse unvalidated input and bad sizes") {
  PointSet raw({{0, 0}, {5, 1}, {2, 7}, {9, 9}});
  CHECK_THROWS_AS(max_convex_subset(raw), ValidationError);
  const auto s = validated(raw);
  CHECK_THROWS_AS(find_ngon(s, 2, InteriorConstraint::at_most(0)), ValidationError);
  CHECK_THROWS_AS(find_ngon(s, 5, InteriorConstraint::at_most(0)), ValidationError);
  const auto col = validated(PointSet({{0, 0}, {0, 5}, {3, 1}}));
  CHECK_THROWS_AS(longest_chain(col, ChainKind::Cup), ValidationError);
  CHECK_THROWS_AS(find_chain(s, ChainKind::Cup, 0, 0), ValidationError);
}

TEST_CASE("max_convex_subset small cases") {
  const auto tri = validated(PointSet({{0, 0}, {4, 1}, {1, 5}}));
  const auto r = max_convex_subset(tri);
  CHECK(r.size == 3);
  CHECK(verify_convex(tri, r.witness));

  const auto k = validated(PointSet({{0, 0}, {6, 0}, {0, 6}, {1, 1}}));
  CHECK(max_convex_subset(k).size == 3);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = random_general_position(5, seed, 50);
    const auto m = max_convex_subset(s);
    CHECK(m.size >= 4);
    CHECK(verify_convex(s, m.witness));
  }
}

TEST_CASE("find_ngon basics") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = random_general_position(9, seed, 200);
    const auto t = find_ngon(s, 3, InteriorConstraint::at_most(0));
    REQUIRE(t.found());
    CHECK(verify_convex(s, *t.witness));
    CHECK(t.witness->interior_count == 0);

    // Vacuous constraint at the maximum size.
    const auto m = max_convex_subset(s);
    CHECK(find_ngon(s, m.size, InteriorConstraint::at_most(s.size())).found());
    if (m.size < s.size()) {
      CHECK_FALSE(find_ngon(s, m.size + 1, InteriorConstraint::at_most(s.size())).found());
    }
  }
}

TEST_CASE("Horton 16 and 32 contain no empty heptagon") {
  const auto h4 = horton(HortonLevel(4));
  CHECK_FALSE(find_ngon(h4, 7, InteriorConstraint::at_most(0)).found());
  CHECK_FALSE(oracle::find_ngon(h4, 7, InteriorConstraint::at_most(0)).has_value());
  CHECK(find_ngon(h4, 6, InteriorConstraint::at_most(0)).found() ==
        oracle::find_ngon(h4, 6, InteriorConstraint::at_most(0)).has_value());

  const auto h5 = horton(HortonLevel(5));
  CHECK_FALSE(find_ngon(h5, 7, InteriorConstraint::at_most(0)).found());
  const auto six = find_ngon(h5, 6, InteriorConstraint::at_most(0));
  if (six.found()) CHECK(verify_convex(h5, *six.witness));
  // Non-empty heptagons exist in 32 points.
  const auto any7 = find_ngon(h5, 7, InteriorConstraint::unconstrained());
  REQUIRE(any7.found());
  CHECK(verify_convex(h5, *any7.witness));
}

TEST_CASE("chains") {
  // Left turn in x-order.
  const auto s = validated(PointSet({{0, 2}, {1, 0}, {2, 2}}));
  CHECK(longest_chain(s, ChainKind::Cup).length == 3);
  CHECK(longest_chain(s, ChainKind::Cap).length == 2);

  // Whole set is a cup with nothing inside.
  const auto cup = validated(PointSet({{0, 9}, {1, 4}, {2, 1}, {3, 0}, {4, 1}, {5, 4}}));
  const auto r = find_chain(cup, ChainKind::Cup, 6, 0);
  REQUIRE(r.found());
  CHECK(r.witness->vertex_indices.size() == 6);
  CHECK(r.witness->interior_count == 0);
  CHECK(verify_chain(cup, *r.witness));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto p = random_general_position(10, seed, 300);
    const auto cupl = longest_chain(p, ChainKind::Cup).length;
    CHECK(find_chain(p, ChainKind::Cup, 4, p.size()).found() == (cupl >= 4));
    CHECK(longest_chain(mirror_y(p), ChainKind::Cap).length == cupl);
  }
}

TEST_CASE("monochromatic quads") {
  ColoredPointSet four(validated(PointSet({{0, 0}, {5, 0}, {5, 5}, {0, 5}})), {1, 1, 1, 1});
  const auto q = find_empty_mono_quad(four);
  REQUIRE(q.found());
  CHECK(q.witness->color == 1);
  CHECK(verify_convex(four.base(), q.witness->witness));

  // A point of the other color inside blocks the strong reading only.
  ColoredPointSet blocked(validated(PointSet({{0, 0}, {5, 0}, {6, 5}, {0, 6}, {2, 3}})),
                          {0, 0, 0, 0, 1});
  CHECK_FALSE(find_empty_mono_quad(blocked).found());
  const auto weak = find_empty_mono_quad(blocked, EmptinessMode::SameColor);
  REQUIRE(weak.found());
  CHECK(weak.witness->witness.interior_count == 1);

  ColoredPointSet sparse(validated(PointSet({{0, 0}, {5, 0}, {6, 5}, {0, 6}})), {0, 0, 1, 1});
  CHECK_THROWS_AS(find_empty_mono_quad(sparse), ValidationError);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto s = random_general_position(10, seed, 400);
    ColoredPointSet mono(s, std::vector<Color>(s.size(), 0));
    CHECK(find_empty_mono_quad(mono).found());
  }
}

TEST_CASE("counting agrees with the oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto s = random_general_position(9, seed, 300);
    for (std::size_t n = 3; n <= 6; ++n) {
      for (std::size_t k = 0; k <= 2; ++k) {
        const auto c = InteriorConstraint::at_most(k);
        CHECK(count_ngons(s, n, c) == oracle::count_ngons(s, n, c));
      }
      const auto m2 = InteriorConstraint::zero_mod(2, false);
      CHECK(count_ngons(s, n, m2) == oracle::count_ngons(s, n, m2));
    }
    for (std::size_t l = 1; l <= 5; ++l) {
      CHECK(count_chains(s, ChainKind::Cup, l, 1) == oracle::count_chains(s, ChainKind::Cup, l, 1));
      CHECK(count_chains(s, ChainKind::Cap, l, 9) == oracle::count_chains(s, ChainKind::Cap, l, 9));
    }
  }
}

TEST_CASE("results do not depend on the worker count") {
  const auto s = random_general_position(14, 3, 500);
  setenv("CPL_THREADS", "1", 1);
  const auto a = find_ngon(s, 5, InteriorConstraint::at_most(1));
  const auto ma = max_convex_subset(s);
  setenv("CPL_THREADS", "4", 1);
  const auto b = find_ngon(s, 5, InteriorConstraint::at_most(1));
  const auto mb = max_convex_subset(s);
  unsetenv("CPL_THREADS");
  CHECK(a.witness == b.witness);
  CHECK(ma.witness == mb.witness);
}
