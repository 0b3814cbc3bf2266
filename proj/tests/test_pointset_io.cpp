#include "doctest.h"
#include "esz/generators.hpp"
#include "esz/pointset_io.hpp"

using namespace esz;

TEST_CASE("parse plain and colored files") {
  const auto plain = parse_pointset("0 0\n1 0\n0 1\n");
  REQUIRE(std::holds_alternative<PointSet>(plain));
  CHECK(points_of(plain).size() == 3);

  const auto colored = parse_pointset("0 0 0\n5 1 1\n");
  REQUIRE(std::holds_alternative<ColoredPointSet>(colored));
  const auto& cs = std::get<ColoredPointSet>(colored);
  CHECK(cs.size() == 2);
  CHECK(cs.colors() == std::vector<Color>{0, 1});

  const auto commented = parse_pointset("# header\n\n3 4\n  # indented comment\n-5 +6\r\n");
  CHECK(points_of(commented).points() == std::vector<Point>{{3, 4}, {-5, 6}});
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_pointset(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("0 0\n1\n") == 2);
  CHECK(line_of("0 0\n1 x\n") == 2);
  CHECK(line_of("0 0\n1 1 1 1\n") == 2);
  CHECK(line_of("# c\n0 0\n1 1 0\n") == 3);      // mixed colored / uncolored
  CHECK(line_of("0 0\n67108865 0\n") == 2);      // beyond 2^26
  CHECK(line_of("0 0\n2 2\n0 0\n") == 3);        // duplicate
  CHECK(line_of("0 0 -1\n") == 1);
  CHECK(line_of("1.5 0\n") == 1);
}

TEST_CASE("serialize then parse is the identity") {
  const auto h = horton(HortonLevel(3));
  CHECK(std::get<PointSet>(parse_pointset(serialize_pointset(h))) == h);
  CHECK(serialize_pointset(h).starts_with("0 0\n1 2\n"));

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = random_general_position(1 + seed % 20, seed, 10000);
    CHECK(std::get<PointSet>(parse_pointset(serialize_pointset(s))) == s);
    std::vector<Color> colors;
    for (Index i = 0; i < s.size(); ++i) colors.push_back(static_cast<Color>((seed + i) % 3));
    const ColoredPointSet cs(s, colors);
    CHECK(std::get<ColoredPointSet>(parse_pointset(serialize_pointset(cs))) == cs);
  }
}
