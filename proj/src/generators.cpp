#include "esz/generators.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "esz/geometry.hpp"
#include "esz/search.hpp"

namespace esz {

HortonLevel::HortonLevel(unsigned k) : k_(k) {
  if (k > kMax) throw ValidationError("Horton level must be at most " + std::to_string(kMax));
}

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  auto q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

struct RawPoint {
  std::int64_t x, y;
};

// Least integer D such that every point of `upper` raised by D lies strictly
// above each line through two points of `lower`, and every point of `lower`
// lies strictly below each line through two raised `upper` points.
std::int64_t separation(const std::vector<RawPoint>& lower, const std::vector<RawPoint>& upper) {
  std::int64_t need = 1;
  auto scan = [&](const std::vector<RawPoint>& line_pts, const std::vector<RawPoint>& probes,
                  int sign) {
    for (std::size_t i = 0; i < line_pts.size(); ++i) {
      for (std::size_t j = i + 1; j < line_pts.size(); ++j) {
        const auto& p1 = line_pts[i];
        const auto& p2 = line_pts[j];
        const auto den = p2.x - p1.x;
        for (const auto& q : probes) {
          // den * (line(q.x) - q.y)
          const auto num = (p1.y - q.y) * den + (p2.y - p1.y) * (q.x - p1.x);
          // sign +1: D > line(q.x) - q.y ; sign -1: D > q.y - line(q.x)
          need = std::max(need, floor_div(sign * num, den) + 1);
        }
      }
    }
  };
  scan(lower, upper, 1);
  scan(upper, lower, -1);
  return need;
}

void check_high_above(const std::vector<Point>& lower, const std::vector<Point>& upper) {
  for (std::size_t i = 0; i < lower.size(); ++i) {
    for (std::size_t j = i + 1; j < lower.size(); ++j) {
      for (const auto& q : upper) {
        if (!left_turn(lower[i], lower[j], q)) {
          throw Error("Horton construction failed: raised copy not above a lower line");
        }
      }
    }
  }
  for (std::size_t i = 0; i < upper.size(); ++i) {
    for (std::size_t j = i + 1; j < upper.size(); ++j) {
      for (const auto& q : lower) {
        if (cross(upper[i], upper[j], q) >= 0) {
          throw Error("Horton construction failed: lower copy not below a raised line");
        }
      }
    }
  }
}

struct HortonBuild {
  std::vector<RawPoint> points;
  std::vector<std::int64_t> offsets;
};

HortonBuild build_horton(unsigned k) {
  HortonBuild b;
  b.points = {{0, 0}};
  for (unsigned level = 0; level < k; ++level) {
    std::vector<RawPoint> even, odd;
    for (const auto& p : b.points) {
      even.push_back({2 * p.x, p.y});
      odd.push_back({2 * p.x + 1, p.y});
    }
    const auto d = b.points.size() > 1 ? separation(even, odd) : 1;
    b.offsets.push_back(d);

    std::vector<Point> lower, upper;
    for (const auto& p : even) lower.emplace_back(p.x, p.y);
    for (auto& p : odd) {
      p.y += d;
      upper.emplace_back(p.x, p.y);  // throws CoordinateOverflow past the bound
    }
    check_high_above(lower, upper);

    b.points.clear();
    for (std::size_t i = 0; i < even.size(); ++i) {
      b.points.push_back(even[i]);
      b.points.push_back(odd[i]);
    }
  }
  return b;
}

// Unbiased draw from [0, bound] using only the engine's raw output, which
// the standard fixes bit-for-bit.
std::int64_t draw(std::mt19937_64& rng, std::int64_t bound) {
  const auto span = static_cast<std::uint64_t>(bound) + 1;
  const auto limit = std::numeric_limits<std::uint64_t>::max() -
                     std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return static_cast<std::int64_t>(r % span);
}

}  // namespace

PointSet horton(HortonLevel level) {
  const auto b = build_horton(level.value());
  std::vector<Point> pts;
  pts.reserve(b.points.size());
  for (const auto& p : b.points) pts.emplace_back(p.x, p.y);
  return validated(PointSet(std::move(pts)));
}

std::vector<std::int64_t> horton_offsets(HortonLevel level) {
  return build_horton(level.value()).offsets;
}

PointSet random_general_position(std::size_t n, std::uint64_t seed, std::int64_t range) {
  if (n == 0) throw ValidationError("random set needs at least one point");
  if (range < 0 || range > kCoordinateBound) {
    throw ValidationError("range must lie in [0, 2^26]");
  }
  if (static_cast<std::uint64_t>(range) + 1 < n) {
    throw ValidationError("range too small to host distinct x-coordinates");
  }
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  std::set<std::int64_t> xs;
  const std::size_t max_attempts = 10000 * n + 100000;
  for (std::size_t attempt = 0; pts.size() < n; ++attempt) {
    if (attempt == max_attempts) {
      throw ValidationError("range too small to host points in general position");
    }
    const Point p(draw(rng, range), draw(rng, range));
    if (xs.count(p.x)) continue;
    bool collinear = false;
    for (std::size_t i = 0; i < pts.size() && !collinear; ++i) {
      for (std::size_t j = i + 1; j < pts.size() && !collinear; ++j) {
        collinear = cross(pts[i], pts[j], p) == 0;
      }
    }
    if (collinear) continue;
    xs.insert(p.x);
    pts.push_back(p);
  }
  return validated(PointSet(std::move(pts)));
}

PointSet shear_to_distinct_x(const PointSet& s) {
  s.require_general_position();
  if (has_distinct_x(s)) return s;
  std::int64_t ymin = s[0].y, ymax = s[0].y;
  for (const auto& p : s) {
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const auto m = ymax - ymin + 1;
  std::vector<Point> out;
  out.reserve(s.size());
  for (const auto& p : s) {
    const auto x = static_cast<__int128>(m) * p.x + (p.y - ymin);
    if (x > kCoordinateBound || x < -kCoordinateBound) {
      throw CoordinateOverflow("shear would exceed the coordinate bound");
    }
    out.emplace_back(static_cast<std::int64_t>(x), p.y);
  }
  return validated(PointSet(std::move(out)));
}

PointSet affine_map(const PointSet& s, std::int64_t a, std::int64_t b, std::int64_t c,
                    std::int64_t d, std::int64_t tx, std::int64_t ty) {
  if (a * d - b * c == 0) throw ValidationError("affine map is singular");
  std::vector<Point> out;
  out.reserve(s.size());
  for (const auto& p : s) {
    const auto x = static_cast<__int128>(a) * p.x + static_cast<__int128>(b) * p.y + tx;
    const auto y = static_cast<__int128>(c) * p.x + static_cast<__int128>(d) * p.y + ty;
    if (x > kCoordinateBound || x < -kCoordinateBound || y > kCoordinateBound ||
        y < -kCoordinateBound) {
      throw CoordinateOverflow("affine image exceeds the coordinate bound");
    }
    out.emplace_back(static_cast<std::int64_t>(x), static_cast<std::int64_t>(y));
  }
  PointSet r(std::move(out));
  return s.general_position_checked() ? validated(std::move(r)) : r;
}

PointSet mirror_y(const PointSet& s) { return affine_map(s, 1, 0, 0, -1); }

}  // namespace esz
