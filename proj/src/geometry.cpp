#include "esz/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace esz {

std::string ValidationResult::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Ok:
      return "ok";
    case Kind::Duplicate:
      os << "duplicate points at indices " << offending.at(0) << " and " << offending.at(1);
      break;
    case Kind::Collinear:
      os << "collinear triple (" << offending.at(0) << ", " << offending.at(1) << ", "
         << offending.at(2) << ")";
      break;
  }
  return os.str();
}

ValidationResult validate_general_position(PointSet& s) {
  const auto& pts = s.points_;
  const auto n = pts.size();

  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    return pts[a] != pts[b] ? pts[a] < pts[b] : a < b;
  });
  for (std::size_t i = 1; i < n; ++i) {
    if (pts[order[i - 1]] == pts[order[i]]) {
      auto a = std::min(order[i - 1], order[i]);
      auto b = std::max(order[i - 1], order[i]);
      return {ValidationResult::Kind::Duplicate, {a, b}};
    }
  }

  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      for (Index k = j + 1; k < n; ++k) {
        if (cross(pts[i], pts[j], pts[k]) == 0) {
          return {ValidationResult::Kind::Collinear, {i, j, k}};
        }
      }
    }
  }
  s.gp_checked_ = true;
  return {};
}

void PointSet::require_general_position() const {
  if (!gp_checked_) {
    throw ValidationError("point set has not been validated for general position");
  }
}

ColoredPointSet::ColoredPointSet(PointSet base, std::vector<Color> colors)
    : base_(std::move(base)), colors_(std::move(colors)) {
  if (colors_.size() != base_.size()) {
    throw ValidationError("color list length differs from point count");
  }
}

PointSet validated(PointSet s) {
  auto r = validate_general_position(s);
  if (!r.ok()) throw ValidationError(r.describe());
  return s;
}

bool strictly_inside_triangle(const Point& a, const Point& b, const Point& c,
                              const Point& p) noexcept {
  const auto d1 = cross(a, b, p);
  const auto d2 = cross(b, c, p);
  const auto d3 = cross(c, a, p);
  return (d1 > 0 && d2 > 0 && d3 > 0) || (d1 < 0 && d2 < 0 && d3 < 0);
}

bool strictly_inside_convex(std::span<const Point> ccw_polygon, const Point& p) noexcept {
  const auto m = ccw_polygon.size();
  if (m < 3) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (cross(ccw_polygon[i], ccw_polygon[(i + 1) % m], p) <= 0) return false;
  }
  return true;
}

namespace {

void check_indices(const PointSet& s, std::span<const Index> subset) {
  std::vector<Index> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("repeated index in subset");
  }
  if (!sorted.empty() && sorted.back() >= s.size()) {
    throw ValidationError("index out of range");
  }
}

}  // namespace

std::vector<Index> hull_of_subset(const PointSet& s, std::span<const Index> subset) {
  std::vector<Index> idx(subset.begin(), subset.end());
  std::sort(idx.begin(), idx.end(), [&](Index a, Index b) {
    return s[a] != s[b] ? s[a] < s[b] : a < b;
  });
  if (idx.size() < 3) return idx;

  std::vector<Index> hull(2 * idx.size());
  std::size_t k = 0;
  for (Index i : idx) {
    while (k >= 2 && cross(s[hull[k - 2]], s[hull[k - 1]], s[i]) <= 0) --k;
    hull[k++] = i;
  }
  const auto lower = k + 1;
  for (auto it = idx.rbegin() + 1; it != idx.rend(); ++it) {
    while (k >= lower && cross(s[hull[k - 2]], s[hull[k - 1]], s[*it]) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

ConvexWitness convex_hull(const PointSet& s) {
  if (s.size() < 3) throw ValidationError("convex hull needs at least 3 points");
  std::vector<Index> all(s.size());
  std::iota(all.begin(), all.end(), Index{0});
  ConvexWitness w;
  w.vertex_indices = hull_of_subset(s, all);
  w.interior_count = s.size() - w.vertex_indices.size();
  return w;
}

bool is_convex_position(const PointSet& s, std::span<const Index> subset) {
  check_indices(s, subset);
  if (subset.size() <= 3) return true;
  return hull_of_subset(s, subset).size() == subset.size();
}

std::vector<Index> ccw_order(const PointSet& s, std::span<const Index> subset) {
  check_indices(s, subset);
  auto hull = hull_of_subset(s, subset);
  if (hull.size() != subset.size() || subset.size() < 3) {
    throw ValidationError("vertices are not in convex position");
  }
  return hull;
}

std::size_t interior_count(const PointSet& s, std::span<const Index> vertices) {
  const auto ccw = ccw_order(s, vertices);
  std::vector<Point> poly;
  poly.reserve(ccw.size());
  for (Index i : ccw) poly.push_back(s[i]);
  std::size_t count = 0;
  for (const auto& p : s) {
    if (strictly_inside_convex(poly, p)) ++count;
  }
  return count;
}

std::size_t interior_count(const PointSet& s, const ConvexWitness& w) {
  return interior_count(s, std::span<const Index>(w.vertex_indices));
}

}  // namespace esz
