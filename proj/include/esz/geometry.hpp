#pragma once

#include <span>
#include <vector>

#include "esz/point.hpp"

namespace esz {

/// Runs validate_general_position and throws ValidationError on failure.
/// Returns the stamped set.
PointSet validated(PointSet s);

/// True iff p is strictly inside triangle (a, b, c), either orientation.
bool strictly_inside_triangle(const Point& a, const Point& b, const Point& c,
                              const Point& p) noexcept;

/// True iff p is strictly inside the convex polygon given counterclockwise.
bool strictly_inside_convex(std::span<const Point> ccw_polygon, const Point& p) noexcept;

/// Counterclockwise hull (Andrew's monotone chain), starting at the
/// lexicographically smallest point. Requires >= 3 points in general position.
ConvexWitness convex_hull(const PointSet& s);

/// Hull of the referenced subset, as indices into s.
std::vector<Index> hull_of_subset(const PointSet& s, std::span<const Index> subset);

/// True iff every referenced point is a hull vertex of the subset.
bool is_convex_position(const PointSet& s, std::span<const Index> subset);

/// Reorders a convex-position subset counterclockwise starting from its
/// lexicographically smallest vertex. Throws ValidationError otherwise.
std::vector<Index> ccw_order(const PointSet& s, std::span<const Index> subset);

/// Points of s strictly inside the witness polygon. Throws ValidationError
/// when the vertices are not in convex position.
std::size_t interior_count(const PointSet& s, const ConvexWitness& w);

/// Same count for an arbitrary convex-position vertex list.
std::size_t interior_count(const PointSet& s, std::span<const Index> vertices);

}  // namespace esz
