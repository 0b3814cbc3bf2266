// Exact integer points and the point-set containers every search consumes.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace esz {

/// Largest admissible |coordinate|. Three-point determinants stay below 2^56.
inline constexpr std::int64_t kCoordinateBound = std::int64_t{1} << 26;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinate outside [-kCoordinateBound, kCoordinateBound].
class CoordinateOverflow : public Error {
 public:
  using Error::Error;
};

/// Input violates a precondition of the operation (duplicates, collinearity,
/// bad index, too few points...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  constexpr Point() = default;
  constexpr Point(std::int64_t px, std::int64_t py) : x(px), y(py) {
    if (px > kCoordinateBound || px < -kCoordinateBound || py > kCoordinateBound ||
        py < -kCoordinateBound) {
      throw CoordinateOverflow("coordinate magnitude exceeds 2^26");
    }
  }

  // Lexicographic by (x, y); the global tie-break order.
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };

/// Twice the signed area of (a, b, c). Exact: operands are bounded by 2^26.
constexpr std::int64_t cross(const Point& a, const Point& b, const Point& c) noexcept {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

/// Left iff c is strictly left of the directed line a -> b.
constexpr Orientation orient(const Point& a, const Point& b, const Point& c) noexcept {
  const auto d = cross(a, b, c);
  return d > 0 ? Orientation::Left : (d < 0 ? Orientation::Right : Orientation::Collinear);
}

constexpr bool left_turn(const Point& a, const Point& b, const Point& c) noexcept {
  return cross(a, b, c) > 0;
}

using Index = std::size_t;

class PointSet;

/// Outcome of validate_general_position: ok, a duplicate pair, or the
/// lexicographically first collinear triple.
struct ValidationResult {
  enum class Kind { Ok, Duplicate, Collinear };
  Kind kind = Kind::Ok;
  std::vector<Index> offending;

  [[nodiscard]] bool ok() const noexcept { return kind == Kind::Ok; }
  [[nodiscard]] std::string describe() const;
};

ValidationResult validate_general_position(PointSet& s);

class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {}

  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] bool empty() const noexcept { return points_.empty(); }
  [[nodiscard]] const Point& operator[](Index i) const { return points_[i]; }
  [[nodiscard]] const std::vector<Point>& points() const noexcept { return points_; }
  [[nodiscard]] auto begin() const noexcept { return points_.begin(); }
  [[nodiscard]] auto end() const noexcept { return points_.end(); }

  [[nodiscard]] bool general_position_checked() const noexcept { return gp_checked_; }

  /// Throws ValidationError unless general_position_checked() is set.
  void require_general_position() const;

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.points_ == b.points_; }

 private:
  friend ValidationResult validate_general_position(PointSet& s);
  std::vector<Point> points_;
  bool gp_checked_ = false;
};

using Color = unsigned;

class ColoredPointSet {
 public:
  ColoredPointSet() = default;
  /// Throws ValidationError if the color list length differs from the point count.
  ColoredPointSet(PointSet base, std::vector<Color> colors);

  [[nodiscard]] const PointSet& base() const noexcept { return base_; }
  [[nodiscard]] PointSet& base() noexcept { return base_; }
  [[nodiscard]] const std::vector<Color>& colors() const noexcept { return colors_; }
  [[nodiscard]] Color color(Index i) const { return colors_[i]; }
  [[nodiscard]] std::size_t size() const noexcept { return base_.size(); }

  friend bool operator==(const ColoredPointSet&, const ColoredPointSet&) = default;

 private:
  PointSet base_;
  std::vector<Color> colors_;
};

/// Indices of a convex polygon, counterclockwise, with its strict interior count.
struct ConvexWitness {
  std::vector<Index> vertex_indices;
  std::size_t interior_count = 0;

  friend bool operator==(const ConvexWitness&, const ConvexWitness&) = default;
};

}  // namespace esz
