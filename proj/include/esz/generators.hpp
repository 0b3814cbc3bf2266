// Point families: Horton sets, seeded random sets, and the integer affine
// maps used to normalize inputs.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "esz/point.hpp"

namespace esz {

/// Recursion depth of a Horton set (2^k points).
class HortonLevel {
 public:
  static constexpr unsigned kMax = 12;
  /// Throws ValidationError above kMax.
  explicit HortonLevel(unsigned k);
  [[nodiscard]] unsigned value() const noexcept { return k_; }

 private:
  unsigned k_;
};

/// Deepest level whose coordinates fit the coordinate bound.
inline constexpr unsigned kMaxRealizableHortonLevel = 8;

/// Horton set with x-coordinates 0 .. 2^k - 1 (index = x). Level k+1 places
/// level k on the even slots and a raised copy on the odd slots; the raise is
/// the least integer making each copy lie strictly above (resp. below) every
/// line through two points of the other copy, and the construction re-checks
/// that property with orientation tests. Throws CoordinateOverflow when the
/// level cannot be realized under the coordinate bound (k > 8).
PointSet horton(HortonLevel level);

/// Raise applied at each construction step, [0] = step producing level 1.
std::vector<std::int64_t> horton_offsets(HortonLevel level);

/// Name of the pseudo-random generator behind random_general_position.
inline constexpr const char* kRandomEngineName = "mt19937_64";

/// n points with coordinates in [0, range], pairwise distinct x and no three
/// collinear. Identical (n, seed, range) give identical sets on every
/// platform. Throws ValidationError if the range cannot host n points.
PointSet random_general_position(std::size_t n, std::uint64_t seed, std::int64_t range = 1000);

/// Orientation-preserving shear (x, y) -> (M x + y - min y, y) with
/// M = (y range) + 1, making all x distinct. Sets that already have distinct x
/// are returned unchanged. Requires a validated set.
PointSet shear_to_distinct_x(const PointSet& s);

/// Integer affine map p -> (a x + b y + tx, c x + d y + ty). The result is
/// revalidated when the input was. Throws ValidationError if ad - bc == 0.
PointSet affine_map(const PointSet& s, std::int64_t a, std::int64_t b, std::int64_t c,
                    std::int64_t d, std::int64_t tx = 0, std::int64_t ty = 0);

/// (x, y) -> (x, -y): swaps cups and caps.
PointSet mirror_y(const PointSet& s);

}  // namespace esz
