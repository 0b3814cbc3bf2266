// Internal: the fan dynamic program shared by polygon and chain searches.
//
// A frame fixes the first vertex (the apex) and lists every other point that
// may follow it, in traversal order. A chain apex -> v1 -> ... -> vr is valid
// when positions strictly increase and every consecutive triple turns in the
// frame's direction; polygon frames also require the closing turn
// (v_{r-1}, v_r, apex). The interior of the chain's hull is the disjoint union
// of fan triangles (apex, v_i, v_{i+1}), whose point counts are precomputed.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "esz/point.hpp"
#include "esz/search.hpp"

namespace esz::detail {

struct FanFrame {
  Index apex = 0;
  Point apex_point;
  std::vector<Index> order;
  std::vector<Point> pts;  // pts[k] = s[order[k]]
  std::vector<char> allowed;
  std::vector<std::uint16_t> tri;  // tri[u * m + v], u < v
  int turn = 1;
  bool close = true;

  [[nodiscard]] std::size_t size() const noexcept { return order.size(); }
  [[nodiscard]] std::uint16_t triangle(std::size_t u, std::size_t v) const {
    return tri[u * order.size() + v];
  }
};

/// Empty mask means "every point".
struct PointMasks {
  std::vector<char> vertex_ok;
  std::vector<char> counted;
};

/// Frame for convex polygons whose lowest (by y, then x) vertex is `apex`.
FanFrame polygon_frame(const PointSet& s, Index apex, const PointMasks& masks = {});

/// Frame for cups (turn +1) or caps (turn -1) whose leftmost vertex is `apex`.
FanFrame chain_frame(const PointSet& s, Index apex, ChainKind kind);

struct FanChain {
  std::vector<Index> vertices;  // point indices, apex first
  std::size_t interior = 0;
};

/// Longest valid chain from the apex (at least 3 vertices), if any.
std::optional<FanChain> fan_longest(const FanFrame& f, std::uint64_t& work);

/// A valid chain of exactly n >= 3 vertices whose interior count satisfies c.
std::optional<FanChain> fan_find(const FanFrame& f, std::size_t n, const InteriorConstraint& c,
                                 std::size_t total_points, std::uint64_t& work);

/// Number of valid chains of exactly n >= 3 vertices satisfying c.
std::uint64_t fan_count(const FanFrame& f, std::size_t n, const InteriorConstraint& c,
                        std::size_t total_points);

/// Apex indices in lexicographic (x, y, index) order.
std::vector<Index> lex_order(const PointSet& s);

/// Runs fn(i) for i in [0, count) on up to search_threads() workers, in
/// batches; stops after the first batch where stop(i) holds for some i and
/// returns the smallest such i.
template <typename Fn, typename Stop>
std::optional<std::size_t> ordered_search(std::size_t count, Fn&& fn, Stop&& stop);

}  // namespace esz::detail

#include "fan_dp_impl.hpp"
