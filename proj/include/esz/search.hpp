// Exact searches for convex polygons, cups and caps under interior-point
// constraints.
//
// Every optimized search enumerates candidate polygons through a fan dynamic
// program: a polygon is generated exactly once from its lowest vertex (for
// chains, from its leftmost vertex), the remaining vertices are visited in
// angular (resp. x) order, and interior points are accumulated per fan
// triangle. NotFound results are therefore exhaustive statements about the
// input set.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "esz/point.hpp"

namespace esz {

/// Upper bound on the number of points a search accepts; interior counts are
/// tracked as bitsets of this width.
inline constexpr std::size_t kMaxSearchPoints = 255;

struct AtMost {
  std::size_t k = 0;
  friend bool operator==(const AtMost&, const AtMost&) = default;
};

struct ZeroMod {
  std::size_t q = 2;
  bool zero_allowed = true;
  friend bool operator==(const ZeroMod&, const ZeroMod&) = default;
};

/// Admissible interior counts of a polygon or chain.
class InteriorConstraint {
 public:
  static InteriorConstraint at_most(std::size_t k) { return InteriorConstraint(AtMost{k}); }
  /// q >= 2, else ValidationError.
  static InteriorConstraint zero_mod(std::size_t q, bool zero_allowed = true);
  static InteriorConstraint unconstrained() { return at_most(kMaxSearchPoints); }

  [[nodiscard]] bool admits(std::size_t count) const noexcept;
  [[nodiscard]] const std::variant<AtMost, ZeroMod>& kind() const noexcept { return kind_; }
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const InteriorConstraint&, const InteriorConstraint&) = default;

 private:
  explicit InteriorConstraint(std::variant<AtMost, ZeroMod> k) : kind_(k) {}
  std::variant<AtMost, ZeroMod> kind_;
};

enum class ChainKind { Cup, Cap };

std::string to_string(ChainKind kind);

/// x-sorted chain with its strict interior count (points inside the hull of
/// the chain vertices).
struct ChainWitness {
  std::vector<Index> vertex_indices;
  ChainKind kind = ChainKind::Cup;
  std::size_t interior_count = 0;

  friend bool operator==(const ChainWitness&, const ChainWitness&) = default;
};

struct SearchStats {
  std::uint64_t candidates = 0;  // DP transitions or subsets examined
  double elapsed_ms = 0.0;
  std::optional<std::uint64_t> seed;
};

template <typename Witness>
struct SearchResult {
  std::optional<Witness> witness;
  SearchStats stats;

  [[nodiscard]] bool found() const noexcept { return witness.has_value(); }
};

struct MaxConvex {
  std::size_t size = 0;
  ConvexWitness witness;
  SearchStats stats;
};

struct LongestChain {
  std::size_t length = 0;
  ChainWitness witness;
  SearchStats stats;
};

enum class EmptinessMode {
  AllPoints,  // no point of the whole set inside
  SameColor,  // no point of the quad's own color inside
};

struct MonoQuad {
  ConvexWitness witness;
  Color color = 0;
};

/// Largest subset in convex position. Requires >= 3 validated points.
MaxConvex max_convex_subset(const PointSet& s);

/// A convex n-gon whose interior count satisfies c, or nothing after an
/// exhaustive search.
SearchResult<ConvexWitness> find_ngon(const PointSet& s, std::size_t n,
                                      const InteriorConstraint& c);

/// Number of convex n-gons satisfying c.
std::uint64_t count_ngons(const PointSet& s, std::size_t n, const InteriorConstraint& c);

/// True iff all x-coordinates are pairwise distinct.
bool has_distinct_x(const PointSet& s);

LongestChain longest_chain(const PointSet& s, ChainKind kind);

/// An l-point chain with interior count <= max_interior.
SearchResult<ChainWitness> find_chain(const PointSet& s, ChainKind kind, std::size_t l,
                                      std::size_t max_interior);

std::uint64_t count_chains(const PointSet& s, ChainKind kind, std::size_t l,
                           std::size_t max_interior);

/// Empty convex quadrilateral with monochromatic vertices. Throws
/// ValidationError if no color has 4 points.
SearchResult<MonoQuad> find_empty_mono_quad(const ColoredPointSet& cs,
                                            EmptinessMode mode = EmptinessMode::AllPoints);

std::uint64_t count_empty_mono_quads(const ColoredPointSet& cs,
                                     EmptinessMode mode = EmptinessMode::AllPoints);

/// Recomputes convexity, x-order, turn direction and interior count.
bool verify_chain(const PointSet& s, const ChainWitness& w);

/// Recomputes convex position, vertex count and interior count.
bool verify_convex(const PointSet& s, const ConvexWitness& w);

/// Worker count for searches: CPL_THREADS if set, else hardware concurrency.
std::size_t search_threads();

}  // namespace esz
