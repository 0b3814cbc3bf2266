// Reference implementations by exhaustive subset enumeration.
//
// These share no code with the fan dynamic program: convex position is
// decided by the "no vertex inside a triangle of three others" criterion and
// interior points by triangle containment, so they serve as independent
// checks of the optimized searches. All entry points refuse sets larger than
// kOracleMaxPoints.
#pragma once

#include <cstdint>
#include <optional>

#include "esz/search.hpp"

namespace esz::oracle {

inline constexpr std::size_t kOracleMaxPoints = 16;

MaxConvex max_convex_subset(const PointSet& s);

std::optional<ConvexWitness> find_ngon(const PointSet& s, std::size_t n,
                                       const InteriorConstraint& c);

std::uint64_t count_ngons(const PointSet& s, std::size_t n, const InteriorConstraint& c);

LongestChain longest_chain(const PointSet& s, ChainKind kind);

std::optional<ChainWitness> find_chain(const PointSet& s, ChainKind kind, std::size_t l,
                                       std::size_t max_interior);

std::uint64_t count_chains(const PointSet& s, ChainKind kind, std::size_t l,
                           std::size_t max_interior);

std::optional<MonoQuad> find_empty_mono_quad(const ColoredPointSet& cs,
                                             EmptinessMode mode = EmptinessMode::AllPoints);

}  // namespace esz::oracle
