// Shared helpers for the unit suites.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "esz/generators.hpp"
#include "esz/geometry.hpp"

namespace esz::testing {

/// Brute-force strict-inclusion count via per-edge half-plane tests.
inline std::size_t halfplane_interior(const PointSet& s, const std::vector<Index>& ccw) {
  std::size_t count = 0;
  for (Index p = 0; p < s.size(); ++p) {
    bool inside = true;
    for (std::size_t i = 0; i < ccw.size() && inside; ++i) {
      const auto& a = s[ccw[i]];
      const auto& b = s[ccw[(i + 1) % ccw.size()]];
      inside = cross(a, b, s[p]) > 0;
    }
    if (inside) ++count;
  }
  return count;
}

/// Orientation of every ordered triple, flattened.
inline std::vector<Orientation> orientation_table(const PointSet& s) {
  std::vector<Orientation> t;
  for (Index i = 0; i < s.size(); ++i)
    for (Index j = 0; j < s.size(); ++j)
      for (Index k = 0; k < s.size(); ++k) t.push_back(orient(s[i], s[j], s[k]));
  return t;
}

/// Unimodular integer matrices (det +1) with small entries.
struct Unimodular {
  std::int64_t a, b, c, d;
};

inline Unimodular random_unimodular(std::mt19937_64& rng) {
  // Product of elementary shears [[1,t],[0,1]] and [[1,0],[u,1]].
  const auto t = static_cast<std::int64_t>(rng() % 5) - 2;
  const auto u = static_cast<std::int64_t>(rng() % 5) - 2;
  return {1 + t * u, t, u, 1};
}

}  // namespace esz::testing
