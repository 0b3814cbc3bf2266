#include "esz/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "esz/geometry.hpp"

namespace esz::oracle {

namespace {

void guard(const PointSet& s) {
  s.require_general_position();
  if (s.size() > kOracleMaxPoints) {
    throw ValidationError("oracle refuses sets larger than " + std::to_string(kOracleMaxPoints) +
                          " points");
  }
}

// Strictly inside conv(subset) iff strictly inside some triangle of subset
// points (general position rules out boundary hits).
bool inside_hull_of(const PointSet& s, const std::vector<Index>& subset, const Point& p) {
  const auto k = subset.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      for (std::size_t c = b + 1; c < k; ++c) {
        if (strictly_inside_triangle(s[subset[a]], s[subset[b]], s[subset[c]], p)) return true;
      }
    }
  }
  return false;
}

bool convex_by_triangles(const PointSet& s, const std::vector<Index>& subset) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    std::vector<Index> others;
    for (std::size_t j = 0; j < subset.size(); ++j) {
      if (j != i) others.push_back(subset[j]);
    }
    if (inside_hull_of(s, others, s[subset[i]])) return false;
  }
  return true;
}

std::size_t count_inside(const PointSet& s, const std::vector<Index>& subset,
                         const std::function<bool(Index)>& counted) {
  std::size_t n = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (std::find(subset.begin(), subset.end(), i) != subset.end()) continue;
    if (counted(i) && inside_hull_of(s, subset, s[i])) ++n;
  }
  return n;
}

const std::function<bool(Index)> kAll = [](Index) { return true; };

// Calls visit(subset) on each k-subset in lexicographic index order; stops
// when visit returns true.
bool for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<Index>&)>& visit) {
  if (k > n) return false;
  std::vector<Index> idx(k);
  std::iota(idx.begin(), idx.end(), Index{0});
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Index> sorted_by_x(const PointSet& s, std::vector<Index> subset) {
  std::sort(subset.begin(), subset.end(), [&](Index a, Index b) { return s[a] < s[b]; });
  return subset;
}

bool is_chain(const PointSet& s, const std::vector<Index>& xs, ChainKind kind) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (s[xs[i - 1]].x == s[xs[i]].x) return false;
  }
  for (std::size_t i = 2; i < xs.size(); ++i) {
    const auto d = cross(s[xs[i - 2]], s[xs[i - 1]], s[xs[i]]);
    if (kind == ChainKind::Cup ? d <= 0 : d >= 0) return false;
  }
  return true;
}

}  // namespace

MaxConvex max_convex_subset(const PointSet& s) {
  guard(s);
  if (s.size() < 3) throw ValidationError("max_convex_subset needs at least 3 points");
  MaxConvex out;
  for (std::size_t k = s.size(); k >= 3 && out.size == 0; --k) {
    for_each_subset(s.size(), k, [&](const std::vector<Index>& sub) {
      ++out.stats.candidates;
      if (!convex_by_triangles(s, sub)) return false;
      out.size = k;
      out.witness = {ccw_order(s, sub), count_inside(s, sub, kAll)};
      return true;
    });
  }
  return out;
}

std::optional<ConvexWitness> find_ngon(const PointSet& s, std::size_t n,
                                       const InteriorConstraint& c) {
  guard(s);
  if (n < 3 || n > s.size()) throw ValidationError("polygon size must satisfy 3 <= n <= |s|");
  std::optional<ConvexWitness> out;
  for_each_subset(s.size(), n, [&](const std::vector<Index>& sub) {
    if (!convex_by_triangles(s, sub)) return false;
    const auto inside = count_inside(s, sub, kAll);
    if (!c.admits(inside)) return false;
    out = ConvexWitness{ccw_order(s, sub), inside};
    return true;
  });
  return out;
}

std::uint64_t count_ngons(const PointSet& s, std::size_t n, const InteriorConstraint& c) {
  guard(s);
  std::uint64_t total = 0;
  for_each_subset(s.size(), n, [&](const std::vector<Index>& sub) {
    if (convex_by_triangles(s, sub) && c.admits(count_inside(s, sub, kAll))) ++total;
    return false;
  });
  return total;
}

LongestChain longest_chain(const PointSet& s, ChainKind kind) {
  guard(s);
  LongestChain out;
  out.witness.kind = kind;
  for (std::size_t k = s.size(); k >= 1 && out.length == 0; --k) {
    for_each_subset(s.size(), k, [&](const std::vector<Index>& sub) {
      ++out.stats.candidates;
      const auto xs = sorted_by_x(s, sub);
      if (!is_chain(s, xs, kind)) return false;
      out.length = k;
      out.witness.vertex_indices = xs;
      out.witness.interior_count = count_inside(s, xs, kAll);
      return true;
    });
  }
  return out;
}

std::optional<ChainWitness> find_chain(const PointSet& s, ChainKind kind, std::size_t l,
                                       std::size_t max_interior) {
  guard(s);
  if (l == 0) throw ValidationError("chain length must be positive");
  std::optional<ChainWitness> out;
  for_each_subset(s.size(), l, [&](const std::vector<Index>& sub) {
    const auto xs = sorted_by_x(s, sub);
    if (!is_chain(s, xs, kind)) return false;
    const auto inside = count_inside(s, xs, kAll);
    if (inside > max_interior) return false;
    out = ChainWitness{xs, kind, inside};
    return true;
  });
  return out;
}

std::uint64_t count_chains(const PointSet& s, ChainKind kind, std::size_t l,
                           std::size_t max_interior) {
  guard(s);
  std::uint64_t total = 0;
  for_each_subset(s.size(), l, [&](const std::vector<Index>& sub) {
    const auto xs = sorted_by_x(s, sub);
    if (is_chain(s, xs, kind) && count_inside(s, xs, kAll) <= max_interior) ++total;
    return false;
  });
  return total;
}

std::optional<MonoQuad> find_empty_mono_quad(const ColoredPointSet& cs, EmptinessMode mode) {
  const auto& s = cs.base();
  guard(s);
  std::optional<MonoQuad> out;
  for_each_subset(s.size(), 4, [&](const std::vector<Index>& sub) {
    const Color color = cs.color(sub[0]);
    for (Index i : sub) {
      if (cs.color(i) != color) return false;
    }
    if (!convex_by_triangles(s, sub)) return false;
    const auto same = [&](Index i) { return cs.color(i) == color; };
    const auto inside = mode == EmptinessMode::AllPoints ? count_inside(s, sub, kAll)
                                                         : count_inside(s, sub, same);
    if (inside != 0) return false;
    out = MonoQuad{ConvexWitness{ccw_order(s, sub), count_inside(s, sub, kAll)}, color};
    return true;
  });
  return out;
}

}  // namespace esz::oracle
