#include "fan_dp.hpp"

#include <algorithm>
#include <bitset>
#include <limits>
#include <numeric>

#include "esz/geometry.hpp"

namespace esz::detail {

namespace {

bool mask_ok(const std::vector<char>& mask, Index i) { return mask.empty() || mask[i] != 0; }

bool turns(const FanFrame& f, const Point& a, const Point& b, const Point& c) {
  const auto d = cross(a, b, c);
  return f.turn > 0 ? d > 0 : d < 0;
}

// Points strictly inside a fan triangle always belong to the frame's order.
void fill_triangles(FanFrame& f, const std::vector<char>& counted) {
  const auto m = f.size();
  f.tri.assign(m * m, 0);
  const Point& a = f.apex_point;
  for (std::size_t u = 0; u < m; ++u) {
    const Point& pu = f.pts[u];
    for (std::size_t v = u + 1; v < m; ++v) {
      const Point& pv = f.pts[v];
      std::uint16_t c = 0;
      for (std::size_t w = 0; w < m; ++w) {
        if (w == u || w == v || !mask_ok(counted, f.order[w])) continue;
        if (strictly_inside_triangle(a, pu, pv, f.pts[w])) ++c;
      }
      f.tri[u * m + v] = c;
    }
  }
}

using CountSet = std::bitset<kMaxSearchPoints + 1>;

CountSet admissible_mask(const InteriorConstraint& c, std::size_t total) {
  CountSet mask;
  for (std::size_t i = 0; i <= std::min(total, kMaxSearchPoints); ++i) {
    if (c.admits(i)) mask.set(i);
  }
  return mask;
}

// Counts above k never become admissible again under AtMost; prune them.
CountSet reachable_mask(const InteriorConstraint& c, std::size_t total) {
  CountSet mask;
  std::size_t top = std::min(total, kMaxSearchPoints);
  if (const auto* am = std::get_if<AtMost>(&c.kind())) top = std::min(top, am->k);
  for (std::size_t i = 0; i <= top; ++i) mask.set(i);
  return mask;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  const auto r = a + b;
  return r < a ? std::numeric_limits<std::uint64_t>::max() : r;
}

}  // namespace

std::vector<Index> lex_order(const PointSet& s) {
  std::vector<Index> idx(s.size());
  std::iota(idx.begin(), idx.end(), Index{0});
  std::sort(idx.begin(), idx.end(),
            [&](Index a, Index b) { return s[a] != s[b] ? s[a] < s[b] : a < b; });
  return idx;
}

FanFrame polygon_frame(const PointSet& s, Index apex, const PointMasks& masks) {
  FanFrame f;
  f.apex = apex;
  f.apex_point = s[apex];
  f.turn = 1;
  f.close = true;
  const Point& a = s[apex];
  auto above = [&](const Point& p) { return p.y != a.y ? p.y > a.y : p.x > a.x; };
  for (Index i = 0; i < s.size(); ++i) {
    if (i != apex && above(s[i])) f.order.push_back(i);
  }
  // All candidates lie in the half-open upper half plane around the apex, so
  // the orientation test is a strict weak order by angle.
  std::sort(f.order.begin(), f.order.end(), [&](Index u, Index v) {
    const auto d = cross(a, s[u], s[v]);
    return d != 0 ? d > 0 : u < v;
  });
  for (Index i : f.order) {
    f.pts.push_back(s[i]);
    f.allowed.push_back(mask_ok(masks.vertex_ok, i) ? 1 : 0);
  }
  fill_triangles(f, masks.counted);
  return f;
}

FanFrame chain_frame(const PointSet& s, Index apex, ChainKind kind) {
  FanFrame f;
  f.apex = apex;
  f.apex_point = s[apex];
  f.turn = kind == ChainKind::Cup ? 1 : -1;
  f.close = false;
  const Point& a = s[apex];
  for (Index i = 0; i < s.size(); ++i) {
    if (s[i].x > a.x) f.order.push_back(i);
  }
  std::sort(f.order.begin(), f.order.end(), [&](Index u, Index v) {
    return s[u] != s[v] ? s[u] < s[v] : u < v;
  });
  for (Index i : f.order) f.pts.push_back(s[i]);
  f.allowed.assign(f.order.size(), 1);
  fill_triangles(f, {});
  return f;
}

namespace {

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

FanChain materialize(const FanFrame& f, std::vector<std::size_t> positions_reversed) {
  FanChain out;
  out.vertices.push_back(f.apex);
  std::reverse(positions_reversed.begin(), positions_reversed.end());
  for (std::size_t k = 0; k < positions_reversed.size(); ++k) {
    out.vertices.push_back(f.order[positions_reversed[k]]);
    if (k > 0) out.interior += f.triangle(positions_reversed[k - 1], positions_reversed[k]);
  }
  return out;
}

bool closes(const FanFrame& f, std::size_t u, std::size_t v) {
  return !f.close || turns(f, f.pts[u], f.pts[v], f.apex_point);
}

}  // namespace

std::optional<FanChain> fan_longest(const FanFrame& f, std::uint64_t& work) {
  const auto m = f.size();
  std::vector<std::uint16_t> best(m * m, 0);
  std::vector<std::size_t> pred(m * m, kNone);
  for (std::size_t v = 0; v < m; ++v) {
    if (!f.allowed[v]) continue;
    for (std::size_t u = 0; u < v; ++u) {
      if (!f.allowed[u] || !turns(f, f.apex_point, f.pts[u], f.pts[v])) continue;
      auto& cell = best[u * m + v];
      cell = 3;
      for (std::size_t t = 0; t < u; ++t) {
        const auto prev = best[t * m + u];
        ++work;
        if (prev != 0 && prev + 1 > cell && turns(f, f.pts[t], f.pts[u], f.pts[v])) {
          cell = static_cast<std::uint16_t>(prev + 1);
          pred[u * m + v] = t;
        }
      }
    }
  }
  std::size_t top = 0, bu = 0, bv = 0;
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      if (best[u * m + v] > top && closes(f, u, v)) {
        top = best[u * m + v];
        bu = u;
        bv = v;
      }
    }
  }
  if (top == 0) return std::nullopt;
  std::vector<std::size_t> rev{bv, bu};
  for (std::size_t u = bu, v = bv; pred[u * m + v] != kNone;) {
    const auto t = pred[u * m + v];
    rev.push_back(t);
    v = u;
    u = t;
  }
  return materialize(f, std::move(rev));
}

std::optional<FanChain> fan_find(const FanFrame& f, std::size_t n, const InteriorConstraint& c,
                                 std::size_t total_points, std::uint64_t& work) {
  const auto m = f.size();
  if (n < 3 || n - 1 > m) return std::nullopt;
  const auto reach = reachable_mask(c, total_points);
  const auto accept = admissible_mask(c, total_points);

  std::vector<std::vector<CountSet>> layers;
  layers.reserve(n - 2);
  layers.emplace_back(m * m);
  for (std::size_t u = 0; u < m; ++u) {
    if (!f.allowed[u]) continue;
    for (std::size_t v = u + 1; v < m; ++v) {
      if (!f.allowed[v] || !turns(f, f.apex_point, f.pts[u], f.pts[v])) continue;
      CountSet cell;
      cell.set(f.triangle(u, v));
      layers.back()[u * m + v] = cell & reach;
    }
  }
  for (std::size_t len = 4; len <= n; ++len) {
    const auto& cur = layers.back();
    std::vector<CountSet> next(m * m);
    bool any = false;
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t v = u + 1; v < m; ++v) {
        const auto& cell = cur[u * m + v];
        if (cell.none()) continue;
        for (std::size_t w = v + 1; w < m; ++w) {
          ++work;
          if (!f.allowed[w] || !turns(f, f.pts[u], f.pts[v], f.pts[w])) continue;
          auto shifted = (cell << f.triangle(v, w)) & reach;
          if (shifted.any()) {
            next[v * m + w] |= shifted;
            any = true;
          }
        }
      }
    }
    layers.push_back(std::move(next));
    if (!any) return std::nullopt;
  }

  const auto& last = layers.back();
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      const auto hits = last[u * m + v] & accept;
      if (hits.none() || !closes(f, u, v)) continue;
      std::size_t count = 0;
      while (!hits.test(count)) ++count;

      std::vector<std::size_t> rev{v, u};
      std::size_t cu = u, cv = v;
      for (std::size_t layer = layers.size() - 1; layer > 0; --layer) {
        const auto need = count - f.triangle(cu, cv);
        const auto& prev = layers[layer - 1];
        std::size_t t = 0;
        for (; t < cu; ++t) {
          if (prev[t * m + cu].test(need) && turns(f, f.pts[t], f.pts[cu], f.pts[cv])) break;
        }
        rev.push_back(t);
        count = need;
        cv = cu;
        cu = t;
      }
      return materialize(f, std::move(rev));
    }
  }
  return std::nullopt;
}

std::uint64_t fan_count(const FanFrame& f, std::size_t n, const InteriorConstraint& c,
                        std::size_t total_points) {
  const auto m = f.size();
  if (n < 3 || n - 1 > m) return 0;
  std::size_t dims = std::min(total_points, kMaxSearchPoints) + 1;
  if (const auto* am = std::get_if<AtMost>(&c.kind())) dims = std::min(dims, am->k + 1);

  std::vector<std::uint64_t> cur(m * m * dims, 0);
  for (std::size_t u = 0; u < m; ++u) {
    if (!f.allowed[u]) continue;
    for (std::size_t v = u + 1; v < m; ++v) {
      if (!f.allowed[v] || !turns(f, f.apex_point, f.pts[u], f.pts[v])) continue;
      const auto t = f.triangle(u, v);
      if (t < dims) cur[(u * m + v) * dims + t] = 1;
    }
  }
  for (std::size_t len = 4; len <= n; ++len) {
    std::vector<std::uint64_t> next(m * m * dims, 0);
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t v = u + 1; v < m; ++v) {
        const auto* cell = &cur[(u * m + v) * dims];
        if (std::all_of(cell, cell + dims, [](auto x) { return x == 0; })) continue;
        for (std::size_t w = v + 1; w < m; ++w) {
          if (!f.allowed[w] || !turns(f, f.pts[u], f.pts[v], f.pts[w])) continue;
          const auto t = f.triangle(v, w);
          auto* out = &next[(v * m + w) * dims];
          for (std::size_t k = 0; k + t < dims; ++k) out[k + t] = sat_add(out[k + t], cell[k]);
        }
      }
    }
    cur = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      if (!closes(f, u, v)) continue;
      for (std::size_t k = 0; k < dims; ++k) {
        if (c.admits(k)) total = sat_add(total, cur[(u * m + v) * dims + k]);
      }
    }
  }
  return total;
}

}  // namespace esz::detail
