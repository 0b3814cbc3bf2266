#include "esz/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

#include "esz/geometry.hpp"
#include "fan_dp.hpp"

namespace esz {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_searchable(const PointSet& s) {
  s.require_general_position();
  if (s.size() > kMaxSearchPoints) {
    throw ValidationError("point set exceeds " + std::to_string(kMaxSearchPoints) +
                          " points supported by exact search");
  }
}

void require_distinct_x(const PointSet& s) {
  require_searchable(s);
  if (!has_distinct_x(s)) {
    throw ValidationError("x-coordinates are not pairwise distinct; shear the set first");
  }
}

std::vector<Index> x_order(const PointSet& s) { return detail::lex_order(s); }

}  // namespace

InteriorConstraint InteriorConstraint::zero_mod(std::size_t q, bool zero_allowed) {
  if (q < 2) throw ValidationError("modulus q must be at least 2");
  return InteriorConstraint(ZeroMod{q, zero_allowed});
}

bool InteriorConstraint::admits(std::size_t count) const noexcept {
  if (const auto* am = std::get_if<AtMost>(&kind_)) return count <= am->k;
  const auto& zm = std::get<ZeroMod>(kind_);
  return count % zm.q == 0 && (zm.zero_allowed || count > 0);
}

std::string InteriorConstraint::describe() const {
  std::ostringstream os;
  if (const auto* am = std::get_if<AtMost>(&kind_)) {
    if (am->k >= kMaxSearchPoints) return "any interior";
    os << "interior <= " << am->k;
  } else {
    const auto& zm = std::get<ZeroMod>(kind_);
    os << "interior = 0 mod " << zm.q << (zm.zero_allowed ? "" : ", nonempty");
  }
  return os.str();
}

std::string to_string(ChainKind kind) { return kind == ChainKind::Cup ? "cup" : "cap"; }

std::size_t search_threads() {
  if (const char* env = std::getenv("CPL_THREADS")) {
    char* end = nullptr;
    const auto v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

bool has_distinct_x(const PointSet& s) {
  std::vector<std::int64_t> xs;
  xs.reserve(s.size());
  for (const auto& p : s) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

MaxConvex max_convex_subset(const PointSet& s) {
  require_searchable(s);
  if (s.size() < 3) throw ValidationError("max_convex_subset needs at least 3 points");
  const auto start = Clock::now();
  const auto apexes = detail::lex_order(s);
  std::vector<std::optional<detail::FanChain>> per_apex(apexes.size());
  std::vector<std::uint64_t> work(apexes.size(), 0);
  detail::ordered_search(
      apexes.size(),
      [&](std::size_t i) {
        per_apex[i] = detail::fan_longest(detail::polygon_frame(s, apexes[i]), work[i]);
      },
      [](std::size_t) { return false; });

  MaxConvex out;
  for (std::size_t i = 0; i < apexes.size(); ++i) {
    out.stats.candidates += work[i];
    if (per_apex[i] && per_apex[i]->vertices.size() > out.size) {
      out.size = per_apex[i]->vertices.size();
      out.witness = {per_apex[i]->vertices, per_apex[i]->interior};
    }
  }
  out.stats.elapsed_ms = ms_since(start);
  return out;
}

SearchResult<ConvexWitness> find_ngon(const PointSet& s, std::size_t n,
                                      const InteriorConstraint& c) {
  require_searchable(s);
  if (n < 3 || n > s.size()) {
    throw ValidationError("polygon size must satisfy 3 <= n <= |s|");
  }
  const auto start = Clock::now();
  const auto apexes = detail::lex_order(s);
  std::vector<std::optional<detail::FanChain>> per_apex(apexes.size());
  std::vector<std::uint64_t> work(apexes.size(), 0);
  const auto hit = detail::ordered_search(
      apexes.size(),
      [&](std::size_t i) {
        per_apex[i] = detail::fan_find(detail::polygon_frame(s, apexes[i]), n, c, s.size(), work[i]);
      },
      [&](std::size_t i) { return per_apex[i].has_value(); });

  SearchResult<ConvexWitness> out;
  // Work past the hit depends on the batch size, so it is not counted.
  const std::size_t counted = hit ? *hit + 1 : work.size();
  for (std::size_t i = 0; i < counted; ++i) out.stats.candidates += work[i];
  if (hit) out.witness = ConvexWitness{per_apex[*hit]->vertices, per_apex[*hit]->interior};
  out.stats.elapsed_ms = ms_since(start);
  return out;
}

std::uint64_t count_ngons(const PointSet& s, std::size_t n, const InteriorConstraint& c) {
  require_searchable(s);
  if (n < 3) throw ValidationError("polygon size must be at least 3");
  std::uint64_t total = 0;
  for (Index apex = 0; apex < s.size(); ++apex) {
    total += detail::fan_count(detail::polygon_frame(s, apex), n, c, s.size());
  }
  return total;
}

LongestChain longest_chain(const PointSet& s, ChainKind kind) {
  require_distinct_x(s);
  const auto start = Clock::now();
  const auto order = x_order(s);
  LongestChain out;
  out.witness.kind = kind;
  out.length = std::min<std::size_t>(s.size(), 2);
  out.witness.vertex_indices.assign(order.begin(), order.begin() + static_cast<long>(out.length));
  for (Index apex : order) {
    auto chain = detail::fan_longest(detail::chain_frame(s, apex, kind), out.stats.candidates);
    if (chain && chain->vertices.size() > out.length) {
      out.length = chain->vertices.size();
      out.witness.vertex_indices = chain->vertices;
      out.witness.interior_count = chain->interior;
    }
  }
  out.stats.elapsed_ms = ms_since(start);
  return out;
}

SearchResult<ChainWitness> find_chain(const PointSet& s, ChainKind kind, std::size_t l,
                                      std::size_t max_interior) {
  require_distinct_x(s);
  if (l == 0) throw ValidationError("chain length must be positive");
  const auto start = Clock::now();
  SearchResult<ChainWitness> out;
  const auto order = x_order(s);
  if (l <= 2) {
    if (s.size() >= l) {
      out.witness = ChainWitness{{order.begin(), order.begin() + static_cast<long>(l)}, kind, 0};
    }
  } else {
    const auto c = InteriorConstraint::at_most(max_interior);
    for (Index apex : order) {
      auto chain =
          detail::fan_find(detail::chain_frame(s, apex, kind), l, c, s.size(), out.stats.candidates);
      if (chain) {
        out.witness = ChainWitness{chain->vertices, kind, chain->interior};
        break;
      }
    }
  }
  out.stats.elapsed_ms = ms_since(start);
  return out;
}

std::uint64_t count_chains(const PointSet& s, ChainKind kind, std::size_t l,
                           std::size_t max_interior) {
  require_distinct_x(s);
  if (l == 0) throw ValidationError("chain length must be positive");
  if (l == 1) return s.size();
  if (l == 2) return s.size() * (s.size() - 1) / 2;
  const auto c = InteriorConstraint::at_most(max_interior);
  std::uint64_t total = 0;
  for (Index apex = 0; apex < s.size(); ++apex) {
    total += detail::fan_count(detail::chain_frame(s, apex, kind), l, c, s.size());
  }
  return total;
}

namespace {

std::vector<Color> quad_colors(const ColoredPointSet& cs) {
  cs.base().require_general_position();
  std::vector<std::size_t> counts;
  for (Color c : cs.colors()) {
    if (c >= counts.size()) counts.resize(c + 1, 0);
    ++counts[c];
  }
  std::vector<Color> eligible;
  for (Color c = 0; c < counts.size(); ++c) {
    if (counts[c] >= 4) eligible.push_back(c);
  }
  if (eligible.empty()) throw ValidationError("no color class has at least 4 points");
  return eligible;
}

detail::PointMasks quad_masks(const ColoredPointSet& cs, Color color, EmptinessMode mode) {
  detail::PointMasks masks;
  masks.vertex_ok.resize(cs.size());
  for (Index i = 0; i < cs.size(); ++i) masks.vertex_ok[i] = cs.color(i) == color ? 1 : 0;
  if (mode == EmptinessMode::SameColor) masks.counted = masks.vertex_ok;
  return masks;
}

}  // namespace

SearchResult<MonoQuad> find_empty_mono_quad(const ColoredPointSet& cs, EmptinessMode mode) {
  const auto colors = quad_colors(cs);
  const auto& s = cs.base();
  require_searchable(s);
  const auto start = Clock::now();
  SearchResult<MonoQuad> out;
  const auto empty = InteriorConstraint::at_most(0);
  const auto apexes = detail::lex_order(s);
  for (Color color : colors) {
    const auto masks = quad_masks(cs, color, mode);
    for (Index apex : apexes) {
      if (!masks.vertex_ok[apex]) continue;
      auto quad = detail::fan_find(detail::polygon_frame(s, apex, masks), 4, empty, s.size(),
                                   out.stats.candidates);
      if (quad) {
        ConvexWitness w{quad->vertices, 0};
        w.interior_count = interior_count(s, w);
        out.witness = MonoQuad{std::move(w), color};
        out.stats.elapsed_ms = ms_since(start);
        return out;
      }
    }
  }
  out.stats.elapsed_ms = ms_since(start);
  return out;
}

std::uint64_t count_empty_mono_quads(const ColoredPointSet& cs, EmptinessMode mode) {
  const auto colors = quad_colors(cs);
  const auto& s = cs.base();
  require_searchable(s);
  const auto empty = InteriorConstraint::at_most(0);
  std::uint64_t total = 0;
  for (Color color : colors) {
    const auto masks = quad_masks(cs, color, mode);
    for (Index apex = 0; apex < s.size(); ++apex) {
      if (!masks.vertex_ok[apex]) continue;
      total += detail::fan_count(detail::polygon_frame(s, apex, masks), 4, empty, s.size());
    }
  }
  return total;
}

bool verify_convex(const PointSet& s, const ConvexWitness& w) {
  try {
    if (w.vertex_indices.size() < 3) return false;
    const auto ccw = ccw_order(s, w.vertex_indices);
    // Stored order must be a rotation of the counterclockwise order.
    const auto first = std::find(ccw.begin(), ccw.end(), w.vertex_indices.front());
    std::vector<Index> rotated(first, ccw.end());
    rotated.insert(rotated.end(), ccw.begin(), first);
    if (rotated != w.vertex_indices) return false;
    return interior_count(s, w) == w.interior_count;
  } catch (const ValidationError&) {
    return false;
  }
}

bool verify_chain(const PointSet& s, const ChainWitness& w) {
  const auto& v = w.vertex_indices;
  if (v.empty()) return false;
  if (std::set<Index>(v.begin(), v.end()).size() != v.size()) return false;
  for (Index i : v) {
    if (i >= s.size()) return false;
  }
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (s[v[i - 1]].x >= s[v[i]].x) return false;
  }
  for (std::size_t i = 2; i < v.size(); ++i) {
    const auto o = orient(s[v[i - 2]], s[v[i - 1]], s[v[i]]);
    if (o != (w.kind == ChainKind::Cup ? Orientation::Left : Orientation::Right)) return false;
  }
  const std::size_t inside = v.size() < 3 ? 0 : interior_count(s, std::span<const Index>(v));
  return inside == w.interior_count;
}

}  // namespace esz
