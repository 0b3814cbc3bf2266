#include "esz/hunt.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <regex>
#include <set>

#include "esz/generators.hpp"
#include "esz/geometry.hpp"

namespace esz {

ForbiddenQuery ForbiddenQuery::ngon(std::size_t n, InteriorConstraint c) {
  if (n < 3) throw ValidationError("forbidden polygon size must be at least 3");
  return {Kind::NGon, n, c, EmptinessMode::AllPoints};
}

ForbiddenQuery ForbiddenQuery::cup(std::size_t l, std::size_t max_interior) {
  if (l == 0) throw ValidationError("forbidden chain length must be positive");
  return {Kind::Cup, l, InteriorConstraint::at_most(max_interior), EmptinessMode::AllPoints};
}

ForbiddenQuery ForbiddenQuery::cap(std::size_t l, std::size_t max_interior) {
  if (l == 0) throw ValidationError("forbidden chain length must be positive");
  return {Kind::Cap, l, InteriorConstraint::at_most(max_interior), EmptinessMode::AllPoints};
}

ForbiddenQuery ForbiddenQuery::mono_quad(EmptinessMode mode) {
  return {Kind::MonoQuad, 4, InteriorConstraint::at_most(0), mode};
}

ForbiddenQuery ForbiddenQuery::parse(const std::string& text) {
  static const std::regex ngon_re(R"((empty-)?ngon(\d+)(?::(k|mod|mod-nonempty)(\d+))?)");
  static const std::regex chain_re(R"((cup|cap)(\d+)(?::k(\d+))?)");
  std::smatch m;
  if (std::regex_match(text, m, ngon_re)) {
    const auto n = std::stoul(m[2]);
    if (m[1].matched) {
      if (m[3].matched) throw ValidationError("empty-ngon takes no extra constraint");
      return ngon(n, InteriorConstraint::at_most(0));
    }
    if (!m[3].matched) return ngon(n);
    const auto v = std::stoul(m[4]);
    if (m[3] == "k") return ngon(n, InteriorConstraint::at_most(v));
    return ngon(n, InteriorConstraint::zero_mod(v, m[3] == "mod"));
  }
  if (std::regex_match(text, m, chain_re)) {
    const auto l = std::stoul(m[2]);
    const auto k = m[3].matched ? std::stoul(m[3]) : kMaxSearchPoints;
    return m[1] == "cup" ? cup(l, k) : cap(l, k);
  }
  if (text == "mono-quad") return mono_quad();
  if (text == "mono-quad:same-color") return mono_quad(EmptinessMode::SameColor);
  throw ValidationError("unknown forbidden structure '" + text + "'");
}

std::string ForbiddenQuery::describe() const {
  switch (kind) {
    case Kind::NGon:
      return "convex " + std::to_string(size) + "-gon, " + constraint.describe();
    case Kind::Cup:
    case Kind::Cap:
      return std::to_string(size) + "-" + (kind == Kind::Cup ? "cup" : "cap") + ", " +
             constraint.describe();
    case Kind::MonoQuad:
      return std::string("empty monochromatic convex quadrilateral") +
             (emptiness == EmptinessMode::SameColor ? " (same-color emptiness)" : "");
  }
  return {};
}

namespace {

std::size_t chain_budget(const ForbiddenQuery& q) {
  return std::get<AtMost>(q.constraint.kind()).k;
}

bool has_quad_color(const ColoredPointSet& cs) {
  std::vector<std::size_t> counts;
  for (Color c : cs.colors()) {
    if (c >= counts.size()) counts.resize(c + 1, 0);
    if (++counts[c] >= 4) return true;
  }
  return false;
}

}  // namespace

std::uint64_t count_violations(const PointFile& f, const ForbiddenQuery& q) {
  const auto& s = points_of(f);
  switch (q.kind) {
    case ForbiddenQuery::Kind::NGon:
      return q.size > s.size() ? 0 : count_ngons(s, q.size, q.constraint);
    case ForbiddenQuery::Kind::Cup:
      return count_chains(s, ChainKind::Cup, q.size, chain_budget(q));
    case ForbiddenQuery::Kind::Cap:
      return count_chains(s, ChainKind::Cap, q.size, chain_budget(q));
    case ForbiddenQuery::Kind::MonoQuad: {
      const auto* cs = std::get_if<ColoredPointSet>(&f);
      if (cs == nullptr) throw ValidationError("monochromatic query needs a colored set");
      return has_quad_color(*cs) ? count_empty_mono_quads(*cs, q.emptiness) : 0;
    }
  }
  return 0;
}

bool contains(const PointFile& f, const ForbiddenQuery& q) {
  const auto& s = points_of(f);
  switch (q.kind) {
    case ForbiddenQuery::Kind::NGon:
      return q.size <= s.size() && find_ngon(s, q.size, q.constraint).found();
    case ForbiddenQuery::Kind::Cup:
      return find_chain(s, ChainKind::Cup, q.size, chain_budget(q)).found();
    case ForbiddenQuery::Kind::Cap:
      return find_chain(s, ChainKind::Cap, q.size, chain_budget(q)).found();
    case ForbiddenQuery::Kind::MonoQuad: {
      const auto* cs = std::get_if<ColoredPointSet>(&f);
      if (cs == nullptr) throw ValidationError("monochromatic query needs a colored set");
      return has_quad_color(*cs) && find_empty_mono_quad(*cs, q.emptiness).found();
    }
  }
  return false;
}

namespace {

struct Annealer {
  std::mt19937_64 rng;
  std::int64_t range;

  explicit Annealer(std::uint64_t seed, std::int64_t r) : rng(seed), range(r) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const auto limit = std::numeric_limits<std::uint64_t>::max() -
                       std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do {
      r = rng();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  double unit() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
};

// Distinct x and no collinear triple after moving point i to p.
bool admissible(const std::vector<Point>& pts, std::size_t i, const Point& p) {
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j != i && pts[j].x == p.x) return false;
  }
  for (std::size_t a = 0; a < pts.size(); ++a) {
    if (a == i) continue;
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      if (b == i) continue;
      if (cross(pts[a], pts[b], p) == 0) return false;
    }
  }
  return true;
}

PointFile make_file(const std::vector<Point>& pts, const std::vector<Color>& colors, bool colored) {
  auto s = validated(PointSet(pts));
  if (colored) return ColoredPointSet(std::move(s), colors);
  return s;
}

}  // namespace

HuntResult randomized_witness_search(std::size_t n, std::span<const ForbiddenQuery> forbid,
                                     const HuntOptions& options) {
  if (n == 0 || n > 64) throw ValidationError("hunt size must lie in 1..64");
  if (options.colors == 0) throw ValidationError("need at least one color");
  const auto start = std::chrono::steady_clock::now();
  bool colored = false;
  for (const auto& q : forbid) colored = colored || q.colored();

  Annealer an(options.seed, options.range);
  std::vector<Point> pts = random_general_position(n, options.seed, options.range).points();
  std::vector<Color> colors(n, 0);
  if (colored) {
    for (auto& c : colors) c = static_cast<Color>(an.uniform(0, options.colors - 1));
  }

  auto objective = [&](const std::vector<Point>& p, const std::vector<Color>& c) {
    const auto f = make_file(p, c, colored);
    std::uint64_t total = 0;
    for (const auto& q : forbid) total += count_violations(f, q);
    return total;
  };

  HuntResult out;
  out.stats.seed = options.seed;
  auto current = objective(pts, colors);
  out.best_violations = current;
  const double t0 = 2.0;

  for (std::uint64_t it = 0;; ++it) {
    if (current == 0) {
      auto f = make_file(pts, colors, colored);
      bool clean = true;
      for (const auto& q : forbid) clean = clean && !contains(f, q);
      if (clean) {
        out.witness = std::move(f);
        out.iterations = it;
        break;
      }
    }
    if (it >= options.budget) {
      out.iterations = it;
      break;
    }

    const double progress = static_cast<double>(it) / static_cast<double>(options.budget);
    const double temperature = t0 * (1.0 - progress) + 1e-3;
    const auto i = static_cast<std::size_t>(an.uniform(0, static_cast<std::int64_t>(n) - 1));

    auto trial_pts = pts;
    auto trial_colors = colors;
    if (colored && options.colors > 1 && an.unit() < 0.2) {
      trial_colors[i] = static_cast<Color>((colors[i] + 1 + an.uniform(0, options.colors - 2)) %
                                           options.colors);
    } else {
      const auto radius = std::max<std::int64_t>(
          1, static_cast<std::int64_t>(static_cast<double>(options.range) / 4.0 * (1.0 - progress)));
      const auto nx = std::clamp(pts[i].x + an.uniform(-radius, radius), std::int64_t{0}, options.range);
      const auto ny = std::clamp(pts[i].y + an.uniform(-radius, radius), std::int64_t{0}, options.range);
      const Point p(nx, ny);
      if (p == pts[i] || !admissible(pts, i, p)) continue;
      trial_pts[i] = p;
    }

    const auto next = objective(trial_pts, trial_colors);
    const double delta = static_cast<double>(next) - static_cast<double>(current);
    if (delta <= 0 || an.unit() < std::exp(-delta / temperature)) {
      pts = std::move(trial_pts);
      colors = std::move(trial_colors);
      current = next;
      out.best_violations = std::min(out.best_violations, current);
    }
  }
  out.stats.candidates = out.iterations;
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace esz
