// Randomized search for configurations that avoid forbidden structures
// (lower-bound witnesses such as 8 points without a convex pentagon).
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "esz/pointset_io.hpp"
#include "esz/search.hpp"

namespace esz {

/// One structure the hunted configuration must not contain.
struct ForbiddenQuery {
  enum class Kind { NGon, Cup, Cap, MonoQuad };

  Kind kind = Kind::NGon;
  std::size_t size = 0;                                         // n-gon / chain length
  InteriorConstraint constraint = InteriorConstraint::unconstrained();  // chains: AtMost only
  EmptinessMode emptiness = EmptinessMode::AllPoints;           // MonoQuad

  static ForbiddenQuery ngon(std::size_t n, InteriorConstraint c = InteriorConstraint::unconstrained());
  static ForbiddenQuery cup(std::size_t l, std::size_t max_interior = kMaxSearchPoints);
  static ForbiddenQuery cap(std::size_t l, std::size_t max_interior = kMaxSearchPoints);
  static ForbiddenQuery mono_quad(EmptinessMode mode = EmptinessMode::AllPoints);

  /// Parses "ngon5", "empty-ngon5", "cup4", "cap4", "mono-quad".
  static ForbiddenQuery parse(const std::string& text);

  [[nodiscard]] std::string describe() const;
  [[nodiscard]] bool colored() const noexcept { return kind == Kind::MonoQuad; }
};

/// Number of occurrences of q in the set (colors ignored unless q is MonoQuad).
std::uint64_t count_violations(const PointFile& f, const ForbiddenQuery& q);

/// True iff the exhaustive search for q finds an occurrence.
bool contains(const PointFile& f, const ForbiddenQuery& q);

struct HuntOptions {
  std::uint64_t budget = 200000;  // proposal count
  std::uint64_t seed = 1;
  std::int64_t range = 1000;      // coordinates drawn from [0, range]
  unsigned colors = 2;
};

struct HuntResult {
  std::optional<PointFile> witness;  // set avoiding every query, re-verified
  std::uint64_t iterations = 0;
  std::uint64_t best_violations = 0;
  SearchStats stats;

  [[nodiscard]] bool found() const noexcept { return witness.has_value(); }
};

/// Simulated annealing over integer jitters (and color flips for colored
/// queries) minimizing the total violation count. Returns a witness only after
/// every query has been ruled out by exhaustive search; otherwise reports
/// budget exhaustion. Deterministic in (n, queries, options).
HuntResult randomized_witness_search(std::size_t n, std::span<const ForbiddenQuery> forbid,
                                     const HuntOptions& options = {});

}  // namespace esz
