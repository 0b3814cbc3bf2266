#include "esz/claims.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "esz/bounds.hpp"
#include "esz/generators.hpp"
#include "esz/geometry.hpp"
#include "esz/hunt.hpp"
#include "esz/oracle.hpp"
#include "esz/pointset_io.hpp"
#include "esz/search.hpp"

namespace esz::claims {

namespace {

using Failures = std::vector<std::string>;
using Row = std::vector<std::string>;

// Published table values, transcribed cell by cell.
const std::vector<long long> kSendovRow{0,  1,  2,  3,  6,  9,   12,  15,  22, 29,
                                        36, 43, 58, 73, 88, 103, 134, 165, 196};
const std::vector<long long> kNyklovaRow{0,  1,  2,  3,  6,   9,   13,  19,  27, 39,
                                         51, 63, 91, 119, 147, 175, 238, 301, 373};
const std::vector<long long> kBinomialRow{0,   1,   2,   3,    6,    11,   19,   39,    69,   139,
                                          251, 503, 923, 1847, 3431, 6863, 12869, 25739, 48619};
const std::vector<long long> kTable2{0,    2,    6,    15,    30,    64,    120,
                                     245,  455,  916,  1708,  3423,  6426,  12860,
                                     24300, 48609, 92367, 184744, 352704, 705419};
// Rows l = 5..15, columns m = 4..15.
const std::vector<std::vector<long long>> kTable4{
    {0, 2, 5, 9, 14, 20, 27, 35, 44, 54, 65, 77},
    {1, 6, 15, 29, 49, 76, 111, 155, 209, 274, 351, 441},
    {2, 11, 30, 64, 119, 202, 321, 485, 704, 989, 1352, 1806},
    {3, 17, 51, 120, 245, 454, 783, 1277, 1991, 2991, 4355, 6174},
    {4, 24, 79, 204, 455, 916, 1707, 2993, 4994, 7996, 12363, 18550},
    {5, 32, 115, 324, 785, 1708, 3423, 6425, 11429, 19436, 31811, 50374},
    {6, 41, 160, 489, 1280, 2995, 6426, 12860, 24299, 43746, 75569, 125956},
    {7, 51, 215, 709, 1995, 4997, 11431, 24300, 48609, 92366, 167947, 293916},
    {8, 62, 281, 995, 2996, 8000, 19439, 43748, 92367, 184744, 352703, 646632},
    {9, 74, 359, 1359, 4361, 12368, 31815, 75572, 167949, 352704, 705419, 1352064},
    {10, 87, 450, 1814, 6181, 18556, 50379, 125960, 293919, 646634, 1352065, 2704142},
};

std::vector<Row> parse_tsv(const std::string& text) {
  std::vector<Row> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    Row row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '\t')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

void expect_row(const Row& row, const std::vector<long long>& want, const std::string& label,
                Failures& f, std::size_t& cells) {
  if (row.size() != want.size() + 1) {
    f.push_back(label + ": wrong column count");
    return;
  }
  for (std::size_t i = 0; i < want.size(); ++i) {
    ++cells;
    if (row[i + 1] != std::to_string(want[i])) {
      f.push_back(label + " column " + std::to_string(i) + ": got " + row[i + 1] + ", want " +
                  std::to_string(want[i]));
    }
  }
}

std::string table_fidelity(Failures& f) {
  std::size_t cells = 0;
  const auto t1 = parse_tsv(render_table(TableId::Table1, TableFormat::Tsv));
  if (t1.size() != 4) {
    f.push_back("table 1: wrong row count");
  } else {
    expect_row(t1[1], kSendovRow, "table 1 Sendov", f, cells);
    expect_row(t1[2], kNyklovaRow, "table 1 Nyklova", f, cells);
    expect_row(t1[3], kBinomialRow, "table 1 binomial row", f, cells);
  }
  const auto t2 = parse_tsv(render_table(TableId::Table2, TableFormat::Tsv));
  if (t2.size() != 2) {
    f.push_back("table 2: wrong row count");
  } else {
    expect_row(t2[1], kTable2, "table 2", f, cells);
  }
  const auto t4 = parse_tsv(render_table(TableId::Table4, TableFormat::Tsv));
  if (t4.size() != 13) {
    f.push_back("table 4: wrong row count");
  } else {
    for (std::size_t i = 1; i < t4[1].size(); ++i, ++cells) {
      if (t4[1][i] != "---") f.push_back("table 4 row l=4: expected ---, got " + t4[1][i]);
    }
    for (std::size_t l = 5; l <= 15; ++l) {
      expect_row(t4[l - 3], kTable4[l - 5], "table 4 row l=" + std::to_string(l), f, cells);
    }
  }
  return std::to_string(cells) + " cells compared";
}

template <typename T>
void expect_eq(const T& got, const T& want, const std::string& label, Failures& f) {
  if (!(got == want)) {
    std::ostringstream os;
    os << label << ": got " << got << ", want " << want;
    f.push_back(os.str());
  }
}

std::string spot_checks(Failures& f) {
  expect_eq<BigCount>(*g_bounds(9).upper_tv, 1717, "g_bounds(9).upper_tv", f);
  expect_eq<BigCount>(*g_bounds(7).upper_tv, 127, "g_bounds(7).upper_tv", f);
  expect_eq<BigCount>(g_bounds(6).lower, 17, "g_bounds(6).lower", f);
  expect_eq<BigCount>(sendov_k(25), 196, "sendov_k(25)", f);
  expect_eq<BigCount>(koshelev_nonexist_k(24), 25739, "koshelev_nonexist_k(24)", f);
  expect_eq<BigCount>(survival_k(25), 705419, "survival_k(25)", f);
  return "6 values";
}

std::string horton_check(Failures& f) {
  const auto h5 = horton(HortonLevel(5));
  const auto r5 = find_ngon(h5, 7, InteriorConstraint::at_most(0));
  if (r5.found()) f.push_back("horton(5) contains an empty 7-gon");
  const auto h4 = horton(HortonLevel(4));
  const bool fast4 = find_ngon(h4, 7, InteriorConstraint::at_most(0)).found();
  const bool slow4 = oracle::find_ngon(h4, 7, InteriorConstraint::at_most(0)).has_value();
  if (fast4 || slow4) f.push_back("horton(4) contains an empty 7-gon");
  if (fast4 != slow4) f.push_back("horton(4): search and oracle disagree");
  std::ostringstream os;
  os << "32 points NotFound after " << r5.stats.candidates
     << " DP transitions; 16 points agree with C(16,7) enumeration";
  return os.str();
}

std::string describe_query(const std::string& what, std::uint64_t seed) {
  return what + " (seed " + std::to_string(seed) + ")";
}

template <typename W>
bool same_outcome(const SearchResult<W>& fast, const std::optional<W>& slow) {
  return fast.found() == slow.has_value();
}

std::string oracle_equivalence(Failures& f) {
  constexpr std::uint64_t kSets = 240;
  std::size_t comparisons = 0;
  for (std::uint64_t seed = 0; seed < kSets; ++seed) {
    const std::size_t n = 6 + seed % 6;
    const auto s = random_general_position(n, 1000 + seed, 1000);

    const auto mf = max_convex_subset(s);
    const auto ms = oracle::max_convex_subset(s);
    ++comparisons;
    if (mf.size != ms.size) f.push_back(describe_query("max_convex_subset", seed));
    if (!verify_convex(s, mf.witness)) f.push_back(describe_query("max_convex witness", seed));

    std::vector<InteriorConstraint> constraints{
        InteriorConstraint::at_most(0),       InteriorConstraint::at_most(1),
        InteriorConstraint::at_most(2),       InteriorConstraint::zero_mod(2),
        InteriorConstraint::zero_mod(3),      InteriorConstraint::zero_mod(2, false),
        InteriorConstraint::zero_mod(3, false)};
    for (std::size_t size = 4; size <= std::min<std::size_t>(6, n); ++size) {
      for (const auto& c : constraints) {
        const auto fast = find_ngon(s, size, c);
        const auto slow = oracle::find_ngon(s, size, c);
        ++comparisons;
        if (!same_outcome(fast, slow)) {
          f.push_back(describe_query("find_ngon " + std::to_string(size) + " " + c.describe(), seed));
        }
        if (fast.found() && (!verify_convex(s, *fast.witness) ||
                             fast.witness->vertex_indices.size() != size ||
                             !c.admits(fast.witness->interior_count))) {
          f.push_back(describe_query("find_ngon witness", seed));
        }
      }
    }

    for (auto kind : {ChainKind::Cup, ChainKind::Cap}) {
      const auto lf = longest_chain(s, kind);
      const auto ls = oracle::longest_chain(s, kind);
      ++comparisons;
      if (lf.length != ls.length) f.push_back(describe_query("longest_chain", seed));
      if (!verify_chain(s, lf.witness)) f.push_back(describe_query("longest_chain witness", seed));
      for (std::size_t l = 3; l <= 5; ++l) {
        for (std::size_t k = 0; k <= 2; ++k) {
          const auto fast = find_chain(s, kind, l, k);
          const auto slow = oracle::find_chain(s, kind, l, k);
          ++comparisons;
          if (!same_outcome(fast, slow)) f.push_back(describe_query("find_chain", seed));
          if (fast.found() && (!verify_chain(s, *fast.witness) || fast.witness->interior_count > k)) {
            f.push_back(describe_query("find_chain witness", seed));
          }
        }
      }
    }

    std::mt19937_64 rng(seed);
    std::vector<Color> colors;
    for (std::size_t i = 0; i < n; ++i) colors.push_back(static_cast<Color>(rng() % 2));
    const ColoredPointSet cs(s, colors);
    for (auto mode : {EmptinessMode::AllPoints, EmptinessMode::SameColor}) {
      bool fast_threw = false;
      std::optional<MonoQuad> fast;
      try {
        fast = find_empty_mono_quad(cs, mode).witness;
      } catch (const ValidationError&) {
        fast_threw = true;
      }
      const auto slow = fast_threw ? std::nullopt : oracle::find_empty_mono_quad(cs, mode);
      ++comparisons;
      if (fast.has_value() != slow.has_value()) f.push_back(describe_query("mono quad", seed));
      if (fast && !verify_convex(s, fast->witness)) f.push_back(describe_query("mono quad witness", seed));
    }
  }
  return std::to_string(kSets) + " sets, " + std::to_string(comparisons) + " comparisons";
}

std::string probabilistic(Failures& f) {
  std::size_t trials = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed, ++trials) {
    const auto s = random_general_position(5, 5000 + seed, 1000);
    if (!find_ngon(s, 4, InteriorConstraint::unconstrained()).found())
      f.push_back(describe_query("5 points without convex 4-gon", seed));
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed, ++trials) {
    const auto s = random_general_position(10, 6000 + seed, 1000);
    if (!find_ngon(s, 5, InteriorConstraint::at_most(0)).found())
      f.push_back(describe_query("10 points without empty pentagon", seed));
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed, ++trials) {
    const auto s = random_general_position(9, 7000 + seed, 1000);
    if (!find_ngon(s, 5, InteriorConstraint::at_most(1)).found())
      f.push_back(describe_query("9 points without pentagon of <= 1 interior", seed));
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed, ++trials) {
    const auto s = random_general_position(7, 8000 + seed, 1000);
    if (longest_chain(s, ChainKind::Cup).length < 4 && longest_chain(s, ChainKind::Cap).length < 4)
      f.push_back(describe_query("7 points without 4-cup or 4-cap", seed));
  }
  return std::to_string(trials) + " random sets, 0 violations allowed";
}

std::string hunt_one(std::size_t n, const std::string& forbid, std::uint64_t seed, Failures& f) {
  const auto q = ForbiddenQuery::parse(forbid);
  const auto r = randomized_witness_search(n, std::span(&q, 1), {.seed = seed});
  if (!r.found()) {
    f.push_back("hunt " + std::to_string(n) + " --forbid " + forbid + ": budget exhausted");
    return {};
  }
  const auto& s = points_of(*r.witness);
  if (s.size() != n) f.push_back("hunt " + forbid + ": wrong size");
  if (find_ngon(s, q.size, q.constraint).found() ||
      oracle::find_ngon(s, q.size, q.constraint).has_value()) {
    f.push_back("hunt " + forbid + ": witness fails re-verification");
  }
  return forbid + " in " + std::to_string(r.iterations) + " steps";
}

std::string hunting(Failures& f) {
  const auto a = hunt_one(8, "ngon5", kHuntSeedNoPentagon, f);
  const auto b = hunt_one(9, "empty-ngon5", kHuntSeedNoEmptyPentagon, f);
  return a + "; " + b;
}

std::string properties(Failures& f) {
  constexpr std::uint64_t kInstances = 200;
  std::mt19937_64 rng(77);

  // Affine invariance.
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    const auto s = random_general_position(7 + seed % 4, 9000 + seed, 500);
    const std::int64_t t = static_cast<std::int64_t>(rng() % 5) - 2;
    const std::int64_t u = static_cast<std::int64_t>(rng() % 5) - 2;
    const std::int64_t tx = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const std::int64_t ty = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const auto m = affine_map(s, 1 + t * u, t, u, 1, tx, ty);
    for (const auto& [size, c] : std::vector<std::pair<std::size_t, InteriorConstraint>>{
             {5, InteriorConstraint::at_most(0)},
             {5, InteriorConstraint::at_most(1)},
             {4, InteriorConstraint::zero_mod(2, false)},
             {6, InteriorConstraint::unconstrained()}}) {
      if (find_ngon(s, size, c).found() != find_ngon(m, size, c).found())
        f.push_back(describe_query("affine invariance of find_ngon", seed));
    }
    if (max_convex_subset(s).size != max_convex_subset(m).size)
      f.push_back(describe_query("affine invariance of max_convex_subset", seed));
    // Chains only see maps preserving x-order: (x, y) -> (x + tx, y + t x + ty).
    const auto v = affine_map(s, 1, 0, t, 1, tx, ty);
    for (auto kind : {ChainKind::Cup, ChainKind::Cap}) {
      if (longest_chain(s, kind).length != longest_chain(v, kind).length)
        f.push_back(describe_query("shear invariance of longest_chain", seed));
      if (count_chains(s, kind, 4, 1) != count_chains(v, kind, 4, 1))
        f.push_back(describe_query("shear invariance of chain counts", seed));
    }
  }

  // Reflection duality, including interior counts.
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    const auto s = random_general_position(6 + seed % 6, 10000 + seed, 500);
    const auto r = mirror_y(s);
    const auto lc = longest_chain(s, ChainKind::Cup);
    const auto lr = longest_chain(r, ChainKind::Cap);
    if (lc.length != lr.length) f.push_back(describe_query("reflection duality length", seed));
    for (std::size_t l = 3; l <= 5; ++l) {
      for (std::size_t k = 0; k <= 2; ++k) {
        if (count_chains(s, ChainKind::Cup, l, k) != count_chains(r, ChainKind::Cap, l, k))
          f.push_back(describe_query("reflection duality counts", seed));
      }
    }
  }

  // Monotonicity in k and vacuous constraints.
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    const auto s = random_general_position(8 + seed % 4, 11000 + seed, 500);
    for (std::size_t size = 4; size <= 6; ++size) {
      bool prev = false;
      for (std::size_t k = 0; k <= 4; ++k) {
        const bool now = find_ngon(s, size, InteriorConstraint::at_most(k)).found();
        if (prev && !now) f.push_back(describe_query("monotonicity in k", seed));
        prev = now;
      }
    }
    const auto m = max_convex_subset(s);
    if (!find_ngon(s, m.size, InteriorConstraint::at_most(s.size())).found())
      f.push_back(describe_query("vacuous constraint at maximum size", seed));
  }

  // Hull conservation.
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    const auto s = random_general_position(20, 12000 + seed, 1000);
    const auto w = convex_hull(s);
    if (w.vertex_indices.size() + w.interior_count != s.size() || interior_count(s, w) != w.interior_count)
      f.push_back(describe_query("hull conservation", seed));
  }

  // Parse / serialize round trip.
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    const auto s = random_general_position(1 + seed % 30, 13000 + seed, 100000);
    const auto back = parse_pointset(serialize_pointset(s));
    if (!(std::get<PointSet>(back) == s)) f.push_back(describe_query("round trip", seed));
  }
  return "5 suites x " + std::to_string(kInstances) + " instances";
}

}  // namespace

std::vector<Claim> all_claims() {
  return {
      {1, "table fidelity (tables 1, 2, 4)", 1.0, table_fidelity},
      {2, "formula spot checks", 1.0, spot_checks},
      {3, "Horton sets have no empty 7-gon", 600.0, horton_check},
      {4, "optimized searches agree with brute-force oracles", 300.0, oracle_equivalence},
      {5, "small-value probabilistic checks", 300.0, probabilistic},
      {6, "witness hunting for g(5) > 8 and h(5) > 9", 600.0, hunting},
      {7, "property suites", 300.0, properties},
  };
}

ClaimResult run_claim(const Claim& c) {
  ClaimResult r{c.id, c.name, false, {}, 0.0, c.limit_s};
  std::vector<std::string> failures;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = c.run(failures);
  } catch (const std::exception& e) {
    failures.push_back(std::string("exception: ") + e.what());
  }
  r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.elapsed_s > c.limit_s) {
    failures.push_back("exceeded time limit");
  }
  r.passed = failures.empty();
  if (!failures.empty()) {
    r.detail = failures.front() + (failures.size() > 1
                                       ? " (+" + std::to_string(failures.size() - 1) + " more)"
                                       : std::string());
  }
  return r;
}

bool run_all(std::ostream& out, const std::vector<int>& only) {
  bool all = true;
  for (const auto& c : all_claims()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto r = run_claim(c);
    all = all && r.passed;
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail
        << " (" << std::fixed << std::setprecision(2) << r.elapsed_s << " s, limit "
        << std::setprecision(0) << r.limit_s << " s)" << std::endl;
  }
  return all;
}

}  // namespace esz::claims
