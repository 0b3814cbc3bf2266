// Closed-form bounds and thresholds for the Erdős–Szekeres problem family,
// evaluated exactly.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace esz {

/// Exact integer; signed so that formulas that may go negative (c(r),
/// survival thresholds) can be reported before their sign is checked.
using BigCount = boost::multiprecision::cpp_int;

/// C(a, b); zero when b < 0 or b > a.
BigCount binom(long long a, long long b);

struct GBoundsRow {
  unsigned n = 0;
  BigCount lower;                   // 2^(n-2) + 1
  BigCount upper_es;                // C(2n-4, n-2) + 1
  std::optional<BigCount> upper_tv; // C(2n-5, n-3) + 1, n >= 5
};

/// Bounds on g(n), n >= 3.
GBoundsRow g_bounds(unsigned n);

/// Least N forcing an l-cup or an m-cap: C(l+m-4, l-2) + 1. l, m >= 2.
BigCount f_threshold(unsigned l, unsigned m);

/// Largest k for which Horton-type constructions rule out h(n, k), following
/// n + 2 = 4m + r: (r+4) 2^(m-1) - 4m - r - 1. n >= 7.
BigCount sendov_k(unsigned n);

/// C(n-7, (n-7)/2) - 1 for odd n, 2 C(n-8, (n-8)/2) - 1 for even n. n >= 7.
BigCount koshelev_nonexist_k(unsigned n);

/// max(sendov_k, koshelev_nonexist_k): the best known k with h(n, k)
/// nonexistent, as tabulated.
BigCount best_known_nonexist_k(unsigned n);

/// C(n-3, ceil((n-3)/2)) - ceil(n/2): h(n, k) exceeds 2^(n-2)+1 for this k.
/// n >= 6.
BigCount survival_k(unsigned n);

/// 2^floor((r-2)/2) + 2^ceil((r-2)/2) - r - 1, r >= 2. May be <= 0.
BigCount c_of_r(unsigned r);

/// Interior budgets (l1, m1) for which f(l, m, l1, m1) does not exist, built
/// from base sizes (l0, m0). Empty when c(l0) <= 0 or c(m0) <= 0.
/// Requires l >= max(5, l0) and m >= max(5, m0).
std::optional<std::pair<BigCount, BigCount>> f_nonexist_pair(unsigned l, unsigned m, unsigned l0,
                                                             unsigned m0);

/// l1 = C(l+m-6, l-3) - m + 1 and m1 = C(l+m-6, m-3) - l + 1; each side is
/// empty when negative (the statement then has no content). l, m >= 4.
struct SurvivalThresholds {
  std::optional<BigCount> l1;
  std::optional<BigCount> m1;
};
SurvivalThresholds f_survival_thresholds(unsigned l, unsigned m);

/// Least n' >= n with n' = 2 (mod q). q >= 2.
unsigned bdv_nprime(unsigned n, unsigned q);

/// Upper bound on h(n, mod q) via g(q(n-4)+4) when n >= 2q-1: the
/// Tóth–Valtr value for arguments >= 5, the exact g(3) = 3 and g(4) = 5
/// below that. Empty when n < 2q - 1 or the argument is below 3.
std::optional<BigCount> modq_upper(unsigned n, unsigned q);

/// Published Nyklova row of the nonexistence table, n = 7..25.
const std::vector<long long>& nyklova_row();

enum class TableId { Table1, Table2, Table4 };
enum class TableFormat { Text, Tsv };

std::string render_table(TableId id, TableFormat format = TableFormat::Text);

std::string to_string(const BigCount& v);

}  // namespace esz
