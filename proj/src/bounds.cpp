#include "esz/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "esz/point.hpp"

namespace esz {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ValidationError(what);
}

BigCount pow2(unsigned e) { return BigCount(1) << e; }

unsigned ceil_half(unsigned v) { return (v + 1) / 2; }

}  // namespace

std::string to_string(const BigCount& v) { return v.str(); }

BigCount binom(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigCount r = 1;
  for (long long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

GBoundsRow g_bounds(unsigned n) {
  require(n >= 3, "g bounds need n >= 3");
  GBoundsRow row;
  row.n = n;
  row.lower = pow2(n - 2) + 1;
  row.upper_es = binom(2 * n - 4, n - 2) + 1;
  if (n >= 5) row.upper_tv = binom(2 * n - 5, n - 3) + 1;
  return row;
}

BigCount f_threshold(unsigned l, unsigned m) {
  require(l >= 2 && m >= 2, "f(l, m) needs l, m >= 2");
  return binom(l + m - 4, l - 2) + 1;
}

BigCount sendov_k(unsigned n) {
  require(n >= 7, "Sendov's bound needs n >= 7");
  const unsigned m = (n + 2) / 4;
  const unsigned r = (n + 2) % 4;
  return BigCount(r + 4) * pow2(m - 1) - 4 * m - r - 1;
}

BigCount koshelev_nonexist_k(unsigned n) {
  require(n >= 7, "nonexistence bound needs n >= 7");
  if (n % 2 == 1) return binom(n - 7, (n - 7) / 2) - 1;
  return 2 * binom(n - 8, (n - 8) / 2) - 1;
}

BigCount best_known_nonexist_k(unsigned n) {
  return std::max(sendov_k(n), koshelev_nonexist_k(n));
}

BigCount survival_k(unsigned n) {
  require(n >= 6, "survival bound needs n >= 6");
  return binom(n - 3, ceil_half(n - 3)) - ceil_half(n);
}

BigCount c_of_r(unsigned r) {
  require(r >= 2, "c(r) needs r >= 2");
  return pow2((r - 2) / 2) + pow2(ceil_half(r - 2)) - r - 1;
}

std::optional<std::pair<BigCount, BigCount>> f_nonexist_pair(unsigned l, unsigned m, unsigned l0,
                                                             unsigned m0) {
  require(l0 >= 2 && m0 >= 2, "base sizes need l0, m0 >= 2");
  require(l >= std::max(5u, l0) && m >= std::max(5u, m0),
          "f_nonexist_pair needs l >= max(5, l0) and m >= max(5, m0)");
  const auto cl = c_of_r(l0);
  const auto cm = c_of_r(m0);
  if (cl <= 0 || cm <= 0) return std::nullopt;
  const long long top = static_cast<long long>(l + m) - l0 - m0;
  return std::pair{cl * binom(top, l - l0) - 1, cm * binom(top, m - m0) - 1};
}

SurvivalThresholds f_survival_thresholds(unsigned l, unsigned m) {
  require(l >= 4 && m >= 4, "survival thresholds need l, m >= 4");
  SurvivalThresholds t;
  const BigCount l1 = binom(l + m - 6, l - 3) - m + 1;
  const BigCount m1 = binom(l + m - 6, m - 3) - l + 1;
  if (l1 >= 0) t.l1 = l1;
  if (m1 >= 0) t.m1 = m1;
  return t;
}

unsigned bdv_nprime(unsigned n, unsigned q) {
  require(q >= 2, "modulus q must be at least 2");
  const unsigned r = n % q;
  const unsigned target = 2 % q;
  return n + (target + q - r) % q;
}

std::optional<BigCount> modq_upper(unsigned n, unsigned q) {
  require(q >= 2, "modulus q must be at least 2");
  require(n >= 3, "polygon size must be at least 3");
  if (n + 1 < 2 * q) return std::nullopt;
  const long long arg = static_cast<long long>(q) * (static_cast<long long>(n) - 4) + 4;
  if (arg >= 5) return g_bounds(static_cast<unsigned>(arg)).upper_tv;
  if (arg == 4) return BigCount(5);
  if (arg == 3) return BigCount(3);
  return std::nullopt;
}

const std::vector<long long>& nyklova_row() {
  static const std::vector<long long> row{0,  1,  2,  3,   6,   9,   13,  19,  27, 39,
                                          51, 63, 91, 119, 147, 175, 238, 301, 373};
  return row;
}

namespace {

using Grid = std::vector<std::vector<std::string>>;

std::string format_grid(const Grid& g, TableFormat format) {
  std::ostringstream os;
  if (format == TableFormat::Tsv) {
    for (const auto& row : g) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i];
      os << '\n';
    }
    return os.str();
  }
  std::vector<std::size_t> width;
  for (const auto& row : g) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : g) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i == 0) {
        line += row[i] + std::string(width[i] - row[i].size(), ' ');
      } else {
        line += "  " + std::string(width[i] - row[i].size(), ' ') + row[i];
      }
    }
    os << line << '\n';
  }
  return os.str();
}

Grid table1() {
  Grid g(4);
  g[0].push_back("n");
  g[1].push_back("Sendov");
  g[2].push_back("Nyklova");
  g[3].push_back("binomial");
  for (unsigned n = 7; n <= 25; ++n) {
    g[0].push_back(std::to_string(n));
    g[1].push_back(to_string(sendov_k(n)));
    g[2].push_back(std::to_string(nyklova_row()[n - 7]));
    g[3].push_back(to_string(best_known_nonexist_k(n)));
  }
  return g;
}

Grid table2() {
  Grid g(2);
  g[0].push_back("n");
  g[1].push_back("k");
  for (unsigned n = 6; n <= 25; ++n) {
    g[0].push_back(std::to_string(n));
    g[1].push_back(to_string(survival_k(n)));
  }
  return g;
}

Grid table4() {
  Grid g;
  std::vector<std::string> header{"l\\m"};
  for (unsigned m = 4; m <= 15; ++m) header.push_back(std::to_string(m));
  g.push_back(header);
  for (unsigned l = 4; l <= 15; ++l) {
    std::vector<std::string> row{std::to_string(l)};
    for (unsigned m = 4; m <= 15; ++m) {
      const auto t = f_survival_thresholds(l, m);
      row.push_back(t.l1 ? to_string(*t.l1) : "---");
    }
    g.push_back(row);
  }
  return g;
}

}  // namespace

std::string render_table(TableId id, TableFormat format) {
  switch (id) {
    case TableId::Table1:
      return format_grid(table1(), format);
    case TableId::Table2:
      return format_grid(table2(), format);
    case TableId::Table4:
      return format_grid(table4(), format);
  }
  return {};
}

}  // namespace esz
