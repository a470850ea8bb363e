#include "permpat/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "permpat/transforms.hpp"

namespace permpat {

std::string to_string(NatCoCondition c) {
  switch (c) {
    case NatCoCondition::unique_boycott: return "unique-boycott";
    case NatCoCondition::b_size: return "B-size";
    case NatCoCondition::min_gap: return "min-gap";
    case NatCoCondition::coverage: return "coverage";
  }
  return "?";
}

namespace {

bool b_size_ok(const Boycott& x) { return x.barred.size() <= 2; }

// Every pair of distinct values in X, apart from the pair U(X) itself, must
// be more than 1 apart.
bool min_gap_ok(const Boycott& x) {
  for (size_t i = 0; i < x.values.size(); ++i)
    for (size_t j = i + 1; j < x.values.size(); ++j) {
      const std::vector<int> pair{x.values[i], x.values[j]};
      if (pair == x.unbarred)
        continue;
      if (x.values[j] - x.values[i] <= 1)
        return false;
    }
  return true;
}

// {k, k+1} meets X for every 0 <= k <= n; forces 1 and n into X.
bool coverage_ok(const Boycott& x, int n) {
  auto in_x = [&](int v) {
    return std::binary_search(x.values.begin(), x.values.end(), v);
  };
  for (int k = 0; k <= n; ++k)
    if (!in_x(k) && !in_x(k + 1))
      return false;
  return true;
}

}  // namespace

NatCoReport is_nat_co(const BarredPattern& b) {
  const auto boys = boycotts(b);
  NatCoReport report;
  report.boycott_count = static_cast<int>(boys.size());

  bool fail_unique = boys.size() != 1;
  bool fail_b_size = false;
  bool fail_min_gap = false;
  bool fail_coverage = false;
  for (const Boycott& x : boys) {
    fail_b_size |= !b_size_ok(x);
    fail_min_gap |= !min_gap_ok(x);
    fail_coverage |= !coverage_ok(x, b.size());
  }
  if (fail_unique)
    report.failed_conditions.push_back(NatCoCondition::unique_boycott);
  if (fail_b_size)
    report.failed_conditions.push_back(NatCoCondition::b_size);
  if (fail_min_gap)
    report.failed_conditions.push_back(NatCoCondition::min_gap);
  if (fail_coverage)
    report.failed_conditions.push_back(NatCoCondition::coverage);
  report.verdict = report.failed_conditions.empty();
  return report;
}

bool explicit_forms_check(const BarredPattern& b) {
  const auto boys = boycotts(b);
  if (boys.size() != 1)
    return false;
  const Boycott& x = boys.front();
  const int n = b.size();
  const auto& X = x.values;
  const auto& U = x.unbarred;
  const auto& B = x.barred;
  switch (n) {
    case 7:
      return X == std::vector<int>{1, 3, 5, 7} && B.size() == 2;
    case 6:
      return (U == std::vector<int>{1, 2} && B == std::vector<int>{4, 6}) ||
             (U == std::vector<int>{3, 4} && B == std::vector<int>{1, 6}) ||
             (U == std::vector<int>{5, 6} && B == std::vector<int>{1, 3});
    case 5:
      return X == std::vector<int>{1, 3, 5} && (B.size() == 1 || B.size() == 2);
    case 4:
      return (U == std::vector<int>{1, 2} && B == std::vector<int>{4}) ||
             (U == std::vector<int>{3, 4} && B == std::vector<int>{1});
    case 3:
      return X == std::vector<int>{1, 3} && B.size() == 1;
    default:
      return false;
  }
}

std::vector<BarredPattern> enumerate_nat_co(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("enumerate_nat_co: n must be in 1..8");
  std::vector<BarredPattern> out;
  if (n < 2)
    return out;  // no proper barred pattern exists
  std::vector<int> letters(static_cast<size_t>(n));
  std::iota(letters.begin(), letters.end(), 1);
  const unsigned full = (1u << n) - 1;
  do {
    Permutation base{std::vector<int>(letters)};
    for (unsigned mask = 1; mask < full; ++mask) {
      std::vector<int> barred;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i))
          barred.push_back(i + 1);
      BarredPattern b(base, std::move(barred));
      if (is_nat_co(b).verdict)
        out.push_back(std::move(b));
    }
  } while (std::next_permutation(letters.begin(), letters.end()));
  std::sort(out.begin(), out.end());
  return out;
}

long long NatCoCensus::at(int n, int bars) const {
  auto it = cells.find({n, bars});
  return it == cells.end() ? 0 : it->second;
}

NatCoCensus nat_co_census() {
  NatCoCensus census;
  for (int n = 1; n <= 7; ++n)
    for (int bars = 1; bars < n; ++bars)
      census.cells[{n, bars}] = 0;
  for (int n = 2; n <= 7; ++n)
    for (const BarredPattern& b : enumerate_nat_co(n)) {
      ++census.cells[{n, b.bar_count()}];
      ++census.total;
    }
  return census;
}

NatCoSampleTable nat_co_samples() {
  NatCoSampleTable table;
  for (int n = 2; n <= 7; ++n)
    for (const BarredPattern& b : enumerate_nat_co(n))
      table.cells.try_emplace({n, b.bar_count()}, b);  // list is sorted, first wins
  return table;
}

bool is_coincidental_vincular(const VincularPattern& v) {
  if (v.bond_sites().empty())
    throw std::invalid_argument("is_coincidental_vincular: pattern has no bonds");
  const auto bars = bar_set(v);
  if (bars.size() != 1)
    return false;
  const BarredPattern& b = *bars.begin();
  if (!is_nat_co(b).verdict)
    return false;
  const auto bonds = bond_set(b);
  return bonds.size() == 1 && *bonds.begin() == v;
}

std::vector<VincularPattern> enumerate_coincidental_vincular(int max_n) {
  if (max_n < 1 || max_n > 8)
    throw std::invalid_argument("enumerate_coincidental_vincular: max_n must be in 1..8");
  std::vector<VincularPattern> out;
  for (int n = 2; n <= max_n; ++n) {
    std::vector<int> letters(static_cast<size_t>(n));
    std::iota(letters.begin(), letters.end(), 1);
    do {
      Permutation base{std::vector<int>(letters)};
      for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
        std::vector<int> bonds;
        for (int s = 0; s <= n; ++s)
          if (mask & (1u << s))
            bonds.push_back(s);
        VincularPattern v(base, std::move(bonds));
        if (v.is_proper() && is_coincidental_vincular(v))
          out.push_back(std::move(v));
      }
    } while (std::next_permutation(letters.begin(), letters.end()));
  }
  std::sort(out.begin(), out.end(), [](const VincularPattern& a, const VincularPattern& b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  });
  return out;
}

CoincidentalVincularTable coincidental_vincular_table(int max_n) {
  CoincidentalVincularTable table;
  for (const VincularPattern& v : enumerate_coincidental_vincular(max_n)) {
    table.by_length[v.size()].push_back(v);
    ++table.total;
  }
  return table;
}

TableData emit_tables(int which) {
  switch (which) {
    case 1: return nat_co_census();
    case 2: return nat_co_samples();
    case 3: return coincidental_vincular_table();
    default: throw std::invalid_argument("emit_tables: which must be 1, 2, or 3");
  }
}

}  // namespace permpat
