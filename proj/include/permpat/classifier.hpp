#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "permpat/pattern.hpp"

namespace permpat {

// The conditions a naturally-coincidental barred pattern must satisfy:
// a unique boycott X with |B(X)| <= 2, all value pairs in X except possibly
// U(X) more than 1 apart, and {k,k+1} meeting X for every 0 <= k <= n.
enum class NatCoCondition { unique_boycott, b_size, min_gap, coverage };

std::string to_string(NatCoCondition c);

struct NatCoReport {
  bool verdict = false;
  int boycott_count = 0;
  std::vector<NatCoCondition> failed_conditions;
};

NatCoReport is_nat_co(const BarredPattern& b);

// The nat-co conditions restated as the five explicit
// (n, X, U, B) shapes; agrees with is_nat_co on every barred pattern.
bool explicit_forms_check(const BarredPattern& b);

// Exhaustive scan of all barred patterns of n letters, sorted. 1 <= n <= 8;
// the result is empty outside 3 <= n <= 7.
std::vector<BarredPattern> enumerate_nat_co(int n);

struct NatCoCensus {
  // (n, bar count) -> count, every cell with 1 <= bars < n <= 7 present.
  std::map<std::pair<int, int>, long long> cells;
  long long total = 0;

  long long at(int n, int bars) const;
};

NatCoCensus nat_co_census();

// The lexicographically least nat-co pattern of each nonempty census cell.
struct NatCoSampleTable {
  std::map<std::pair<int, int>, BarredPattern> cells;
};

NatCoSampleTable nat_co_samples();

// True iff bar(v) is a single nat-co barred pattern b with bond(b) = {v}.
// Total over patterns with at least one bond; throws for bond-free input.
bool is_coincidental_vincular(const VincularPattern& v);

// Exhaustive scan of all proper vincular patterns with 2 <= n <= max_n,
// sorted by (length, base, bonds).
std::vector<VincularPattern> enumerate_coincidental_vincular(int max_n);

struct CoincidentalVincularTable {
  std::map<int, std::vector<VincularPattern>> by_length;
  long long total = 0;
};

CoincidentalVincularTable coincidental_vincular_table(int max_n = 4);

// which: 1 = census grid, 2 = per-cell samples, 3 = coincidental vincular
// patterns by length. Always regenerated by enumeration.
using TableData = std::variant<NatCoCensus, NatCoSampleTable, CoincidentalVincularTable>;
TableData emit_tables(int which);

}  // namespace permpat
