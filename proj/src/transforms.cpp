#include "permpat/transforms.hpp"

#include <algorithm>
#include <stdexcept>

#include "permpat/matcher.hpp"

namespace permpat {

std::vector<Boycott> boycotts(const BarredPattern& b) {
  const int n = b.size();
  std::vector<Boycott> out;
  int pos = 1;
  while (pos <= n) {
    if (!b.is_barred(pos)) {
      ++pos;
      continue;
    }
    int end = pos;
    while (end + 1 <= n && b.is_barred(end + 1))
      ++end;
    Boycott boy;
    for (int q = pos; q <= end; ++q)
      boy.barred.push_back(b.base().value_at(q));
    if (pos > 1)
      boy.unbarred.push_back(b.base().value_at(pos - 1));
    if (end < n)
      boy.unbarred.push_back(b.base().value_at(end + 1));
    std::sort(boy.barred.begin(), boy.barred.end());
    std::sort(boy.unbarred.begin(), boy.unbarred.end());
    boy.values = boy.barred;
    boy.values.insert(boy.values.end(), boy.unbarred.begin(), boy.unbarred.end());
    std::sort(boy.values.begin(), boy.values.end());
    out.push_back(std::move(boy));
    pos = end + 1;
  }
  return out;
}

std::set<VincularPattern> bond_set(const BarredPattern& b) {
  const auto& barred = b.barred_positions();
  const int k = b.bar_count();
  const int n = b.size();
  std::set<VincularPattern> out;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> deleted;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i))
        deleted.push_back(barred[static_cast<size_t>(i)]);

    Permutation shortened = delete_positions(b.base(), deleted);

    // one bond per maximal run of consecutive deleted positions, at the
    // site the gap collapses to: the number of survivors to its left
    std::vector<bool> gone(static_cast<size_t>(n) + 1, false);
    for (int d : deleted)
      gone[static_cast<size_t>(d)] = true;
    std::vector<int> bonds;
    for (size_t i = 0; i < deleted.size();) {
      size_t j = i;
      while (j + 1 < deleted.size() && deleted[j + 1] == deleted[j] + 1)
        ++j;
      int survivors_before = 0;
      for (int q = 1; q < deleted[i]; ++q)
        if (!gone[static_cast<size_t>(q)])
          ++survivors_before;
      bonds.push_back(survivors_before);
      i = j + 1;
    }
    out.emplace(std::move(shortened), std::move(bonds));
  }
  return out;
}

std::set<BarredPattern> bar_set(const VincularPattern& v) {
  if (v.bond_sites().empty())
    throw std::invalid_argument("bar_set: pattern has no bonds");
  const int n = v.size();
  std::set<BarredPattern> out;
  for (int site : v.bond_sites()) {
    for (int rank = 1; rank <= n + 1; ++rank) {
      Permutation grown = insert_at_site(v.base(), site, rank);
      if (!contains_vincular(grown, v))
        out.emplace(std::move(grown), std::vector<int>{site + 1});
    }
  }
  return out;
}

}  // namespace permpat
