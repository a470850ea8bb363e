#pragma once

// Shared test helpers: parse shortcuts, exhaustive generators, and naive
// reference matchers. The naive matchers enumerate every index subset with
// no pruning and stay independent of the library's backtracking scan; they
// are the ground truth the fast paths are checked against.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "permpat/matcher.hpp"
#include "permpat/pattern.hpp"
#include "permpat/text.hpp"

namespace support {

inline permpat::Permutation perm(const std::string& text) {
  return permpat::parse_permutation(text);
}

inline permpat::BarredPattern barred(const std::string& text) {
  return std::get<permpat::BarredPattern>(permpat::parse_pattern(text));
}

inline permpat::VincularPattern vinc(const std::string& text) {
  return std::get<permpat::VincularPattern>(permpat::parse_pattern(text));
}

inline std::vector<permpat::Permutation> all_permutations(int n) {
  std::vector<int> letters(static_cast<size_t>(n));
  std::iota(letters.begin(), letters.end(), 1);
  std::vector<permpat::Permutation> out;
  do {
    out.emplace_back(std::vector<int>(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

// Every barred pattern of n letters: all bases, all nonempty proper bar sets.
inline std::vector<permpat::BarredPattern> all_barred_patterns(int n) {
  std::vector<permpat::BarredPattern> out;
  for (const auto& base : all_permutations(n)) {
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<int> bars;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i))
          bars.push_back(i + 1);
      out.emplace_back(base, std::move(bars));
    }
  }
  return out;
}

// Every vincular pattern of n letters with at least one bond.
inline std::vector<permpat::VincularPattern> all_vincular_patterns(int n) {
  std::vector<permpat::VincularPattern> out;
  for (const auto& base : all_permutations(n)) {
    for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
      std::vector<int> bonds;
      for (int s = 0; s <= n; ++s)
        if (mask & (1u << s))
          bonds.push_back(s);
      out.emplace_back(base, std::move(bonds));
    }
  }
  return out;
}

namespace naive {

inline void combinations_rec(int n, int k, int start, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n; ++v) {
    cur.push_back(v);
    combinations_rec(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

// All k-subsets of 1..n as sorted tuples, lexicographic.
inline std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  combinations_rec(n, k, 1, cur, out);
  return out;
}

inline bool order_isomorphic(const std::vector<int>& values, const std::vector<int>& pattern) {
  const size_t k = pattern.size();
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b)
      if ((values[a] < values[b]) != (pattern[a] < pattern[b]))
        return false;
  return true;
}

inline std::vector<permpat::Occurrence> classical_occurrences(const permpat::Permutation& w,
                                                              const permpat::Permutation& p) {
  std::vector<permpat::Occurrence> out;
  if (p.size() > w.size() || p.size() == 0)
    return out;
  for (const auto& positions : combinations(w.size(), p.size())) {
    std::vector<int> values;
    for (int pos : positions)
      values.push_back(w.value_at(pos));
    if (order_isomorphic(values, p.letters()))
      out.push_back(positions);
  }
  return out;
}

inline std::vector<permpat::Occurrence> vincular_occurrences(const permpat::Permutation& w,
                                                             const permpat::VincularPattern& v) {
  std::vector<permpat::Occurrence> out;
  const int k = v.size();
  for (const auto& occ : naive::classical_occurrences(w, v.base())) {
    bool ok = true;
    for (int site : v.bond_sites()) {
      if (site == 0)
        ok &= occ.front() == 1;
      else if (site == k)
        ok &= occ.back() == w.size();
      else
        ok &= occ[static_cast<size_t>(site)] == occ[static_cast<size_t>(site) - 1] + 1;
    }
    if (ok)
      out.push_back(occ);
  }
  return out;
}

inline std::optional<permpat::Occurrence> barred_witness(const permpat::Permutation& w,
                                                         const permpat::BarredPattern& b,
                                                         permpat::BarredSemantics semantics) {
  const auto unbarred_occs = naive::classical_occurrences(w, permpat::unbarred_pattern(b));
  const auto full_occs = naive::classical_occurrences(w, b.base());
  for (const auto& o : unbarred_occs) {
    bool covered = false;
    for (const auto& f : full_occs) {
      if (semantics == permpat::BarredSemantics::subset) {
        covered = std::includes(f.begin(), f.end(), o.begin(), o.end());
      } else {
        permpat::Occurrence restricted;
        for (int slot : b.unbarred_positions())
          restricted.push_back(f[static_cast<size_t>(slot) - 1]);
        covered = restricted == o;
      }
      if (covered)
        break;
    }
    if (!covered)
      return o;
  }
  return std::nullopt;
}

inline bool contains(const permpat::Permutation& w, const permpat::Pattern& p,
                     permpat::BarredSemantics semantics = permpat::BarredSemantics::subset) {
  if (const auto* cl = std::get_if<permpat::Permutation>(&p))
    return !naive::classical_occurrences(w, *cl).empty();
  if (const auto* vp = std::get_if<permpat::VincularPattern>(&p))
    return !naive::vincular_occurrences(w, *vp).empty();
  return naive::barred_witness(w, std::get<permpat::BarredPattern>(p), semantics).has_value();
}

}  // namespace naive

}  // namespace support
