#include "permpat/matcher.hpp"

#include <algorithm>

namespace permpat {

namespace {

// For each pattern index j (0-based), the earlier indices whose values sit
// directly below and above p[j]; a candidate host letter only has to beat
// those two window edges instead of every placed letter.
struct ValueWindows {
  std::vector<int> lower;  // index t<j with the largest p[t] < p[j], or -1
  std::vector<int> upper;  // index t<j with the smallest p[t] > p[j], or -1
};

ValueWindows make_windows(const std::vector<int>& p) {
  const int k = static_cast<int>(p.size());
  ValueWindows w{std::vector<int>(p.size(), -1), std::vector<int>(p.size(), -1)};
  for (int j = 0; j < k; ++j) {
    for (int t = 0; t < j; ++t) {
      if (p[t] < p[j]) {
        if (w.lower[j] < 0 || p[t] > p[w.lower[j]])
          w.lower[j] = t;
      } else {
        if (w.upper[j] < 0 || p[t] < p[w.upper[j]])
          w.upper[j] = t;
      }
    }
  }
  return w;
}

// Backtracking over increasing host positions; emits occurrences in
// lexicographic order. `bonded` has k+1 site flags (empty = classical).
class OccurrenceScan {
public:
  OccurrenceScan(const Permutation& w, const std::vector<int>& pattern,
                 std::vector<bool> bonded)
      : w_(w), bonded_(std::move(bonded)), windows_(make_windows(pattern)),
        n_(w.size()), k_(static_cast<int>(pattern.size())), pos_(pattern.size(), 0) {}

  bool run(std::vector<Occurrence>* out) {
    out_ = out;
    found_ = false;
    if (k_ >= 1 && k_ <= n_)
      extend(0);
    return found_;
  }

private:
  void extend(int j) {
    if (j == k_) {
      found_ = true;
      if (out_)
        out_->emplace_back(pos_);
      return;
    }
    int first = j == 0 ? 1 : pos_[j - 1] + 1;
    int last = n_ - (k_ - 1 - j);
    if (site_bonded(j)) {
      if (j == 0)
        last = 1;  // left anchor
      else
        last = std::min(last, pos_[j - 1] + 1);
    }
    if (j == k_ - 1 && site_bonded(k_))
      first = std::max(first, n_);  // right anchor
    for (int c = first; c <= last; ++c) {
      const int val = w_.value_at(c);
      if (windows_.lower[j] >= 0 && !(w_.value_at(pos_[windows_.lower[j]]) < val))
        continue;
      if (windows_.upper[j] >= 0 && !(val < w_.value_at(pos_[windows_.upper[j]])))
        continue;
      pos_[j] = c;
      extend(j + 1);
      if (found_ && !out_)
        return;
    }
  }

  bool site_bonded(int site) const {
    return !bonded_.empty() && bonded_[static_cast<size_t>(site)];
  }

  const Permutation& w_;
  std::vector<bool> bonded_;
  ValueWindows windows_;
  int n_;
  int k_;
  std::vector<int> pos_;
  std::vector<Occurrence>* out_ = nullptr;
  bool found_ = false;
};

std::vector<bool> bond_flags(const VincularPattern& v) {
  std::vector<bool> flags(static_cast<size_t>(v.size()) + 1, false);
  for (int s : v.bond_sites())
    flags[static_cast<size_t>(s)] = true;
  return flags;
}

// True iff the sorted position list small is a subset of the sorted list big.
bool position_subset(const Occurrence& small, const Occurrence& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

std::vector<Occurrence> classical_occurrences(const Permutation& w, const Permutation& p) {
  std::vector<Occurrence> out;
  OccurrenceScan(w, p.letters(), {}).run(&out);
  return out;
}

bool contains_classical(const Permutation& w, const Permutation& p) {
  return OccurrenceScan(w, p.letters(), {}).run(nullptr);
}

std::vector<Occurrence> vincular_occurrences(const Permutation& w, const VincularPattern& v) {
  std::vector<Occurrence> out;
  OccurrenceScan(w, v.base().letters(), bond_flags(v)).run(&out);
  return out;
}

bool contains_vincular(const Permutation& w, const VincularPattern& v) {
  return OccurrenceScan(w, v.base().letters(), bond_flags(v)).run(nullptr);
}

std::optional<Occurrence> barred_witness(const Permutation& w, const BarredPattern& b,
                                         BarredSemantics semantics) {
  const Permutation u = unbarred_pattern(b);
  const auto unbarred_occs = classical_occurrences(w, u);
  if (unbarred_occs.empty())
    return std::nullopt;
  const auto full_occs = classical_occurrences(w, b.base());

  if (semantics == BarredSemantics::subset) {
    for (const Occurrence& o : unbarred_occs) {
      bool covered = false;
      for (const Occurrence& f : full_occs)
        if (position_subset(o, f)) {
          covered = true;
          break;
        }
      if (!covered)
        return o;
    }
    return std::nullopt;
  }

  // role semantics: the full occurrence restricted to the unbarred slots
  // must reproduce the occurrence exactly
  const auto slots = b.unbarred_positions();
  std::vector<Occurrence> restrictions;
  restrictions.reserve(full_occs.size());
  for (const Occurrence& f : full_occs) {
    Occurrence r;
    r.reserve(slots.size());
    for (int s : slots)
      r.push_back(f[static_cast<size_t>(s) - 1]);
    restrictions.push_back(std::move(r));
  }
  std::sort(restrictions.begin(), restrictions.end());
  for (const Occurrence& o : unbarred_occs)
    if (!std::binary_search(restrictions.begin(), restrictions.end(), o))
      return o;
  return std::nullopt;
}

bool contains_barred(const Permutation& w, const BarredPattern& b, BarredSemantics semantics) {
  return barred_witness(w, b, semantics).has_value();
}

bool contains_pattern(const Permutation& w, const Pattern& p, BarredSemantics semantics) {
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Permutation>)
          return contains_classical(w, x);
        else if constexpr (std::is_same_v<T, VincularPattern>)
          return contains_vincular(w, x);
        else
          return contains_barred(w, x, semantics);
      },
      p);
}

bool avoids_all(const Permutation& w, const std::vector<Pattern>& patterns,
                BarredSemantics semantics) {
  for (const Pattern& p : patterns)
    if (contains_pattern(w, p, semantics))
      return false;
  return true;
}

}  // namespace permpat
