#include "permpat/permutation.hpp"

#include <string>

namespace permpat {

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
  const int n = static_cast<int>(letters_.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : letters_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("permutation letter " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    if (seen[static_cast<size_t>(v)])
      throw std::invalid_argument("permutation letter " + std::to_string(v) + " repeated");
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0)
    throw std::invalid_argument("negative permutation length");
  std::vector<int> letters(static_cast<size_t>(n));
  std::iota(letters.begin(), letters.end(), 1);
  return Permutation(std::move(letters));
}

Permutation insert_at_site(const Permutation& p, int site, int rank) {
  const int n = p.size();
  if (site < 0 || site > n)
    throw std::out_of_range("insert site " + std::to_string(site) + " not in 0.." +
                            std::to_string(n));
  if (rank < 1 || rank > n + 1)
    throw std::out_of_range("insert rank " + std::to_string(rank) + " not in 1.." +
                            std::to_string(n + 1));
  std::vector<int> letters;
  letters.reserve(static_cast<size_t>(n) + 1);
  for (int v : p.letters())
    letters.push_back(v >= rank ? v + 1 : v);
  letters.insert(letters.begin() + site, rank);
  return Permutation(std::move(letters));
}

Permutation delete_positions(const Permutation& p, const std::vector<int>& positions) {
  const int n = p.size();
  std::vector<bool> drop(static_cast<size_t>(n) + 1, false);
  int dropped = 0;
  for (int pos : positions) {
    if (pos < 1 || pos > n)
      throw std::out_of_range("delete position " + std::to_string(pos) + " not in 1.." +
                              std::to_string(n));
    if (!drop[static_cast<size_t>(pos)]) {
      drop[static_cast<size_t>(pos)] = true;
      ++dropped;
    }
  }
  if (dropped == n)
    throw std::invalid_argument("cannot delete every position");
  std::vector<int> kept;
  kept.reserve(static_cast<size_t>(n - dropped));
  for (int pos = 1; pos <= n; ++pos)
    if (!drop[static_cast<size_t>(pos)])
      kept.push_back(p.value_at(pos));
  return normalize(kept);
}

}  // namespace permpat
