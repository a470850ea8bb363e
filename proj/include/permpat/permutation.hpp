#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace permpat {

// A permutation of {1,...,n} in one-line notation.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> letters);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  // Positions are 1-based throughout the library.
  int value_at(int pos) const { return letters_.at(static_cast<size_t>(pos) - 1); }

  const std::vector<int>& letters() const { return letters_; }

  static Permutation identity(int n);

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> letters_;
};

// Rank sequence of a list of pairwise distinct values: smallest value maps
// to 1, largest to n. Order-isomorphic inputs normalize identically.
template <typename T>
Permutation normalize(const std::vector<T>& values) {
  if (values.empty())
    throw std::invalid_argument("normalize: empty input");
  const int n = static_cast<int>(values.size());
  std::vector<int> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> ranks(values.size());
  for (int r = 0; r < n; ++r) {
    if (r > 0 && !(values[idx[r - 1]] < values[idx[r]]))
      throw std::invalid_argument("normalize: values must be pairwise distinct");
    ranks[idx[r]] = r + 1;
  }
  return Permutation(std::move(ranks));
}

// New letter of value `rank` placed between positions `site` and site+1
// (site 0 = front, site n = back); existing letters >= rank shift up by one.
Permutation insert_at_site(const Permutation& p, int site, int rank);

// Remove the letters at the given 1-based positions and renormalize the
// rest. Deleting every position is an error; deleting none returns p.
Permutation delete_positions(const Permutation& p, const std::vector<int>& positions);

}  // namespace permpat
