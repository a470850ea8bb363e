#include "permpat/pattern.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permpat {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

BarredPattern::BarredPattern(Permutation base, std::vector<int> barred_positions)
    : base_(std::move(base)), barred_(sorted_unique(std::move(barred_positions))) {
  const int n = base_.size();
  if (barred_.empty())
    throw std::invalid_argument("barred pattern needs at least one bar");
  if (static_cast<int>(barred_.size()) >= n)
    throw std::invalid_argument("bars must cover a proper subset of the letters");
  for (int pos : barred_)
    if (pos < 1 || pos > n)
      throw std::out_of_range("barred position " + std::to_string(pos) + " not in 1.." +
                              std::to_string(n));
}

bool BarredPattern::is_barred(int pos) const {
  return std::binary_search(barred_.begin(), barred_.end(), pos);
}

std::vector<int> BarredPattern::unbarred_positions() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(size() - bar_count()));
  for (int pos = 1; pos <= size(); ++pos)
    if (!is_barred(pos))
      out.push_back(pos);
  return out;
}

Permutation unbarred_pattern(const BarredPattern& b) {
  return delete_positions(b.base(), b.barred_positions());
}

VincularPattern::VincularPattern(Permutation base, std::vector<int> bond_sites)
    : base_(std::move(base)), bonds_(sorted_unique(std::move(bond_sites))) {
  const int n = base_.size();
  for (int site : bonds_)
    if (site < 0 || site > n)
      throw std::out_of_range("bond site " + std::to_string(site) + " not in 0.." +
                              std::to_string(n));
}

bool VincularPattern::has_bond(int site) const {
  return std::binary_search(bonds_.begin(), bonds_.end(), site);
}

bool VincularPattern::is_proper() const {
  if (bonds_.empty())
    return false;
  for (int site = 1; site < size(); ++site)
    if (!has_bond(site))
      return true;
  return false;  // every inner site bonded
}

const Permutation& class_of(const Pattern& p) {
  return std::visit(
      [](const auto& x) -> const Permutation& {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Permutation>)
          return x;
        else
          return x.base();
      },
      p);
}


}  // namespace permpat
