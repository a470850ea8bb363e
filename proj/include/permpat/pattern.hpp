#pragma once

#include <variant>
#include <vector>

#include "permpat/permutation.hpp"

namespace permpat {

// A permutation with bars over a nonempty proper subset of its positions.
// Containment of a barred pattern is defined in matcher.hpp.
class BarredPattern {
public:
  BarredPattern(Permutation base, std::vector<int> barred_positions);

  const Permutation& base() const { return base_; }
  const std::vector<int>& barred_positions() const { return barred_; }  // sorted, 1-based
  bool is_barred(int pos) const;
  int bar_count() const { return static_cast<int>(barred_.size()); }
  int size() const { return base_.size(); }

  // Positions of the unbarred letters, in order.
  std::vector<int> unbarred_positions() const;

  auto operator<=>(const BarredPattern&) const = default;

private:
  Permutation base_;
  std::vector<int> barred_;
};

// The unbarred letters in their original order, renormalized.
Permutation unbarred_pattern(const BarredPattern& b);

// A permutation with bonds at a subset of its n+1 sites. Site i lies between
// letter i and letter i+1; site 0 anchors the first letter to the front of
// the host and site n anchors the last letter to the back.
class VincularPattern {
public:
  explicit VincularPattern(Permutation base, std::vector<int> bond_sites = {});

  const Permutation& base() const { return base_; }
  const std::vector<int>& bond_sites() const { return bonds_; }  // sorted, in 0..n
  bool has_bond(int site) const;
  int size() const { return base_.size(); }

  bool is_vincular() const { return !bonds_.empty(); }

  // At least one bond, and the inner sites 1..n-1 are not all bonded.
  // Fully bonded patterns are representable; properness is a predicate only.
  bool is_proper() const;

  auto operator<=>(const VincularPattern&) const = default;

private:
  Permutation base_;
  std::vector<int> bonds_;
};

// Any pattern kind accepted by the matcher.
using Pattern = std::variant<Permutation, BarredPattern, VincularPattern>;

// The underlying classical permutation, decorations stripped.
const Permutation& class_of(const Pattern& p);


}  // namespace permpat
