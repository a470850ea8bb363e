#pragma once

#include <set>

#include "permpat/pattern.hpp"

namespace permpat {

// A maximal barred factor of a pattern together with its flanking unbarred
// letters, as value sets. A flank missing at a pattern boundary is simply
// absent from U; a proper barred pattern has at least one flank.
struct Boycott {
  std::vector<int> values;    // X = U u B, sorted
  std::vector<int> unbarred;  // U(X): the flank values, at most two
  std::vector<int> barred;    // B(X): the barred factor's values

  auto operator<=>(const Boycott&) const = default;
};

// The boycotts of b, left to right by factor position.
std::vector<Boycott> boycotts(const BarredPattern& b);

// Vincular patterns obtained from b by deleting a nonempty subset of its
// barred letters and bonding across each deletion gap. A gap touching the
// front (back) of the pattern becomes a left (right) anchor bond. Barred
// letters outside the chosen subset survive as plain letters.
std::set<VincularPattern> bond_set(const BarredPattern& b);

// Barred patterns obtained from v by breaking one bond with an inserted
// barred letter whose presence defeats containment of v; every other bond
// is dropped. Insertion at an anchor bond lands outside the pattern.
// Requires at least one bond.
std::set<BarredPattern> bar_set(const VincularPattern& v);

}  // namespace permpat
