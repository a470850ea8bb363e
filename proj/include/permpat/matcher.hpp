#pragma once

#include <optional>
#include <vector>

#include "permpat/pattern.hpp"

namespace permpat {

// Positions (1-based, strictly increasing) of a pattern occurrence in a host.
using Occurrence = std::vector<int>;

// How "part of an occurrence of the full pattern" is read when matching a
// barred pattern:
//   subset — the unbarred occurrence's position set is contained in the
//            position set of some full-pattern occurrence (default);
//   role   — some full-pattern occurrence restricted to the unbarred slots
//            equals the unbarred occurrence exactly.
// The two modes differ, e.g. 123 avoids 12'3 under subset but not role.
enum class BarredSemantics { subset, role };

// All index subsequences of w order-isomorphic to p, in lexicographic order
// of position tuples.
std::vector<Occurrence> classical_occurrences(const Permutation& w, const Permutation& p);
bool contains_classical(const Permutation& w, const Permutation& p);

// Occurrences of class(v) whose bonded sites land on consecutive host
// positions; a bonded site 0 (resp. n) pins the first (last) letter to the
// first (last) position of w.
std::vector<Occurrence> vincular_occurrences(const Permutation& w, const VincularPattern& v);
bool contains_vincular(const Permutation& w, const VincularPattern& v);

// Lexicographically least occurrence of the unbarred portion of b that no
// full-pattern occurrence covers, if any. w contains b iff such a witness
// exists.
std::optional<Occurrence> barred_witness(const Permutation& w, const BarredPattern& b,
                                         BarredSemantics semantics = BarredSemantics::subset);
bool contains_barred(const Permutation& w, const BarredPattern& b,
                     BarredSemantics semantics = BarredSemantics::subset);

bool contains_pattern(const Permutation& w, const Pattern& p,
                      BarredSemantics semantics = BarredSemantics::subset);

// Simultaneous avoidance of every pattern in the set; true for an empty set.
bool avoids_all(const Permutation& w, const std::vector<Pattern>& patterns,
                BarredSemantics semantics = BarredSemantics::subset);

}  // namespace permpat
