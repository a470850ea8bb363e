#pragma once

#include <string>
#include <string_view>

#include "permpat/pattern.hpp"

namespace permpat {

// Canonical text forms.
//
// Compact form (all letters <= 9): letters are single digits, concatenated.
// Spaced form (any n): decimal numbers with single spaces between adjacent
// symbols; brackets hug their contents.
//
// A barred letter is followed by an apostrophe: 413'52.  Maximal runs of
// bonded sites print as one bracket, with '*' as the first symbol for a
// left anchor and as the last symbol for a right anchor: 3[14]2, 1[2*],
// [*12*], [21][3*].
std::string format_pattern(const Permutation& p);
std::string format_pattern(const BarredPattern& b);
std::string format_pattern(const VincularPattern& v);
std::string format_pattern(const Pattern& p);

// Parses either form. Throws std::invalid_argument on malformed input:
// nested or one-symbol brackets, misplaced stars or apostrophes, bars and
// bonds mixed in one pattern, duplicate letters, letters not covering 1..n.
Pattern parse_pattern(std::string_view text);

// Like parse_pattern but requires an undecorated permutation.
Permutation parse_permutation(std::string_view text);

}  // namespace permpat
