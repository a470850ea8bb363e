#include "permpat/text.hpp"

#include <cctype>
#include <stdexcept>

namespace permpat {

namespace {

struct Atom {
  std::string text;
  bool open_before = false;
  bool close_after = false;
};

std::string join_atoms(const std::vector<Atom>& atoms, bool compact) {
  std::string out;
  bool first = true;
  for (const Atom& a : atoms) {
    if (!first && !compact)
      out += ' ';
    if (a.open_before)
      out += '[';
    out += a.text;
    if (a.close_after)
      out += ']';
    first = false;
  }
  return out;
}

// Maximal runs of consecutive bonded sites, as inclusive slot intervals.
// Slot 0 is the left anchor, slot i the letter at position i, slot n+1 the
// right anchor; a site run s..t spans slots s..t+1.
std::vector<std::pair<int, int>> slot_runs(const std::vector<int>& bonds) {
  std::vector<std::pair<int, int>> runs;
  for (size_t i = 0; i < bonds.size();) {
    size_t j = i;
    while (j + 1 < bonds.size() && bonds[j + 1] == bonds[j] + 1)
      ++j;
    runs.emplace_back(bonds[i], bonds[j] + 1);
    i = j + 1;
  }
  return runs;
}

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("pattern text: " + what);
}

}  // namespace

std::string format_pattern(const Permutation& p) {
  const bool compact = p.size() <= 9;
  std::vector<Atom> atoms;
  for (int v : p.letters())
    atoms.push_back({std::to_string(v)});
  return join_atoms(atoms, compact);
}

std::string format_pattern(const BarredPattern& b) {
  const bool compact = b.size() <= 9;
  std::vector<Atom> atoms;
  for (int pos = 1; pos <= b.size(); ++pos) {
    std::string t = std::to_string(b.base().value_at(pos));
    if (b.is_barred(pos))
      t += '\'';
    atoms.push_back({std::move(t)});
  }
  return join_atoms(atoms, compact);
}

std::string format_pattern(const VincularPattern& v) {
  const int n = v.size();
  const bool compact = n <= 9;
  const auto runs = slot_runs(v.bond_sites());
  std::vector<Atom> atoms;
  size_t r = 0;
  for (int slot = 0; slot <= n + 1; ++slot) {
    const bool star = slot == 0 || slot == n + 1;
    const bool in_run = r < runs.size() && runs[r].first <= slot && slot <= runs[r].second;
    if (star && !in_run)
      continue;  // unbonded anchors do not print
    Atom a;
    a.text = star ? "*" : std::to_string(v.base().value_at(slot));
    a.open_before = in_run && runs[r].first == slot;
    a.close_after = in_run && runs[r].second == slot;
    atoms.push_back(std::move(a));
    if (in_run && runs[r].second == slot)
      ++r;
  }
  return join_atoms(atoms, compact);
}

std::string format_pattern(const Pattern& p) {
  return std::visit([](const auto& x) { return format_pattern(x); }, p);
}

namespace {

struct ParsedAtom {
  bool star = false;
  int number = 0;
  bool barred = false;
  bool open_before = false;
  bool close_after = false;
};

struct ParsedBracket {
  bool left_star = false;
  bool right_star = false;
  int first_letter = 0;  // 1-based letter positions covered
  int last_letter = 0;
};

}  // namespace

namespace {

// split_digits: every digit is its own letter and single spaces between
// symbols are optional (the compact form, mixed spellings allowed).
// Otherwise numbers are maximal digit runs and single spaces between
// adjacent symbols are mandatory (the spaced form, needed above 9 letters).
Pattern parse_impl(std::string_view text, bool split_digits) {
  if (text.empty())
    fail("empty input");

  std::vector<ParsedAtom> atoms;
  std::vector<ParsedBracket> brackets;
  size_t i = 0;
  bool in_bracket = false;
  ParsedBracket current;
  int atoms_in_bracket = 0;
  int letter_count = 0;

  while (i < text.size()) {
    ParsedAtom atom;
    if (text[i] == '[') {
      if (in_bracket)
        fail("nested bracket");
      in_bracket = true;
      current = ParsedBracket{};
      atoms_in_bracket = 0;
      atom.open_before = true;
      ++i;
      if (i >= text.size())
        fail("unclosed bracket");
    }
    if (text[i] == '*') {
      atom.star = true;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      size_t j = i;
      if (split_digits) {
        ++j;
      } else {
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
          ++j;
      }
      try {
        atom.number = std::stoi(std::string(text.substr(i, j - i)));
      } catch (const std::out_of_range&) {
        fail("letter value out of range");
      }
      if (atom.number < 1)
        fail("letter 0 is not allowed");
      i = j;
      if (i < text.size() && text[i] == '\'') {
        atom.barred = true;
        ++i;
      }
    } else {
      fail(std::string("unexpected character '") + text[i] + "'");
    }

    if (in_bracket) {
      ++atoms_in_bracket;
      if (atom.star) {
        if (atoms_in_bracket == 1)
          current.left_star = true;
        else
          current.right_star = true;  // position validated below
      } else {
        if (current.first_letter == 0)
          current.first_letter = letter_count + 1;
        current.last_letter = letter_count + 1;
      }
    }
    if (!atom.star)
      ++letter_count;

    if (i < text.size() && text[i] == ']') {
      if (!in_bracket)
        fail("']' without matching '['");
      if (atoms_in_bracket < 2)
        fail("bracket needs at least two symbols");
      atom.close_after = true;
      in_bracket = false;
      brackets.push_back(current);
      ++i;
    }
    atoms.push_back(atom);

    if (i < text.size()) {
      if (!split_digits && text[i] != ' ')
        fail("expected a single space between symbols");
      if (text[i] == ' ') {
        ++i;
        if (i >= text.size())
          fail("trailing space");
        if (text[i] == ' ')
          fail("double space");
        if (text[i] == ']' || text[i] == '\'')
          fail(std::string("misplaced '") + text[i] + "'");
      }
    }
  }
  if (in_bracket)
    fail("unclosed bracket");
  if (letter_count == 0)
    fail("no letters");

  // Stars may only anchor the ends of the text.
  for (size_t k = 0; k < atoms.size(); ++k) {
    if (!atoms[k].star)
      continue;
    const bool left_ok = k == 0 && atoms[k].open_before;
    const bool right_ok = k + 1 == atoms.size() && atoms[k].close_after;
    if (!left_ok && !right_ok)
      fail("misplaced '*'");
  }

  std::vector<int> letters;
  std::vector<int> barred_positions;
  letters.reserve(static_cast<size_t>(letter_count));
  int pos = 0;
  bool any_bar = false;
  for (const ParsedAtom& a : atoms) {
    if (a.star)
      continue;
    ++pos;
    letters.push_back(a.number);
    if (a.barred) {
      any_bar = true;
      barred_positions.push_back(pos);
    }
  }
  if (any_bar && !brackets.empty())
    fail("bars and bonds cannot mix in one pattern");

  Permutation base{std::vector<int>(letters)};
  const int n = base.size();

  if (!brackets.empty()) {
    std::vector<int> bonds;
    for (const ParsedBracket& br : brackets) {
      if (br.first_letter == 0) {
        // star-only bracket; the position checks above leave only "[**]",
        // which has no letters and was rejected already
        fail("bracket without letters");
      }
      if (br.left_star)
        bonds.push_back(0);
      for (int s = br.first_letter; s < br.last_letter; ++s)
        bonds.push_back(s);
      if (br.right_star)
        bonds.push_back(n);
    }
    return VincularPattern(std::move(base), std::move(bonds));
  }
  if (any_bar)
    return BarredPattern(std::move(base), std::move(barred_positions));
  return base;
}

}  // namespace

Pattern parse_pattern(std::string_view text) {
  if (text.find(' ') == std::string_view::npos)
    return parse_impl(text, /*split_digits=*/true);
  // Try the spaced reading with multi-digit numbers first; fall back to
  // single-digit letters with optional spaces. The readings never conflict:
  // a valid multi-digit pattern has a letter 10, whose digit-split has a 0.
  try {
    return parse_impl(text, /*split_digits=*/false);
  } catch (const std::invalid_argument& spaced_error) {
    try {
      return parse_impl(text, /*split_digits=*/true);
    } catch (const std::invalid_argument&) {
      throw spaced_error;
    }
  }
}

Permutation parse_permutation(std::string_view text) {
  Pattern p = parse_pattern(text);
  if (auto* perm = std::get_if<Permutation>(&p))
    return std::move(*perm);
  throw std::invalid_argument("pattern text: expected an undecorated permutation");
}

}  // namespace permpat
