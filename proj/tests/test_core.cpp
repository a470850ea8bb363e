#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "permpat/permutation.hpp"
#include "permpat/text.hpp"
#include "support.hpp"

using namespace permpat;
using support::all_barred_patterns;
using support::all_permutations;
using support::all_vincular_patterns;
using support::barred;
using support::perm;
using support::vinc;

TEST_CASE("permutation validates its letters") {
  CHECK(Permutation({3, 1, 2}).size() == 3);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK(Permutation::identity(4) == perm("1234"));
}

TEST_CASE("normalize ranks distinct values") {
  CHECK(normalize(std::vector<int>{3, 1, 2}) == perm("312"));
  CHECK(normalize(std::vector<double>{2.24, -1.0, 0.0}) == perm("312"));
  CHECK(normalize(std::vector<int>{5, 2, 1, 3, 4}) == perm("52134"));
  CHECK_THROWS_AS(normalize(std::vector<int>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(normalize(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("normalize is idempotent and order-isomorphism invariant") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      CHECK(normalize(w.letters()) == w);
      std::vector<int> affine;
      std::vector<double> curved;
      for (int v : w.letters()) {
        affine.push_back(3 * v + 7);
        curved.push_back(1.0 - 1.0 / v);
      }
      CHECK(normalize(affine) == w);
      CHECK(normalize(curved) == w);
    }
  }
}

TEST_CASE("insert_at_site shifts ranks and places the new letter") {
  CHECK(insert_at_site(perm("3142"), 2, 3) == perm("41352"));
  CHECK(insert_at_site(perm("12"), 0, 3) == perm("312"));
  CHECK(insert_at_site(perm("1"), 1, 1) == perm("21"));
  CHECK_THROWS_AS(insert_at_site(perm("12"), 3, 1), std::out_of_range);
  CHECK_THROWS_AS(insert_at_site(perm("12"), -1, 1), std::out_of_range);
  CHECK_THROWS_AS(insert_at_site(perm("12"), 0, 4), std::out_of_range);
  CHECK_THROWS_AS(insert_at_site(perm("12"), 0, 0), std::out_of_range);
}

TEST_CASE("delete_positions renormalizes the survivors") {
  CHECK(delete_positions(perm("41352"), {3}) == perm("3142"));
  CHECK(delete_positions(perm("512346"), {2}) == perm("41235"));
  CHECK(delete_positions(perm("123"), {2}) == perm("12"));
  CHECK(delete_positions(perm("123"), {}) == perm("123"));
  CHECK_THROWS_AS(delete_positions(perm("12"), {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(delete_positions(perm("12"), {3}), std::out_of_range);
}

TEST_CASE("deletion undoes insertion") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : all_permutations(n))
      for (int site = 0; site <= n; ++site)
        for (int rank = 1; rank <= n + 1; ++rank)
          CHECK(delete_positions(insert_at_site(p, site, rank), {site + 1}) == p);
}

TEST_CASE("unbarred_pattern keeps the unbarred letters in order") {
  CHECK(unbarred_pattern(barred("32'41'")) == perm("12"));
  CHECK(unbarred_pattern(barred("413'52")) == perm("3142"));
  CHECK(unbarred_pattern(barred("12'3")) == perm("12"));
}

TEST_CASE("unbarred length plus bar count is the pattern length") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& b : all_barred_patterns(n))
      CHECK(unbarred_pattern(b).size() + b.bar_count() == b.size());
}

TEST_CASE("pattern types enforce their invariants") {
  CHECK_THROWS_AS(BarredPattern(perm("12"), {}), std::invalid_argument);
  CHECK_THROWS_AS(BarredPattern(perm("12"), {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(BarredPattern(perm("12"), {3}), std::out_of_range);
  CHECK_THROWS_AS(VincularPattern(perm("12"), {5}), std::out_of_range);
  CHECK(VincularPattern(perm("123"), {1}).is_proper());
  CHECK_FALSE(VincularPattern(perm("12"), {1}).is_proper());   // every inner site bonded
  CHECK_FALSE(VincularPattern(perm("123"), {}).is_proper());
  CHECK(VincularPattern(perm("12"), {0}).is_proper());
  CHECK_FALSE(VincularPattern(perm("123"), {0, 1, 2, 3}).is_proper());
}

TEST_CASE("parse recognizes the three kinds") {
  CHECK(parse_pattern("52134") == Pattern{perm("52134")});
  CHECK(parse_pattern("413'52") == Pattern{BarredPattern(perm("41352"), {3})});
  CHECK(parse_pattern("3[14]2") == Pattern{VincularPattern(perm("3142"), {2})});
  CHECK(parse_pattern("[*3][14]2") == Pattern{VincularPattern(perm("3142"), {0, 2})});
  CHECK(parse_pattern("1[2*]") == Pattern{VincularPattern(perm("12"), {2})});
  CHECK(parse_pattern("[*12*]") == Pattern{VincularPattern(perm("12"), {0, 1, 2})});
  CHECK(parse_pattern("[21][3*]") == Pattern{VincularPattern(perm("213"), {1, 3})});
  CHECK(parse_pattern("63 1' 7' 5 2 4") == Pattern{BarredPattern(perm("6317524"), {3, 4})});
  CHECK(parse_pattern("10 9 8 7 6 5 4 3 2 1") ==
        Pattern{Permutation({10, 9, 8, 7, 6, 5, 4, 3, 2, 1})});
  CHECK(parse_pattern("3 [14] 2") == parse_pattern("3[14]2"));
  CHECK(parse_pattern("4 1 3' 5 2") == parse_pattern("413'52"));
}

TEST_CASE("consecutive bonded sites share one bracket") {
  CHECK(format_pattern(VincularPattern(perm("12"), {0, 1})) == "[*12]");
  CHECK(format_pattern(VincularPattern(perm("123"), {1, 2})) == "[123]");
  CHECK(format_pattern(VincularPattern(perm("4312"), {0, 1, 2, 3, 4})) == "[*4312*]");
  CHECK(format_pattern(VincularPattern(perm("213"), {1, 3})) == "[21][3*]");
}

TEST_CASE("format emits the spaced form above nine letters") {
  Permutation big({10, 1, 3, 5, 2, 4, 6, 7, 8, 9});
  CHECK(format_pattern(big) == "10 1 3 5 2 4 6 7 8 9");
  CHECK(format_pattern(BarredPattern(big, {1, 5})) == "10' 1 3 5 2' 4 6 7 8 9");
  CHECK(format_pattern(VincularPattern(big, {0, 3, 4, 10})) == "[* 10] 1 [3 5 2] 4 6 7 8 [9 *]");
  for (const char* text :
       {"10 1 3 5 2 4 6 7 8 9", "10' 1 3 5 2' 4 6 7 8 9", "[* 10] 1 [3 5 2] 4 6 7 8 [9 *]"})
    CHECK(format_pattern(parse_pattern(text)) == text);
}

TEST_CASE("parse inverts format on every small pattern") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : all_permutations(n)) {
      CHECK(parse_pattern(format_pattern(p)) == Pattern{p});
    }
  }
  for (int n = 2; n <= 5; ++n) {
    for (const auto& b : all_barred_patterns(n)) {
      CHECK(parse_pattern(format_pattern(b)) == Pattern{b});
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (const auto& v : all_vincular_patterns(n)) {
      CHECK(parse_pattern(format_pattern(v)) == Pattern{v});
    }
  }
}

TEST_CASE("parse rejects malformed text") {
  const char* bad[] = {
      "",            // empty
      "112",         // duplicate letter
      "13",          // letters must cover 1..n
      "103",         // letter 0
      "1'",          // every letter barred
      "[1]",         // one-symbol bracket
      "[*]",         // star-only bracket
      "[*]12",       // star-only bracket mid-text
      "3[1[4]]2",    // nested brackets
      "3[14]2'",     // bars and bonds mixed
      "3[1'4]2",     // bar inside a bracket
      "3[14*]2",     // right anchor not at the end
      "3[*14]2",     // left anchor not at the start
      "3[1*4]2",     // star inside a run
      "*312",        // star outside brackets
      "312*",        // star outside brackets
      "3142]",       // stray close
      "[3142",       // unclosed bracket
      "31'42''",     // double apostrophe
      "'312",        // leading apostrophe
      "1  2",        // double space
      " 12",         // leading space
      "1 2 ",        // trailing space
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_pattern(text), std::invalid_argument);
  }
}

TEST_CASE("parse_permutation rejects decorated patterns") {
  CHECK(parse_permutation("41532") == perm("41532"));
  CHECK_THROWS_AS(parse_permutation("413'52"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("3[14]2"), std::invalid_argument);
}

TEST_CASE("class_of strips the decorations") {
  CHECK(class_of(parse_pattern("413'52")) == perm("41352"));
  CHECK(class_of(parse_pattern("3[14]2")) == perm("3142"));
  CHECK(class_of(parse_pattern("52134")) == perm("52134"));
}

TEST_CASE("random symbol soup either parses or throws, never worse") {
  const std::string alphabet = "0123456789[]*' ";
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 14);
  int parsed = 0;
  for (int round = 0; round < 20000; ++round) {
    std::string text;
    const int n = len(rng);
    for (int i = 0; i < n; ++i)
      text += alphabet[pick(rng)];
    try {
      const Pattern p = parse_pattern(text);
      ++parsed;
      CHECK(parse_pattern(format_pattern(p)) == p);  // canonical round trip
    } catch (const std::invalid_argument&) {
    }
  }
  CHECK(parsed > 0);  // the soup occasionally forms a real pattern
}
