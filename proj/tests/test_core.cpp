#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "wreath/core.hpp"

using namespace wreath;

namespace {

ColoredPermutation element(std::vector<int> sigma, std::vector<int> colors, int k) {
  return {Permutation(std::move(sigma)), ColorWord(std::move(colors), k)};
}

}  // namespace

TEST_CASE("reduction of sequences and words") {
  CHECK(reduce_permutation(std::vector<int>{2, 7, 5, 4}) == Permutation({1, 4, 3, 2}));
  CHECK(reduce_permutation(std::vector<int>{}) == Permutation());
  CHECK(reduce_permutation(std::vector<int>{3, 1, 2}) == Permutation({3, 1, 2}));

  CHECK(reduce_word(std::vector<int>{2, 7, 2, 4, 7}).letters() == std::vector<int>{0, 2, 0, 1, 2});
  CHECK(reduce_word(std::vector<int>{5, 5, 5}).letters() == std::vector<int>{0, 0, 0});
  CHECK(reduce_word(std::vector<int>{}).size() == 0);
  CHECK(reduce_word(std::vector<int>{1, 0, 3}).k() == 3);
}

TEST_CASE("element and word validation") {
  CHECK_THROWS(Permutation({1, 3}));
  CHECK_THROWS(Permutation({1, 1, 2}));
  CHECK_THROWS(ColorWord({0, 2}, 2));
  CHECK_THROWS(ColorWord({0}, 0));
  CHECK_THROWS(ColoredPermutation(Permutation({1, 2}), ColorWord({0}, 2)));
  CHECK(ColorWord({}, 3).k() == 3);
}

TEST_CASE("pattern text round trips and validation") {
  for (const char* text : {"1-2/0,1", "12/0,0", "1-23/0,1,1", "2-1-3/1,0,2"}) {
    ColoredPattern p = parse_pattern(text, Mode::exact);
    CHECK(to_text(p) == text);
  }
  ColoredPattern adjacent = parse_pattern("12/0,0", Mode::reduced);
  CHECK(adjacent.all_adjacent());
  CHECK(adjacent.gaps() == std::vector<Gap>{Gap::adjacent});
  ColoredPattern mixed = parse_pattern("1-23/0,1,1", Mode::exact);
  CHECK(mixed.gaps() == std::vector<Gap>{Gap::dash, Gap::adjacent});
  CHECK_FALSE(mixed.all_adjacent());

  // The color word of a reduced pattern must be its own reduction.
  CHECK_THROWS(parse_pattern("1-2/1,1", Mode::reduced));
  CHECK_NOTHROW(parse_pattern("1-2/1,1", Mode::exact));
  CHECK_THROWS(parse_pattern("1-3/0,0", Mode::reduced));
  CHECK_THROWS(parse_pattern("1-2/0", Mode::reduced));
  CHECK_THROWS(parse_pattern("", Mode::reduced));

  PatternSet s = parse_pattern_set("1-2/0,0;1-2/0,1", Mode::reduced);
  CHECK(s.size() == 2);
  CHECK(to_text(s) == "1-2/0,0;1-2/0,1");
  CHECK_NOTHROW(parse_pattern_set("1-2-3/0,0,0;1-2/1,0", Mode::reduced));
  CHECK_THROWS(parse_pattern_set("", Mode::reduced));
}

TEST_CASE("pattern sets require one shared mode") {
  std::vector<ColoredPattern> mixed_modes;
  mixed_modes.push_back(parse_pattern("1-2/0,0", Mode::reduced));
  mixed_modes.push_back(parse_pattern("1-2/0,1", Mode::exact));
  CHECK_THROWS(PatternSet(std::move(mixed_modes)));
}

TEST_CASE("occurrences in the worked four-letter example") {
  ColoredPermutation g = element({1, 3, 2, 4}, {1, 2, 2, 2}, 3);

  ColoredPattern adjacent = parse_pattern("12/0,0", Mode::reduced);
  CHECK(occurrences(adjacent, g) == std::vector<std::vector<int>>{{3, 4}});
  CHECK(count_matches(adjacent, g) == 1);

  ColoredPattern dashed = parse_pattern("1-2/0,0", Mode::reduced);
  CHECK(occurrences(dashed, g) == std::vector<std::vector<int>>{{2, 4}, {3, 4}});
  CHECK(count_occurrences(dashed, g) == 2);
  CHECK(contains(dashed, g));

  CHECK(count_occurrences(parse_pattern("1-2/0,1", Mode::reduced), g) == 3);
  CHECK(occurrences(parse_pattern("1-2/1,2", Mode::exact), g) ==
        std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}});
  CHECK(occurrences(parse_pattern("1-2/2,2", Mode::exact), g) ==
        std::vector<std::vector<int>>{{2, 4}, {3, 4}});

  CHECK(avoids(parse_pattern_set("1-2-3/0,0,0", Mode::reduced), g));
  CHECK_FALSE(avoids(parse_pattern_set("1-2-3/0,0,0;1-2/0,0", Mode::reduced), g));
}

TEST_CASE("exact and reduced color matching differ") {
  ColoredPermutation g = element({1, 2}, {1, 1}, 2);
  ColoredPattern exact = parse_pattern("1-2/0,0", Mode::exact);
  ColoredPattern red = parse_pattern("1-2/0,0", Mode::reduced);
  CHECK_FALSE(contains(exact, g));  // letters are 1, not 0
  CHECK(contains(red, g));          // equal letters reduce to 0 0
}

TEST_CASE("matches require adjacent positions") {
  ColoredPermutation g = element({2, 1, 3}, {0, 0, 0}, 1);
  ColoredPattern dashed = parse_pattern("1-2/0,0", Mode::reduced);
  ColoredPattern adjacent = parse_pattern("12/0,0", Mode::reduced);
  CHECK(count_occurrences(dashed, g) == 2);   // (1,3) and (2,3)
  CHECK(count_matches(adjacent, g) == 1);     // only (2,3)
  CHECK_THROWS(count_matches(dashed, g));     // gaps present
}

TEST_CASE("adjacency flags bind single gaps") {
  // 1 4 2 3 with pattern 1-23: the 2,3 rise must be adjacent, the front free.
  ColoredPermutation g = element({1, 4, 2, 3}, {0, 0, 0, 0}, 1);
  CHECK(occurrences(parse_pattern("1-23/0,0,0", Mode::reduced), g) ==
        std::vector<std::vector<int>>{{1, 3, 4}});
  CHECK(occurrences(parse_pattern("1-2-3/0,0,0", Mode::reduced), g) ==
        std::vector<std::vector<int>>{{1, 3, 4}});
  CHECK(occurrences(parse_pattern("12-3/0,0,0", Mode::reduced), g).empty());
}

TEST_CASE("reverse and complement act componentwise") {
  ColoredPermutation g = element({1, 3, 2}, {0, 1, 2}, 3);
  CHECK(apply_phi(PhiMap::reverse, PhiMap::reverse, g) == element({2, 3, 1}, {2, 1, 0}, 3));
  CHECK(apply_phi(PhiMap::complement, PhiMap::complement, g) == element({3, 1, 2}, {2, 1, 0}, 3));
  CHECK(apply_phi(PhiMap::reverse, PhiMap::complement, g) == element({2, 3, 1}, {2, 1, 0}, 3));
  CHECK(reverse(g) == element({2, 3, 1}, {2, 1, 0}, 3));
  CHECK(complement(g) == element({3, 1, 2}, {2, 1, 0}, 3));
}

TEST_CASE("pattern transport under the symmetry maps") {
  ColoredPattern p = parse_pattern("1-2/0,1", Mode::reduced);
  CHECK(to_text(apply_phi(PhiMap::reverse, PhiMap::reverse, p, 2)) == "2-1/1,0");
  CHECK(to_text(apply_phi(PhiMap::complement, PhiMap::complement, p, 2)) == "2-1/1,0");
  CHECK(to_text(apply_phi(PhiMap::complement, PhiMap::complement, p, 5)) == "2-1/1,0");

  ColoredPattern q = parse_pattern("12-3/0,1,1", Mode::exact);
  ColoredPattern qr = apply_phi(PhiMap::reverse, PhiMap::reverse, q, 2);
  CHECK(to_text(qr) == "3-21/1,1,0");
  CHECK(qr.gaps() == std::vector<Gap>{Gap::dash, Gap::adjacent});

  // Exact colors complement letterwise over the ambient alphabet.
  CHECK(to_text(apply_phi(PhiMap::reverse, PhiMap::complement, q, 3)) == "3-21/2,1,1");
  CHECK_THROWS(apply_phi(PhiMap::reverse, PhiMap::complement, q, 1));
}

TEST_CASE("colored permutation text round trip") {
  ColoredPermutation g = element({1, 3, 2, 4}, {1, 2, 2, 2}, 3);
  CHECK(to_text(g) == "sigma=1,3,2,4 colors=1,2,2,2 k=3");
  CHECK(parse_colored_permutation(to_text(g)) == g);
  CHECK(parse_colored_permutation("sigma= colors= k=2") == element({}, {}, 2));
  CHECK_THROWS(parse_colored_permutation("sigma=1,2 colors=0,2 k=2"));
  CHECK_THROWS(parse_colored_permutation("sigma=1,2 colors=0 k=2"));
  CHECK_THROWS(parse_colored_permutation("sigma=1,2 colors=0,0"));
}

TEST_CASE("span entry points agree with object entry points") {
  ColoredPermutation g = element({2, 4, 1, 3}, {1, 0, 1, 1}, 2);
  std::span<const int> sigma(g.perm.entries()), colors(g.colors.letters());
  for (const char* text : {"1-2/0,1", "1-2/0,0", "2-1/1,0"}) {
    ColoredPattern p = parse_pattern(text, Mode::reduced);
    CHECK(contains(p, g) == contains(p, sigma, colors));
    CHECK(count_occurrences(p, g) == count_occurrences(p, sigma, colors));
  }
  PatternSet s = parse_pattern_set("1-2/0,0;1-2/0,1", Mode::reduced);
  CHECK(avoids(s, g) == avoids(s, sigma, colors));
}
