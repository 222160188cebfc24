#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "wreath/closed_forms.hpp"
#include "wreath/core.hpp"
#include "wreath/enumeration.hpp"

using namespace wreath;

namespace {

ColoredPermutation element(std::vector<int> sigma, std::vector<int> colors, int k) {
  return {Permutation(std::move(sigma)), ColorWord(std::move(colors), k)};
}

const PatternSet kCat = parse_pattern_set("1-2/0,0;1-2/0,1", Mode::reduced);

}  // namespace

TEST_CASE("wreath size and budget guard") {
  CHECK(wreath_size(0, 5) == 1);
  CHECK(wreath_size(3, 2) == 48);
  CHECK(wreath_size(4, 3) == 1944);

  CHECK_NOTHROW(require_budget({3, 2, 48}));
  CHECK_THROWS_AS(require_budget({3, 2, 47}), BudgetExceeded);
  try {
    count_avoiders({20, 2, 1000}, kCat);
    FAIL("budget guard did not fire");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == wreath_size(20, 2));
    CHECK(std::string(e.what()).find("budget") != std::string::npos);
  }
}

TEST_CASE("lexicographic element stream") {
  ElementStream stream({2, 2, kDefaultBudget});
  std::vector<ColoredPermutation> all;
  while (auto g = stream.next()) all.push_back(*g);
  CHECK(all.size() == 8);
  CHECK(all.front() == element({1, 2}, {0, 0}, 2));
  CHECK(all[1] == element({1, 2}, {0, 1}, 2));
  CHECK(all[3] == element({1, 2}, {1, 1}, 2));
  CHECK(all[4] == element({2, 1}, {0, 0}, 2));
  CHECK(all.back() == element({2, 1}, {1, 1}, 2));

  CHECK(generate_all({3, 3, kDefaultBudget}).size() == 162);
}

TEST_CASE("the empty group has one element that keeps its alphabet") {
  ElementStream stream({0, 2, kDefaultBudget});
  auto g = stream.next();
  REQUIRE(g.has_value());
  CHECK(g->size() == 0);
  CHECK(g->k() == 2);
  CHECK_FALSE(stream.next().has_value());

  auto avoiders = collect_avoiders({0, 3, kDefaultBudget}, kCat);
  REQUIRE(avoiders.size() == 1);
  CHECK(avoiders.front().k() == 3);
}

TEST_CASE("avoider counts match frozen values") {
  CHECK(count_avoiders({3, 2, kDefaultBudget}, kCat) == 14);
  CHECK(count_avoiders({4, 2, kDefaultBudget}, kCat) == 42);
  CHECK(count_avoiders({2, 2, kDefaultBudget},
                       parse_pattern_set("1-2/0,0", Mode::reduced)) == 6);
  CHECK(count_avoiders({3, 2, kDefaultBudget},
                       parse_pattern_set("1-2/0,1", Mode::reduced)) == 34);
  CHECK(count_avoiders({0, 2, kDefaultBudget}, kCat) == 1);
}

TEST_CASE("occurrence distribution of the equal-color rise") {
  CountTable table = distribution({2, 2, kDefaultBudget}, parse_pattern("1-2/0,0", Mode::reduced));
  REQUIRE(table.counts.size() == 2);
  CHECK(table.counts.at(0) == 6);
  CHECK(table.counts.at(1) == 2);
  CHECK(table.total() == 8);
}

TEST_CASE("sequence stops at the budget and reports where") {
  PatternSet s = parse_pattern_set("1-2/0,1", Mode::reduced);
  SequenceResult seq = sequence(2, s, 10, 50'000);
  REQUIRE(seq.values.size() == 6);  // 2^7 * 7! > 50000
  CHECK(seq.values == AvSequence{2, 7, 34, 209, 1546, 13327});
  REQUIRE(seq.truncated_at.has_value());
  CHECK(*seq.truncated_at == 7);

  SequenceResult full = sequence(2, s, 4, kDefaultBudget);
  CHECK_FALSE(full.truncated_at.has_value());
  CHECK(full.values == AvSequence{2, 7, 34, 209});
}

TEST_CASE("parallel scans reproduce the serial reference") {
  for (auto [n, k] : {std::pair{4, 2}, std::pair{3, 3}, std::pair{5, 2}}) {
    EnumSpec spec{n, k, kDefaultBudget};
    CHECK(count_avoiders(spec, kCat) == count_avoiders_serial(spec, kCat));
    ColoredPattern p = parse_pattern("1-2/0,0", Mode::reduced);
    CHECK(distribution(spec, p).counts == distribution_serial(spec, p).counts);
  }
}

TEST_CASE("collected avoiders are the filtered lexicographic stream") {
  auto avoiders = collect_avoiders({2, 2, kDefaultBudget}, kCat);
  const std::vector<ColoredPermutation> expected = {
      element({1, 2}, {1, 0}, 2), element({2, 1}, {0, 0}, 2), element({2, 1}, {0, 1}, 2),
      element({2, 1}, {1, 0}, 2), element({2, 1}, {1, 1}, 2)};
  CHECK(avoiders == expected);

  EnumSpec spec{4, 2, kDefaultBudget};
  std::vector<ColoredPermutation> streamed;
  ElementStream stream(spec);
  while (auto g = stream.next())
    if (avoids(kCat, *g)) streamed.push_back(*g);
  CHECK(collect_avoiders(spec, kCat) == streamed);
  CHECK(streamed.size() == 42);
}
