#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "wreath/closed_forms.hpp"

using namespace wreath;

TEST_CASE("combinatorial helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  const std::vector<int> parts{2, 1, 0};
  CHECK(multinomial(3, parts) == 3);
  const std::vector<int> bad{2, 2};
  CHECK_THROWS(multinomial(3, bad));
  CHECK(falling(4, 2) == 12);
  CHECK(falling(4, 0) == 1);
  CHECK(falling(2, 3) == 0);

  const AvSequence catalans{1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int i = 0; i < static_cast<int>(catalans.size()); ++i)
    CHECK(catalan_number(i) == catalans[i]);
  const AvSequence fib{1, 1, 2, 3, 5, 8, 13, 21, 34};
  for (int i = 1; i <= static_cast<int>(fib.size()); ++i)
    CHECK(fibonacci_number(i) == fib[i - 1]);
}

TEST_CASE("mahonian coefficients") {
  CHECK(mahonian(0, 0) == 1);
  CHECK(mahonian(3, 1) == 2);
  CHECK(mahonian(4, 2) == 5);
  CHECK(mahonian(3, 4) == 0);
  auto table = mahonian_table(4);
  REQUIRE(table.size() == 5);
  CHECK(table[3] == std::vector<BigInt>{1, 2, 2, 1});
  CHECK(table[4] == std::vector<BigInt>{1, 3, 5, 6, 5, 3, 1});
}

TEST_CASE("squared multinomial sums") {
  CHECK(multinomial_sq_sum(2, 2) == 6);
  CHECK(multinomial_sq_sum(3, 3) == 93);
  CHECK(multinomial_sq_sum(0, 4) == 1);
  CHECK(multinomial_sq_sum(5, 1) == 1);

  AvSequence ones(4, 1);
  CHECK(weighted_multinomial_sq_sum(3, 2, ones) == multinomial_sq_sum(3, 2));
  CHECK(catalan_multinomial_sq_sum(2, 2) == 8);
  CHECK(catalan_multinomial_sq_sum(0, 3) == 1);
}

TEST_CASE("distribution transport sums") {
  auto stat = mahonian_table(2);
  CHECK(occurrence_distribution_sum(2, 2, 0, stat) == 6);
  CHECK(occurrence_distribution_sum(2, 2, 1, stat) == 2);
  CHECK(occurrence_distribution_sum(2, 2, 2, stat) == 0);
}

TEST_CASE("partial permutation sum") {
  const AvSequence expected{1, 2, 7, 34, 209, 1546, 13327, 130922, 1441729};
  for (int n = 0; n < static_cast<int>(expected.size()); ++n)
    CHECK(factorial_binomial_sq_sum(n) == expected[n]);
}

TEST_CASE("color-word class counts") {
  CHECK(signs_closed_form(1, 2, 2) == 4);    // distinct colors
  CHECK(signs_closed_form(1, 2, 3) == 12);
  CHECK(signs_closed_form(1, 3, 2) == 0);
  CHECK(signs_closed_form(2, 2, 2) == 6);    // weakly increasing
  CHECK(signs_closed_form(3, 2, 2) == 2);    // strictly increasing
  CHECK(signs_closed_form(4, 2, 2) == 4);    // constant
  CHECK_THROWS(signs_closed_form(5, 2, 2));
}

TEST_CASE("power-series coefficient rule") {
  AvSequence ones(4, 1), cats{1, 1, 2, 5};
  CHECK(egf_power_sum(3, 2, ones) == 8);
  CHECK(egf_power_sum(2, 2, cats) == 6);
  CHECK(egf_power_sum(0, 3, ones) == 1);
}

TEST_CASE("scaled counts") {
  CHECK(gamma_closed_form(1, 3, 5, 2) == 10);
  CHECK(gamma_closed_form(2, 2, 3, 1) == 3);
  CHECK(gamma_closed_form(3, 2, 2, 2) == 4);
  CHECK_THROWS(gamma_closed_form(4, 2, 2, 1));
}

TEST_CASE("composition sums") {
  CHECK(composition_factorial_sum(2, 2) == 5);
  CHECK(composition_factorial_sum(3, 2) == 16);
  CHECK(composition_factorial_sum(4, 1) == 24);
  CHECK(weak_composition_count(3, 2) == 4);
  CHECK(weak_composition_count(2, 3) == 6);
}

TEST_CASE("falling-factorial family agrees with its recursion") {
  CHECK(falling_factorial_sum(4, 2) == 8);
  CHECK(falling_factorial_sum(2, 3) == 9);
  CHECK(falling_factorial_sum(6, 1) == 1);
  CHECK(falling_factorial_sum(3, 4) == 52);
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= 8; ++k)
      CHECK(falling_factorial_sum(n, k) == falling_factorial_sum_by_recursion(n, k));
}

TEST_CASE("single exact pattern sum") {
  CHECK(single_pattern_exact_sum(3, 2) == 34);
  CHECK(single_pattern_exact_sum(2, 3) == 17);
  CHECK(single_pattern_exact_sum(0, 2) == 1);
  CHECK(single_pattern_exact_sum(2, 1) == 1);
}

TEST_CASE("exact triples over two colors") {
  CHECK(exact_triple_count(1, 3) == 13);   // F_7
  CHECK(exact_triple_count(2, 3) == 16);   // 3! (1 + 1/3 + 1/3 + 1)
  CHECK(exact_triple_count(3, 3) == 17);   // 3! (1 + 1 + 1/2 + 1/3)
  for (int v = 1; v <= 3; ++v) {
    CHECK(exact_triple_count(v, 0) == 1);
    CHECK(exact_triple_count(v, 2) == 5);
  }
  CHECK(exact_triple_count(1, 4) == 34);
  CHECK_THROWS(exact_triple_count(0, 2));
}
