#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "wreath/closed_forms.hpp"
#include "wreath/series.hpp"

using namespace wreath;

namespace {

TruncatedSeries ogf(std::vector<BigRat> coeffs) {
  return TruncatedSeries(SeriesKind::ogf, std::move(coeffs));
}

}  // namespace

TEST_CASE("series construction and coefficient access") {
  TruncatedSeries a = TruncatedSeries::from_counts(SeriesKind::egf, AvSequence{1, 2, 7});
  CHECK(a.order() == 2);
  CHECK(a.coeff(0) == 1);
  CHECK(a.coeff(1) == 2);
  CHECK(a.coeff(2) == BigRat(7, 2));
  CHECK_THROWS(a.coeff(3));
  CHECK_THROWS(a.coeff(-1));

  TruncatedSeries b = TruncatedSeries::from_counts(SeriesKind::ogf, AvSequence{1, 2, 7});
  CHECK(b.coeff(2) == 7);
  CHECK(TruncatedSeries::one(SeriesKind::ogf, 3).coeff(0) == 1);
  CHECK(TruncatedSeries::zero(SeriesKind::ogf, 3).coeff(3) == 0);
}

TEST_CASE("series arithmetic") {
  TruncatedSeries one_plus = ogf({1, 1, 0});
  TruncatedSeries one_minus = ogf({1, -1, 0});
  TruncatedSeries product = series_mul(one_plus, one_minus);
  CHECK(product.coeff(0) == 1);
  CHECK(product.coeff(1) == 0);
  CHECK(product.coeff(2) == -1);

  TruncatedSeries sq = series_pow(one_plus, 2);
  CHECK(sq.coeff(0) == 1);
  CHECK(sq.coeff(1) == 2);
  CHECK(sq.coeff(2) == 1);
  CHECK(series_pow(one_plus, 0).coeff(0) == 1);

  TruncatedSeries inv = series_reciprocal(one_minus);
  for (int m = 0; m <= 2; ++m) CHECK(inv.coeff(m) == 1);  // 1/(1-x)
  CHECK_THROWS(series_reciprocal(ogf({0, 1})));

  TruncatedSeries d = series_derivative(ogf({5, 3, 4, 7}));
  CHECK(d.order() == 2);
  CHECK(d.coeff(0) == 3);
  CHECK(d.coeff(1) == 8);
  CHECK(d.coeff(2) == 21);

  CHECK(series_scale(BigRat(1, 2), ogf({4, 6})).coeff(1) == 3);
  CHECK(series_sub(one_plus, one_plus).coeff(1) == 0);

  // Operands truncate to the shorter order.
  CHECK(series_mul(ogf({1, 1, 1, 1}), ogf({1, 1})).order() == 1);
}

TEST_CASE("ordinary and exponential series never mix") {
  TruncatedSeries o = ogf({1, 1});
  TruncatedSeries e = TruncatedSeries(SeriesKind::egf, {BigRat(1), BigRat(1)});
  CHECK_THROWS(series_add(o, e));
  CHECK_THROWS(series_mul(o, e));
  CHECK_THROWS(series_sub(e, o));
}

TEST_CASE("partial permutation recursion") {
  CHECK(partial_permutation_counts(6) ==
        AvSequence{1, 2, 7, 34, 209, 1546, 13327});
  const AvSequence counts = partial_permutation_counts(12);
  for (int n = 0; n <= 12; ++n) CHECK(counts[n] == factorial_binomial_sq_sum(n));
}

TEST_CASE("rational generating function routes agree") {
  CHECK(rational_ogf_counts(2, 4) == AvSequence{1, 2, 6, 22, 94});
  CHECK(rational_ogf_counts(1, 4) == AvSequence{1, 1, 2, 6, 24});
  CHECK(rational_ogf_counts(3, 2) == AvSequence{1, 3, 12});
  for (int k = 1; k <= 4; ++k)
    CHECK(rational_ogf_counts(k, 9) == rational_ogf_counts_by_expansion(k, 9));
}

TEST_CASE("power identity for exponential generating functions") {
  AvSequence cats(9), facts(9), ones(9, 1);
  for (int i = 0; i <= 8; ++i) {
    cats[i] = catalan_number(i);
    facts[i] = factorial(i);
  }
  for (int k = 1; k <= 3; ++k) {
    CHECK(egf_power_matches(ones, k, 8));
    CHECK(egf_power_matches(cats, k, 8));
    CHECK(egf_power_matches(facts, k, 8));
  }
}
