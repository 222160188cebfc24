#pragma once

#include <vector>

#include "wreath/closed_forms.hpp"
#include "wreath/numbers.hpp"

// Truncated formal power series with exact rational coefficients.  The kind
// tag records whether coefficients are ordinary or exponential; arithmetic
// never mixes kinds.  Operations truncate to the smaller operand order.

namespace wreath {

enum class SeriesKind { ogf, egf };

inline constexpr int kDefaultOrder = 16;

class TruncatedSeries {
 public:
  TruncatedSeries(SeriesKind kind, std::vector<BigRat> coeffs);
  static TruncatedSeries zero(SeriesKind kind, int order);
  static TruncatedSeries one(SeriesKind kind, int order);

  SeriesKind kind() const { return kind_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigRat& coeff(int m) const;
  const std::vector<BigRat>& coeffs() const { return coeffs_; }

  // Ordinary coefficients a_n; exponential coefficients a_n / n!.
  static TruncatedSeries from_counts(SeriesKind kind, const AvSequence& counts);

 private:
  SeriesKind kind_;
  std::vector<BigRat> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_pow(const TruncatedSeries& a, int e);  // e >= 0
// Multiplicative inverse; the constant term must be non-zero.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);
// Formal derivative; order drops by one.
TruncatedSeries series_derivative(const TruncatedSeries& a);
TruncatedSeries series_scale(const BigRat& c, const TruncatedSeries& a);

// Counts A_n with A_0 = 1 and A_{n+1} = n! sum_{i<=n} A_i/i! + (n+1) A_n;
// exponential generating function e^{x/(1-x)}/(1-x).
AvSequence partial_permutation_counts(int n_max);

// Coefficients of (1 + C(t)) / (1 - (k-1) C(t)) with C(t) = sum_{n>=1} n! t^n.
AvSequence rational_ogf_counts(int k, int n_max);
// The same counts via the expanded double sum
//   k n! + sum_{s=2}^{n} sum_{a composition of n into s positive parts}
//          k (k-1)^(s-1) a_1! ... a_s!
// (value 1 at n = 0).  Kept separate so the two routes check each other.
AvSequence rational_ogf_counts_by_expansion(int k, int n_max);

// Verifies that the k-th power of the exponential generating function of av
// expands with coefficients egf_power_sum(n, k, av) for all n <= n_max.
bool egf_power_matches(const AvSequence& av, int k, int n_max);

}  // namespace wreath
