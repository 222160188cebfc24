#include "wreath/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace wreath {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void require_same_kind(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.kind() != b.kind()) fail("series arithmetic cannot mix ogf and egf operands");
}

}  // namespace

TruncatedSeries::TruncatedSeries(SeriesKind kind, std::vector<BigRat> coeffs)
    : kind_(kind), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail("series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::zero(SeriesKind kind, int order) {
  if (order < 0) fail("series order must be non-negative");
  return TruncatedSeries(kind, std::vector<BigRat>(order + 1, 0));
}

TruncatedSeries TruncatedSeries::one(SeriesKind kind, int order) {
  auto s = zero(kind, order);
  std::vector<BigRat> c = s.coeffs();
  c[0] = 1;
  return TruncatedSeries(kind, std::move(c));
}

const BigRat& TruncatedSeries::coeff(int m) const {
  if (m < 0 || m > order()) fail("series coefficient index out of range");
  return coeffs_[m];
}

TruncatedSeries TruncatedSeries::from_counts(SeriesKind kind, const AvSequence& counts) {
  std::vector<BigRat> c(counts.size());
  for (std::size_t n = 0; n < counts.size(); ++n) {
    c[n] = BigRat(counts[n]);
    if (kind == SeriesKind::egf) c[n] /= BigRat(factorial(static_cast<int>(n)));
  }
  return TruncatedSeries(kind, std::move(c));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_kind(a, b);
  const int order = std::min(a.order(), b.order());
  std::vector<BigRat> c(order + 1);
  for (int m = 0; m <= order; ++m) c[m] = a.coeff(m) + b.coeff(m);
  return TruncatedSeries(a.kind(), std::move(c));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_add(a, series_scale(-1, b));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_kind(a, b);
  const int order = std::min(a.order(), b.order());
  std::vector<BigRat> c(order + 1, 0);
  for (int i = 0; i <= order; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int m = i; m <= order; ++m) c[m] += a.coeff(i) * b.coeff(m - i);
  }
  return TruncatedSeries(a.kind(), std::move(c));
}

TruncatedSeries series_pow(const TruncatedSeries& a, int e) {
  if (e < 0) fail("series_pow exponent must be non-negative");
  TruncatedSeries out = TruncatedSeries::one(a.kind(), a.order());
  for (int i = 0; i < e; ++i) out = series_mul(out, a);
  return out;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
  if (a.coeff(0) == 0) fail("series_reciprocal requires a non-zero constant term");
  const int order = a.order();
  std::vector<BigRat> b(order + 1, 0);
  b[0] = BigRat(1) / a.coeff(0);
  for (int m = 1; m <= order; ++m) {
    BigRat acc = 0;
    for (int i = 1; i <= m; ++i) acc += a.coeff(i) * b[m - i];
    b[m] = -acc / a.coeff(0);
  }
  return TruncatedSeries(a.kind(), std::move(b));
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
  if (a.order() == 0) fail("cannot differentiate an order-0 series");
  std::vector<BigRat> c(a.order());
  for (int m = 0; m < a.order(); ++m) c[m] = BigRat(m + 1) * a.coeff(m + 1);
  return TruncatedSeries(a.kind(), std::move(c));
}

TruncatedSeries series_scale(const BigRat& s, const TruncatedSeries& a) {
  std::vector<BigRat> c(a.coeffs());
  for (auto& v : c) v *= s;
  return TruncatedSeries(a.kind(), std::move(c));
}

AvSequence partial_permutation_counts(int n_max) {
  if (n_max < 0) fail("partial_permutation_counts needs n_max >= 0");
  AvSequence a(n_max + 1);
  a[0] = 1;
  for (int n = 0; n + 1 <= n_max; ++n) {
    BigInt sum = 0;  // n! * sum_{i<=n} a_i / i!, exact: n!/i! is integral
    BigInt ratio = 1;
    for (int i = n; i >= 0; --i) {
      sum += ratio * a[i];
      ratio *= i;  // after the i-th term, ratio = n!/ (i-1)!
    }
    a[n + 1] = sum + BigInt(n + 1) * a[n];
  }
  return a;
}

namespace {

TruncatedSeries factorial_ogf(int order) {
  std::vector<BigRat> c(order + 1);
  c[0] = 0;
  for (int n = 1; n <= order; ++n) c[n] = BigRat(factorial(n));
  return TruncatedSeries(SeriesKind::ogf, std::move(c));
}

}  // namespace

AvSequence rational_ogf_counts(int k, int n_max) {
  if (k < 1 || n_max < 0) fail("rational_ogf_counts requires k >= 1 and n_max >= 0");
  TruncatedSeries c = factorial_ogf(n_max);
  TruncatedSeries numer = series_add(TruncatedSeries::one(SeriesKind::ogf, n_max), c);
  TruncatedSeries denom =
      series_sub(TruncatedSeries::one(SeriesKind::ogf, n_max), series_scale(k - 1, c));
  TruncatedSeries ratio = series_mul(numer, series_reciprocal(denom));
  AvSequence out(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const BigRat& v = ratio.coeff(n);
    if (denominator(v) != 1) fail("rational ogf produced a non-integer coefficient");
    out[n] = numerator(v);
  }
  return out;
}

AvSequence rational_ogf_counts_by_expansion(int k, int n_max) {
  if (k < 1 || n_max < 0) fail("rational_ogf_counts_by_expansion requires k >= 1 and n_max >= 0");
  AvSequence out(n_max + 1);
  out[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    BigInt total = BigInt(k) * factorial(n);
    // compositions of n into s >= 2 positive parts, weight k (k-1)^(s-1) prod a_i!
    std::vector<int> parts;
    BigInt kw = k;
    auto rec = [&](auto&& self, int rest, const BigInt& weight, const BigInt& prod) -> void {
      if (rest == 0) {
        if (parts.size() >= 2) total += weight * prod;
        return;
      }
      parts.push_back(0);
      for (int a = 1; a <= rest; ++a) {
        parts.back() = a;
        const BigInt w = parts.size() == 1 ? kw : weight * (k - 1);
        self(self, rest - a, w, prod * factorial(a));
      }
      parts.pop_back();
    };
    rec(rec, n, 1, 1);
    out[n] = total;
  }
  return out;
}

bool egf_power_matches(const AvSequence& av, int k, int n_max) {
  if (k < 1 || n_max < 0) fail("egf_power_matches requires k >= 1 and n_max >= 0");
  if (static_cast<int>(av.size()) <= n_max) fail("sequence must cover 0..n_max");
  TruncatedSeries base = TruncatedSeries::from_counts(
      SeriesKind::egf, AvSequence(av.begin(), av.begin() + n_max + 1));
  TruncatedSeries power = series_pow(base, k);
  for (int n = 0; n <= n_max; ++n) {
    if (power.coeff(n) * BigRat(factorial(n)) != BigRat(egf_power_sum(n, k, av))) return false;
  }
  return true;
}

}  // namespace wreath
