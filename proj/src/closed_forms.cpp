#include "wreath/closed_forms.hpp"

#include <map>
#include <stdexcept>

namespace wreath {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

// Visits every composition of n into k non-negative parts.
template <typename Visit>
void for_each_composition(int n, int k, Visit&& visit) {
  std::vector<int> parts(k, 0);
  parts[k - 1] = n;
  for (;;) {
    visit(std::span<const int>(parts));
    // next composition in colex-ish odometer order: move one unit leftwards
    int i = k - 1;
    while (i > 0 && parts[i] == 0) --i;
    if (i == 0) break;
    const int moved = parts[i];
    parts[i] = 0;
    ++parts[i - 1];
    parts[k - 1] = moved - 1;
  }
}

}  // namespace

BigInt factorial(int n) {
  if (n < 0) fail("factorial of a negative number");
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt out = 1;
  for (int i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

BigInt multinomial(int n, std::span<const int> parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) fail("multinomial parts must be non-negative");
    sum += p;
  }
  if (sum != n) fail("multinomial parts must sum to n");
  BigInt out = 1;
  int used = 0;
  for (int p : parts) {
    used += p;
    out *= binomial(used, p);
  }
  return out;
}

BigInt falling(int k, int j) {
  if (j < 0) fail("falling factorial needs j >= 0");
  BigInt out = 1;
  for (int i = 0; i < j; ++i) out *= k - i;
  return out;
}

BigInt catalan_number(int n) {
  if (n < 0) fail("catalan_number of a negative index");
  return binomial(2 * n, n) / (n + 1);
}

BigInt fibonacci_number(int n) {
  if (n < 0) fail("fibonacci_number of a negative index");
  BigInt a = 0, b = 1;  // F_0, F_1
  for (int i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = b;
    b = next;
  }
  return a;
}

std::vector<std::vector<BigInt>> mahonian_table(int n_max) {
  if (n_max < 0) fail("mahonian_table needs n_max >= 0");
  std::vector<std::vector<BigInt>> rows;
  rows.push_back({1});
  for (int i = 1; i <= n_max; ++i) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(prev.size() + i - 1, 0);
    for (std::size_t d = 0; d < prev.size(); ++d)
      for (int a = 0; a < i; ++a) row[d + a] += prev[d];
    rows.push_back(std::move(row));
  }
  return rows;
}

BigInt mahonian(int i, int j) {
  if (i < 0) fail("mahonian needs i >= 0");
  if (j < 0 || static_cast<long long>(j) > static_cast<long long>(i) * (i - 1) / 2) return 0;
  return mahonian_table(i)[i][j];
}

BigInt multinomial_sq_sum(int n, int k) {
  return weighted_multinomial_sq_sum(n, k, AvSequence(n + 1, 1));
}

BigInt weighted_multinomial_sq_sum(int n, int k, const AvSequence& weights) {
  if (n < 0 || k < 1) fail("weighted_multinomial_sq_sum requires n >= 0, k >= 1");
  if (static_cast<int>(weights.size()) <= n) fail("weights must cover 0..n");
  BigInt total = 0;
  for_each_composition(n, k, [&](std::span<const int> parts) {
    BigInt term = multinomial(n, parts);
    term *= term;
    for (int p : parts) term *= weights[p];
    total += term;
  });
  return total;
}

BigInt catalan_multinomial_sq_sum(int n, int k) {
  AvSequence cat(n + 1);
  for (int i = 0; i <= n; ++i) cat[i] = catalan_number(i);
  return weighted_multinomial_sq_sum(n, k, cat);
}

BigInt occurrence_distribution_sum(int n, int k, long long j,
                                   const std::vector<std::vector<BigInt>>& stat) {
  if (n < 0 || k < 1 || j < 0) fail("occurrence_distribution_sum requires n, j >= 0 and k >= 1");
  if (static_cast<int>(stat.size()) <= n) fail("statistic table must cover rows 0..n");
  auto entry = [&](int i, long long d) -> BigInt {
    const auto& row = stat[i];
    if (d < 0 || d >= static_cast<long long>(row.size())) return 0;
    return row[d];
  };
  BigInt total = 0;
  for_each_composition(n, k, [&](std::span<const int> parts) {
    std::vector<int> sizes(parts.begin(), parts.end());
    BigInt msq = multinomial(n, parts);
    msq *= msq;
    // distribute the statistic value j over the k parts
    auto rec = [&](auto&& self, int idx, long long rest) -> BigInt {
      if (idx == k - 1) return entry(sizes[idx], rest);
      BigInt sum = 0;
      for (long long d = 0; d <= rest; ++d) {
        BigInt e = entry(sizes[idx], d);
        if (e != 0) sum += e * self(self, idx + 1, rest - d);
      }
      return sum;
    };
    total += msq * rec(rec, 0, j);
  });
  return total;
}

BigInt factorial_binomial_sq_sum(int n) {
  if (n < 0) fail("factorial_binomial_sq_sum needs n >= 0");
  BigInt total = 0;
  for (int j = 0; j <= n; ++j) {
    BigInt b = binomial(n, j);
    total += factorial(j) * b * b;
  }
  return total;
}

BigInt signs_closed_form(int variant, int n, int k) {
  if (n < 0 || k < 1) fail("signs_closed_form requires n >= 0 and k >= 1");
  switch (variant) {
    case 1: return binomial(k, n) * factorial(n) * factorial(n);
    case 2: return binomial(n + k - 1, n) * factorial(n);
    case 3: return binomial(k, n) * factorial(n);
    case 4: return BigInt(k) * factorial(n);
    default: fail("signs_closed_form variant must be 1..4");
  }
}

BigInt egf_power_sum(int n, int k, const AvSequence& av) {
  if (n < 0 || k < 1) fail("egf_power_sum requires n >= 0 and k >= 1");
  if (static_cast<int>(av.size()) <= n) fail("sequence must cover 0..n");
  BigInt total = 0;
  for_each_composition(n, k, [&](std::span<const int> parts) {
    BigInt term = multinomial(n, parts);
    for (int p : parts) term *= av[p];
    total += term;
  });
  return total;
}

BigInt gamma_closed_form(int variant, int n, int k, const BigInt& av_n) {
  if (n < 0 || k < 1) fail("gamma_closed_form requires n >= 0 and k >= 1");
  switch (variant) {
    case 1: return BigInt(k) * av_n;
    case 2: return binomial(k, n) * av_n;
    case 3: return binomial(k, n) * factorial(n) * av_n;
    default: fail("gamma_closed_form variant must be 1..3");
  }
}

BigInt composition_factorial_sum(int n, int k) {
  if (n < 0 || k < 1) fail("composition_factorial_sum requires n >= 0 and k >= 1");
  BigInt total = 0;
  for_each_composition(n, k, [&](std::span<const int> parts) {
    BigInt term = 1;
    for (int p : parts) term *= factorial(p);
    total += term;
  });
  return total;
}

BigInt weak_composition_count(int n, int k) {
  if (n < 0 || k < 1) fail("weak_composition_count requires n >= 0 and k >= 1");
  return binomial(n + k - 1, k - 1);
}

BigInt falling_factorial_sum(int n, int k) {
  if (n < 1 || k < 1) fail("falling_factorial_sum requires n >= 1 and k >= 1");
  if (k == 1) return 1;
  if (k == 2) return BigInt(2) * n;
  BigInt total = 0;
  for (int m = 0; m <= std::min(k - 1, n - 1); ++m)
    total += falling(k - 1, m) * binomial(n - 1, m);
  return BigInt(k) * total;
}

BigInt falling_factorial_sum_by_recursion(int n, int k) {
  if (n < 1 || k < 1) fail("falling_factorial_sum_by_recursion requires n >= 1 and k >= 1");
  std::map<std::pair<int, int>, BigInt> memo;
  auto rec = [&](auto&& self, int nn, int kk) -> BigInt {
    if (kk == 1) return 1;
    auto it = memo.find({nn, kk});
    if (it != memo.end()) return it->second;
    BigInt total = kk;
    for (int s = 1; s < nn; ++s) total += BigInt(kk) * self(self, s, kk - 1);
    memo.emplace(std::pair{nn, kk}, total);
    return total;
  };
  return rec(rec, n, k);
}

BigInt single_pattern_exact_sum(int n, int k) {
  if (n < 0 || k < 1) fail("single_pattern_exact_sum requires n >= 0 and k >= 1");
  BigInt total = 0;
  BigInt pw = 1;  // (k-1)^j
  for (int j = 0; j <= n; ++j) {
    BigInt b = binomial(n, j);
    total += factorial(j) * pw * b * b;
    pw *= k - 1;
  }
  return total;
}

BigInt exact_triple_count(int variant, int n) {
  if (n < 0) fail("exact_triple_count requires n >= 0");
  switch (variant) {
    case 1:
      return fibonacci_number(2 * n + 1);
    case 2: {
      BigRat sum = 0;
      for (int j = 0; j <= n; ++j) sum += BigRat(1) / BigRat(binomial(n, j));
      BigRat value = BigRat(factorial(n)) * sum;
      if (denominator(value) != 1) fail("exact_triple_count variant 2 did not reduce to an integer");
      return numerator(value);
    }
    case 3: {
      BigRat sum = 0;
      for (int j = 1; j <= n; ++j) sum += BigRat(1, j);
      BigRat value = BigRat(factorial(n)) * (1 + sum);
      if (denominator(value) != 1) fail("exact_triple_count variant 3 did not reduce to an integer");
      return numerator(value);
    }
    default: fail("exact_triple_count variant must be 1..3");
  }
}

}  // namespace wreath
