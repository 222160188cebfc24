#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "wreath/core.hpp"
#include "wreath/numbers.hpp"

// Brute-force oracle over C_k wr S_n: exhaustive generation in lexicographic
// (sigma, colors) order, guarded by an element-count budget.  count_avoiders
// and distribution fan out over the n classes fixing the first permutation
// entry; per-class results are merged in class order, so parallel runs return
// exactly what the serial reference returns.

namespace wreath {

inline constexpr long long kDefaultBudget = 100'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const BigInt& required, const BigInt& budget);
  const BigInt& required() const { return required_; }

 private:
  BigInt required_;
};

struct EnumSpec {
  int n = 0;
  int k = 1;
  BigInt budget = kDefaultBudget;
};

// k^n * n!
BigInt wreath_size(int n, int k);

// Throws BudgetExceeded when k^n * n! > spec.budget.
void require_budget(const EnumSpec& spec);

// Streams C_k wr S_n in lexicographic order.  next() yields until exhausted.
class ElementStream {
 public:
  explicit ElementStream(EnumSpec spec);
  std::optional<ColoredPermutation> next();

 private:
  EnumSpec spec_;
  std::vector<int> sigma_, colors_;
  bool done_ = false;
};

std::vector<ColoredPermutation> generate_all(const EnumSpec& spec);

struct CountTable {
  std::map<long long, BigInt> counts;  // occurrence count -> number of elements
  BigInt total() const;
};

struct SequenceResult {
  std::vector<BigInt> values;        // counts for n = 1, 2, ...
  std::optional<int> truncated_at;   // first n the budget refused
};

BigInt count_avoiders(const EnumSpec& spec, const PatternSet& s);
BigInt count_avoiders_serial(const EnumSpec& spec, const PatternSet& s);

CountTable distribution(const EnumSpec& spec, const ColoredPattern& p);
CountTable distribution_serial(const EnumSpec& spec, const ColoredPattern& p);

// Avoider counts for n = 1..n_max under one budget; stops early (with the
// marker set) once k^n * n! exceeds the budget.
SequenceResult sequence(int k, const PatternSet& s, int n_max,
                        const BigInt& budget = kDefaultBudget);

// All avoiders in lexicographic order (parallel scan, ordered merge).
std::vector<ColoredPermutation> collect_avoiders(const EnumSpec& spec, const PatternSet& s);

namespace detail {

// Visits every color word over {0..k-1}^n for a fixed sigma, reusing one
// buffer; visit(sigma, colors) is called k^n times in lexicographic order.
template <typename Visit>
void scan_colorings(std::span<const int> sigma, int k, std::vector<int>& colors, Visit&& visit) {
  const int n = static_cast<int>(sigma.size());
  colors.assign(n, 0);
  for (;;) {
    visit(sigma, std::span<const int>(colors));
    int p = n - 1;
    while (p >= 0 && colors[p] == k - 1) colors[p--] = 0;
    if (p < 0) break;
    ++colors[p];
  }
}

// Serial scan of all of C_k wr S_n in lexicographic order.
template <typename Visit>
void scan_elements(int n, int k, Visit&& visit) {
  std::vector<int> sigma(n), colors;
  for (int i = 0; i < n; ++i) sigma[i] = i + 1;
  do {
    scan_colorings(std::span<const int>(sigma), k, colors, visit);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

// Scan of the class { sigma_1 = first } x {0..k-1}^n, lexicographic within
// the class.  first is 1-based; n >= 1.
template <typename Visit>
void scan_class(int n, int k, int first, Visit&& visit) {
  std::vector<int> sigma(n), colors;
  sigma[0] = first;
  int next = 0;
  for (int v = 1; v <= n; ++v)
    if (v != first) sigma[++next] = v;
  do {
    scan_colorings(std::span<const int>(sigma), k, colors, visit);
  } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
}

}  // namespace detail

}  // namespace wreath
