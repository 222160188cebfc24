#include "wreath/enumeration.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wreath {

BudgetExceeded::BudgetExceeded(const BigInt& required, const BigInt& budget)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "enumeration of " << required << " elements exceeds budget " << budget
           << "; rerun with a budget of at least " << required;
        return os.str();
      }()),
      required_(required) {}

BigInt wreath_size(int n, int k) {
  if (n < 0 || k < 1) throw std::invalid_argument("wreath_size requires n >= 0 and k >= 1");
  BigInt total = 1;
  for (int i = 1; i <= n; ++i) total *= i;
  BigInt kn = 1;
  for (int i = 0; i < n; ++i) kn *= k;
  return total * kn;
}

void require_budget(const EnumSpec& spec) {
  const BigInt required = wreath_size(spec.n, spec.k);
  if (required > spec.budget) throw BudgetExceeded(required, spec.budget);
}

ElementStream::ElementStream(EnumSpec spec) : spec_(spec) {
  require_budget(spec_);
  sigma_.resize(spec_.n);
  for (int i = 0; i < spec_.n; ++i) sigma_[i] = i + 1;
  colors_.assign(spec_.n, 0);
}

std::optional<ColoredPermutation> ElementStream::next() {
  if (done_) return std::nullopt;
  ColoredPermutation out(Permutation(sigma_), ColorWord(colors_, spec_.k));
  int p = spec_.n - 1;
  while (p >= 0 && colors_[p] == spec_.k - 1) colors_[p--] = 0;
  if (p >= 0)
    ++colors_[p];
  else if (!std::next_permutation(sigma_.begin(), sigma_.end()))
    done_ = true;
  return out;
}

std::vector<ColoredPermutation> generate_all(const EnumSpec& spec) {
  ElementStream stream(spec);
  std::vector<ColoredPermutation> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

BigInt CountTable::total() const {
  BigInt sum = 0;
  for (const auto& [j, c] : counts) sum += c;
  return sum;
}

BigInt count_avoiders_serial(const EnumSpec& spec, const PatternSet& s) {
  require_budget(spec);
  unsigned long long count = 0;
  detail::scan_elements(spec.n, spec.k, [&](std::span<const int> sigma, std::span<const int> w) {
    if (avoids(s, sigma, w)) ++count;
  });
  return BigInt(count);
}

BigInt count_avoiders(const EnumSpec& spec, const PatternSet& s) {
  require_budget(spec);
  if (spec.n == 0) return avoids(s, std::span<const int>(), std::span<const int>()) ? 1 : 0;
  std::vector<unsigned long long> per_class(spec.n, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int first = 1; first <= spec.n; ++first) {
    unsigned long long local = 0;
    detail::scan_class(spec.n, spec.k, first,
                       [&](std::span<const int> sigma, std::span<const int> w) {
                         if (avoids(s, sigma, w)) ++local;
                       });
    per_class[first - 1] = local;
  }
  BigInt total = 0;
  for (unsigned long long c : per_class) total += c;
  return total;
}

CountTable distribution_serial(const EnumSpec& spec, const ColoredPattern& p) {
  require_budget(spec);
  CountTable table;
  detail::scan_elements(spec.n, spec.k, [&](std::span<const int> sigma, std::span<const int> w) {
    table.counts[count_occurrences(p, sigma, w)] += 1;
  });
  return table;
}

CountTable distribution(const EnumSpec& spec, const ColoredPattern& p) {
  require_budget(spec);
  if (spec.n == 0) return distribution_serial(spec, p);
  std::vector<std::map<long long, unsigned long long>> per_class(spec.n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int first = 1; first <= spec.n; ++first) {
    auto& local = per_class[first - 1];
    detail::scan_class(spec.n, spec.k, first,
                       [&](std::span<const int> sigma, std::span<const int> w) {
                         local[count_occurrences(p, sigma, w)] += 1;
                       });
  }
  CountTable table;
  for (const auto& local : per_class)
    for (const auto& [j, c] : local) table.counts[j] += c;
  return table;
}

SequenceResult sequence(int k, const PatternSet& s, int n_max, const BigInt& budget) {
  SequenceResult out;
  for (int n = 1; n <= n_max; ++n) {
    EnumSpec spec{n, k, budget};
    if (wreath_size(n, k) > budget) {
      out.truncated_at = n;
      break;
    }
    out.values.push_back(count_avoiders(spec, s));
  }
  return out;
}

std::vector<ColoredPermutation> collect_avoiders(const EnumSpec& spec, const PatternSet& s) {
  require_budget(spec);
  if (spec.n == 0) {
    std::vector<ColoredPermutation> out;
    if (avoids(s, std::span<const int>(), std::span<const int>()))
      out.emplace_back(Permutation(), ColorWord({}, spec.k));
    return out;
  }
  std::vector<std::vector<ColoredPermutation>> per_class(spec.n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int first = 1; first <= spec.n; ++first) {
    auto& local = per_class[first - 1];
    detail::scan_class(spec.n, spec.k, first,
                       [&](std::span<const int> sigma, std::span<const int> w) {
                         if (avoids(s, sigma, w))
                           local.emplace_back(
                               Permutation(std::vector<int>(sigma.begin(), sigma.end())),
                               ColorWord(std::vector<int>(w.begin(), w.end()), spec.k));
                       });
  }
  std::vector<ColoredPermutation> out;
  for (auto& local : per_class)
    for (auto& g : local) out.push_back(std::move(g));
  return out;
}

}  // namespace wreath
