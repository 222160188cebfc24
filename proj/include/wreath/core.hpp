#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Colored permutations: pairs (sigma, w) with sigma a permutation of 1..n and
// w a word over {0,...,k-1} assigning a color to each position.  Patterns are
// colored permutations with per-gap adjacency flags and one of two color
// matching modes:
//   exact   - subsequence colors must equal the pattern colors letterwise
//   reduced - the reduction of the subsequence colors must equal the pattern
//             colors (pattern color word must be its own reduction)

namespace wreath {

// Entries are 1-based values; positions in occurrence tuples are 1-based.
// Everything else uses ordinary 0-based C++ indexing.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> entries);  // must be a bijection on 1..n
  static Permutation identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](int i) const { return entries_[i]; }  // 0-based
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

class ColorWord {
 public:
  ColorWord() : k_(1) {}
  ColorWord(std::vector<int> letters, int k);  // letters in 0..k-1, k >= 1

  int size() const { return static_cast<int>(letters_.size()); }
  int k() const { return k_; }
  const std::vector<int>& letters() const { return letters_; }
  int operator[](int i) const { return letters_[i]; }
  bool operator==(const ColorWord&) const = default;

 private:
  std::vector<int> letters_;
  int k_;
};

struct ColoredPermutation {
  Permutation perm;
  ColorWord colors;

  ColoredPermutation() = default;
  ColoredPermutation(Permutation p, ColorWord w);  // equal lengths required
  int size() const { return perm.size(); }
  int k() const { return colors.k(); }
  bool operator==(const ColoredPermutation&) const = default;
};

// red(sigma): i-th smallest entry becomes i (1-based).  Entries must be distinct.
Permutation reduce_permutation(std::span<const int> seq);

// red(w): i-th smallest distinct letter becomes i-1 (0-based); equal letters
// stay equal.  Result alphabet size = number of distinct letters (1 if empty).
ColorWord reduce_word(std::span<const int> word);

enum class Gap : std::uint8_t { dash, adjacent };
enum class Mode : std::uint8_t { exact, reduced };

class ColoredPattern {
 public:
  // gaps.size() == tau.size()-1; in reduced mode u must equal its reduction.
  ColoredPattern(Permutation tau, ColorWord u, std::vector<Gap> gaps, Mode mode);

  int size() const { return tau_.size(); }
  const Permutation& tau() const { return tau_; }
  const ColorWord& u() const { return u_; }
  const std::vector<Gap>& gaps() const { return gaps_; }
  Mode mode() const { return mode_; }
  bool all_adjacent() const;
  // Identity ignores the alphabet tag on u: matching only ever reads the
  // letters (exact mode) or their relative order (reduced mode).
  bool operator==(const ColoredPattern& o) const {
    return tau_ == o.tau_ && u_.letters() == o.u_.letters() && gaps_ == o.gaps_ &&
           mode_ == o.mode_;
  }

  // Pairwise relation tables, precomputed for the matcher.
  // tau_less[p*j+q] : tau_p < tau_q;  color_cmp[p*j+q] : sign of u_p - u_q.
  const std::vector<std::uint8_t>& tau_less() const { return tau_less_; }
  const std::vector<std::int8_t>& color_cmp() const { return color_cmp_; }

 private:
  Permutation tau_;
  ColorWord u_;
  std::vector<Gap> gaps_;
  Mode mode_;
  std::vector<std::uint8_t> tau_less_;
  std::vector<std::int8_t> color_cmp_;
};

class PatternSet {
 public:
  // Non-empty, all patterns share one mode.  Lengths may differ.
  explicit PatternSet(std::vector<ColoredPattern> patterns);

  const std::vector<ColoredPattern>& patterns() const { return patterns_; }
  Mode mode() const { return patterns_.front().mode(); }
  int size() const { return static_cast<int>(patterns_.size()); }

 private:
  std::vector<ColoredPattern> patterns_;
};

// All increasing position tuples (1-based) where p occurs in g, in
// lexicographic order.
std::vector<std::vector<int>> occurrences(const ColoredPattern& p, const ColoredPermutation& g);

bool contains(const ColoredPattern& p, const ColoredPermutation& g);
long long count_occurrences(const ColoredPattern& p, const ColoredPermutation& g);

// Span-level entry points used by the enumeration loops (no allocation).
bool contains(const ColoredPattern& p, std::span<const int> sigma, std::span<const int> colors);
long long count_occurrences(const ColoredPattern& p, std::span<const int> sigma,
                            std::span<const int> colors);

// Occurrences with all gaps adjacent; requires an all-adjacent pattern.
long long count_matches(const ColoredPattern& p, const ColoredPermutation& g);

bool avoids(const PatternSet& s, const ColoredPermutation& g);
bool avoids(const PatternSet& s, std::span<const int> sigma, std::span<const int> colors);

// Symmetries phi_{a,b}(sigma, w) = (sigma^a, w^b): reversal or complement
// applied componentwise.  Complement of colors is w_i -> k-1-w_i.
enum class PhiMap : std::uint8_t { reverse, complement };

ColoredPermutation apply_phi(PhiMap a, PhiMap b, const ColoredPermutation& g);
ColoredPermutation reverse(const ColoredPermutation& g);
ColoredPermutation complement(const ColoredPermutation& g);

// Pattern transport along phi_{a,b} over a k-letter alphabet.  Reversal also
// reverses the gap flags; in reduced mode the transformed color word is
// re-reduced so the result is again a valid reduced pattern.
ColoredPattern apply_phi(PhiMap a, PhiMap b, const ColoredPattern& p, int k);

// Text encodings.
//   colored permutation: "sigma=1,3,2,4 colors=1,2,2,2 k=3"
//   pattern:             "1-2/0,1"  (dash = gap allowed, juxtaposition = adjacent)
//   pattern set:         patterns joined with ';'
std::string to_text(const ColoredPermutation& g);
std::string to_text(const ColoredPattern& p);
std::string to_text(const PatternSet& s);
ColoredPermutation parse_colored_permutation(std::string_view text);
ColoredPattern parse_pattern(std::string_view text, Mode mode);
PatternSet parse_pattern_set(std::string_view text, Mode mode);

}  // namespace wreath
