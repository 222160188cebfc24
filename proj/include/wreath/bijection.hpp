#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wreath/core.hpp"
#include "wreath/numbers.hpp"

// Constructive bijection between two-colored elements avoiding
// {(1-2, 0 0), (1-2, 0 1)} under reduced color matching and Dyck paths of
// semilength n+1.
//
// The underlying permutation of such an element avoids 1-2-3 and splits into
// reverse irreducible blocks (everything left of a block is larger, everything
// right smaller).  In a non-singleton block the colors are forced: left-to-
// right minima are colored 1, right-to-left maxima 0.  Singleton colors are
// free, giving 2^{#singletons} avoiders per admissible permutation.
//
// The image path runs from (0, n+1) to (n+1, 0) with unit down and right
// steps, never above the line x + y = n+1:
//   - one initial down step, one final right step,
//   - block t is traversed from the top-left to the bottom-right corner of
//     its bounding square (corners chain together),
//   - a singleton travels down-right when colored 0 and right-down (touching
//     x + y = n+1) when colored 1,
//   - a non-singleton block descends to one unit below the next column's dot,
//     then moves right while no dot falls below the path, and repeats.
// Reading down steps as U and right steps as D yields the Dyck word.

namespace wreath {

struct Block {
  int lo = 0, hi = 0;  // 1-based inclusive position range
  bool singleton() const { return lo == hi; }
  bool operator==(const Block&) const = default;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  int singleton_count() const;
};

BlockDecomposition reverse_irreducible_blocks(const Permutation& p);

bool contains_123(const Permutation& p);

// Forced color per position; nullopt marks a free (singleton) slot.
// Requires p to avoid 1-2-3.
std::vector<std::optional<int>> forced_colors(const Permutation& p);

enum class LatticeStep : char { down = 'D', right = 'R' };

struct LatticePath {
  int n = 0;  // runs from (0, n+1) to (n+1, 0)
  std::vector<LatticeStep> steps;
  bool operator==(const LatticePath&) const = default;
};

enum class DyckStep : char { up = 'U', down = 'D' };

struct DyckPath {
  std::vector<DyckStep> steps;
  int semilength() const { return static_cast<int>(steps.size()) / 2; }
  bool operator==(const DyckPath&) const = default;
};

// Requires k = 2 and avoidance of {(1-2,0 0), (1-2,0 1)}; the error message
// names the violated pattern.
LatticePath to_lattice_path(const ColoredPermutation& g);

DyckPath to_dyck(const LatticePath& path);

bool is_valid(const LatticePath& path);
bool is_valid(const DyckPath& path);

// True when the path meets x + y = n+1 strictly between its endpoints.
bool touches_boundary(const LatticePath& path);

std::string to_string(const LatticePath& path);  // e.g. "DDRR"
std::string to_string(const DyckPath& path);     // e.g. "UUDD"

struct CertifyReport {
  int n = 0;
  BigInt avoider_count = 0;
  BigInt expected = 0;  // Catalan number C_{n+1}
  bool images_valid = false;
  bool images_distinct = false;
  std::string failure;  // first counterexample, empty when passed
  bool passed() const { return avoider_count == expected && images_valid && images_distinct; }
};

// Enumerates all avoiders of {(1-2,0 0), (1-2,0 1)} in C_2 wr S_n, maps each
// through to_lattice_path/to_dyck, and checks validity, pairwise distinctness
// and the Catalan count.
CertifyReport certify_bijection(int n, const BigInt& budget = 100'000'000);

// Dot matrix of g with block outlines; dots print their color digit.
std::string matrix_art(const ColoredPermutation& g);

}  // namespace wreath
