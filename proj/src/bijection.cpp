#include "wreath/bijection.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wreath/closed_forms.hpp"
#include "wreath/enumeration.hpp"

namespace wreath {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

const PatternSet& avoidance_set() {
  static const PatternSet s = parse_pattern_set("1-2/0,0;1-2/0,1", Mode::reduced);
  return s;
}

}  // namespace

int BlockDecomposition::singleton_count() const {
  int count = 0;
  for (const auto& b : blocks) count += b.singleton();
  return count;
}

BlockDecomposition reverse_irreducible_blocks(const Permutation& p) {
  // A boundary sits after position q iff positions 1..q hold the q largest
  // values, i.e. min(sigma_1..sigma_q) = n - q + 1.
  const int n = p.size();
  BlockDecomposition out;
  int lo = 1, prefix_min = n + 1;
  for (int q = 1; q <= n; ++q) {
    prefix_min = std::min(prefix_min, p[q - 1]);
    if (prefix_min == n - q + 1) {
      out.blocks.push_back({lo, q});
      lo = q + 1;
    }
  }
  return out;
}

bool contains_123(const Permutation& p) {
  // some position q is a middle letter: a smaller value before, larger after
  const int n = p.size();
  std::vector<int> suffix_max(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffix_max[i] = std::max(suffix_max[i + 1], p[i]);
  int prefix_min = n + 1;
  for (int q = 0; q < n; ++q) {
    if (prefix_min < p[q] && suffix_max[q + 1] > p[q]) return true;
    prefix_min = std::min(prefix_min, p[q]);
  }
  return false;
}

std::vector<std::optional<int>> forced_colors(const Permutation& p) {
  if (contains_123(p)) fail("forced_colors requires a 1-2-3 avoiding permutation");
  const int n = p.size();
  std::vector<std::optional<int>> colors(n);
  for (const Block& b : reverse_irreducible_blocks(p).blocks) {
    if (b.singleton()) continue;
    // Within a block every position is a left-to-right minimum (color 1) or a
    // right-to-left maximum (color 0), never both.
    int prefix_min = n + 1;
    for (int q = b.lo; q <= b.hi; ++q) {
      if (p[q - 1] < prefix_min) {
        prefix_min = p[q - 1];
        colors[q - 1] = 1;
      } else {
        colors[q - 1] = 0;
      }
    }
  }
  return colors;
}

LatticePath to_lattice_path(const ColoredPermutation& g) {
  if (g.k() != 2) fail("lattice path construction is defined over two colors");
  for (const auto& p : avoidance_set().patterns())
    if (contains(p, g)) fail("element contains the forbidden pattern " + to_text(p));

  const int n = g.size();
  LatticePath path{n, {}};
  auto down = [&](int count) { path.steps.insert(path.steps.end(), count, LatticeStep::down); };
  auto right = [&](int count) { path.steps.insert(path.steps.end(), count, LatticeStep::right); };

  down(1);  // (0, n+1) -> (0, n), the top-left corner of the first block
  for (const Block& b : reverse_irreducible_blocks(g.perm).blocks) {
    if (b.singleton()) {
      if (g.colors[b.lo - 1] == 0) {
        down(1);
        right(1);
      } else {
        right(1);  // touches x + y = n+1
        down(1);
      }
      continue;
    }
    // Bounding square: (lo-1, n-lo+1) down to (hi, n-hi).  Descend to one
    // unit below the dot of the next column, then move right while no dot
    // falls below the travel line.
    int x = b.lo - 1, y = n - b.lo + 1;
    while (x < b.hi) {
      const int target = g.perm[x] - 1;  // bottom edge of column x+1's dot cell
      down(y - target);
      y = target;
      while (x < b.hi && g.perm[x] > y) {
        right(1);
        ++x;
      }
    }
  }
  right(1);  // (n, 0) -> (n+1, 0)
  return path;
}

DyckPath to_dyck(const LatticePath& path) {
  // Height above the x-axis after mirroring in x + y = n+1 and rotating:
  // a down step raises, a right step lowers.
  DyckPath out;
  out.steps.reserve(path.steps.size());
  for (LatticeStep s : path.steps)
    out.steps.push_back(s == LatticeStep::down ? DyckStep::up : DyckStep::down);
  return out;
}

bool is_valid(const LatticePath& path) {
  const int n = path.n;
  if (static_cast<int>(path.steps.size()) != 2 * (n + 1)) return false;
  int x = 0, y = n + 1;
  for (LatticeStep s : path.steps) {
    if (s == LatticeStep::down)
      --y;
    else
      ++x;
    if (x + y > n + 1 || x > n + 1 || y < 0) return false;
  }
  return x == n + 1 && y == 0;
}

bool is_valid(const DyckPath& path) {
  if (path.steps.size() % 2 != 0) return false;
  int height = 0;
  for (DyckStep s : path.steps) {
    height += s == DyckStep::up ? 1 : -1;
    if (height < 0) return false;
  }
  return height == 0;
}

bool touches_boundary(const LatticePath& path) {
  const int n = path.n;
  int x = 0, y = n + 1;
  for (std::size_t i = 0; i + 1 < path.steps.size(); ++i) {
    if (path.steps[i] == LatticeStep::down)
      --y;
    else
      ++x;
    if (x + y == n + 1) return true;
  }
  return false;
}

std::string to_string(const LatticePath& path) {
  std::string out;
  for (LatticeStep s : path.steps) out += static_cast<char>(s);
  return out;
}

std::string to_string(const DyckPath& path) {
  std::string out;
  for (DyckStep s : path.steps) out += static_cast<char>(s);
  return out;
}

CertifyReport certify_bijection(int n, const BigInt& budget) {
  CertifyReport report;
  report.n = n;
  report.expected = catalan_number(n + 1);

  EnumSpec spec{n, 2, budget};
  std::vector<ColoredPermutation> avoiders = collect_avoiders(spec, avoidance_set());
  report.avoider_count = static_cast<long long>(avoiders.size());

  report.images_valid = true;
  report.images_distinct = true;
  std::set<std::string> seen;
  for (const auto& g : avoiders) {
    const LatticePath path = to_lattice_path(g);
    const DyckPath dyck = to_dyck(path);
    if (!is_valid(path) || !is_valid(dyck) || dyck.semilength() != n + 1) {
      report.images_valid = false;
      if (report.failure.empty())
        report.failure = "invalid image " + to_string(path) + " for " + to_text(g);
      continue;
    }
    if (!seen.insert(to_string(dyck)).second) {
      report.images_distinct = false;
      if (report.failure.empty())
        report.failure = "duplicate image " + to_string(dyck) + " reached by " + to_text(g);
    }
  }
  if (report.failure.empty() && report.avoider_count != report.expected) {
    std::ostringstream os;
    os << "avoider count " << report.avoider_count << " differs from Catalan value "
       << report.expected;
    report.failure = os.str();
  }
  return report;
}

std::string matrix_art(const ColoredPermutation& g) {
  const int n = g.size();
  if (n == 0) return "(empty)\n";
  // Character cell (row, col) layout: corners every (2, 4); dot for value v in
  // column i sits at row 2(n - v) + 1, centered in a 3-wide cell.
  const int rows = 2 * n + 1, cols = 4 * n + 1;
  std::vector<std::string> canvas(rows, std::string(cols, ' '));
  auto corner_row = [&](int y) { return 2 * (n - y); };
  auto corner_col = [&](int x) { return 4 * x; };
  for (const Block& b : reverse_irreducible_blocks(g.perm).blocks) {
    const int top = n - b.lo + 1, bottom = n - b.hi;  // value range of the block
    const int r0 = corner_row(top), r1 = corner_row(bottom);
    const int c0 = corner_col(b.lo - 1), c1 = corner_col(b.hi);
    for (int c = c0; c <= c1; ++c) canvas[r0][c] = canvas[r1][c] = '-';
    for (int r = r0; r <= r1; ++r) canvas[r][c0] = canvas[r][c1] = '|';
    canvas[r0][c0] = canvas[r0][c1] = canvas[r1][c0] = canvas[r1][c1] = '+';
  }
  for (int i = 1; i <= n; ++i) {
    const int v = g.perm[i - 1];
    canvas[2 * (n - v) + 1][4 * (i - 1) + 2] = static_cast<char>('0' + g.colors[i - 1]);
  }
  std::string out;
  for (const auto& line : canvas) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace wreath
