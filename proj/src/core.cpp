#include "wreath/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wreath {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

int sign3(int a, int b) { return a < b ? -1 : (a == b ? 0 : 1); }

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = static_cast<int>(entries_.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[v]) fail("permutation entries must be a bijection on 1..n");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) fail("negative permutation size");
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

ColorWord::ColorWord(std::vector<int> letters, int k) : letters_(std::move(letters)), k_(k) {
  if (k_ < 1) fail("color alphabet size must be at least 1");
  for (int c : letters_)
    if (c < 0 || c >= k_) fail("color letter out of range 0..k-1");
}

ColoredPermutation::ColoredPermutation(Permutation p, ColorWord w)
    : perm(std::move(p)), colors(std::move(w)) {
  if (perm.size() != colors.size()) fail("permutation and color word lengths differ");
}

Permutation reduce_permutation(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return seq[a] < seq[b]; });
  std::vector<int> out(n);
  for (int rank = 0; rank < n; ++rank) {
    if (rank > 0 && seq[order[rank]] == seq[order[rank - 1]])
      fail("reduce_permutation requires distinct entries");
    out[order[rank]] = rank + 1;
  }
  return Permutation(std::move(out));
}

ColorWord reduce_word(std::span<const int> word) {
  std::vector<int> distinct(word.begin(), word.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), word[i]) -
                              distinct.begin());
  const int k = std::max<int>(1, static_cast<int>(distinct.size()));
  return ColorWord(std::move(out), k);
}

ColoredPattern::ColoredPattern(Permutation tau, ColorWord u, std::vector<Gap> gaps, Mode mode)
    : tau_(std::move(tau)), u_(std::move(u)), gaps_(std::move(gaps)), mode_(mode) {
  const int j = tau_.size();
  if (j < 1) fail("pattern length must be at least 1");
  if (u_.size() != j) fail("pattern color word length differs from pattern length");
  if (static_cast<int>(gaps_.size()) != j - 1) fail("pattern needs exactly length-1 gap flags");
  if (mode_ == Mode::reduced && reduce_word(u_.letters()).letters() != u_.letters())
    fail("reduced-mode pattern color word must equal its own reduction");
  tau_less_.resize(static_cast<std::size_t>(j) * j, 0);
  color_cmp_.resize(static_cast<std::size_t>(j) * j, 0);
  for (int p = 0; p < j; ++p)
    for (int q = 0; q < j; ++q) {
      tau_less_[static_cast<std::size_t>(p) * j + q] = tau_[p] < tau_[q];
      color_cmp_[static_cast<std::size_t>(p) * j + q] =
          static_cast<std::int8_t>(sign3(u_[p], u_[q]));
    }
}

bool ColoredPattern::all_adjacent() const {
  return std::all_of(gaps_.begin(), gaps_.end(), [](Gap g) { return g == Gap::adjacent; });
}

PatternSet::PatternSet(std::vector<ColoredPattern> patterns) : patterns_(std::move(patterns)) {
  if (patterns_.empty()) fail("pattern set must be non-empty");
  for (const auto& p : patterns_)
    if (p.mode() != patterns_.front().mode()) fail("pattern set mixes color matching modes");
}

namespace {

// Backtracking over increasing host positions.  Visit receives the complete
// 0-based position tuple and returns false to stop the search.
template <typename Visit>
bool search(const ColoredPattern& p, std::span<const int> sigma, std::span<const int> colors,
            Visit&& visit) {
  const int j = p.size();
  const int n = static_cast<int>(sigma.size());
  if (j > n) return true;
  const auto& tau_less = p.tau_less();
  const auto& color_cmp = p.color_cmp();
  const auto& u = p.u().letters();
  const auto& gaps = p.gaps();
  const bool exact = p.mode() == Mode::exact;
  std::vector<int> pos(j);

  auto consistent = [&](int d, int cand) {
    if (exact && colors[cand] != u[d]) return false;
    for (int e = 0; e < d; ++e) {
      if ((sigma[pos[e]] < sigma[cand]) != static_cast<bool>(tau_less[e * j + d])) return false;
      if (!exact && sign3(colors[pos[e]], colors[cand]) != color_cmp[e * j + d]) return false;
    }
    return true;
  };

  // returns false once visit asks to stop
  auto rec = [&](auto&& self, int d) -> bool {
    if (d == j) return visit(pos);
    if (d > 0 && gaps[d - 1] == Gap::adjacent) {
      const int cand = pos[d - 1] + 1;
      if (cand >= n) return true;
      pos[d] = cand;
      if (consistent(d, cand) && !self(self, d + 1)) return false;
      return true;
    }
    const int lo = d == 0 ? 0 : pos[d - 1] + 1;
    for (int cand = lo; cand <= n - (j - d); ++cand) {
      pos[d] = cand;
      if (consistent(d, cand) && !self(self, d + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

}  // namespace

std::vector<std::vector<int>> occurrences(const ColoredPattern& p, const ColoredPermutation& g) {
  std::vector<std::vector<int>> out;
  search(p, g.perm.entries(), g.colors.letters(), [&](const std::vector<int>& pos) {
    std::vector<int> tuple(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) tuple[i] = pos[i] + 1;
    out.push_back(std::move(tuple));
    return true;
  });
  return out;
}

bool contains(const ColoredPattern& p, std::span<const int> sigma, std::span<const int> colors) {
  bool found = false;
  search(p, sigma, colors, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

bool contains(const ColoredPattern& p, const ColoredPermutation& g) {
  return contains(p, g.perm.entries(), g.colors.letters());
}

long long count_occurrences(const ColoredPattern& p, std::span<const int> sigma,
                            std::span<const int> colors) {
  long long count = 0;
  search(p, sigma, colors, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

long long count_occurrences(const ColoredPattern& p, const ColoredPermutation& g) {
  return count_occurrences(p, g.perm.entries(), g.colors.letters());
}

long long count_matches(const ColoredPattern& p, const ColoredPermutation& g) {
  if (!p.all_adjacent()) fail("count_matches requires a pattern with all gaps adjacent");
  return count_occurrences(p, g);
}

bool avoids(const PatternSet& s, std::span<const int> sigma, std::span<const int> colors) {
  for (const auto& p : s.patterns())
    if (contains(p, sigma, colors)) return false;
  return true;
}

bool avoids(const PatternSet& s, const ColoredPermutation& g) {
  return avoids(s, g.perm.entries(), g.colors.letters());
}

namespace {

std::vector<int> map_perm(PhiMap a, const std::vector<int>& e) {
  std::vector<int> out(e);
  const int n = static_cast<int>(e.size());
  if (a == PhiMap::reverse)
    std::reverse(out.begin(), out.end());
  else
    for (int& v : out) v = n + 1 - v;
  return out;
}

std::vector<int> map_colors(PhiMap b, const std::vector<int>& w, int k) {
  std::vector<int> out(w);
  if (b == PhiMap::reverse)
    std::reverse(out.begin(), out.end());
  else
    for (int& v : out) v = k - 1 - v;
  return out;
}

}  // namespace

ColoredPermutation apply_phi(PhiMap a, PhiMap b, const ColoredPermutation& g) {
  return ColoredPermutation(Permutation(map_perm(a, g.perm.entries())),
                            ColorWord(map_colors(b, g.colors.letters(), g.k()), g.k()));
}

ColoredPermutation reverse(const ColoredPermutation& g) {
  return apply_phi(PhiMap::reverse, PhiMap::reverse, g);
}

ColoredPermutation complement(const ColoredPermutation& g) {
  return apply_phi(PhiMap::complement, PhiMap::complement, g);
}

ColoredPattern apply_phi(PhiMap a, PhiMap b, const ColoredPattern& p, int k) {
  for (int c : p.u().letters())
    if (c >= k) fail("pattern colors exceed alphabet for phi transport");
  std::vector<int> tau = map_perm(a, p.tau().entries());
  std::vector<int> u = map_colors(b, p.u().letters(), k);
  std::vector<Gap> gaps = p.gaps();
  if (a == PhiMap::reverse) std::reverse(gaps.begin(), gaps.end());
  ColorWord uw = p.mode() == Mode::reduced ? reduce_word(u) : ColorWord(u, k);
  return ColoredPattern(Permutation(std::move(tau)), std::move(uw), std::move(gaps), p.mode());
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

std::vector<int> split_ints(std::string_view s, const char* what) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string_view tok = s.substr(start, comma == std::string_view::npos ? comma : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      fail(std::string("cannot parse ") + what + " entry '" + std::string(tok) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string to_text(const ColoredPermutation& g) {
  std::ostringstream os;
  os << "sigma=" << join_ints(g.perm.entries()) << " colors=" << join_ints(g.colors.letters())
     << " k=" << g.k();
  return os.str();
}

ColoredPermutation parse_colored_permutation(std::string_view text) {
  std::optional<std::string_view> sigma_part, colors_part, k_part;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) break;
    std::size_t end = text.find(' ', i);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(i, end - i);
    i = end;
    auto eq = field.find('=');
    if (eq == std::string_view::npos) fail("expected key=value fields in colored permutation");
    std::string_view key = field.substr(0, eq), value = field.substr(eq + 1);
    if (key == "sigma")
      sigma_part = value;
    else if (key == "colors")
      colors_part = value;
    else if (key == "k")
      k_part = value;
    else
      fail("unknown field '" + std::string(key) + "' in colored permutation");
  }
  if (!sigma_part || !colors_part || !k_part)
    fail("colored permutation needs sigma=, colors= and k= fields");
  std::vector<int> k_vec = split_ints(*k_part, "k");
  if (k_vec.size() != 1) fail("k= must be a single integer");
  return ColoredPermutation(Permutation(split_ints(*sigma_part, "sigma")),
                            ColorWord(split_ints(*colors_part, "colors"), k_vec[0]));
}

std::string to_text(const ColoredPattern& p) {
  std::ostringstream os;
  for (int i = 0; i < p.size(); ++i) {
    if (i > 0 && p.gaps()[i - 1] == Gap::dash) os << '-';
    os << p.tau()[i];
  }
  os << '/';
  os << join_ints(p.u().letters());
  return os.str();
}

ColoredPattern parse_pattern(std::string_view text, Mode mode) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) fail("pattern needs '/' between entries and colors");
  std::string_view tau_part = text.substr(0, slash), color_part = text.substr(slash + 1);
  std::vector<int> tau;
  std::vector<Gap> gaps;
  bool expect_entry = true;
  for (char c : tau_part) {
    if (c >= '1' && c <= '9') {
      if (!expect_entry) gaps.push_back(Gap::adjacent);
      tau.push_back(c - '0');
      expect_entry = false;
    } else if (c == '-') {
      if (expect_entry) fail("misplaced dash in pattern '" + std::string(text) + "'");
      gaps.push_back(Gap::dash);
      expect_entry = true;
    } else {
      fail("unexpected character '" + std::string(1, c) + "' in pattern (entries are digits 1-9)");
    }
  }
  if (expect_entry) fail("pattern must not end with a dash");
  std::vector<int> colors = split_ints(color_part, "pattern color");
  int maxc = 0;
  for (int c : colors) {
    if (c < 0) fail("pattern colors must be non-negative");
    maxc = std::max(maxc, c);
  }
  return ColoredPattern(Permutation(std::move(tau)), ColorWord(std::move(colors), maxc + 1),
                        std::move(gaps), mode);
}

PatternSet parse_pattern_set(std::string_view text, Mode mode) {
  std::vector<ColoredPattern> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    std::string_view tok = text.substr(start, semi == std::string_view::npos ? semi : semi - start);
    if (!tok.empty()) out.push_back(parse_pattern(tok, mode));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (out.empty()) fail("pattern set text contains no patterns");
  return PatternSet(std::move(out));
}

std::string to_text(const PatternSet& s) {
  std::string out;
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ';';
    out += to_text(s.patterns()[i]);
  }
  return out;
}

}  // namespace wreath
