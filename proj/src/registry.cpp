#include "wreath/registry.hpp"

#include "wreath/closed_forms.hpp"
#include "wreath/series.hpp"

namespace wreath {

namespace {

PatternSet reduced(const char* text) { return parse_pattern_set(text, Mode::reduced); }
PatternSet exact(const char* text) { return parse_pattern_set(text, Mode::exact); }

AvSequence ones(int n) { return AvSequence(n + 1, 1); }

AvSequence catalans(int n) {
  AvSequence out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = catalan_number(i);
  return out;
}

std::vector<FormulaEntry> build_registry() {
  std::vector<FormulaEntry> r;
  auto add = [&](std::string id, std::string description, PatternSet patterns, int fixed_k,
                 int min_n, std::function<BigInt(int, int)> value) {
    Mode mode = patterns.mode();
    r.push_back({std::move(id), std::move(description), std::move(patterns), mode, fixed_k, min_n,
                 std::move(value)});
  };

  add("mult", "equal-color rises forbidden; sum of squared multinomials", reduced("1-2/0,0"), 0, 0,
      [](int n, int k) { return multinomial_sq_sum(n, k); });
  add("len3", "equal-color length-3 rises forbidden; Catalan-weighted squared multinomials",
      reduced("1-2-3/0,0,0"), 0, 0,
      [](int n, int k) { return catalan_multinomial_sq_sum(n, k); });
  add("rise-01", "two colors, rise with color step 0->1 forbidden; sum j! C(n,j)^2 (A002720)",
      reduced("1-2/0,1"), 2, 0, [](int n, int) { return factorial_binomial_sq_sum(n); });

  add("signs-1", "equal colors on comparable pairs forbidden: colors distinct; C(k,n) n! n!",
      reduced("1-2/0,0;2-1/0,0"), 0, 1,
      [](int n, int k) { return signs_closed_form(1, n, k); });
  add("signs-2", "color descents forbidden: colors weakly increasing; C(n+k-1,n) n!",
      reduced("1-2/1,0;2-1/1,0"), 0, 1,
      [](int n, int k) { return signs_closed_form(2, n, k); });
  add("signs-3", "color descents and ties forbidden: colors strictly increasing; C(k,n) n!",
      reduced("1-2/0,0;1-2/1,0;2-1/0,0;2-1/1,0"), 0, 1,
      [](int n, int k) { return signs_closed_form(3, n, k); });
  add("signs-4", "color changes forbidden: colors constant; k n!",
      reduced("1-2/0,1;1-2/1,0;2-1/0,1;2-1/1,0"), 0, 1,
      [](int n, int k) { return signs_closed_form(4, n, k); });

  add("product-12", "rises with equal colors and color descents forbidden; k^n",
      reduced("1-2/0,0;1-2/1,0;2-1/1,0"), 0, 0,
      [](int n, int k) { return egf_power_sum(n, k, ones(n)); });
  add("product-21", "descents with equal colors and color descents forbidden; k^n",
      reduced("2-1/0,0;1-2/1,0;2-1/1,0"), 0, 0,
      [](int n, int k) { return egf_power_sum(n, k, ones(n)); });
  add("product-123",
      "1-2-3 with equal colors and color descents forbidden; k-th power of the Catalan egf",
      reduced("1-2-3/0,0,0;1-2/1,0;2-1/1,0"), 0, 0,
      [](int n, int k) { return egf_power_sum(n, k, catalans(n)); });

  add("gamma1-12", "constant colors forced, base pattern 1-2; k per admissible permutation",
      reduced("1-2/0,0;1-2/0,1;1-2/1,0;2-1/0,1;2-1/1,0"), 0, 1,
      [](int n, int k) { return gamma_closed_form(1, n, k, 1); });
  add("gamma1-123", "constant colors forced, base pattern 1-2-3; k times Catalan",
      reduced("1-2-3/0,0,0;1-2/0,1;1-2/1,0;2-1/0,1;2-1/1,0"), 0, 1,
      [](int n, int k) { return gamma_closed_form(1, n, k, catalan_number(n)); });
  add("gamma2-12", "strictly increasing colors forced, base pattern 1-2; C(k,n)",
      reduced("1-2/0,1;1-2/0,0;1-2/1,0;2-1/0,0;2-1/1,0"), 0, 1,
      [](int n, int k) { return gamma_closed_form(2, n, k, 1); });
  add("gamma2-123", "strictly increasing colors forced, base pattern 1-2-3; C(k,n) times Catalan",
      reduced("1-2-3/0,1,2;1-2/0,0;1-2/1,0;2-1/0,0;2-1/1,0"), 0, 1,
      [](int n, int k) { return gamma_closed_form(2, n, k, catalan_number(n)); });
  add("gamma3-12", "pairwise distinct colors forced, base pattern 1-2; C(k,n) n!",
      reduced("1-2/0,1;1-2/1,0;1-2/0,0;2-1/0,0"), 0, 1,
      [](int n, int k) { return gamma_closed_form(3, n, k, 1); });
  add("gamma3-123", "pairwise distinct colors forced, base pattern 1-2-3; C(k,n) n! times Catalan",
      reduced("1-2-3/0,1,2;1-2-3/0,2,1;1-2-3/1,0,2;1-2-3/1,2,0;1-2-3/2,0,1;1-2-3/2,1,0;"
              "1-2/0,0;2-1/0,0"),
      0, 1, [](int n, int k) { return gamma_closed_form(3, n, k, catalan_number(n)); });

  add("upsilon-1", "rises keep colors, descents never drop color; sum of factorial products",
      reduced("1-2/0,1;1-2/1,0;2-1/1,0"), 0, 1,
      [](int n, int k) { return composition_factorial_sum(n, k); });
  add("upsilon-2", "rises keep colors, descents raise color; C(n+k-1,k-1)",
      reduced("1-2/0,1;1-2/1,0;2-1/1,0;2-1/0,0"), 0, 1,
      [](int n, int k) { return weak_composition_count(n, k); });

  add("falling", "rises keep colors, descents change color; falling-factorial sum",
      reduced("1-2/0,1;1-2/1,0;2-1/0,0"), 0, 1,
      [](int n, int k) { return falling_factorial_sum(n, k); });

  add("ogf-upsilon", "color changes on rises forbidden; rational generating function",
      reduced("1-2/1,0;1-2/0,1"), 0, 0,
      [](int n, int k) { return rational_ogf_counts(k, n).back(); });

  add("exact-single", "one exact-colored length-2 pattern; sum j! (k-1)^j C(n,j)^2",
      exact("1-2/0,0"), 0, 0, [](int n, int k) { return single_pattern_exact_sum(n, k); });

  add("mw-1", "exact triple over two colors; odd-indexed Fibonacci F_{2n+1}",
      exact("1-2/0,0;1-2/0,1;2-1/1,1"), 2, 0,
      [](int n, int) { return exact_triple_count(1, n); });
  add("mw-2", "exact triple over two colors; n! times sum of inverse binomials",
      exact("1-2/0,1;1-2/1,0;2-1/0,1"), 2, 0,
      [](int n, int) { return exact_triple_count(2, n); });
  add("mw-3", "exact triple over two colors; n! (1 + harmonic number)",
      exact("1-2/0,0;1-2/0,1;2-1/0,0"), 2, 0,
      [](int n, int) { return exact_triple_count(3, n); });

  add("cat", "two colors, rises with color 0 first forbidden; Catalan C_{n+1}",
      reduced("1-2/0,0;1-2/0,1"), 2, 0, [](int n, int) { return catalan_number(n + 1); });

  return r;
}

}  // namespace

const std::vector<FormulaEntry>& formula_registry() {
  static const std::vector<FormulaEntry> registry = build_registry();
  return registry;
}

const FormulaEntry* find_formula(std::string_view id) {
  for (const auto& e : formula_registry())
    if (e.id == id) return &e;
  return nullptr;
}

}  // namespace wreath
