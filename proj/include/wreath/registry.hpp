#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wreath/core.hpp"
#include "wreath/numbers.hpp"

// Registry binding each verified counting formula to the pattern set whose
// avoiders it counts.  Entries drive the `formula` and `verify` commands; the
// ids are stable interface.

namespace wreath {

struct FormulaEntry {
  std::string id;
  std::string description;
  PatternSet patterns;
  Mode mode;
  int fixed_k = 0;  // 0: any k >= 1; otherwise the only admissible k
  int min_n = 0;    // smallest n the formula claims
  std::function<BigInt(int n, int k)> value;
};

const std::vector<FormulaEntry>& formula_registry();
const FormulaEntry* find_formula(std::string_view id);

}  // namespace wreath
