#pragma once

#include <string>
#include <vector>

#include "wreath/numbers.hpp"

// Consistency checks: every closed form, generating function identity and
// structural property is checked against the brute-force oracle.  Each check
// caps its (n, k) grid intrinsically and honors the element-count budget, so
// callers trade coverage against time with one knob.

namespace wreath {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;  // counterexample or coverage summary
};

struct VerifyOptions {
  BigInt budget = 1'000'000;  // per-enumeration element cap
  int max_k = 8;              // alphabet sweep bound for formula checks
};

CheckResult check_reduction_properties();
CheckResult check_match_occurrence(const BigInt& budget);
CheckResult check_phi_transport(const BigInt& budget);
CheckResult check_phi_classes(const BigInt& budget);
CheckResult check_classical_degeneration(const BigInt& budget);
CheckResult check_formulas(const BigInt& budget, int max_k);
CheckResult check_exact_single_all_patterns(const BigInt& budget);
CheckResult check_mahonian_table();
CheckResult check_distribution_mahonian(const BigInt& budget);
CheckResult check_partial_permutation_identities();
CheckResult check_ogf_routes(const BigInt& budget);
CheckResult check_egf_product();
CheckResult check_reference_sequences(const BigInt& budget);
CheckResult check_a002720(const BigInt& budget);
CheckResult check_catalan_certification(const BigInt& budget);
CheckResult check_forced_colors(const BigInt& budget);
CheckResult check_boundary_touch(const BigInt& budget);
CheckResult check_serial_parallel(const BigInt& budget);

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace wreath
