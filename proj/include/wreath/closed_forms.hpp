#pragma once

#include <span>
#include <vector>

#include "wreath/numbers.hpp"

// Exact closed forms for avoider counts, plus the combinatorial helpers they
// are built from.  Everything returns arbitrary-precision integers; the two
// formulas that pass through rationals certify integrality before returning.

namespace wreath {

using AvSequence = std::vector<BigInt>;

BigInt factorial(int n);
BigInt binomial(int n, int r);            // 0 outside 0 <= r <= n
BigInt multinomial(int n, std::span<const int> parts);  // parts must sum to n
BigInt falling(int k, int j);             // k (k-1) ... (k-j+1), 1 for j = 0
BigInt catalan_number(int n);
BigInt fibonacci_number(int n);           // F_1 = F_2 = 1

// Coefficient of q^j in [i]_q! = (1)(1+q)...(1+q+...+q^(i-1)).
BigInt mahonian(int i, int j);
// Rows 0..n_max of the Mahonian triangle, row i holding degrees 0..i(i-1)/2.
std::vector<std::vector<BigInt>> mahonian_table(int n_max);

// Sum over compositions i_1+...+i_k = n of multinomial(n; i)^2.
BigInt multinomial_sq_sum(int n, int k);
// Same sum with each term weighted by weights[i_1]*...*weights[i_k];
// weights must cover 0..n.
BigInt weighted_multinomial_sq_sum(int n, int k, const AvSequence& weights);
// Weighted sum with Catalan numbers as weights.
BigInt catalan_multinomial_sq_sum(int n, int k);

// Statistic distribution transport: sum over compositions i of n and j-vector
// compositions jv of j of  prod_m stat[i_m][jv_m] * multinomial(n; i)^2.
// stat needs rows 0..n; entries beyond a row's length count as 0.
BigInt occurrence_distribution_sum(int n, int k, long long j,
                                   const std::vector<std::vector<BigInt>>& stat);

// sum_{j=0}^{n} j! C(n,j)^2  (partial permutations / A002720).
BigInt factorial_binomial_sq_sum(int n);

// Avoider counts determined by a color-word class alone:
//   1: all colors distinct            C(k,n) n! n!
//   2: colors weakly increasing       C(n+k-1,n) n!
//   3: colors strictly increasing     C(k,n) n!
//   4: colors constant                k n!
BigInt signs_closed_form(int variant, int n, int k);

// sum over compositions a of n into k parts of multinomial(n; a) prod av[a_i];
// the coefficient-of-t^n rule for the k-th power of an exponential generating
// function with counts av.  av must cover 0..n.
BigInt egf_power_sum(int n, int k, const AvSequence& av);

// Scaled counts k*av_n (1), C(k,n)*av_n (2), C(k,n)*n!*av_n (3).
BigInt gamma_closed_form(int variant, int n, int k, const BigInt& av_n);

// sum over compositions a of n into k parts of a_1! ... a_k!.
BigInt composition_factorial_sum(int n, int k);
// C(n+k-1, k-1), the number of weak compositions of n into k parts.
BigInt weak_composition_count(int n, int k);

// k * sum_{m=0}^{k-1} falling(k-1, m) C(n-1, m), with the recursion
// A(n,k) = k + k * sum_{s<n} A(s,k-1), A(n,1) = 1, as cross-check.
BigInt falling_factorial_sum(int n, int k);
BigInt falling_factorial_sum_by_recursion(int n, int k);

// sum_{j=0}^{n} j! (k-1)^j C(n,j)^2  (exact-mode single length-2 pattern).
BigInt single_pattern_exact_sum(int n, int k);

// Exact-mode triples over two colors:
//   1: F_{2n+1}
//   2: n! sum_{j=0}^{n} 1/C(n,j)
//   3: n! + n! sum_{j=1}^{n} 1/j
BigInt exact_triple_count(int variant, int n);

}  // namespace wreath
