#ifndef MERGECOUNT_COUNTS_HPP
#define MERGECOUNT_COUNTS_HPP

#include <cstdint>

#include "mergecount/dyadic.hpp"

namespace mergecount {

// Comparison counts of top-down MergeSort on n keys. B(n) is the best case,
// W(n) the worst case. Every function rejects n < 1 (and m < 1 where
// applicable) with std::invalid_argument; formula evaluators throw
// std::logic_error if a result that must be integral is not.

/// B(1) = 0, B(n) = floor(n/2) + B(floor(n/2)) + B(ceil(n/2)).
///
/// Evaluated bottom-up over the reachable subproblem sizes: level k of the
/// recursion only ever sees floor(n/2^k) and floor(n/2^k) + 1, so a pair of
/// values per level suffices and the cost is O(log n).
Integer b_recurrence(std::int64_t n);

/// B(n) = (n/2)(floor_lg n + 1) - sum_{k=0}^{floor_lg n} 2^k Zigzag(n / 2^{k+1}).
Integer b_zigzag(std::int64_t n);

/// B(n) = n ceil_lg(n) / 2 - (1/2) sum_{k=1}^{ceil_lg n} 2^k Zigzag(n / 2^k).
Integer b_alt(std::int64_t n);

/// W(n) = n ceil_lg(n) - 2^ceil_lg(n) + 1.
Integer w_closed(std::int64_t n);

/// W(n) as sum_{i=1}^{n} ceil_lg(i), by direct summation.
Integer w_sum(std::int64_t n);

/// Best-case comparisons at recursion level k, via n/2 - 2^k Zigzag(n / 2^{k+1}).
/// Requires 0 <= k <= floor_lg(n).
Integer level_comps(std::int64_t n, int k);

/// The same level count as the direct sum sum_{i=0}^{2^k - 1} floor((n + i) / 2^{k+1}).
Integer level_comps_direct(std::int64_t n, int k);

struct ZigzagIdentity {
  Integer lhs;  // direct floor sums
  Dyadic rhs;   // 2m Zigzag(n / 2m)
};

/// Both sides of
///   sum_{i=m}^{2m-1} floor((n+i)/2m) - sum_{i=0}^{m-1} floor((n+i)/2m) = 2m Zigzag(n/2m).
ZigzagIdentity identity_theorem_2_2(std::int64_t n, std::int64_t m);

/// sum_{i=0}^{m-1} floor((n+i)/m), which equals n.
Integer identity_appendix_b(std::int64_t n, std::int64_t m);

/// 2B(n) - W(n).
Integer diff_2b_w(std::int64_t n);

/// A(n,2): number of one bits over all integers 0 < i < n (popcount sum).
Integer digit_sum(std::int64_t n);

struct AnalysisRow {
  std::int64_t n = 0;
  Integer best = 0;
  Integer worst = 0;
  Dyadic fractal_at_n;
  Integer two_b_minus_w = 0;
  Integer digit_sum = 0;
};

AnalysisRow analyze(std::int64_t n);

}  // namespace mergecount

#endif  // MERGECOUNT_COUNTS_HPP
