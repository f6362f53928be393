#ifndef MERGECOUNT_FRACTAL_HPP
#define MERGECOUNT_FRACTAL_HPP

#include <cstdint>

#include "mergecount/dyadic.hpp"
#include "mergecount/rational.hpp"

namespace mergecount {

/// A dyadic value with a certified bound: |true value - value| <= error_bound.
struct ApproxValue {
  Dyadic value;
  Dyadic error_bound;

  bool contains(const Rational& x) const {
    return (Rational(value) - x).abs() <= Rational(error_bound);
  }
};

/// F(x) = sum_{k=1}^{floor_lg x} 2^k Zigzag(x / 2^k), for x >= 1.
Dyadic big_f(const Dyadic& x);
inline Dyadic big_f(std::int64_t n) { return big_f(Dyadic::integer(n)); }

/// k-term partial sum of the Takagi series, sum_{i<k} 2^-i Zigzag(2^i x).
Dyadic f_tilde_partial(int k, const Dyadic& x);

/// Exact Takagi (blancmange) function at a dyadic point. For x = p/2^e all
/// series terms with i >= e vanish, so the e-term partial sum is the value.
Dyadic takagi_dyadic(const Dyadic& x);

/// Takagi function at an arbitrary rational p/q, truncated to `terms` series
/// terms and enclosed by a dyadic value with error bound 2^-terms.
ApproxValue takagi_approx(Integer p, Integer q, int terms);

/// (n k - 2 B(n)) / 2^k, which equals takagi_dyadic(n / 2^k) when n <= 2^k.
/// Throws std::invalid_argument for n > 2^k.
Dyadic takagi_from_b(std::int64_t n, int k);

/// B(n) = n k / 2 - 2^{k-1} F~(n / 2^k), for n <= 2^k.
Integer b_from_takagi(std::int64_t n, int k);

/// F~(n / 2^floor_lg(n)) = (n (floor_lg(n) + 2) - 2 B(n)) / 2^floor_lg(n) - 2.
Dyadic takagi_at_floor_lg(std::int64_t n);

/// 2^floor_lg(x) F~(x / 2^floor_lg(x)), for x >= 1; agrees with big_f at integers.
Dyadic breve_f(const Dyadic& x);

/// The i-th term of the sequence
///   (i floor(2^i x) - 2 B(floor(2^i x))) / 2^i + 2x - 2,
/// which converges to F~(x) for x in [1, 2).
Rational takagi_via_best_case(const Rational& x, int i);

}  // namespace mergecount

#endif  // MERGECOUNT_FRACTAL_HPP
