#include "mergecount/counts.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "mergecount/fractal.hpp"
#include "mergecount/rational.hpp"

namespace mergecount {

namespace {

void require_positive(std::int64_t n, const char* name) {
  if (n < 1) {
    throw std::invalid_argument(std::string(name) + " must be >= 1, got " + std::to_string(n));
  }
}

void require_non_negative(std::int64_t n, const char* name) {
  if (n < 0) {
    throw std::invalid_argument(std::string(name) + " must be >= 0, got " + std::to_string(n));
  }
}

// floor(a / b) for b > 0
Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace

Integer b_recurrence(std::int64_t n) {
  require_positive(n, "n");
  // (B(a), B(a+1)) for a = floor(n / 2^k), starting at the top level where a = 1.
  Integer at = 0;        // B(1)
  Integer at_next = 1;   // B(2)
  for (int k = floor_lg(n) - 1; k >= 0; --k) {
    Integer a = n >> (k + 1);
    Integer parent = n >> k;
    Integer b_even = checked::add(a, checked::mul(2, at));                   // B(2a)
    Integer b_odd = checked::add(checked::add(a, at), at_next);              // B(2a+1)
    Integer b_even_next = checked::add(a + 1, checked::mul(2, at_next));     // B(2a+2)
    if (parent == 2 * a) {
      at = b_even;
      at_next = b_odd;
    } else {
      at = b_odd;
      at_next = b_even_next;
    }
  }
  return at;
}

Integer b_zigzag(std::int64_t n) {
  require_positive(n, "n");
  const int depth = floor_lg(n);
  Dyadic sum;
  for (int k = 0; k <= depth; ++k) {
    sum += zigzag(Dyadic(n, k + 1)).scaled(k);
  }
  Dyadic result = Dyadic(n, 1) * Dyadic::integer(depth + 1) - sum;
  return result.to_integer();
}

Integer b_alt(std::int64_t n) {
  require_positive(n, "n");
  const int height = ceil_lg(n);
  Dyadic sum;
  for (int k = 1; k <= height; ++k) {
    sum += zigzag(Dyadic(n, k)).scaled(k);
  }
  Dyadic result = Dyadic(checked::mul(n, height), 1) - sum.scaled(-1);
  return result.to_integer();
}

Integer w_closed(std::int64_t n) {
  require_positive(n, "n");
  const int height = ceil_lg(n);
  return checked::add(checked::sub(checked::mul(n, height), checked::pow2(height)), 1);
}

Integer w_sum(std::int64_t n) {
  require_positive(n, "n");
  Integer total = 0;
  for (std::int64_t i = 1; i <= n; ++i) total += ceil_lg(i);
  return total;
}

Integer level_comps(std::int64_t n, int k) {
  require_positive(n, "n");
  if (k < 0 || k > floor_lg(n)) {
    throw std::invalid_argument("level k must lie in [0, floor_lg(n)], got " + std::to_string(k));
  }
  Dyadic value = Dyadic(n, 1) - zigzag(Dyadic(n, k + 1)).scaled(k);
  return value.to_integer();
}

Integer level_comps_direct(std::int64_t n, int k) {
  require_positive(n, "n");
  if (k < 0 || k > floor_lg(n)) {
    throw std::invalid_argument("level k must lie in [0, floor_lg(n)], got " + std::to_string(k));
  }
  const Integer width = checked::pow2(k);
  const Integer divisor = checked::pow2(k + 1);
  Integer total = 0;
  for (Integer i = 0; i < width; ++i) total += (n + i) / divisor;
  return total;
}

ZigzagIdentity identity_theorem_2_2(std::int64_t n, std::int64_t m) {
  require_non_negative(n, "n");
  require_positive(m, "m");
  const Integer two_m = checked::mul(2, m);
  Integer upper = 0;
  Integer lower = 0;
  for (Integer i = m; i < two_m; ++i) upper += floor_div(n + i, two_m);
  for (Integer i = 0; i < m; ++i) lower += floor_div(n + i, two_m);

  Rational rhs = Rational(two_m) * zigzag(Rational(n, two_m));
  return {upper - lower, rhs.to_dyadic()};
}

Integer identity_appendix_b(std::int64_t n, std::int64_t m) {
  require_non_negative(n, "n");
  require_positive(m, "m");
  Integer total = 0;
  for (Integer i = 0; i < m; ++i) total = checked::add(total, floor_div(n + i, m));
  return total;
}

Integer diff_2b_w(std::int64_t n) {
  return checked::sub(checked::mul(2, b_recurrence(n)), w_closed(n));
}

Integer digit_sum(std::int64_t n) {
  require_positive(n, "n");
  Integer total = 0;
  for (std::int64_t i = 1; i < n; ++i) total += std::popcount(static_cast<std::uint64_t>(i));
  return total;
}

AnalysisRow analyze(std::int64_t n) {
  AnalysisRow row;
  row.n = n;
  row.best = b_recurrence(n);
  row.worst = w_closed(n);
  row.fractal_at_n = big_f(n);
  row.two_b_minus_w = diff_2b_w(n);
  row.digit_sum = digit_sum(n);
  return row;
}

}  // namespace mergecount
