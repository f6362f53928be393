#include "mergecount/fractal.hpp"

#include <stdexcept>
#include <string>

#include "mergecount/counts.hpp"

namespace mergecount {

namespace {

const Dyadic kOne = Dyadic::integer(1);

void require_at_least_one(const Dyadic& x, const char* fn) {
  if (x < kOne) {
    throw std::invalid_argument(std::string(fn) + " requires x >= 1, got " + x.to_decimal());
  }
}

void require_fits(std::int64_t n, int k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
  if (k < 0) throw std::invalid_argument("k must be >= 0, got " + std::to_string(k));
  if (Integer{n} > checked::pow2(k)) {
    throw std::invalid_argument("precondition n <= 2^k violated: n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
}

}  // namespace

Dyadic big_f(const Dyadic& x) {
  require_at_least_one(x, "big_f");
  const int depth = floor_lg(x);
  Dyadic sum;
  for (int k = 1; k <= depth; ++k) sum += zigzag(x.scaled(-k)).scaled(k);
  return sum;
}

Dyadic f_tilde_partial(int k, const Dyadic& x) {
  if (k < 0) throw std::invalid_argument("term count must be >= 0");
  Dyadic sum;
  for (int i = 0; i < k; ++i) {
    Dyadic arg = x.scaled(i);
    // once 2^i x is an integer every later term vanishes too
    if (arg.is_integer()) break;
    sum += zigzag(arg).scaled(-i);
  }
  return sum;
}

Dyadic takagi_dyadic(const Dyadic& x) { return f_tilde_partial(x.exponent(), x.frac()); }

ApproxValue takagi_approx(Integer p, Integer q, int terms) {
  if (q == 0) throw std::invalid_argument("takagi_approx: denominator must be nonzero");
  if (terms < 1) throw std::invalid_argument("takagi_approx: terms must be >= 1");
  if (terms > 120) throw std::invalid_argument("takagi_approx: terms must be <= 120");
  Rational x(p, q);
  const Integer den = x.denominator();

  // 2^i x mod 1 = r_i / den with r_{i+1} = 2 r_i mod den, and
  // Zigzag(2^i x) = min(r_i, den - r_i) / den. The truncated series is
  // scaled / (den 2^{terms-1}).
  Integer residue = x.numerator() % den;
  if (residue < 0) residue += den;
  Integer scaled = 0;
  for (int i = 0; i < terms; ++i) {
    Integer z = residue < den - residue ? residue : den - residue;
    scaled = checked::add(scaled, checked::shl(z, terms - 1 - i));
    residue = checked::mul(residue, 2) % den;
  }

  // Round to the nearest multiple of 2^-(terms+2). The dropped tail is
  // 2^-terms F~(2^terms x) <= (2/3) 2^-terms and the rounding adds at most
  // 2^-(terms+3), so 2^-terms encloses the true value.
  Integer twice = checked::mul(scaled, 16);
  Integer rounded = (twice + den) / (2 * den);
  return {Dyadic(rounded, terms + 2), Dyadic(1, terms)};
}

Dyadic takagi_from_b(std::int64_t n, int k) {
  require_fits(n, k);
  Integer numerator = checked::sub(checked::mul(n, k), checked::mul(2, b_recurrence(n)));
  return Dyadic(numerator, k);
}

Integer b_from_takagi(std::int64_t n, int k) {
  require_fits(n, k);
  Dyadic value = Dyadic(checked::mul(n, k), 1) - takagi_dyadic(Dyadic(n, k)).scaled(k - 1);
  return value.to_integer();
}

Dyadic takagi_at_floor_lg(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
  const int depth = floor_lg(n);
  Integer numerator =
      checked::sub(checked::mul(n, depth + 2), checked::mul(2, b_recurrence(n)));
  return Dyadic(numerator, depth) - Dyadic::integer(2);
}

Dyadic breve_f(const Dyadic& x) {
  require_at_least_one(x, "breve_f");
  const int depth = floor_lg(x);
  return takagi_dyadic(x.scaled(-depth)).scaled(depth);
}

Rational takagi_via_best_case(const Rational& x, int i) {
  if (x < Rational(1) || x >= Rational(2)) {
    throw std::invalid_argument("takagi_via_best_case requires x in [1, 2), got " + x.to_string());
  }
  if (i < 0 || i > 62) throw std::invalid_argument("index i must lie in [0, 62]");
  const Integer scale = checked::pow2(i);
  Integer n = (Rational(scale) * x).floor();
  Integer numerator =
      checked::sub(checked::mul(i, n), checked::mul(2, b_recurrence(static_cast<std::int64_t>(n))));
  return Rational(numerator, scale) + Rational(2) * x - Rational(2);
}

}  // namespace mergecount
