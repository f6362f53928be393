#include "mergecount/dyadic.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace mergecount {

namespace {

constexpr Integer kMax = std::numeric_limits<Integer>::max();
constexpr Integer kMin = std::numeric_limits<Integer>::min();
constexpr int kMaxExponent = 126;

[[noreturn]] void overflow(const char* what) {
  throw std::overflow_error(std::string("integer overflow in ") + what);
}

int count_trailing_zeros(Integer v) {
  auto u = static_cast<unsigned __int128>(v);
  auto low = static_cast<std::uint64_t>(u);
  if (low != 0) return std::countr_zero(low);
  return 64 + std::countr_zero(static_cast<std::uint64_t>(u >> 64));
}

// floor(v / 2^k) for k >= 0; arithmetic shift rounds toward -infinity.
Integer floor_shift(Integer v, int k) {
  if (k >= 127) return v < 0 ? -1 : 0;
  return v >> k;
}

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  Integer value = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    }
    value = checked::add(checked::mul(value, 10), negative ? -(c - '0') : (c - '0'));
  }
  return value;
}

}  // namespace

namespace checked {

Integer add(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add");
  return r;
}

Integer sub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
  return r;
}

Integer mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
  return r;
}

Integer shl(Integer a, int k) {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (a == 0) return 0;
  if (k >= 127 || a > (kMax >> k) || a < (kMin >> k)) overflow("shift");
  return a * (Integer{1} << k);
}

Integer pow2(int k) { return shl(1, k); }

}  // namespace checked

std::string to_string(Integer value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  auto magnitude = negative ? static_cast<unsigned __int128>(-(value + 1)) + 1
                            : static_cast<unsigned __int128>(value);
  std::string digits;
  while (magnitude != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

int floor_lg(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("floor_lg requires n >= 1");
  return std::bit_width(static_cast<std::uint64_t>(n)) - 1;
}

int ceil_lg(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("ceil_lg requires n >= 1");
  return n == 1 ? 0 : std::bit_width(static_cast<std::uint64_t>(n - 1));
}

bool is_power_of_two(std::int64_t n) {
  return n > 0 && std::has_single_bit(static_cast<std::uint64_t>(n));
}

Dyadic::Dyadic(Integer numerator, int exponent) : numerator_(numerator), exponent_(exponent) {
  if (exponent < 0) throw std::invalid_argument("dyadic exponent must be non-negative");
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  int shift = std::min(exponent_, count_trailing_zeros(numerator_));
  numerator_ >>= shift;
  exponent_ -= shift;
  if (exponent_ > kMaxExponent) overflow("dyadic exponent");
}

Integer Dyadic::floor() const { return floor_shift(numerator_, exponent_); }

Integer Dyadic::ceil() const { return is_integer() ? numerator_ : floor() + 1; }

Dyadic Dyadic::frac() const {
  if (is_integer()) return {};
  // numerator mod 2^exponent, always non-negative
  Integer mask = (Integer{1} << exponent_) - 1;
  return Dyadic(numerator_ & mask, exponent_);
}

Integer Dyadic::to_integer() const {
  if (!is_integer()) {
    throw std::logic_error("expected an integer, got " + to_fraction());
  }
  return numerator_;
}

Dyadic Dyadic::scaled(int k) const {
  if (is_zero()) return {};
  if (k <= exponent_) return Dyadic(numerator_, exponent_ - k);
  return Dyadic(checked::shl(numerator_, k - exponent_), 0);
}

Dyadic Dyadic::operator-() const {
  if (numerator_ == kMin) overflow("negate");
  Dyadic r;
  r.numerator_ = -numerator_;
  r.exponent_ = exponent_;
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  int e = std::max(exponent_, rhs.exponent_);
  Integer a = checked::shl(numerator_, e - exponent_);
  Integer b = checked::shl(rhs.numerator_, e - rhs.exponent_);
  *this = Dyadic(checked::add(a, b), e);
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) {
  int e = std::max(exponent_, rhs.exponent_);
  Integer a = checked::shl(numerator_, e - exponent_);
  Integer b = checked::shl(rhs.numerator_, e - rhs.exponent_);
  *this = Dyadic(checked::sub(a, b), e);
  return *this;
}

Dyadic& Dyadic::operator*=(const Dyadic& rhs) {
  *this = Dyadic(checked::mul(numerator_, rhs.numerator_), exponent_ + rhs.exponent_);
  return *this;
}

std::strong_ordering operator<=>(const Dyadic& lhs, const Dyadic& rhs) {
  if (lhs.sign() != rhs.sign()) return lhs.sign() <=> rhs.sign();
  int e = std::max(lhs.exponent_, rhs.exponent_);
  return checked::shl(lhs.numerator_, e - lhs.exponent_) <=>
         checked::shl(rhs.numerator_, e - rhs.exponent_);
}

std::string Dyadic::to_decimal() const {
  if (sign() < 0) return "-" + (-*this).to_decimal();
  std::string out = to_string(floor());
  if (is_integer()) return out;
  out.push_back('.');
  // remainder / 2^exponent, emitting one decimal digit per step; each step
  // removes one factor of two from the denominator so this terminates.
  Integer mask = (Integer{1} << exponent_) - 1;
  Integer remainder = numerator_ & mask;
  while (remainder != 0) {
    remainder = checked::mul(remainder, 10);
    out.push_back(static_cast<char>('0' + static_cast<int>(remainder >> exponent_)));
    remainder &= mask;
  }
  return out;
}

std::string Dyadic::to_fraction() const {
  return to_string(numerator_) + "/2^" + std::to_string(exponent_);
}

Dyadic zigzag(const Dyadic& x) {
  Dyadic below = x.frac();
  Dyadic above = Dyadic::integer(1) - below;
  if (below.is_zero()) return {};
  return std::min(below, above);
}

int floor_lg(const Dyadic& x) {
  if (x < Dyadic::integer(1)) throw std::invalid_argument("floor_lg requires x >= 1");
  Integer whole = x.floor();
  if (whole > std::numeric_limits<std::int64_t>::max()) {
    return 63 + floor_lg(static_cast<std::int64_t>(whole >> 63));
  }
  return floor_lg(static_cast<std::int64_t>(whole));
}

Dyadic parse_dyadic(std::string_view text) {
  auto fail = [&](const std::string& why) -> Dyadic {
    throw std::invalid_argument("cannot parse dyadic '" + std::string(text) + "': " + why);
  };
  if (text.empty()) return fail("empty");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer p = parse_integer(text.substr(0, slash));
    std::string_view denom = text.substr(slash + 1);
    if (denom.starts_with("2^")) {
      Integer e = parse_integer(denom.substr(2));
      if (e < 0 || e > kMaxExponent) return fail("exponent out of range");
      return Dyadic(p, static_cast<int>(e));
    }
    Integer q = parse_integer(denom);
    if (q <= 0) return fail("denominator must be positive");
    if ((q & (q - 1)) != 0) return fail("denominator is not a power of two");
    return Dyadic(p, count_trailing_zeros(q));
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto all_digits = [](std::string_view s) {
      return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string_view whole = text.substr(0, dot);
    std::string_view digits = text.substr(dot + 1);
    bool negative = whole.starts_with('-');
    if (negative || whole.starts_with('+')) whole.remove_prefix(1);
    if (digits.empty() || !all_digits(digits)) return fail("malformed fraction digits");
    if (!all_digits(whole)) return fail("malformed integer part");
    // Right to left: r <- (r + digit) / 10. Each suffix 0.d_j...d_m is the
    // fractional part of 10^(j-1) x, so it is dyadic whenever x is; a factor
    // of 5 missing at any step means x is not dyadic.
    Dyadic fraction;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
      Dyadic shifted = fraction + Dyadic::integer(*it - '0');
      if (shifted.numerator() % 5 != 0) return fail("decimal is not a dyadic rational");
      fraction = Dyadic(shifted.numerator() / 5, shifted.exponent() + 1);
    }
    Dyadic value = Dyadic::integer(whole.empty() ? 0 : parse_integer(whole)) + fraction;
    return negative ? -value : value;
  }

  return Dyadic::integer(parse_integer(text));
}

}  // namespace mergecount
