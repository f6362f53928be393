#ifndef MERGECOUNT_DYADIC_HPP
#define MERGECOUNT_DYADIC_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mergecount {

/// Exact integer type used for every count and numerator in the library.
/// All arithmetic on it goes through the checked helpers below.
using Integer = __int128;

namespace checked {

Integer add(Integer a, Integer b);
Integer sub(Integer a, Integer b);
Integer mul(Integer a, Integer b);
/// a * 2^k for k >= 0, with overflow detection.
Integer shl(Integer a, int k);
Integer pow2(int k);

}  // namespace checked

std::string to_string(Integer value);

/// Largest k with 2^k <= n.
int floor_lg(std::int64_t n);
/// Smallest k with 2^k >= n.
int ceil_lg(std::int64_t n);
bool is_power_of_two(std::int64_t n);

/// A rational number numerator / 2^exponent held in canonical form:
/// exponent == 0 or numerator is odd. Equality is therefore structural.
class Dyadic {
 public:
  constexpr Dyadic() = default;
  Dyadic(Integer numerator, int exponent);

  static Dyadic integer(Integer value) { return Dyadic(value, 0); }

  Integer numerator() const { return numerator_; }
  int exponent() const { return exponent_; }

  bool is_integer() const { return exponent_ == 0; }
  bool is_zero() const { return numerator_ == 0; }
  int sign() const { return (numerator_ > 0) - (numerator_ < 0); }

  Integer floor() const;
  Integer ceil() const;
  /// x - floor(x), in [0, 1).
  Dyadic frac() const;

  /// Returns the value as an integer; throws std::logic_error when a
  /// fractional part remains.
  Integer to_integer() const;

  /// this * 2^k; k may be negative.
  Dyadic scaled(int k) const;

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& rhs);
  Dyadic& operator-=(const Dyadic& rhs);
  Dyadic& operator*=(const Dyadic& rhs);

  friend Dyadic operator+(Dyadic lhs, const Dyadic& rhs) { return lhs += rhs; }
  friend Dyadic operator-(Dyadic lhs, const Dyadic& rhs) { return lhs -= rhs; }
  friend Dyadic operator*(Dyadic lhs, const Dyadic& rhs) { return lhs *= rhs; }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& lhs, const Dyadic& rhs);

  /// Exact terminating decimal, e.g. 3/8 -> "0.375", -5/2 -> "-2.5".
  std::string to_decimal() const;
  /// Machine form "p/2^e" (integers render as "p/2^0").
  std::string to_fraction() const;

 private:
  Integer numerator_ = 0;
  int exponent_ = 0;
};

inline Dyadic dyadic_new(Integer p, int e) { return Dyadic(p, e); }

/// Distance from x to the nearest integer: min(x - floor x, ceil x - x).
Dyadic zigzag(const Dyadic& x);

/// floor(lg x) for x >= 1.
int floor_lg(const Dyadic& x);

/// Parses "p/2^e", "p/q" with q a power of two, an integer, or a
/// terminating decimal. Throws std::invalid_argument otherwise.
Dyadic parse_dyadic(std::string_view text);

}  // namespace mergecount

#endif  // MERGECOUNT_DYADIC_HPP
