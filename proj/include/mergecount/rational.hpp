#ifndef MERGECOUNT_RATIONAL_HPP
#define MERGECOUNT_RATIONAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include "mergecount/dyadic.hpp"

namespace mergecount {

/// General rational p/q in lowest terms, q > 0. Only the certified
/// approximation path for non-dyadic arguments uses it.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Integer numerator, Integer denominator = 1);
  Rational(const Dyadic& d);  // NOLINT(google-explicit-constructor)

  Integer numerator() const { return num_; }
  Integer denominator() const { return den_; }

  bool is_dyadic() const { return (den_ & (den_ - 1)) == 0; }
  Dyadic to_dyadic() const;

  Integer floor() const;
  Rational frac() const { return *this - Rational(floor()); }
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  Rational operator-() const { return Rational(checked::sub(0, num_), den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;

 private:
  Integer num_ = 0;
  Integer den_ = 1;
};

Rational zigzag(const Rational& x);

/// Accepts "p/q", "p/2^e", integers and terminating decimals.
Rational parse_rational(std::string_view text);

}  // namespace mergecount

#endif  // MERGECOUNT_RATIONAL_HPP
