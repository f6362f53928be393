#include "mergecount/rational.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mergecount {

namespace {

Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(Integer numerator, Integer denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  if (denominator < 0) {
    numerator = checked::sub(0, numerator);
    denominator = checked::sub(0, denominator);
  }
  Integer g = gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational::Rational(const Dyadic& d) : Rational(d.numerator(), checked::pow2(d.exponent())) {}

Dyadic Rational::to_dyadic() const {
  if (!is_dyadic()) throw std::logic_error("rational " + to_string() + " is not dyadic");
  auto low = static_cast<std::uint64_t>(static_cast<unsigned __int128>(den_));
  auto high = static_cast<std::uint64_t>(static_cast<unsigned __int128>(den_) >> 64);
  int e = low != 0 ? std::countr_zero(low) : 64 + std::countr_zero(high);
  return Dyadic(num_, e);
}

Integer Rational::floor() const {
  Integer q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational operator+(const Rational& a, const Rational& b) {
  Integer g = gcd(a.den_, b.den_);
  Integer lhs = checked::mul(a.num_, b.den_ / g);
  Integer rhs = checked::mul(b.num_, a.den_ / g);
  return Rational(checked::add(lhs, rhs), checked::mul(a.den_ / g, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  Integer g1 = gcd(a.num_, b.den_);
  Integer g2 = gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(checked::mul(a.num_ / g1, b.num_ / g2),
                  checked::mul(a.den_ / g2, b.den_ / g1));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return checked::mul(a.num_, b.den_) <=> checked::mul(b.num_, a.den_);
}

std::string Rational::to_string() const {
  return mergecount::to_string(num_) + "/" + mergecount::to_string(den_);
}

Rational zigzag(const Rational& x) {
  Rational below = x.frac();
  return std::min(below, Rational(1) - below);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos || text.substr(slash + 1).starts_with("2^")) {
    return Rational(parse_dyadic(text));
  }
  Dyadic p = parse_dyadic(text.substr(0, slash));
  Dyadic q = parse_dyadic(text.substr(slash + 1));
  if (!p.is_integer() || !q.is_integer()) {
    throw std::invalid_argument("rational '" + std::string(text) + "' needs integer parts");
  }
  if (q.is_zero()) throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
  return Rational(p.numerator(), q.numerator());
}

}  // namespace mergecount
