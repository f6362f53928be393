#ifndef MERGECOUNT_TESTS_SUPPORT_HPP
#define MERGECOUNT_TESTS_SUPPORT_HPP

// Test-only helpers: doctest printers and independent oracles that never
// call into the code paths they check.

#include <doctest.h>

#include <cstdint>
#include <map>
#include <string>

#include "mergecount/dyadic.hpp"

namespace doctest {

template <>
struct StringMaker<__int128> {
  static String convert(__int128 value) { return mergecount::to_string(value).c_str(); }
};

template <>
struct StringMaker<mergecount::Dyadic> {
  static String convert(const mergecount::Dyadic& value) { return value.to_fraction().c_str(); }
};

}  // namespace doctest

namespace oracle {

using mergecount::Integer;

// Literal top-down recursion with a memo table.
inline Integer naive_b(std::int64_t n, std::map<std::int64_t, Integer>& memo) {
  if (n == 1) return 0;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Integer value = n / 2 + naive_b(n / 2, memo) + naive_b(n - n / 2, memo);
  memo.emplace(n, value);
  return value;
}

inline Integer naive_b(std::int64_t n) {
  std::map<std::int64_t, Integer> memo;
  return naive_b(n, memo);
}

// F~(p / 2^e) * 4^e as an integer, from the series with plain integer
// arithmetic: term i is Zigzag(p 2^i / 2^e) / 2^i.
inline Integer takagi_scaled(std::int64_t p, int e) {
  const Integer period = Integer{1} << e;
  Integer total = 0;
  for (int i = 0; i < e; ++i) {
    Integer r = ((Integer{p} << i) % period + period) % period;
    Integer z = r < period - r ? r : period - r;  // Zigzag * 2^e
    total += z << (e - i);                        // * 2^e / 2^i
  }
  return total;
}

inline mergecount::Dyadic takagi(std::int64_t p, int e) {
  return mergecount::Dyadic(takagi_scaled(p, e), 2 * e);
}

}  // namespace oracle

#endif  // MERGECOUNT_TESTS_SUPPORT_HPP
