// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mergecount/counts.hpp"
#include "mergecount/dyadic.hpp"
#include "mergecount/fractal.hpp"
#include "mergecount/oracle.hpp"

using namespace mergecount;

namespace {

// Returns an empty optional on success, otherwise a description of the
// first counterexample.
using Criterion = std::function<std::optional<std::string>()>;

struct Entry {
  const char* id;
  const char* title;
  double time_limit_s;  // 0 = no limit stated
  Criterion run;
};

std::string n_is(std::int64_t n) { return "n=" + std::to_string(n); }

std::optional<std::string> formula_agreement() {
  for (std::int64_t n = 1; n <= 65536; ++n) {
    Integer b = b_recurrence(n);
    if (b_zigzag(n) != b || b_alt(n) != b || digit_sum(n) != b) return n_is(n);
  }
  return std::nullopt;
}

std::optional<std::string> worst_agreement() {
  for (std::int64_t n = 1; n <= 65536; ++n) {
    if (w_closed(n) != w_sum(n)) return n_is(n);
  }
  return std::nullopt;
}

std::optional<std::string> oracle_equality() {
  for (std::int64_t n = 1; n <= 2048; ++n) {
    if (merge_sort_count(best_case_input(n)).comparisons != b_recurrence(n)) {
      return n_is(n) + " (best case)";
    }
    if (merge_sort_count(worst_case_input(n)).comparisons != w_closed(n)) {
      return n_is(n) + " (worst case)";
    }
  }
  return std::nullopt;
}

std::optional<std::string> floor_sum_grids() {
  for (std::int64_t n = 0; n <= 256; ++n) {
    for (std::int64_t m = 1; m <= 64; ++m) {
      auto id = identity_theorem_2_2(n, m);
      if (Dyadic::integer(id.lhs) != id.rhs) return n_is(n) + " m=" + std::to_string(m) + " (zigzag)";
      if (identity_appendix_b(n, m) != n) return n_is(n) + " m=" + std::to_string(m) + " (partition)";
    }
  }
  return std::nullopt;
}

std::optional<std::string> level_decomposition() {
  for (std::int64_t n = 1; n <= 4096; ++n) {
    Integer total = 0;
    for (int k = 0; k <= floor_lg(n); ++k) {
      Integer closed = level_comps(n, k);
      if (closed != level_comps_direct(n, k)) return n_is(n) + " k=" + std::to_string(k);
      total += closed;
    }
    if (total != b_recurrence(n)) return n_is(n) + " (sum of levels)";
  }
  return std::nullopt;
}

std::optional<std::string> takagi_bridge() {
  for (std::int64_t n = 1; n <= 1024; ++n) {
    const int c = ceil_lg(n);
    const Integer b = b_recurrence(n);
    for (int k = c; k <= c + 8; ++k) {
      if (takagi_from_b(n, k) != takagi_dyadic(Dyadic(n, k))) return n_is(n) + " k=" + std::to_string(k);
      if (b_from_takagi(n, k) != b) return n_is(n) + " k=" + std::to_string(k) + " (inverse)";
    }
    if (!is_power_of_two(n)) {
      const int f = floor_lg(n);
      Dyadic outside(n * f - 2 * b, f);
      if (!(takagi_at_floor_lg(n) > outside)) return n_is(n) + " (strict failure)";
    }
  }
  return std::nullopt;
}

std::optional<std::string> point_values() {
  for (int k = 2; k <= 20; ++k) {
    if (takagi_dyadic(Dyadic(1, k)) != Dyadic(k, k)) return "1/2^" + std::to_string(k);
    if (takagi_dyadic(Dyadic(3, k)) != Dyadic(3 * k - 4, k)) return "3/2^" + std::to_string(k);
  }
  for (Integer p : {1, 2}) {
    ApproxValue a = takagi_approx(p, 3, 30);
    if (a.error_bound > Dyadic(1, 30) || !a.contains(Rational(2, 3))) {
      return "approx at " + to_string(p) + "/3 = " + a.value.to_decimal();
    }
  }
  return std::nullopt;
}

std::optional<std::string> two_b_minus_w_band() {
  std::vector<std::int64_t> bottom;
  for (int k = 0; k <= 20; ++k) {
    Integer w = checked::pow2(k + 1) + (k % 2 == 0 ? 1 : -1);
    if (w % 3 == 0 && w / 3 <= 65536) bottom.push_back(static_cast<std::int64_t>(w / 3));
  }
  for (std::int64_t n = 1; n <= 65536; ++n) {
    Integer d = diff_2b_w(n);
    if (Dyadic::integer(d) != Dyadic::integer(n - 1) - big_f(n)) return n_is(n) + " (n-1-F)";
    if (2 * d < n - 1 || d > n - 1) return n_is(n) + " (band)";
    if ((d == n - 1) != is_power_of_two(n)) return n_is(n) + " (upper equality)";
    bool witness = std::ranges::find(bottom, n) != bottom.end();
    if ((2 * d == n - 1) != witness) return n_is(n) + " (lower equality)";
  }
  return std::nullopt;
}

std::optional<std::string> tree_structure() {
  for (std::int64_t n = 1; n <= 4096; ++n) {
    RecursionTree t = build_tree(n);
    const int h = ceil_lg(n);
    if (t.depth() != h) return n_is(n) + " (depth)";
    if (t.leaf_count() != static_cast<std::size_t>(n)) return n_is(n) + " (leaves)";
    for (int i = 0; i <= h; ++i) {
      const auto& sizes = t.levels[static_cast<std::size_t>(i)];
      auto [lo, hi] = std::ranges::minmax(sizes);
      if (hi - lo > 1) return n_is(n) + " level " + std::to_string(i) + " (spread)";
      if (i < h) {
        if (sizes.size() != (std::size_t{1} << i)) return n_is(n) + " level " + std::to_string(i) + " (width)";
        if (t.level_worst_comps(i) != n - (std::int64_t{1} << i)) {
          return n_is(n) + " level " + std::to_string(i) + " (comps)";
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> zigzag_lemmas() {
  for (std::int64_t n = 1; n <= 512; ++n) {
    const int f = floor_lg(n);
    const int top = ceil_lg(n) + 10;
    for (int k = f + 2; k <= top; ++k) {
      if (zigzag(Dyadic(n, k)).scaled(k) != Dyadic::integer(n)) {
        return n_is(n) + " k=" + std::to_string(k) + " (2^k Zigzag(n/2^k) = n)";
      }
    }
    for (int k = f + 1; k <= top; ++k) {
      Dyadic tail;
      for (int i = f + 2; i <= k; ++i) tail += zigzag(Dyadic(n, i)).scaled(i);
      if (tail != Dyadic::integer(n * k - n * (f + 1))) return n_is(n) + " k=" + std::to_string(k) + " (tail)";
      Dyadic full;
      for (int i = 1; i <= k; ++i) full += zigzag(Dyadic(n, i)).scaled(i);
      if (takagi_dyadic(Dyadic(n, k)).scaled(k) != full) {
        return n_is(n) + " k=" + std::to_string(k) + " (finite form)";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> random_sandwich() {
  for (std::int64_t n : {10, 100, 1000}) {
    const Integer b = b_recurrence(n);
    const Integer w = w_closed(n);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      auto trace = merge_sort_count(random_input(n, seed));
      Integer c = trace.comparisons;
      if (c < b || c > w) return n_is(n) + " seed=" + std::to_string(seed) + " comps=" + to_string(c);
      if (!std::ranges::is_sorted(trace.output)) return n_is(n) + " seed=" + std::to_string(seed) + " unsorted";
    }
  }
  return std::nullopt;
}

}  // namespace

int main() {
  const std::vector<Entry> criteria = {
      {"AC01", "B recurrence = zigzag form = alternate form = digit sum, n <= 65536", 30,
       formula_agreement},
      {"AC02", "W closed form = ceiling-log sum, n <= 65536", 10, worst_agreement},
      {"AC03", "instrumented MergeSort hits B and W exactly, n <= 2048", 60, oracle_equality},
      {"AC04", "zigzag floor-sum and partition grids, n <= 256, m <= 64", 0, floor_sum_grids},
      {"AC05", "level decomposition and per-level closed form, n <= 4096", 0, level_decomposition},
      {"AC06", "Takagi bridge both directions and strict failure below domain, n <= 1024", 0,
       takagi_bridge},
      {"AC07", "Takagi closed point values and 2/3 enclosure at K = 30", 0, point_values},
      {"AC08", "(n-1)/2 <= 2B-W = n-1-F <= n-1 with exact equality cases, n <= 65536", 0,
       two_b_minus_w_band},
      {"AC09", "recursion tree depth, spread, widths and level comps, n <= 4096", 0, tree_structure},
      {"AC10", "zigzag lemmas for n <= 512, k up to ceil_lg(n) + 10", 0, zigzag_lemmas},
      {"AC11", "random permutations sort within [B, W], n in {10, 100, 1000}", 0, random_sandwich},
  };

  int failures = 0;
  for (const Entry& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::optional<std::string> failure;
    try {
      failure = c.run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!failure && c.time_limit_s > 0 && seconds > c.time_limit_s) {
      failure = "took " + std::to_string(seconds) + " s";
    }
    if (failure) ++failures;
    std::printf("%s %s  %s  (%.2f s", c.id, failure ? "FAIL" : "PASS", c.title, seconds);
    if (c.time_limit_s > 0) std::printf(", limit %.0f s", c.time_limit_s);
    std::printf(")%s%s\n", failure ? "  counterexample: " : "", failure ? failure->c_str() : "");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
