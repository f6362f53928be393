#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mergecount/counts.hpp"
#include "mergecount/oracle.hpp"
#include "support.hpp"

using namespace mergecount;

namespace {

// Brute force over every permutation of 0..n-1.
std::pair<std::uint64_t, std::uint64_t> min_max_comps(int n) {
  Keys keys = best_case_input(n);
  std::uint64_t lo = ~std::uint64_t{0};
  std::uint64_t hi = 0;
  do {
    std::uint64_t c = merge_sort_count(keys).comparisons;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  } while (std::next_permutation(keys.begin(), keys.end()));
  return {lo, hi};
}

}  // namespace

TEST_CASE("merge_count examples") {
  std::vector<int> a{0, 1};
  std::vector<int> b{2, 3};
  auto best = merge_count<int>(a, b);
  CHECK(best.merged == std::vector<int>{0, 1, 2, 3});
  CHECK(best.comps == 2);

  std::vector<int> c{1, 3};
  std::vector<int> d{0, 2};
  auto worst = merge_count<int>(c, d);
  CHECK(worst.merged == std::vector<int>{0, 1, 2, 3});
  CHECK(worst.comps == 3);

  std::vector<int> empty;
  std::vector<int> five{5};
  auto trivial = merge_count<int>(empty, five);
  CHECK(trivial.merged == std::vector<int>{5});
  CHECK(trivial.comps == 0);
}

TEST_CASE("merge_count is stable on ties") {
  using Tagged = std::pair<int, char>;
  auto by_key = [](const Tagged& x, const Tagged& y) { return x.first < y.first; };
  std::vector<Tagged> left{{1, 'L'}, {2, 'L'}};
  std::vector<Tagged> right{{1, 'R'}, {2, 'R'}};
  auto result = merge_count<Tagged>(left, right, by_key);
  std::string tags;
  for (const auto& t : result.merged) tags.push_back(t.second);
  CHECK(tags == "LRLR");
}

TEST_CASE("merge_count comparison bounds") {
  for (std::size_t la = 1; la <= 6; ++la) {
    for (std::size_t lb = 1; lb <= 6; ++lb) {
      // every way to interleave: choose which merged ranks land in a
      for (unsigned mask = 0; mask < (1u << (la + lb)); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != la) continue;
        std::vector<int> a;
        std::vector<int> b;
        for (std::size_t r = 0; r < la + lb; ++r) ((mask >> r) & 1u ? a : b).push_back(static_cast<int>(r));
        auto m = merge_count<int>(a, b);
        REQUIRE(m.comps >= std::min(la, lb));
        REQUIRE(m.comps <= la + lb - 1);
        REQUIRE(std::ranges::is_sorted(m.merged));
      }
    }
  }
}

TEST_CASE("merge_sort_count examples") {
  CHECK(merge_sort_count(Keys{0, 1, 2, 3}).comparisons == 4);
  CHECK(merge_sort_count(Keys{1, 3, 0, 2}).comparisons == 5);
  auto single = merge_sort_count(Keys{7});
  CHECK(single.comparisons == 0);
  CHECK(single.output == Keys{7});
  CHECK(merge_sort_count(Keys{}).comparisons == 0);
}

TEST_CASE("generated inputs") {
  CHECK(best_case_input(4) == Keys{0, 1, 2, 3});
  CHECK(best_case_input(1) == Keys{0});
  CHECK(merge_sort_count(best_case_input(5)).comparisons == 5);

  CHECK(merge_sort_count(worst_case_input(2)).comparisons == 1);
  CHECK(worst_case_input(4) == Keys{1, 3, 0, 2});
  Keys eight = worst_case_input(8);
  Keys sorted = eight;
  std::ranges::sort(sorted);
  CHECK(sorted == best_case_input(8));
  CHECK(merge_sort_count(eight).comparisons == 17);

  CHECK(random_input(1, 12345) == Keys{0});
  CHECK(random_input(5, 42) == random_input(5, 42));
  CHECK(random_input(50, 1) != random_input(50, 2));
  auto r = merge_sort_count(random_input(100, 3)).comparisons;
  CHECK(r >= b_recurrence(100));
  CHECK(r <= w_closed(100));

  CHECK_THROWS_AS(best_case_input(0), std::invalid_argument);
  CHECK_THROWS_AS(worst_case_input(0), std::invalid_argument);
  CHECK_THROWS_AS(random_input(0, 1), std::invalid_argument);
}

TEST_CASE("splitmix64 reference sequence") {
  // first outputs for seed 1234567, from the published reference implementation
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("instrumented counts match B and W") {
  for (std::int64_t n = 1; n <= 4096; ++n) {
    REQUIRE(merge_sort_count(best_case_input(n)).comparisons == b_recurrence(n));
    auto worst = merge_sort_count(worst_case_input(n));
    REQUIRE(worst.comparisons == w_closed(n));
    REQUIRE(worst.output == best_case_input(n));
  }
}

TEST_CASE("B and W are the true extremes for small n") {
  for (int n = 1; n <= 9; ++n) {
    auto [lo, hi] = min_max_comps(n);
    CHECK(lo == b_recurrence(n));
    CHECK(hi == w_closed(n));
  }
}

TEST_CASE("property: random permutations sort within [B, W]") {
  for (std::int64_t n : {2, 3, 10, 33, 100, 257}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      Keys input = random_input(n, seed);
      Keys sorted = input;
      std::ranges::sort(sorted);
      REQUIRE(sorted == best_case_input(n));
      auto trace = merge_sort_count(input);
      REQUIRE(trace.output == sorted);
      REQUIRE(trace.comparisons >= b_recurrence(n));
      REQUIRE(trace.comparisons <= w_closed(n));
    }
  }
}

TEST_CASE("merge_sort_count sorts arbitrary keys") {
  std::vector<std::string> words{"pear", "apple", "fig", "apple", "kiwi", "date"};
  auto trace = merge_sort_count(words);
  CHECK(std::ranges::is_sorted(trace.output));
  CHECK(trace.n == words.size());
  CHECK(trace.comparisons >= b_recurrence(6));
  CHECK(trace.comparisons <= w_closed(6));

  std::vector<int> dups{3, 1, 3, 1, 2, 2, 3};
  auto dtrace = merge_sort_count(dups, std::greater<>{});
  CHECK(std::ranges::is_sorted(dtrace.output, std::greater<>{}));
}

TEST_CASE("build_tree examples") {
  RecursionTree five = build_tree(5);
  CHECK(five.depth() == 3);
  std::vector<std::size_t> widths;
  for (const auto& level : five.levels) widths.push_back(level.size());
  CHECK(widths == std::vector<std::size_t>{1, 2, 4, 2});
  CHECK(five.levels[1] == std::vector<std::int64_t>{2, 3});
  CHECK(five.levels[2] == std::vector<std::int64_t>{1, 1, 1, 2});

  RecursionTree one = build_tree(1);
  CHECK(one.depth() == 0);
  CHECK(one.leaf_count() == 1);

  RecursionTree eight = build_tree(8);
  CHECK(eight.depth() == 3);
  for (int i = 0; i <= 3; ++i) CHECK(eight.levels[static_cast<std::size_t>(i)].size() == (1u << i));

  CHECK_THROWS_AS(build_tree(0), std::invalid_argument);
}

TEST_CASE("build_tree structure") {
  for (std::int64_t n = 1; n <= 2048; ++n) {
    RecursionTree t = build_tree(n);
    const int h = ceil_lg(n);
    REQUIRE(t.depth() == h);
    REQUIRE(t.leaf_count() == static_cast<std::size_t>(n));
    std::int64_t worst_total = 0;
    for (int i = 0; i <= h; ++i) {
      const auto& sizes = t.levels[static_cast<std::size_t>(i)];
      auto [lo, hi] = std::ranges::minmax(sizes);
      REQUIRE(hi - lo <= 1);
      REQUIRE(std::accumulate(sizes.begin(), sizes.end(), std::int64_t{0}) <= n);
      if (i < h) {
        REQUIRE(sizes.size() == (std::size_t{1} << i));
        REQUIRE(t.level_worst_comps(i) == n - (std::int64_t{1} << i));
      }
      worst_total += t.level_worst_comps(i);
    }
    REQUIRE(worst_total == w_closed(n));
    for (const auto& node : t.nodes) {
      REQUIRE(node.is_leaf() == (node.size == 1));
      if (!node.is_leaf()) {
        REQUIRE(t.nodes[static_cast<std::size_t>(node.left)].size == node.size / 2);
        REQUIRE(t.nodes[static_cast<std::size_t>(node.right)].size == (node.size + 1) / 2);
      }
    }
  }
}
