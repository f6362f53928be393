#ifndef MERGECOUNT_ORACLE_HPP
#define MERGECOUNT_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mergecount {

template <class T>
struct MergeResult {
  std::vector<T> merged;
  std::uint64_t comps = 0;
};

template <class T>
struct SortTrace {
  std::vector<T> output;
  std::uint64_t comparisons = 0;
  std::size_t n = 0;
};

namespace detail {

// Merges sorted [a] and [b] into out, counting key-vs-key comparisons only.
// Equal keys are taken from a first.
template <class T, class Compare>
std::uint64_t merge_into(std::span<const T> a, std::span<const T> b, T* out, Compare& less) {
  std::uint64_t comps = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    ++comps;
    if (less(b[j], a[i])) {
      *out++ = b[j++];
    } else {
      *out++ = a[i++];
    }
  }
  while (i < a.size()) *out++ = a[i++];
  while (j < b.size()) *out++ = b[j++];
  return comps;
}

// Top-down MergeSort of data[0, n) using scratch of the same length; the
// first floor(n/2) keys form the left half.
template <class T, class Compare>
std::uint64_t merge_sort(std::span<T> data, std::span<T> scratch, Compare& less) {
  const std::size_t n = data.size();
  if (n < 2) return 0;
  const std::size_t half = n / 2;
  std::uint64_t comps = merge_sort(data.first(half), scratch.first(half), less) +
                        merge_sort(data.subspan(half), scratch.subspan(half), less);
  comps += merge_into<T>(std::span<const T>(data.first(half)),
                         std::span<const T>(data.subspan(half)), scratch.data(), less);
  std::copy(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(n), data.begin());
  return comps;
}

}  // namespace detail

/// Two-pointer merge of two non-decreasing sequences with an exact count of
/// key comparisons.
template <class T, class Compare = std::less<>>
MergeResult<T> merge_count(std::span<const T> a, std::span<const T> b, Compare less = {}) {
  MergeResult<T> result;
  result.merged.resize(a.size() + b.size());
  result.comps = detail::merge_into(a, b, result.merged.data(), less);
  return result;
}

/// Instrumented top-down MergeSort.
template <class T, class Compare = std::less<>>
SortTrace<T> merge_sort_count(std::span<const T> input, Compare less = {}) {
  SortTrace<T> trace;
  trace.n = input.size();
  trace.output.assign(input.begin(), input.end());
  std::vector<T> scratch(input.size());
  trace.comparisons =
      detail::merge_sort(std::span<T>(trace.output), std::span<T>(scratch), less);
  return trace;
}

template <class T, class Compare = std::less<>>
SortTrace<T> merge_sort_count(const std::vector<T>& input, Compare less = {}) {
  return merge_sort_count(std::span<const T>(input), less);
}

using Keys = std::vector<std::int64_t>;

/// 0, 1, ..., n-1.
Keys best_case_input(std::int64_t n);

/// Permutation of 0..n-1 on which MergeSort performs W(n) comparisons.
/// Odd-ranked values go to the first floor(n/2) slots and even-ranked values
/// to the rest, recursively, so every merge interleaves completely.
Keys worst_case_input(std::int64_t n);

/// Seeded Fisher-Yates shuffle of 0..n-1 driven by splitmix64.
Keys random_input(std::int64_t n, std::uint64_t seed);

/// splitmix64 generator; fully specified so sequences are reproducible anywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform draw from [0, bound) by rejection, bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Size-labelled recursion tree of MergeSort on n keys.
struct RecursionTree {
  struct Node {
    std::int64_t size = 0;
    int level = 0;
    std::int32_t left = -1;
    std::int32_t right = -1;

    bool is_leaf() const { return left < 0; }
  };

  std::vector<Node> nodes;                          // breadth-first, nodes[0] is the root
  std::vector<std::vector<std::int64_t>> levels;    // sizes per level, left to right

  int depth() const { return static_cast<int>(levels.size()) - 1; }
  std::size_t leaf_count() const;
  /// Worst-case comparisons spent merging at `level`: sum of (size - 1) over its nodes.
  std::int64_t level_worst_comps(int level) const;
};

RecursionTree build_tree(std::int64_t n);

}  // namespace mergecount

#endif  // MERGECOUNT_ORACLE_HPP
