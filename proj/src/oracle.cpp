#include "mergecount/oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace mergecount {

namespace {

void require_positive(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
}

void fill_worst(std::span<std::int64_t> slots, std::span<const std::int64_t> values) {
  const std::size_t n = values.size();
  if (n <= 2) {
    std::copy(values.begin(), values.end(), slots.begin());
    return;
  }
  const std::size_t half = n / 2;
  std::vector<std::int64_t> split;
  split.reserve(n);
  for (std::size_t i = 1; i < n; i += 2) split.push_back(values[i]);
  for (std::size_t i = 0; i < n; i += 2) split.push_back(values[i]);
  std::span<const std::int64_t> ordered(split);
  fill_worst(slots.first(half), ordered.first(half));
  fill_worst(slots.subspan(half), ordered.subspan(half));
}

}  // namespace

Keys best_case_input(std::int64_t n) {
  require_positive(n);
  Keys keys(static_cast<std::size_t>(n));
  std::iota(keys.begin(), keys.end(), 0);
  return keys;
}

Keys worst_case_input(std::int64_t n) {
  require_positive(n);
  Keys sorted = best_case_input(n);
  Keys keys(sorted.size());
  fill_worst(keys, sorted);
  return keys;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be >= 1");
  // 2^64 mod bound; draws below it would bias the low residues
  const std::uint64_t threshold = (std::uint64_t(0) - bound) % bound;
  for (;;) {
    std::uint64_t draw = next();
    if (draw >= threshold) return draw % bound;
  }
}

Keys random_input(std::int64_t n, std::uint64_t seed) {
  Keys keys = best_case_input(n);
  SplitMix64 rng(seed);
  for (std::size_t i = keys.size() - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(keys[i], keys[j]);
  }
  return keys;
}

std::size_t RecursionTree::leaf_count() const {
  std::size_t count = 0;
  for (const Node& node : nodes) count += node.is_leaf();
  return count;
}

std::int64_t RecursionTree::level_worst_comps(int level) const {
  std::int64_t total = 0;
  for (std::int64_t size : levels.at(static_cast<std::size_t>(level))) total += size - 1;
  return total;
}

RecursionTree build_tree(std::int64_t n) {
  require_positive(n);
  RecursionTree tree;
  tree.nodes.push_back({n, 0, -1, -1});
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    RecursionTree::Node node = tree.nodes[i];
    if (static_cast<std::size_t>(node.level) == tree.levels.size()) tree.levels.emplace_back();
    tree.levels[static_cast<std::size_t>(node.level)].push_back(node.size);
    if (node.size < 2) continue;
    auto child = static_cast<std::int32_t>(tree.nodes.size());
    tree.nodes[i].left = child;
    tree.nodes[i].right = child + 1;
    tree.nodes.push_back({node.size / 2, node.level + 1, -1, -1});
    tree.nodes.push_back({node.size - node.size / 2, node.level + 1, -1, -1});
  }
  return tree;
}

}  // namespace mergecount
