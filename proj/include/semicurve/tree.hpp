#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "semicurve/numset.hpp"

namespace semicurve::tree {

/// Largest genus the compact enumeration node can hold.
inline constexpr int kMaxGenus = 42;

/// Compact semigroup used by the enumerator.
///
/// decs[y] counts the unordered pairs {a, y - a} with both parts in S, so
/// y is in S iff decs[y] > 0 and y > 0 is a minimal generator iff
/// decs[y] == 1. Removing a generator x updates decs in O(size).
class Node {
 public:
  static constexpr int kSize = 3 * kMaxGenus + 2;

  static Node root();

  int genus() const { return genus_; }
  int conductor() const { return conductor_; }
  int multiplicity() const { return multiplicity_; }
  bool contains(int y) const { return y >= kSize || decs_[static_cast<std::size_t>(y)] > 0; }

  /// Minimal generators strictly above the Frobenius number, ascending.
  std::vector<int> removable_generators() const;
  Node remove_generator(int x) const;

  NumericalSemigroup to_semigroup() const;

 private:
  std::array<std::uint8_t, kSize> decs_{};
  std::uint8_t genus_ = 0;
  std::uint8_t conductor_ = 0;
  std::uint8_t multiplicity_ = 1;
};

/// Children of S in the semigroup tree, by removed generator ascending.
std::vector<NumericalSemigroup> children(const NumericalSemigroup& s);

/// S union {Frobenius(S)}. Throws std::domain_error("root has no parent").
NumericalSemigroup parent(const NumericalSemigroup& s);

using Visitor = std::function<void(const Node&)>;

/// Depth-first walk (explicit stack) of every node of genus <= g_max below
/// `start`, children visited in ascending removed-generator order.
void walk(const Node& start, int g_max, const Visitor& visit);

/// Visits every semigroup of genus exactly g once. With threads > 1 the
/// visitor is called concurrently and must be thread-safe.
void enumerate_genus(int g, const Visitor& visit, int threads = 1);

/// [n_0, ..., n_{g_max}].
std::vector<std::uint64_t> count_by_genus(int g_max, int threads = 1);

/// Work split used by parallel folds: every node of genus < seed depth is a
/// prefix node handled serially, every node at the seed depth roots a chunk.
struct Partition {
  std::vector<Node> prefix;
  std::vector<Node> seeds;
};
Partition partition_tree(int g_max);

/// Runs `fn(i)` for i in [0, n) on `threads` workers.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

/// Deterministic parallel fold over all semigroups of genus <= g_max.
///
/// Each chunk (the prefix, then one per seed subtree) gets its own
/// accumulator; chunks are merged in a fixed order, so the result does not
/// depend on the thread count.
template <class Acc, class Visit, class Merge>
Acc fold(int g_max, const Acc& init, Visit visit, Merge merge, int threads = 1) {
  const Partition part = partition_tree(g_max);
  std::vector<Acc> chunks(part.seeds.size() + 1, init);
  for (const Node& n : part.prefix) visit(chunks[0], n);
  parallel_for(part.seeds.size(), threads, [&](std::size_t i) {
    Acc& acc = chunks[i + 1];
    walk(part.seeds[i], g_max, [&](const Node& n) { visit(acc, n); });
  });
  Acc result = init;
  for (Acc& a : chunks) merge(result, std::move(a));
  return result;
}

}  // namespace semicurve::tree
