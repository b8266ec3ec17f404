#include "semicurve/tree.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace semicurve::tree {

Node Node::root() {
  Node n;
  for (int y = 0; y < kSize; ++y) {
    n.decs_[static_cast<std::size_t>(y)] = static_cast<std::uint8_t>(y / 2 + 1);
  }
  return n;
}

std::vector<int> Node::removable_generators() const {
  std::vector<int> out;
  // For N itself (c = 0) the lone generator 1 sits at c + m.
  const int lo = std::max<int>(conductor_, 1);
  const int hi = std::max<int>(conductor_ + multiplicity_, 2);
  for (int y = lo; y < hi; ++y) {
    if (decs_[static_cast<std::size_t>(y)] == 1) out.push_back(y);
  }
  return out;
}

Node Node::remove_generator(int x) const {
  if (genus_ + 1 > kMaxGenus) throw std::length_error("tree node genus limit exceeded");
  Node child = *this;
  for (int y = x; y < kSize; ++y) {
    if (decs_[static_cast<std::size_t>(y - x)] > 0) --child.decs_[static_cast<std::size_t>(y)];
  }
  child.genus_ = static_cast<std::uint8_t>(genus_ + 1);
  child.conductor_ = static_cast<std::uint8_t>(x + 1);
  if (x == multiplicity_) child.multiplicity_ = static_cast<std::uint8_t>(x + 1);
  return child;
}

NumericalSemigroup Node::to_semigroup() const {
  std::vector<int> gaps;
  for (int y = 1; y < conductor_; ++y) {
    if (decs_[static_cast<std::size_t>(y)] == 0) gaps.push_back(y);
  }
  return from_gaps(gaps);
}

std::vector<NumericalSemigroup> children(const NumericalSemigroup& s) {
  std::vector<NumericalSemigroup> out;
  const int c = s.conductor();
  for (int x : s.minimal_generators()) {
    if (x < c) continue;
    std::vector<int> gaps = s.gaps();
    gaps.push_back(x);
    out.push_back(from_gaps(gaps));
  }
  return out;
}

NumericalSemigroup parent(const NumericalSemigroup& s) {
  if (s.genus() == 0) throw std::domain_error("root has no parent");
  std::vector<int> gaps = s.gaps();
  gaps.pop_back();
  return from_gaps(gaps);
}

void walk(const Node& start, int g_max, const Visitor& visit) {
  std::vector<Node> stack{start};
  while (!stack.empty()) {
    const Node n = stack.back();
    stack.pop_back();
    visit(n);
    if (n.genus() >= g_max) continue;
    const std::vector<int> gens = n.removable_generators();
    // Push in reverse so the smallest removed generator is visited first.
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
      stack.push_back(n.remove_generator(*it));
    }
  }
}

Partition partition_tree(int g_max) {
  if (g_max < 0) throw std::invalid_argument("genus must be nonnegative");
  if (g_max > kMaxGenus) throw std::length_error("genus exceeds tree limit");
  const int seed_depth = (g_max + 2) / 3;
  Partition part;
  walk(Node::root(), seed_depth, [&](const Node& n) {
    if (n.genus() < seed_depth) {
      part.prefix.push_back(n);
    } else {
      part.seeds.push_back(n);
    }
  });
  return part;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

void enumerate_genus(int g, const Visitor& visit, int threads) {
  const Partition part = partition_tree(g);
  for (const Node& n : part.prefix) {
    if (n.genus() == g) visit(n);
  }
  parallel_for(part.seeds.size(), threads, [&](std::size_t i) {
    walk(part.seeds[i], g, [&](const Node& n) {
      if (n.genus() == g) visit(n);
    });
  });
}

std::vector<std::uint64_t> count_by_genus(int g_max, int threads) {
  using Counts = std::vector<std::uint64_t>;
  const Counts zero(static_cast<std::size_t>(g_max) + 1, 0);
  return fold(
      g_max, zero, [](Counts& acc, const Node& n) { ++acc[static_cast<std::size_t>(n.genus())]; },
      [](Counts& into, Counts&& part) {
        for (std::size_t i = 0; i < into.size(); ++i) into[i] += part[i];
      },
      threads);
}

}  // namespace semicurve::tree
