#include <doctest.h>

#include <map>
#include <mutex>
#include <set>

#include "oracle.hpp"
#include "semicurve/tree.hpp"

using namespace semicurve;

TEST_CASE("counts match the gap-subset oracle") {
  const auto counts = tree::count_by_genus(8);
  for (int g = 0; g <= 8; ++g) {
    CAPTURE(g);
    CHECK(counts[static_cast<std::size_t>(g)] == oracle::count_genus(g));
  }
}

TEST_CASE("known counts further out") {
  const std::vector<std::uint64_t> known{1,    1,    2,    4,     7,     12,    23,    39,    67,
                                         118,  204,  343,  592,   1001,  1693,  2857,  4806,  8045,
                                         13467, 22464, 37396};
  CHECK(tree::count_by_genus(20, 4) == known);
}

TEST_CASE("thread count does not change the counts") {
  CHECK(tree::count_by_genus(15, 1) == tree::count_by_genus(15, 3));
  CHECK(tree::count_by_genus(15, 1) == tree::count_by_genus(15, 8));
}

TEST_CASE("every semigroup of a genus appears once") {
  for (int g = 0; g <= 9; ++g) {
    std::set<std::vector<int>> seen;
    std::mutex mu;
    tree::enumerate_genus(
        g,
        [&](const tree::Node& n) {
          const auto gaps = n.to_semigroup().gaps();
          const std::lock_guard lock(mu);
          CHECK(seen.insert(gaps).second);
        },
        3);
    CHECK(seen.size() == oracle::count_genus(g));
  }
}

TEST_CASE("parent and children are inverse") {
  for (int g = 1; g <= 8; ++g) {
    tree::enumerate_genus(g, [&](const tree::Node& n) {
      const NumericalSemigroup s = n.to_semigroup();
      const NumericalSemigroup p = tree::parent(s);
      CHECK(p.genus() == g - 1);
      bool found = false;
      for (const auto& c : tree::children(p)) found = found || c == s;
      CHECK(found);
      for (const auto& c : tree::children(s)) CHECK(tree::parent(c) == s);
      CHECK(tree::children(s).size() == n.removable_generators().size());
    });
  }
  CHECK_THROWS_AS(tree::parent(NumericalSemigroup{}), std::domain_error);
}

TEST_CASE("node bookkeeping matches the semigroup") {
  tree::walk(tree::Node::root(), 9, [](const tree::Node& n) {
    const NumericalSemigroup s = n.to_semigroup();
    CHECK(n.genus() == s.genus());
    CHECK(n.conductor() == s.conductor());
    CHECK(n.multiplicity() == s.multiplicity());
    for (int y = 0; y < 40; ++y) CHECK(n.contains(y) == s.contains(y));
  });
}

TEST_CASE("fold is deterministic") {
  using Acc = std::map<int, std::int64_t>;
  const auto visit = [](Acc& a, const tree::Node& n) { a[n.genus()] += n.conductor(); };
  const auto merge = [](Acc& a, Acc&& b) {
    for (auto [k, v] : b) a[k] += v;
  };
  CHECK(tree::fold(14, Acc{}, visit, merge, 1) == tree::fold(14, Acc{}, visit, merge, 6));
}

TEST_CASE("genus limit") {
  CHECK_THROWS(tree::count_by_genus(tree::kMaxGenus + 1));
}
