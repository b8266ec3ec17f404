#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "semicurve/tableau.hpp"
#include "semicurve/tree.hpp"

using namespace semicurve;

TEST_CASE("<4,10,11,17> diagrams") {
  const auto s = from_generators(std::vector<int>{4, 10, 11, 17});
  const YoungDiagram ds = diagram(s);
  const YoungDiagram dk = diagram(k_set(s));
  CHECK(ds.boxes() == 10);
  CHECK(dk.boxes() == 12);
  CHECK(ds.partition() == std::vector<int>{5, 2, 1, 1, 1});
  CHECK(dk.partition() == std::vector<int>{7, 4, 1});
  CHECK(top_row_lengths(s) == std::pair{5, 7});
  CHECK(verify_transpose(s));
  CHECK(t1_subdiagram(k_set(s)).partition() == t1_subdiagram(s).transpose());
}

TEST_CASE("dyck path steps") {
  const auto s = from_generators(std::vector<int>{3, 4});
  const auto path = dyck_path(s);
  // gaps 1, 2, 5
  REQUIRE(path.size() >= 6);
  CHECK(path[0] == Step::Up);
  CHECK(path[1] == Step::Up);
  CHECK(path[2] == Step::Right);
  CHECK(path[3] == Step::Right);
  CHECK(path[4] == Step::Up);
  CHECK(path[5] == Step::Right);
}

TEST_CASE("render marks the top row") {
  const auto s = from_generators(std::vector<int>{3, 4});
  const std::string art = render_text(diagram(s));
  CHECK(art.find('#') != std::string::npos);
  CHECK(art.find('\n') != std::string::npos);
}

TEST_CASE("box count, transpose and top rows on all small semigroups") {
  for (int g = 1; g <= 11; ++g) {
    tree::enumerate_genus(g, [&](const tree::Node& n) {
      const NumericalSemigroup s = n.to_semigroup();
      const CofiniteSet k = k_set(s);
      CHECK(weight_via_diagram(s) == weight(s));
      CHECK(weight_via_diagram(k) == weight(k));
      CHECK(verify_transpose(s));
      const auto [a, b] = top_row_lengths(s);
      CHECK(a == s.conductor() - 1 - g);
      CHECK(b == g - 1);
      // conjugating twice gives back the partition
      const YoungDiagram d = diagram(s);
      const auto t = d.transpose();
      std::vector<int> tt;
      for (int i = 0; i < (t.empty() ? 0 : t[0]); ++i) {
        int c = 0;
        for (int x : t) c += x > i ? 1 : 0;
        tt.push_back(c);
      }
      CHECK(tt == d.partition());
    });
  }
}
