#include <doctest.h>

#include <functional>
#include <random>

#include "semicurve/curve.hpp"

using namespace semicurve;

namespace {

Poly P(const char* s) { return parse_poly(s); }

Curve curve(std::initializer_list<const char*> fs) {
  std::vector<Poly> v;
  for (const char* f : fs) v.push_back(P(f));
  return make_curve(CurveParametrization(std::move(v)));
}

// f/h in O_P, decided from the span of the monomials x^a with v(x^a) < c,
// computed mod t^c.
bool membership_oracle(const Curve& c, const Poly& f, const Poly& h) {
  const int cond = c.local.conductor();
  if (cond == 0) return true;
  const auto& coords = c.param.coords();
  std::vector<TruncatedSeries> xs;
  std::vector<int> vals;
  for (std::size_t i = 1; i < coords.size(); ++i) {
    xs.push_back(expand(coords[i], coords[0], cond));
    vals.push_back(xs.back().valuation().value_or(cond));
  }
  Matrix span;
  std::function<void(std::size_t, TruncatedSeries, int)> rec = [&](std::size_t i, TruncatedSeries m, int v) {
    if (i == xs.size()) {
      span.push_back(m.coeffs());
      return;
    }
    for (int e = 0; v + e * vals[i] < cond || e == 0; ++e) {
      rec(i + 1, m, v + e * vals[i]);
      if (vals[i] == 0) break;
      m = m * xs[i];
    }
  };
  rec(0, TruncatedSeries::from_poly(Poly::constant(1), cond), 0);
  return solve_in_span(span, expand(f, h, cond).coeffs()).has_value();
}

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

void check_gonality_bound(const Curve& c) {
  const GonalityBounds b = gonality_bounds(c);
  CHECK(b.lower <= b.upper);
  CHECK(b.upper <= genus(c) + 1);
}

}  // namespace

TEST_CASE("parametrization validation") {
  CHECK_THROWS_AS(CurveParametrization({P("1")}), InputError);
  CHECK_THROWS_AS(CurveParametrization({P("1+t"), P("t+t^2")}), InputError);  // common factor 1 + t
  CHECK_THROWS_AS(CurveParametrization({P("2"), P("4")}), InputError);
  const CurveParametrization p({P("t^2"), P("1+t")});
  CHECK(p.normalized().is_normalized());
}

TEST_CASE("example 1: (1, t^4, t^6 + t^7)") {
  const Curve c = curve({"1", "t^4", "t^6+t^7"});
  const auto& s = c.local.semigroup();
  CHECK(s.gaps() == std::vector<int>{1, 2, 3, 5, 7, 9, 11, 15});
  CHECK(s.minimal_generators() == std::vector<int>{4, 6, 13});
  CHECK(is_bielliptic(s));
  const std::vector<Poly> m{P("1"), P("t^4"), P("t^6+t^7"), P("t^8")};
  CHECK(map_degree(m).degree == 1);
  const LinearSeriesReport g83 = g83_default(c);
  CHECK(g83.degree == 8);
  CHECK(g83.dimension == 3);
  CHECK(g83.base_point_free);
  CHECK(g83.map.degree == 1);
  CHECK(pole_orders_of_differentials(c) == differential_pole_orders(s));
  check_gonality_bound(c);
}

TEST_CASE("example 2 realized") {
  const Poly h = P("1+t^3");
  const Curve c = make_curve(CurveParametrization(
      {pow(h, 3), P("t^4") * h, P("t^6"), P("t^9") * pow(h, 3), P("t^11") * pow(h, 3)}));
  const auto& s = c.local.semigroup();
  CHECK(s.gaps() == std::vector<int>{1, 2, 3, 5, 7});
  CHECK(s.conductor() == 8);
  const std::vector<Poly> m{P("1+t^3"), P("t^2")};
  CHECK(map_degree(m).degree == 3);
  const LinearSeriesReport r = g83_construction(c, {P("t^2"), h});
  CHECK(r.map.degree == 3);
  check_gonality_bound(c);
}

TEST_CASE("a map that is not birational has no stable value semigroup") {
  CHECK_THROWS_AS(make_curve(CurveParametrization({P("(1+t^3)^3"), P("t^4*(1+t^3)"), P("t^6")})),
                  std::runtime_error);
}

TEST_CASE("a quartic folded onto a conic is rejected quickly") {
  // f0 = (1+t)^2 - (5/3) t^2 (1+t) + (3/5) t^4: both ratios are functions of t^2/(1+t)
  const std::vector<Poly> coords{Poly{1, 2, Rational(-2, 3), Rational(-5, 3), Rational(3, 5)}, P("t^2+t^3"), P("t^4")};
  CHECK(map_degree(coords).degree == 2);
  CHECK_THROWS_AS(make_curve(CurveParametrization(coords)), std::runtime_error);
}

TEST_CASE("membership agrees with the monomial-span oracle") {
  std::mt19937_64 rng(5);
  const std::vector<Curve> curves{curve({"1", "t^4", "t^6+t^7"}), curve({"1", "t^3", "t^13", "t^14"}),
                                  curve({"1-2*t+t^2", "t^2-t^3", "t^5"}), curve({"1+t", "t^2", "t^5"})};
  for (const Curve& c : curves) {
    for (int i = 0; i < 25; ++i) {
      std::vector<Rational> fc;
      for (int k = 0; k < 10; ++k) fc.push_back(k < 2 && i % 3 ? Rational(0) : small_rational(rng));
      const Poly f(std::move(fc));
      const Poly h{1, small_rational(rng)};
      CHECK(membership(c, f, h) == membership_oracle(c, f, h));
    }
    // the coordinates themselves are always members
    for (std::size_t i = 1; i < c.param.coords().size(); ++i) {
      CHECK(membership(c, c.param.coords()[i], c.param.coords()[0]));
    }
  }
}

TEST_CASE("local algebra basis is echelon with the semigroup values") {
  const Curve c = curve({"1", "t^3", "t^13", "t^14"});
  CHECK(c.local.semigroup().minimal_generators() == std::vector<int>{3, 13, 14});
  CHECK(k_set_of_curve(c).gaps() == k_set(c.local.semigroup()).gaps());
  for (int v = 0; v < c.local.conductor(); ++v) {
    const TruncatedSeries* b = c.local.at(v);
    CHECK((b != nullptr) == c.local.semigroup().contains(v));
    if (b) CHECK(*b->valuation() == v);
  }
}

TEST_CASE("genus 3 family: trigonal, never hyperelliptic") {
  std::mt19937_64 rng(2025);
  int done = 0;
  while (done < 20) {
    const Rational a = small_rational(rng), b = small_rational(rng), cc = small_rational(rng),
                   d = small_rational(rng);
    if (a == 0 || cc == 0) continue;
    const std::vector<Poly> coords{Poly{1, -2 * a, b, cc, d}, Poly{0, 0, 1, -a}, Poly::monomial(1, 4)};
    if (map_degree(coords).degree != 1) continue;
    const Curve c = make_curve(CurveParametrization(coords));
    CAPTURE(to_string(a));
    CAPTURE(to_string(cc));
    CHECK(c.local.semigroup().minimal_generators() == std::vector<int>{2, 7});
    CHECK(is_hyperelliptic_curve(c).verdict == Verdict::No);
    const GonalityBounds g = gonality_bounds(c);
    CHECK(g.lower == 3);
    CHECK(g.upper == 3);
    ++done;
  }
}

TEST_CASE("genus 1 and 2 hyperelliptic witnesses") {
  const HyperellipticAnswer one = is_hyperelliptic_curve(curve({"1", "t^2", "t^3"}));
  CHECK(one.verdict == Verdict::Yes);
  REQUIRE(one.witness);
  CHECK(*one.witness == Poly{1});
  std::mt19937_64 rng(9);
  for (int i = 0; i < 8; ++i) {
    const Rational a = small_rational(rng);
    const Curve c = make_curve(CurveParametrization({P("1"), Poly{0, 0, 1, a}, P("t^4"), P("t^5")}));
    const HyperellipticAnswer ans = is_hyperelliptic_curve(c);
    CHECK(ans.verdict == Verdict::Yes);
    REQUIRE(ans.witness);
    CHECK(*ans.witness == Poly{1, -a});
    const GonalityBounds g = gonality_bounds(c);
    CHECK(g.upper == 2);
    CHECK(g.lower == 2);
  }
}

TEST_CASE("pencil degrees") {
  const Curve c = curve({"1", "t^4", "t^6+t^7"});
  // a pencil through the ratio of two coordinates has degree <= deg C
  const Pencil p = pencil_degree(c, P("t^4"), P("1"));
  CHECK(p.degree == 4);
  CHECK(p.base_point == BasePoint::None);
  const Pencil q = pencil_degree(c, P("t^2"), P("1"));
  CHECK(q.base_point == BasePoint::NonRemovable);
  CHECK(q.degree > 2);
  CHECK(pencil_degree(c, P("1"), P("t^4")).degree == p.degree);  // swapped roles
  CHECK_THROWS_AS(pencil_degree(c, P("t"), P("t^2")), InputError);
}

TEST_CASE("non-removable pencil formula") {
  const Curve c = curve({"1+t", "t^2", "t^5"});
  const auto nr = non_removable_pencil(c);
  REQUIRE(nr);
  CHECK(nr->pencil.degree == nr->formula_degree);
  CHECK(nr->pencil.base_point == BasePoint::NonRemovable);
  CHECK_FALSE(non_removable_pencil(curve({"1", "t^2", "t^5"})));
}

TEST_CASE("map degree is multiplicative under t -> t^d") {
  const std::vector<std::vector<Poly>> maps{{P("1+t^3"), P("t^2")}, {P("1"), P("t^4"), P("t^6+t^7")}, {P("1-t"), P("t^2")}};
  for (const auto& m : maps) {
    const int base = map_degree(m).degree;
    for (int d : {2, 3}) {
      std::vector<Poly> composed;
      for (const auto& f : m) composed.push_back(compose(f, Poly::monomial(1, d)));
      CHECK(map_degree(composed).degree == d * base);
    }
  }
  const std::vector<Poly> constant{P("2"), P("4")};
  CHECK_THROWS_AS(map_degree(constant), InputError);
}

TEST_CASE("scroll codimension for (1, t^3, t^13, t^14)") {
  const Curve c = curve({"1", "t^3", "t^13", "t^14"});
  const ScrollWitness w = scroll_codimension(c);
  CHECK(w.minors_vanish);
  CHECK(w.codimension == static_cast<int>(w.u_basis.size()));
  if (w.layout) CHECK(verify_scroll_containment(c.param, *w.layout));
  CHECK_THROWS_AS(scroll_codimension(curve({"1+t^2", "t^3", "t^4"})), InputError);
}

TEST_CASE("bielliptic embeddings lie on their scrolls") {
  for (int g : {5, 8, 9, 12}) {
    CAPTURE(g);
    const bool sym = g % 2 == 0;
    const auto s = sym ? from_generators(std::vector<int>{4, 6, 2 * g - 3})
                       : from_generators(std::vector<int>{4, 6, 2 * g - 1, 2 * g + 1});
    const BiellipticEmbedding e = bielliptic_embedding(s);
    CHECK(e.ambient == g + 1);
    CHECK(verify_scroll_containment(e.curve, e.layout));
    CHECK(make_curve(e.curve).local.semigroup() == s);
    const int m = g / 2;
    const int n = (g - 3) / 2;
    const std::vector<int> blocks = sym ? std::vector<int>{m, n, 1} : std::vector<int>{m, n, 0, 0};
    CHECK(e.layout.blocks == blocks);
    // a scroll with a wrong block structure does not contain the curve
    std::vector<int> wrong = blocks;
    std::swap(wrong[0], wrong[1]);
    CHECK_FALSE(verify_scroll_containment(e.curve, catalecticant(wrong)));
  }
  CHECK_THROWS_AS(bielliptic_embedding(from_generators(std::vector<int>{3, 4})), InputError);
}

TEST_CASE("catalecticant layout") {
  const std::vector<int> blocks{2, 1};
  const ScrollLayout l = catalecticant(blocks);
  CHECK(l.columns() == 3);
  CHECK(l.name() == "S_{2,1}");
  // rational normal curve of degree 2 in block 1, degree 1 in block 2
  const CurveParametrization rnc({P("1"), P("t"), P("t^2"), P("t^3"), P("t^4")});
  CHECK(verify_scroll_containment(rnc, l));
}
