#include <doctest.h>

#include <random>

#include "semicurve/error.hpp"
#include "semicurve/linalg.hpp"
#include "semicurve/poly.hpp"
#include "semicurve/series.hpp"

using namespace semicurve;

namespace {

Poly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -4 ") == Rational(-4));
  CHECK(to_string(Rational(-3, 9)) == "-1/3");
  CHECK(to_string(Rational(6, 3)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
}

TEST_CASE("polynomial parsing") {
  CHECK(parse_poly("1-2*t+3*t^4") == Poly{1, -2, 0, 0, 3});
  CHECK(parse_poly("(1+t^3)^2") == Poly{1, 0, 0, 2, 0, 0, 1});
  CHECK(parse_poly("t^2/3") == Poly{0, 0, Rational(1, 3)});
  CHECK(parse_poly("(3/2)*t") == Poly{0, Rational(3, 2)});
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("1-2*t+3*t^4").to_string() == "1-2*t+3*t^4");
  CHECK_THROWS_AS(parse_poly("x+1"), InputError);
  CHECK_THROWS_AS(parse_poly("1/t"), InputError);
  CHECK_THROWS_AS(parse_poly("(1+t"), InputError);
  const std::vector<std::string> coeffs{"1", "0", "-1/2"};
  CHECK(poly_from_strings(coeffs) == Poly{1, 0, Rational(-1, 2)});
}

TEST_CASE("division, gcd and printing round trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_poly(rng, 7);
    Poly b = random_poly(rng, 4);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(exact_div(a * b, b) == a);
    CHECK(parse_poly(a.to_string()) == a);
    const Poly g = gcd(a * b, b * b);
    if (!a.is_zero()) CHECK(divmod(a * b, g).second.is_zero());
    CHECK(divmod(b * b, g).second.is_zero());
  }
}

TEST_CASE("composition and evaluation") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    const Poly f = random_poly(rng, 5);
    const Poly g = random_poly(rng, 3);
    const Rational x(3, 7);
    CHECK(compose(f, g)(x) == f(g(x)));
    CHECK(derivative(f * g) == derivative(f) * g + f * derivative(g));
  }
}

TEST_CASE("rational roots") {
  const Poly p = Poly{-1, 2} * Poly{-1, 2} * Poly{3, 1} * Poly{1, 0, 1};  // (2t-1)^2 (t+3) (t^2+1)
  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::pair{Rational(-3), 1});
  CHECK(roots[1] == std::pair{Rational(1, 2), 2});
  CHECK_FALSE(splits_over_rationals(p));
  CHECK(splits_over_rationals(Poly{-1, 2} * Poly{3, 1}));
  CHECK(multiplicity_at(p, Rational(1, 2)) == 2);
  CHECK(rational_roots(Poly::monomial(1, 3)) == std::vector<std::pair<Rational, int>>{{Rational(0), 3}});
}

TEST_CASE("interpolation and determinants") {
  const std::vector<Rational> xs{0, 1, 2, 3};
  const Poly p{1, -1, 0, 2};
  std::vector<Rational> ys;
  for (const auto& x : xs) ys.push_back(p(x));
  CHECK(interpolate(xs, ys) == p);
  CHECK(determinant({2, 1, 1, 3}, 2) == 5);
  CHECK(determinant({1, 2, 3, 2, 4, 6, 0, 1, 1}, 3) == 0);
}

TEST_CASE("truncated series") {
  const Poly f{0, 0, 1};
  const Poly h{1, 1};
  const TruncatedSeries z = expand(f, h, 8);  // t^2 / (1 + t)
  for (int i = 2; i < 8; ++i) CHECK(z[i] == ((i % 2 == 0) ? 1 : -1));
  CHECK(*z.valuation() == 2);
  CHECK((z * TruncatedSeries::from_poly(h, 8)) == TruncatedSeries::from_poly(f, 8));
  CHECK_THROWS_AS(TruncatedSeries::from_poly(f, 8).inverse(), std::domain_error);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    Poly u = random_poly(rng, 5);
    if (u.coeff(0) == 0) continue;
    const TruncatedSeries s = TruncatedSeries::from_poly(u, 12);
    const TruncatedSeries one = s * s.inverse();
    CHECK(one == TruncatedSeries::from_poly(Poly::constant(1), 12));
  }
}

TEST_CASE("linear algebra") {
  Matrix a{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  Matrix m = a;
  CHECK(rref(m, 3).size() == 2);
  const Matrix ker = nullspace(a, 3);
  REQUIRE(ker.size() == 1);
  for (const auto& row : a) {
    Rational dot = 0;
    for (std::size_t i = 0; i < 3; ++i) dot += row[i] * ker[0][i];
    CHECK(dot == 0);
  }
  const auto x = solve_in_span({{1, 0, 1}, {0, 1, 1}}, {2, 3, 5});
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK_FALSE(solve_in_span({{1, 0, 1}, {0, 1, 1}}, {0, 0, 1}));
}
