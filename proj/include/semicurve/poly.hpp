#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semicurve/rational.hpp"

namespace semicurve {

/// Univariate polynomial in t over the rationals, ascending coefficients.
/// Canonical form: no trailing zeros; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Order of vanishing at t = 0; -1 for the zero polynomial.
  int valuation() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& lead() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// "1-2*t+3*t^4"; "0" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws std::domain_error on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws std::domain_error if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
Poly monic(const Poly& p);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly derivative(const Poly& p);
Poly pow(const Poly& p, int e);
/// f(g(t)).
Poly compose(const Poly& f, const Poly& g);
/// t^deg * p(1/t) with deg >= p.degree(); used for expansions at infinity.
Poly reversed(const Poly& p, int deg);

/// Parses "1-2*t+3*t^4", "t^2/3", "(3/2)*t" and friends. The variable must be t.
Poly parse_poly(std::string_view text);

/// Coefficients given as rational strings or integers, ascending degree.
Poly poly_from_strings(std::span<const std::string> coeffs);

/// Distinct rational roots with multiplicity, ascending.
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p);
/// Order of vanishing of p at r.
int multiplicity_at(const Poly& p, const Rational& r);
/// True iff p is a product of linear factors over Q (constants split trivially).
bool splits_over_rationals(const Poly& p);

/// Lagrange interpolation through distinct xs.
Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// Determinant of a square rational matrix (row-major, n*n entries).
Rational determinant(std::vector<Rational> m, std::size_t n);

/// Prime factors of |n| with multiplicity (trial division + Pollard rho).
std::vector<Integer> factor_integer(const Integer& n);

}  // namespace semicurve
