#pragma once

#include <optional>
#include <vector>

#include "semicurve/poly.hpp"

namespace semicurve {

/// a_0 + a_1 t + ... + a_{N-1} t^{N-1} + O(t^N) over the rationals.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// Zero series known to order n.
  explicit TruncatedSeries(int n);
  TruncatedSeries(std::vector<Rational> coeffs, int n);
  /// p mod t^n.
  static TruncatedSeries from_poly(const Poly& p, int n);

  int order() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

  /// Index of the first nonzero coefficient; nullopt means "at least order()".
  std::optional<int> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Multiplicative inverse; throws std::domain_error("not a unit at t=0").
  TruncatedSeries inverse() const;
  /// t^k * this, same order.
  TruncatedSeries shifted(int k) const;
  /// Same series known to a lower order.
  TruncatedSeries truncated(int n) const;
  Poly to_poly() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Series of f/h to order n. Throws std::domain_error("not a unit at t=0")
/// when h(0) = 0.
TruncatedSeries expand(const Poly& f, const Poly& h, int n);

}  // namespace semicurve
