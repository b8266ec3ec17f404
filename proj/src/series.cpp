#include "semicurve/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace semicurve {

TruncatedSeries::TruncatedSeries(int n) : coeffs_(static_cast<std::size_t>(std::max(n, 0))) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, int n) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(static_cast<std::size_t>(std::max(n, 0)));
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, int n) {
  TruncatedSeries s(n);
  for (int i = 0; i < n && i <= p.degree(); ++i) s[i] = p.coeff(i);
  return s;
}

std::optional<int> TruncatedSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return std::nullopt;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j < n; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (order() == 0) return *this;
  if (coeffs_[0] == 0) throw std::domain_error("not a unit at t=0");
  const int n = order();
  TruncatedSeries inv(n);
  const Rational a0inv = 1 / coeffs_[0];
  inv[0] = a0inv;
  for (int k = 1; k < n; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) {
      if (coeffs_[static_cast<std::size_t>(j)] != 0) acc += coeffs_[static_cast<std::size_t>(j)] * inv[k - j];
    }
    inv[k] = -acc * a0inv;
  }
  return inv;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
  TruncatedSeries out(order());
  for (int i = 0; i + k < order(); ++i) {
    if (i + k >= 0) out[i + k] = coeffs_[static_cast<std::size_t>(i)];
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int n) const {
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + std::min(n, order())), std::min(n, order()));
}

Poly TruncatedSeries::to_poly() const { return Poly(coeffs_); }

TruncatedSeries expand(const Poly& f, const Poly& h, int n) {
  if (h.coeff(0) == 0) throw std::domain_error("not a unit at t=0");
  return TruncatedSeries::from_poly(f, n) * TruncatedSeries::from_poly(h, n).inverse();
}

}  // namespace semicurve
