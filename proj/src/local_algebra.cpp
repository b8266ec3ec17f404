#include <algorithm>
#include <stdexcept>
#include <string>

#include "semicurve/curve.hpp"

namespace semicurve {

namespace {

bool proportional(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return true;
  return a * b.lead() == b * a.lead();
}

// Valuation-echelon basis under construction.
class Echelon {
 public:
  explicit Echelon(int order) : index_(static_cast<std::size_t>(order), -1) {}

  // Reduces by leading terms; returns the index of the new element or -1.
  int insert(TruncatedSeries s) {
    for (;;) {
      const auto v = s.valuation();
      if (!v) return -1;
      const int i = index_[static_cast<std::size_t>(*v)];
      if (i < 0) {
        s *= 1 / s[*v];
        index_[static_cast<std::size_t>(*v)] = static_cast<int>(elems_.size());
        elems_.push_back(std::move(s));
        return static_cast<int>(elems_.size()) - 1;
      }
      s -= elems_[static_cast<std::size_t>(i)] * Rational(s[*v]);
    }
  }

  const TruncatedSeries& operator[](int i) const { return elems_[static_cast<std::size_t>(i)]; }
  std::size_t size() const { return elems_.size(); }

  std::vector<int> valuations() const {
    std::vector<int> v;
    for (std::size_t i = 0; i < index_.size(); ++i) {
      if (index_[i] >= 0) v.push_back(static_cast<int>(i));
    }
    return v;
  }

  std::vector<TruncatedSeries> sorted() && {
    std::vector<TruncatedSeries> out;
    for (int i : index_) {
      if (i >= 0) out.push_back(std::move(elems_[static_cast<std::size_t>(i)]));
    }
    return out;
  }

 private:
  std::vector<int> index_;
  std::vector<TruncatedSeries> elems_;
};

// Semigroup certified by the values below n/2: they must end in a run of
// at least `multiplicity` consecutive integers, after which everything is in.
std::optional<NumericalSemigroup> certify(const std::vector<int>& values, int n) {
  const int half = n / 2;
  std::vector<bool> in(static_cast<std::size_t>(half), false);
  for (int v : values) {
    if (v < half) in[static_cast<std::size_t>(v)] = true;
  }
  int m = 1;
  while (m < half && !in[static_cast<std::size_t>(m)]) ++m;
  if (m >= half) return std::nullopt;
  int c = half;
  while (c > 0 && in[static_cast<std::size_t>(c - 1)]) --c;
  if (half - c < m) return std::nullopt;
  std::vector<int> gaps;
  for (int i = 1; i < c; ++i) {
    if (!in[static_cast<std::size_t>(i)]) gaps.push_back(i);
  }
  return from_gaps(gaps);
}

}  // namespace

CurveParametrization::CurveParametrization(std::vector<Poly> f) : f_(std::move(f)) {
  if (f_.size() < 2) throw InputError("a parametrization needs at least two coordinates");
  Poly g;
  for (const auto& p : f_) g = gcd(g, p);
  if (g.is_zero()) throw InputError("all coordinates are zero");
  if (g.degree() > 0) throw InputError("coordinates share the factor " + g.to_string());
  const auto first = std::find_if(f_.begin(), f_.end(), [](const Poly& p) { return !p.is_zero(); });
  if (std::all_of(f_.begin(), f_.end(), [&](const Poly& p) { return proportional(p, *first); })) {
    throw InputError("constant map");
  }
}

int CurveParametrization::degree() const {
  int d = 0;
  for (const auto& p : f_) d = std::max(d, p.degree());
  return d;
}

bool CurveParametrization::is_normalized() const {
  if (f_[0].coeff(0) != 1) return false;
  return std::all_of(f_.begin() + 1, f_.end(), [](const Poly& p) { return p.coeff(0) == 0; });
}

CurveParametrization CurveParametrization::normalized() const {
  std::vector<Poly> f = f_;
  const auto j = std::find_if(f.begin(), f.end(), [](const Poly& p) { return p.coeff(0) != 0; });
  std::iter_swap(f.begin(), j);
  f[0] *= 1 / f[0].coeff(0);
  for (std::size_t i = 1; i < f.size(); ++i) f[i] -= f[0] * f[i].coeff(0);
  return CurveParametrization(std::move(f));
}

LocalAlgebra::LocalAlgebra(std::vector<TruncatedSeries> basis, int order, NumericalSemigroup s)
    : basis_(std::move(basis)), index_(static_cast<std::size_t>(order), -1), order_(order),
      semigroup_(std::move(s)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    index_[static_cast<std::size_t>(*basis_[i].valuation())] = static_cast<int>(i);
  }
}

const TruncatedSeries* LocalAlgebra::at(int v) const {
  if (v < 0 || v >= order_) return nullptr;
  const int i = index_[static_cast<std::size_t>(v)];
  return i < 0 ? nullptr : &basis_[static_cast<std::size_t>(i)];
}

TruncatedSeries LocalAlgebra::reduce(TruncatedSeries s) const {
  s = s.truncated(conductor());
  for (int v = 0; v < s.order(); ++v) {
    if (s[v] == 0) continue;
    if (const TruncatedSeries* b = at(v)) s -= *b * Rational(s[v]);
  }
  return s;
}

LocalAlgebra local_algebra(const CurveParametrization& c, const LocalAlgebraOptions& opt) {
  const CurveParametrization p = c.is_normalized() ? c : c.normalized();
  // A non-birational map never stabilises; catching it here saves climbing
  // all the way to max_order.
  if (p.n() >= 1) {
    const int d = map_degree(p.coords()).degree;
    if (d > 1) {
      throw std::runtime_error("truncation insufficient: parametrization has degree " + std::to_string(d) +
                               " onto its image");
    }
  }
  int n = opt.initial_order > 0 ? opt.initial_order : 4 * p.degree() + 8;
  for (;;) {
    std::vector<TruncatedSeries> x;
    for (int i = 1; i <= p.n(); ++i) x.push_back(expand(p.coords()[static_cast<std::size_t>(i)], p.coords()[0], n));

    // Span of monomials in the x_i: close {1} under multiplication by each x_i.
    Echelon e(n);
    TruncatedSeries one(n);
    one[0] = 1;
    e.insert(one);
    for (std::size_t next = 0; next < e.size(); ++next) {
      const TruncatedSeries b = e[static_cast<int>(next)];
      for (const auto& xi : x) e.insert(b * xi);
    }
    if (auto s = certify(e.valuations(), n)) {
      return LocalAlgebra(std::move(e).sorted(), n, std::move(*s));
    }
    if (n >= opt.max_order) throw std::runtime_error("truncation insufficient");
    n = std::min(2 * n, opt.max_order);
  }
}

Curve make_curve(const CurveParametrization& c, const LocalAlgebraOptions& opt) {
  CurveParametrization p = c.normalized();
  LocalAlgebra a = local_algebra(p, opt);
  return Curve{std::move(p), std::move(a)};
}

int genus(const Curve& c) { return c.local.genus(); }
int multiplicity(const Curve& c) { return c.local.multiplicity(); }
CofiniteSet k_set_of_curve(const Curve& c) { return k_set(c.local.semigroup()); }
std::vector<int> pole_orders_of_differentials(const Curve& c) {
  return differential_pole_orders(c.local.semigroup());
}

bool membership(const Curve& c, const Poly& f, const Poly& h) {
  if (h.is_zero()) throw InputError("zero denominator");
  if (h.coeff(0) == 0) {
    if (f.coeff(0) == 0) throw InputError("f and h both vanish at t=0");
    return false;
  }
  return c.local.reduce(expand(f, h, c.local.conductor())).is_zero();
}

std::vector<int> span_valuations(std::vector<TruncatedSeries> gens) {
  int n = 0;
  for (const auto& g : gens) n = std::max(n, g.order());
  Echelon e(n);
  for (auto& g : gens) e.insert(std::move(g));
  return e.valuations();
}

}  // namespace semicurve
