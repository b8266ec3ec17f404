#include <algorithm>
#include <random>

#include "semicurve/curve.hpp"

namespace semicurve {

std::string to_string(BasePoint b) {
  switch (b) {
    case BasePoint::None: return "none";
    case BasePoint::Removable: return "removable";
    case BasePoint::NonRemovable: return "non-removable";
  }
  return "?";
}

namespace {

// Values below c of the O_P-module generated by 1 and the given series.
std::vector<int> module_values(const LocalAlgebra& a, std::span<const TruncatedSeries> elems) {
  const int c = a.conductor();
  std::vector<TruncatedSeries> gens;
  for (const auto& b : a.basis()) {
    if (*b.valuation() >= c) break;
    const TruncatedSeries bc = b.truncated(c);
    gens.push_back(bc);
    for (const auto& e : elems) gens.push_back(bc * e.truncated(c));
  }
  return span_valuations(std::move(gens));
}

std::vector<int> extra_values(const NumericalSemigroup& s, const std::vector<int>& values) {
  std::vector<int> extra;
  for (int v : values) {
    if (!s.contains(v)) extra.push_back(v);
  }
  return extra;
}

}  // namespace

Pencil pencil_degree(const Curve& c, const Poly& f_in, const Poly& h_in) {
  if (f_in.is_zero() && h_in.is_zero()) throw InputError("empty pencil");
  if (gcd(f_in, h_in).degree() > 0) throw InputError("f and h share a factor");
  Poly f = f_in;
  Poly h = h_in;
  // <f, h> spans the same pencil after swapping or subtracting multiples.
  if (h.coeff(0) == 0) std::swap(f, h);
  f -= h * (f.coeff(0) / h.coeff(0));
  if (f.is_zero()) throw InputError("constant map");

  Pencil p;
  p.valuation = f.valuation();
  const TruncatedSeries z = expand(f, h, c.local.conductor());
  const std::vector<int> values = module_values(c.local, std::span(&z, 1));
  p.extra_values = extra_values(c.local.semigroup(), values);
  p.degree = static_cast<int>(p.extra_values.size()) + h.degree() + std::max(0, f.degree() - h.degree());
  // A_P contains 1 and lies in the integral closure, so min v(A_P) = 0 and
  // the only candidate shift of S is S itself.
  p.base_point = p.extra_values.empty() ? BasePoint::None : BasePoint::NonRemovable;
  p.f = std::move(f);
  p.h = std::move(h);
  return p;
}

std::optional<NonRemovablePencil> non_removable_pencil(const Curve& c) {
  if (c.local.multiplicity() != 2) return std::nullopt;
  const auto& f = c.param.coords();
  auto x = std::find_if(f.begin() + 1, f.end(), [](const Poly& p) { return p.valuation() == 2; });
  if (x == f.end()) return std::nullopt;
  const Poly f1 = *x * (1 / x->coeff(2));
  const Poly& f0 = f[0];

  constexpr int kAbsent = 1 << 20;
  int r = kAbsent;
  for (int i = 1; i <= f0.degree(); ++i) {
    if (f0.coeff(i) != 0) {
      r = i;
      break;
    }
  }
  int s = kAbsent;
  for (int i = 3; i <= f1.degree(); ++i) {
    if (f1.coeff(i) != 0) {
      s = i - 2;
      break;
    }
  }
  const auto odd = [&](int v) { return v != kAbsent && v % 2 == 1; };
  const bool holds = (odd(r) && r < s) || (odd(s) && s < r) ||
                     (odd(r) && r == s && f0.coeff(r) != f1.coeff(2 + s));
  if (!holds) return std::nullopt;

  NonRemovablePencil out;
  out.r = r == kAbsent ? -1 : r;
  out.s = s == kAbsent ? -1 : s;
  out.formula_degree = 2 + c.local.genus() - (std::min(r, s) + 1) / 2;
  out.pencil = pencil_degree(c, Poly::monomial(1, 2), Poly::constant(1));
  return out;
}

MapDegree map_degree(std::span<const Poly> coords_in, std::uint64_t seed) {
  if (coords_in.size() < 2) throw InputError("a map needs at least two coordinates");
  Poly g;
  for (const auto& p : coords_in) g = gcd(g, p);
  if (g.is_zero()) throw InputError("constant map");
  std::vector<Poly> coords;
  for (const auto& p : coords_in) coords.push_back(exact_div(p, g));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-60, 60);
  std::uniform_int_distribution<int> den(1, 17);
  MapDegree out;
  int best = -1;
  int first = -1;
  for (int sample = 0; sample < 3; ++sample) {
    Rational t0(num(rng), den(rng));
    t0.canonicalize();
    Poly acc;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      for (std::size_t j = i + 1; j < coords.size(); ++j) {
        acc = gcd(acc, coords[i] * coords[j](t0) - coords[j] * coords[i](t0));
      }
    }
    if (acc.is_zero()) continue;
    const int d = acc.degree();
    if (first < 0) first = d;
    if (d != first) out.samples_agree = false;
    best = best < 0 ? d : std::min(best, d);
  }
  if (best <= 0) throw InputError("constant map");
  out.degree = best;
  return out;
}

LinearSeriesReport linear_series(const Curve& c, std::span<const RationalFunction> space, std::uint64_t seed) {
  if (space.empty()) throw InputError("empty linear series");
  std::vector<RationalFunction> fs;
  Poly lcm = Poly::constant(1);
  for (const auto& e : space) {
    if (e.den.is_zero()) throw InputError("zero denominator");
    const Poly g = gcd(e.num, e.den);
    RationalFunction r{exact_div(e.num, g), exact_div(e.den, g)};
    if (r.den.coeff(0) == 0) throw InputError("element has a pole at P");
    lcm = exact_div(lcm * r.den, gcd(lcm, r.den));
    fs.push_back(std::move(r));
  }

  LinearSeriesReport rep;
  Matrix vecs;
  std::size_t width = 0;
  for (const auto& r : fs) {
    rep.map_coords.push_back(r.num * exact_div(lcm, r.den));
    width = std::max<std::size_t>(width, static_cast<std::size_t>(rep.map_coords.back().degree() + 1));
  }
  width = std::max<std::size_t>(width, static_cast<std::size_t>(lcm.degree() + 1));
  for (const auto& p : rep.map_coords) {
    Vector v(width);
    for (int i = 0; i <= p.degree(); ++i) v[static_cast<std::size_t>(i)] = p.coeff(i);
    vecs.push_back(std::move(v));
  }
  Vector one(width);
  for (int i = 0; i <= lcm.degree(); ++i) one[static_cast<std::size_t>(i)] = lcm.coeff(i);
  if (!solve_in_span(vecs, one)) throw InputError("the space does not contain the constants");
  Matrix m = vecs;
  rep.dimension = static_cast<int>(rref(m, width).size()) - 1;

  std::vector<TruncatedSeries> elems;
  for (const auto& r : fs) elems.push_back(expand(r.num, r.den, c.local.conductor()));
  rep.degree_at_p = static_cast<int>(extra_values(c.local.semigroup(), module_values(c.local, elems)).size());
  rep.base_point_free = rep.degree_at_p == 0;
  int at_infinity = 0;
  for (const auto& r : fs) at_infinity = std::max(at_infinity, r.num.degree() - r.den.degree());
  rep.degree = rep.degree_at_p + lcm.degree() + at_infinity;
  rep.map = map_degree(rep.map_coords, seed);
  return rep;
}

LinearSeriesReport g83_construction(const Curve& c, const RationalFunction& u_in, std::uint64_t seed) {
  if (u_in.den.is_zero()) throw InputError("zero denominator");
  const Poly g = gcd(u_in.num, u_in.den);
  const RationalFunction u{exact_div(u_in.num, g), exact_div(u_in.den, g)};
  const auto power = [&](int k) { return RationalFunction{pow(u.num, k), pow(u.den, k)}; };
  if (u.den.coeff(0) == 0 || !membership(c, power(2).num, power(2).den) ||
      !membership(c, power(3).num, power(3).den)) {
    throw InputError("u does not define the construction");
  }
  const std::vector<RationalFunction> v{{Poly::constant(1), Poly::constant(1)}, power(2), power(3), power(4)};
  return linear_series(c, v, seed);
}

LinearSeriesReport g83_default(const Curve& c, std::uint64_t seed) {
  const auto& f = c.param.coords();
  if (f.size() < 3) throw InputError("need at least two affine coordinates");
  const std::vector<RationalFunction> v{
      {Poly::constant(1), Poly::constant(1)}, {f[1], f[0]}, {f[2], f[0]}, {f[1] * f[1], f[0] * f[0]}};
  return linear_series(c, v, seed);
}

}  // namespace semicurve
