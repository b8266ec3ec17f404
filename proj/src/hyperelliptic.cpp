#include <algorithm>

#include "semicurve/curve.hpp"

namespace semicurve {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

// Polynomial in (alpha, beta) stored by beta-degree, coefficients in alpha.
using BiPoly = std::vector<Poly>;

void trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool is_zero(const BiPoly& p) { return p.empty(); }

int beta_degree(const BiPoly& p) { return static_cast<int>(p.size()) - 1; }

void axpy(BiPoly& y, const Rational& a, const BiPoly& x) {
  if (y.size() < x.size()) y.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += x[i] * a;
  trim(y);
}

// Value at alpha = a, as a polynomial in beta.
Poly at_alpha(const BiPoly& p, const Rational& a) {
  std::vector<Rational> c;
  for (const auto& q : p) c.push_back(q(a));
  return Poly(std::move(c));
}

int alpha_degree(const BiPoly& p) {
  int d = 0;
  for (const auto& q : p) d = std::max(d, q.degree());
  return d;
}

// Res_beta(p, q) with formal beta-degrees, by evaluation at integer alphas.
Poly resultant(const BiPoly& p, const BiPoly& q) {
  const int dp = beta_degree(p);
  const int dq = beta_degree(q);
  const int bound = dp * alpha_degree(q) + dq * alpha_degree(p);
  const std::size_t n = static_cast<std::size_t>(dp + dq);
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int k = 0; k <= bound; ++k) {
    const Rational a = k;
    std::vector<Rational> m(n * n);
    for (int i = 0; i < dq; ++i) {
      for (int j = 0; j <= dp; ++j) m[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(i + j)] = p[static_cast<std::size_t>(dp - j)](a);
    }
    for (int i = 0; i < dp; ++i) {
      for (int j = 0; j <= dq; ++j) {
        m[static_cast<std::size_t>(dq + i) * n + static_cast<std::size_t>(i + j)] = q[static_cast<std::size_t>(dq - j)](a);
      }
    }
    xs.push_back(a);
    ys.push_back(determinant(std::move(m), n));
  }
  return interpolate(xs, ys);
}

// Residuals of t^2 / (1 + alpha t + beta t^2) at the gaps of S.
std::vector<BiPoly> residuals(const LocalAlgebra& a) {
  const int c = a.conductor();
  std::vector<BiPoly> s(static_cast<std::size_t>(c));
  // 1/h = sum e_k t^k, e_k = -alpha e_{k-1} - beta e_{k-2}.
  std::vector<BiPoly> e;
  for (int k = 0; k + 2 < c; ++k) {
    BiPoly ek;
    if (k == 0) {
      ek = {Poly::constant(1)};
    } else {
      for (const auto& q : e[static_cast<std::size_t>(k - 1)]) ek.push_back(-(q * Poly::monomial(1, 1)));
      if (k >= 2) {
        BiPoly shifted{Poly{}};
        for (const auto& q : e[static_cast<std::size_t>(k - 2)]) shifted.push_back(q);
        axpy(ek, -1, shifted);
      }
      trim(ek);
    }
    e.push_back(ek);
    s[static_cast<std::size_t>(k + 2)] = ek;
  }
  std::vector<BiPoly> eqs;
  for (int v = 0; v < c; ++v) {
    BiPoly sv = s[static_cast<std::size_t>(v)];
    if (is_zero(sv)) continue;
    const TruncatedSeries* b = a.at(v);
    if (!b) {
      eqs.push_back(sv);
      continue;
    }
    for (int w = v; w < c; ++w) {
      if ((*b)[w] != 0) axpy(s[static_cast<std::size_t>(w)], -(*b)[w], sv);
    }
  }
  return eqs;
}

bool witness_ok(const Curve& c, const Poly& h) { return membership(c, Poly::monomial(1, 2), h); }

}  // namespace

HyperellipticAnswer is_hyperelliptic_curve(const Curve& c) {
  HyperellipticAnswer out;
  if (c.local.genus() == 0) {
    out.verdict = Verdict::No;
    out.note = "smooth rational curve";
    return out;
  }
  if (!c.local.semigroup().contains(2)) {
    out.verdict = Verdict::No;
    out.note = "2 is not in the semigroup";
    return out;
  }
  std::vector<BiPoly> eqs = residuals(c.local);
  const auto found = [&](const Rational& alpha, const Rational& beta) {
    const Poly h{Rational(1), alpha, beta};
    if (!witness_ok(c, h)) return false;
    out.verdict = Verdict::Yes;
    out.witness = h;
    return true;
  };
  if (eqs.empty()) {
    found(0, 0);
    return out;
  }
  for (const auto& e : eqs) {
    if (e.size() == 1 && e[0].degree() == 0) {
      out.verdict = Verdict::No;
      out.note = "a residual is a nonzero constant";
      return out;
    }
  }

  // Eliminate beta: alpha must be a root of every univariate equation and of
  // every resultant of two equations involving beta.
  Poly alpha_poly;
  std::vector<const BiPoly*> with_beta;
  for (const auto& e : eqs) {
    if (e.size() == 1) {
      alpha_poly = gcd(alpha_poly, e[0]);
    } else {
      with_beta.push_back(&e);
    }
  }
  std::sort(with_beta.begin(), with_beta.end(),
            [](const BiPoly* a, const BiPoly* b) { return beta_degree(*a) < beta_degree(*b); });
  for (std::size_t i = 1; i < with_beta.size(); ++i) {
    if (alpha_poly.degree() == 0) break;
    alpha_poly = gcd(alpha_poly, resultant(*with_beta[0], *with_beta[i]));
  }
  if (alpha_poly.degree() == 0) {
    out.verdict = Verdict::No;
    out.note = "the eliminant is a nonzero constant";
    return out;
  }

  bool maybe_irrational = false;
  const auto solve_beta = [&](const Rational& alpha) {
    Poly g;
    for (const auto& e : eqs) g = gcd(g, at_alpha(e, alpha));
    if (g.is_zero()) return found(alpha, 0);
    if (g.degree() == 0) return false;
    const auto roots = rational_roots(g);
    for (const auto& [beta, mult] : roots) {
      if (found(alpha, beta)) return true;
    }
    if (!splits_over_rationals(g)) maybe_irrational = true;
    return false;
  };

  if (alpha_poly.is_zero()) {
    // No constraint isolated on alpha; try small rational values.
    for (int k : {0, 1, -1, 2, -2, 3, -3}) {
      if (solve_beta(k)) return out;
    }
    out.verdict = Verdict::Undetermined;
    out.note = "elimination did not isolate alpha";
    return out;
  }
  for (const auto& [alpha, mult] : rational_roots(alpha_poly)) {
    if (solve_beta(alpha)) return out;
  }
  if (!splits_over_rationals(alpha_poly) || maybe_irrational) {
    out.verdict = Verdict::Undetermined;
    out.note = "solutions may exist over an extension of Q";
    return out;
  }
  out.verdict = Verdict::No;
  out.note = "no root of the eliminant extends to a solution";
  return out;
}

}  // namespace semicurve
