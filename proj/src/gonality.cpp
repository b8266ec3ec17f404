#include <algorithm>
#include <random>
#include <stdexcept>

#include "semicurve/curve.hpp"

namespace semicurve {

int valuation_lower_bound(const NumericalSemigroup& s) {
  if (s.genus() == 0) return 1;
  const int c = s.conductor();
  int best = c;
  for (int a = 1; a < c; ++a) {
    int extra = 0;
    for (int m : s.members_below_conductor()) {
      if (m + a < c && !s.contains(m + a)) ++extra;
    }
    best = std::min(best, a + extra);
  }
  return best;
}

namespace {

struct Candidate {
  Poly f;
  Poly h;
  std::string source;
};

// Values of the coordinates at a rational point, or their top coefficients
// at infinity.
Vector evaluation_row(const CurveParametrization& p, const std::optional<Rational>& t0) {
  Vector row;
  for (const auto& f : p.coords()) row.push_back(t0 ? f(*t0) : f.coeff(p.degree()));
  return row;
}

Poly combine(const CurveParametrization& p, const Vector& coeffs) {
  Poly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out += p.coords()[i] * coeffs[i];
  return out;
}

std::string point_name(const std::optional<Rational>& t0) { return t0 ? to_string(*t0) : "inf"; }

void add_projections(const CurveParametrization& p, std::vector<Candidate>& out) {
  std::vector<std::optional<Rational>> pool{std::nullopt, Rational(0)};
  for (const auto& [r, mult] : rational_roots(p.coords()[0])) pool.emplace_back(r);
  for (int k : {1, -1, 2, -2, 3}) pool.emplace_back(Rational(k));
  pool.emplace_back(Rational(1, 2));
  const std::size_t need = static_cast<std::size_t>(p.n() - 1);
  if (need == 0 || need > pool.size()) return;
  for (std::size_t start = 0; start < pool.size(); ++start) {
    Matrix rows;
    std::string name;
    for (std::size_t k = 0; k < need; ++k) {
      const auto& t0 = pool[(start + k) % pool.size()];
      rows.push_back(evaluation_row(p, t0));
      name += (k ? "," : "") + point_name(t0);
    }
    const Matrix ker = nullspace(rows, static_cast<std::size_t>(p.n() + 1));
    for (std::size_t i = 0; i + 1 < ker.size() && i < 2; ++i) {
      out.push_back({combine(p, ker[i]), combine(p, ker[i + 1]), "projection from " + name});
    }
  }
}

}  // namespace

GonalityBounds gonality_bounds(const Curve& c, const GonalityOptions& opt) {
  GonalityBounds out;
  const NumericalSemigroup& s = c.local.semigroup();
  const int g = s.genus();
  const CurveParametrization& p = c.param;
  out.lower = valuation_lower_bound(s);

  std::vector<Candidate> cands;
  if (g == 0) {
    cands.push_back({Poly::monomial(1, 1), Poly::constant(1), "t"});
  } else {
    // For Gorenstein curves a g^1_2 must be base-point-free, i.e. a double cover.
    if (out.lower < 3 && is_symmetric(s)) {
      const HyperellipticAnswer hyp = is_hyperelliptic_curve(c);
      if (hyp.verdict == Verdict::No) out.lower = 3;
      if (hyp.witness) cands.push_back({Poly::monomial(1, 2), *hyp.witness, "t^2/h witness"});
    }
    if (auto nr = non_removable_pencil(c)) cands.push_back({nr->pencil.f, nr->pencil.h, "non-removable <1,t^2>"});
    for (std::size_t i = 0; i < p.coords().size(); ++i) {
      for (std::size_t j = i + 1; j < p.coords().size(); ++j) {
        cands.push_back({p.coords()[j], p.coords()[i],
                         "coordinates " + std::to_string(j) + "/" + std::to_string(i)});
      }
    }
    for (int e = 1; e <= std::max(2, s.conductor()); ++e) {
      cands.push_back({Poly::monomial(1, e), Poly::constant(1), "t^" + std::to_string(e)});
    }
    for (const auto& [r, mult] : rational_roots(p.coords()[0])) {
      const Poly q = exact_div(p.coords()[0], Poly{-r, Rational(1)});
      cands.push_back({Poly::monomial(1, 2), q, "t^2/(f_0/(t-" + to_string(r) + "))"});
    }
    add_projections(p, cands);

    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> small(-3, 3);
    for (int k = 0; k < opt.random_candidates; ++k) {
      if (k % 2 == 0) {
        Vector a(p.coords().size());
        Vector b(p.coords().size());
        for (auto& x : a) x = small(rng);
        for (auto& x : b) x = small(rng);
        cands.push_back({combine(p, a), combine(p, b), "random combination"});
      } else {
        const Poly h{Rational(1), Rational(small(rng)), Rational(small(rng))};
        cands.push_back({Poly::monomial(1, 2 + k % 3), h, "random t^e/h"});
      }
    }
  }

  for (auto& cand : cands) {
    const Poly d = gcd(cand.f, cand.h);
    if (d.is_zero()) continue;
    const Poly f = exact_div(cand.f, d);
    const Poly h = exact_div(cand.h, d);
    ++out.candidates_tried;
    try {
      Pencil pen = pencil_degree(c, f, h);
      if (!out.witness || pen.degree < out.upper) {
        out.upper = pen.degree;
        out.witness = std::move(pen);
        out.witness_source = cand.source;
      }
    } catch (const InputError&) {
      // constant ratio
    }
  }
  if (!out.witness) throw std::logic_error("no pencil candidate produced a degree");
  if (out.upper > std::max(g + 1, 1)) throw std::logic_error("upper bound exceeds g + 1");
  if (out.lower > out.upper) throw std::logic_error("gonality bounds do not bracket");
  return out;
}

}  // namespace semicurve
