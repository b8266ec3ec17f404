#include <algorithm>
#include <stdexcept>

#include "semicurve/curve.hpp"

namespace semicurve {

std::string ScrollLayout::name() const {
  std::string s = "S_{";
  for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? "," : "") + std::to_string(blocks[i]);
  return s + "}";
}

ScrollLayout catalecticant(std::span<const int> blocks) {
  int total = 0;
  for (int m : blocks) {
    if (m < 0) throw InputError("block sizes must be nonnegative");
    total += m + 1;
  }
  const auto unit = [&](int i) {
    LinearForm v(static_cast<std::size_t>(total));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  ScrollLayout out;
  out.blocks.assign(blocks.begin(), blocks.end());
  int offset = 0;
  for (int m : blocks) {
    for (int k = 0; k < m; ++k) {
      out.rows[0].push_back(unit(offset + k));
      out.rows[1].push_back(unit(offset + k + 1));
    }
    offset += m + 1;
  }
  return out;
}

namespace {

Poly substitute(const CurveParametrization& c, const LinearForm& l) {
  if (l.size() != c.coords().size()) throw InputError("linear form does not match the ambient space");
  Poly out;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] != 0) out += c.coords()[i] * l[i];
  }
  return out;
}

bool minors_vanish(const std::array<std::vector<Poly>, 2>& e) {
  for (std::size_t i = 0; i < e[0].size(); ++i) {
    for (std::size_t j = i + 1; j < e[0].size(); ++j) {
      if (!(e[0][i] * e[1][j] - e[0][j] * e[1][i]).is_zero()) return false;
    }
  }
  return true;
}

Vector coefficient_vector(const Poly& p, std::size_t width) {
  Vector v(width);
  for (int i = 0; i <= p.degree(); ++i) v[static_cast<std::size_t>(i)] = p.coeff(i);
  return v;
}

}  // namespace

bool verify_scroll_containment(const CurveParametrization& c, const ScrollLayout& layout) {
  if (layout.rows[0].size() != layout.rows[1].size()) return false;
  std::array<std::vector<Poly>, 2> e;
  for (int r = 0; r < 2; ++r) {
    for (const auto& l : layout.rows[static_cast<std::size_t>(r)]) e[static_cast<std::size_t>(r)].push_back(substitute(c, l));
  }
  return minors_vanish(e);
}

ScrollWitness scroll_codimension(const Curve& curve) {
  const CurveParametrization& p = curve.param;
  const auto& f = p.coords();
  const Poly& f0 = f[0];
  const Poly& f1 = f[1];
  if (!splits_over_rationals(f0)) throw InputError("irrational roots unsupported");
  const std::size_t n = f.size() - 1;

  // Conditions on lambda for f = sum lambda_i f_i (i >= 1) to have
  // div(f / f_0) + H - D >= 0 away from P.
  Matrix conditions;
  for (const auto& [cj, mj] : rational_roots(f0)) {
    int min_mult = mj;
    for (std::size_t i = 1; i <= n; ++i) {
      if (!f[i].is_zero()) min_mult = std::min(min_mult, multiplicity_at(f[i], cj));
    }
    const int m1 = f1.is_zero() ? mj : std::min(mj, multiplicity_at(f1, cj));
    const int h = std::max(0, mj - min_mult);
    const int d = std::max(0, mj - m1);
    const int need = mj - (h - d);  // ord_{c_j}(f) >= need
    std::vector<Poly> shifted;
    for (std::size_t i = 1; i <= n; ++i) shifted.push_back(compose(f[i], Poly{cj, Rational(1)}));
    for (int k = 0; k < need; ++k) {
      Vector row;
      for (const auto& s : shifted) row.push_back(s.coeff(k));
      conditions.push_back(std::move(row));
    }
  }
  int dprime = 0;
  for (std::size_t i = 1; i <= n; ++i) dprime = std::max(dprime, f[i].degree());
  const int h_inf = std::max(0, dprime - f0.degree());
  const int d_inf = std::max(0, f1.degree() - f0.degree());
  const int max_deg = f0.degree() + h_inf - d_inf;  // deg f <= max_deg
  for (int k = std::max(0, max_deg + 1); k <= dprime; ++k) {
    Vector row;
    for (std::size_t i = 1; i <= n; ++i) row.push_back(f[i].coeff(k));
    conditions.push_back(std::move(row));
  }

  ScrollWitness out;
  const Matrix u = nullspace(conditions, n);
  out.codimension = static_cast<int>(u.size());
  for (const auto& lambda : u) {
    Poly q;
    for (std::size_t i = 0; i < n; ++i) q += f[i + 1] * lambda[i];
    out.u_basis.push_back(std::move(q));
  }

  // Columns phi = 1, u_k / f_0; rows phi and x_1 phi, homogenized by f_0.
  out.entries[0].push_back(f0);
  out.entries[1].push_back(f1);
  for (const auto& q : out.u_basis) {
    out.entries[0].push_back(q);
    out.entries[1].push_back(exact_div(f1 * q, f0));
  }
  out.minors_vanish = minors_vanish(out.entries);

  std::size_t width = 0;
  for (const auto& row : out.entries) {
    for (const auto& e : row) width = std::max<std::size_t>(width, static_cast<std::size_t>(e.degree() + 1));
  }
  for (const auto& fi : f) width = std::max<std::size_t>(width, static_cast<std::size_t>(fi.degree() + 1));
  Matrix span;
  for (const auto& fi : f) span.push_back(coefficient_vector(fi, width));
  ScrollLayout layout;
  for (int r = 0; r < 2; ++r) {
    for (const auto& e : out.entries[static_cast<std::size_t>(r)]) {
      auto l = solve_in_span(span, coefficient_vector(e, width));
      if (!l) return out;
      layout.rows[static_cast<std::size_t>(r)].push_back(std::move(*l));
    }
  }
  out.layout = std::move(layout);
  return out;
}

BiellipticEmbedding bielliptic_embedding(const NumericalSemigroup& s) {
  const int g = s.genus();
  if (!is_bielliptic(s) || g < 5) throw InputError("semigroup is not bielliptic of genus >= 5");
  BiellipticEmbedding out{CurveParametrization({Poly::constant(1), Poly::monomial(1, 1)}), {}, is_symmetric(s)};
  out.m = g / 2;
  out.n = (g - 4 + 1) / 2;
  const auto t = [](int e) { return Poly::monomial(1, e); };
  std::vector<Poly> coords;
  for (int k = 0; k <= out.m; ++k) coords.push_back(t(4 * k));
  for (int k = 0; k <= out.n; ++k) coords.push_back(t(4 * k + 6));
  std::vector<int> blocks{out.m, out.n};
  if (out.symmetric) {
    coords.push_back(t(2 * g - 3));
    coords.push_back(t(2 * g + 1));
    blocks.push_back(1);
  } else {
    coords.push_back(t(2 * g - 1));
    coords.push_back(t(2 * g + 1));
    blocks.push_back(0);
    blocks.push_back(0);
  }
  out.curve = CurveParametrization(std::move(coords));
  out.layout = catalecticant(blocks);
  out.ambient = out.curve.n();
  out.degree = out.curve.degree();
  if (out.ambient != g + 1) throw std::logic_error("bielliptic embedding has the wrong ambient dimension");
  return out;
}

}  // namespace semicurve
