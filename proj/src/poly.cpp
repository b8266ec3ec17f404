#include "semicurve/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "semicurve/error.hpp"

namespace semicurve {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) {
      if (mag.get_den() != 1) {
        os << '(' << mag.get_str() << ")*";
      } else {
        os << mag.get_str() << '*';
      }
    }
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv_lead = 1 / b.lead();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.lead());
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> d(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) d[static_cast<std::size_t>(i - 1)] = p.coeff(i) * i;
  return Poly(std::move(d));
}

Poly pow(const Poly& p, int e) {
  if (e < 0) throw std::domain_error("negative polynomial power");
  Poly result = Poly::constant(1);
  Poly base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly compose(const Poly& f, const Poly& g) {
  Poly acc;
  for (int i = f.degree(); i >= 0; --i) acc = acc * g + Poly::constant(f.coeff(i));
  return acc;
}

Poly reversed(const Poly& p, int deg) {
  if (deg < p.degree()) throw std::invalid_argument("reversal degree below polynomial degree");
  std::vector<Rational> r(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i <= p.degree(); ++i) r[static_cast<std::size_t>(deg - i)] = p.coeff(i);
  return Poly(std::move(r));
}

namespace {

// expr := term (('+'|'-') term)*
// term := unary (('*'|'/') unary)*      ('/' only by constants)
// unary := ('+'|'-') unary | power
// power := primary ('^' integer)?
// primary := integer | 't' | '(' expr ')'
class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("malformed polynomial '" + std::string(s_) + "': " + why + " at offset " +
                     std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }
  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        Poly d = unary();
        if (d.degree() != 0) fail("division by a non-constant");
        acc *= 1 / d.lead();
      } else {
        return acc;
      }
    }
  }
  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Poly power() {
    Poly base = primary();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      base = pow(base, e);
    }
    return base;
  }
  Poly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == 't') {
      ++pos_;
      return Poly::monomial(1, 1);
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(Rational(Integer(std::string(s_.substr(start, pos_ - start)), 10)));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

Poly poly_from_strings(std::span<const std::string> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(parse_rational(c));
  return Poly(std::move(v));
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2;
    Integer y = 2;
    Integer d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out.push_back(n);
    return;
  }
  const Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<Integer> divisors(const Integer& n) {
  std::map<Integer, int> powers;
  for (const auto& p : factor_integer(n)) ++powers[p];
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : powers) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Integer> factor_integer(const Integer& n) {
  Integer m = abs(n);
  if (m == 0) throw std::domain_error("cannot factor zero");
  std::vector<Integer> out;
  for (unsigned long p = 2; p < 1000; ++p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.push_back(Integer(p));
      m /= p;
    }
  }
  factor_into(m, out);
  std::sort(out.begin(), out.end());
  return out;
}

int multiplicity_at(const Poly& p, const Rational& r) {
  if (p.is_zero()) throw std::domain_error("multiplicity of a root of the zero polynomial");
  int mult = 0;
  Poly q = p;
  const Poly lin{-r, Rational(1)};
  for (;;) {
    auto [quot, rem] = divmod(q, lin);
    if (!rem.is_zero()) return mult;
    ++mult;
    q = std::move(quot);
  }
}

std::vector<std::pair<Rational, int>> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  std::vector<std::pair<Rational, int>> roots;
  const int v = p.valuation();
  std::vector<Rational> shifted(p.coeffs().begin() + v, p.coeffs().end());
  const Poly q(std::move(shifted));
  if (v > 0) roots.emplace_back(Rational(0), v);
  if (q.degree() < 1) return roots;

  // Clear denominators; candidates are +-a/b with a | q(0), b | lead.
  Integer lcm_den = 1;
  for (const auto& c : q.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  const Integer a0 = Rational(q.coeff(0) * lcm_den).get_num();
  const Integer an = Rational(q.lead() * lcm_den).get_num();
  const Poly sqfree = exact_div(q, gcd(q, derivative(q)));
  for (const Integer& num : divisors(a0)) {
    for (const Integer& den : divisors(an)) {
      for (int sign : {1, -1}) {
        Rational r(num * sign, den);
        r.canonicalize();
        if (r.get_den() != den && den != 1) continue;  // visit each fraction once
        if (sqfree(r) != 0) continue;
        if (std::any_of(roots.begin(), roots.end(), [&](const auto& e) { return e.first == r; })) continue;
        roots.emplace_back(r, multiplicity_at(q, r));
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool splits_over_rationals(const Poly& p) {
  if (p.is_zero()) return false;
  int total = 0;
  for (const auto& [r, m] : rational_roots(p)) total += m;
  return total == p.degree();
}

Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolation size mismatch");
  Poly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis = Poly::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly{-xs[j], Rational(1)};
      denom *= xs[i] - xs[j];
    }
    result += basis * (ys[i] / denom);
  }
  return result;
}

Rational determinant(std::vector<Rational> m, std::size_t n) {
  if (m.size() != n * n) throw std::invalid_argument("determinant needs a square matrix");
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m[pivot * n + k], m[col * n + k]);
      det = -det;
    }
    const Rational p = m[col * n + col];
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r * n + col] == 0) continue;
      const Rational f = m[r * n + col] / p;
      for (std::size_t k = col; k < n; ++k) m[r * n + k] -= f * m[col * n + k];
    }
  }
  return det;
}

}  // namespace semicurve
