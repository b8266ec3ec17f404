#include "semicurve/numset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace semicurve {

CofiniteSet CofiniteSet::from_gaps(std::vector<int> gaps) {
  std::sort(gaps.begin(), gaps.end());
  if (std::adjacent_find(gaps.begin(), gaps.end()) != gaps.end()) {
    throw InputError("gaps must be distinct");
  }
  if (!gaps.empty() && gaps.front() <= 0) {
    throw InputError("0 must belong to the set; gaps must be positive");
  }
  CofiniteSet t;
  t.conductor_ = gaps.empty() ? 0 : gaps.back() + 1;
  t.below_.assign(static_cast<std::size_t>(t.conductor_), true);
  for (int l : gaps) t.below_[static_cast<std::size_t>(l)] = false;
  for (int n = 0; n < t.conductor_; ++n) {
    if (t.below_[static_cast<std::size_t>(n)]) t.members_.push_back(n);
  }
  t.gaps_ = std::move(gaps);
  return t;
}

std::string CofiniteSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (int m : members_) os << m << ',';
  os << conductor_ << ",->}";
  return os.str();
}

NumericalSemigroup::NumericalSemigroup(CofiniteSet set) : CofiniteSet(std::move(set)) {
  const int c = conductor();
  multiplicity_ = 1;
  while (!contains(multiplicity_)) ++multiplicity_;
  generators_.clear();
  // Minimal generators all lie below c + multiplicity (the naturals, where
  // that bound is 1, still need 1 itself).
  for (int x = 1; x < std::max(c + multiplicity_, 2); ++x) {
    if (!contains(x)) continue;
    bool decomposable = false;
    for (int a = multiplicity_; a <= x / 2 && !decomposable; ++a) {
      decomposable = contains(a) && contains(x - a);
    }
    if (!decomposable) generators_.push_back(x);
  }
}

NumericalSemigroup NumericalSemigroup::from_set(CofiniteSet set) {
  const auto& members = set.members_below_conductor();
  for (std::size_t i = 1; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      const int sum = members[i] + members[j];
      if (sum >= set.conductor()) break;
      if (!set.contains(sum)) throw InputError("not a semigroup");
    }
  }
  return NumericalSemigroup(std::move(set));
}

NumericalSemigroup from_generators(std::span<const int> gens) {
  if (gens.empty()) throw InputError("generator list is empty");
  int d = 0;
  for (int x : gens) {
    if (x <= 0) throw InputError("generators must be positive");
    d = std::gcd(d, x);
  }
  if (d != 1) throw InputError("infinite complement");
  const int m = *std::min_element(gens.begin(), gens.end());
  // Sieve until m consecutive members appear; from there on everything is in.
  std::vector<bool> in{true};
  std::vector<int> gaps;
  int run = 0;
  for (int n = 1; run < m; ++n) {
    bool member = false;
    for (int x : gens) {
      if (x <= n && in[static_cast<std::size_t>(n - x)]) {
        member = true;
        break;
      }
    }
    in.push_back(member);
    if (member) {
      ++run;
    } else {
      run = 0;
      gaps.push_back(n);
    }
  }
  return NumericalSemigroup::from_set(CofiniteSet::from_gaps(std::move(gaps)));
}

NumericalSemigroup from_gaps(std::span<const int> gaps) {
  return NumericalSemigroup::from_set(
      CofiniteSet::from_gaps(std::vector<int>(gaps.begin(), gaps.end())));
}

std::int64_t weight(const CofiniteSet& t) {
  std::int64_t sum = 0;
  for (int l : t.gaps()) sum += l;
  const std::int64_t g = t.genus();
  return sum - g * (g + 1) / 2;
}

std::int64_t weight_forward(const CofiniteSet& t) {
  std::int64_t total = 0;
  std::int64_t passed = 0;
  for (int n = 1; n < t.conductor(); ++n) {
    if (t.contains(n)) {
      ++passed;
    } else {
      total += passed;
    }
  }
  return total;
}

std::int64_t weight_backward(const CofiniteSet& t) {
  std::int64_t total = 0;
  std::int64_t passed = 0;
  for (int n = t.conductor() - 1; n >= 1; --n) {
    if (t.contains(n)) {
      total += passed;
    } else {
      ++passed;
    }
  }
  return total;
}

CofiniteSet k_set(const NumericalSemigroup& s) {
  const int c = s.conductor();
  std::vector<int> gaps;
  for (int a = 0; a < c; ++a) {
    if (s.contains(c - 1 - a)) gaps.push_back(a);
  }
  return CofiniteSet::from_gaps(std::move(gaps));
}

std::vector<int> differential_pole_orders(const NumericalSemigroup& s) {
  const CofiniteSet k = k_set(s);
  const int c = s.conductor();
  std::vector<int> orders;
  for (int a = c - 1; a >= 0; --a) {
    if (k.contains(a)) orders.push_back(c - a);
  }
  return orders;
}

std::int64_t weight_from_pole_orders(std::span<const int> pole_orders) {
  std::int64_t w = 0;
  for (std::size_t i = 0; i + 1 < pole_orders.size(); ++i) {
    w += pole_orders[i] - static_cast<std::int64_t>(i + 1);
  }
  return w;
}

bool is_symmetric(const NumericalSemigroup& s) {
  const int c = s.conductor();
  for (int a = 0; a < c; ++a) {
    if (s.contains(a) == s.contains(c - 1 - a)) return false;
  }
  return true;
}

bool is_hyperelliptic(const NumericalSemigroup& s) { return s.contains(2); }

bool is_bielliptic(const NumericalSemigroup& s) {
  return !s.contains(1) && !s.contains(2) && !s.contains(3) && s.contains(4) &&
         !s.contains(5) && s.contains(6);
}

bool is_kappa_hyperelliptic(const NumericalSemigroup& s, int kappa) {
  if (kappa < 0) return false;
  int evens = 0;
  for (int e = 2; e <= 4 * kappa; e += 2) {
    if (s.contains(e)) ++evens;
  }
  return evens == kappa && s.contains(4 * kappa + 2);
}

std::vector<int> detect_kappa(const NumericalSemigroup& s) {
  std::vector<int> found;
  for (int kappa = 0; kappa <= s.genus() / 2; ++kappa) {
    if (is_kappa_hyperelliptic(s, kappa)) found.push_back(kappa);
  }
  return found;
}

bool technical_hypothesis(const NumericalSemigroup& s) {
  if (detect_kappa(s).empty()) {
    throw std::domain_error("semigroup is not kappa-hyperelliptic for any kappa");
  }
  const auto& gaps = s.gaps();
  const int g = s.genus();
  // l_0 := 0 when g < 2
  const int next_to_largest = g >= 2 ? gaps[static_cast<std::size_t>(g - 2)] : 0;
  for (int odd = 1; odd <= 2 * g; odd += 2) {
    if (s.contains(odd) && odd <= next_to_largest) return false;
  }
  return true;
}

WeightReport weight_report(const NumericalSemigroup& s) {
  WeightReport r;
  r.generators = s.minimal_generators();
  r.genus = s.genus();
  r.conductor = s.conductor();
  const CofiniteSet k = k_set(s);
  r.genus_k = k.genus();
  r.weight_s = weight(s);
  r.weight_k = weight(k);
  r.symmetric = is_symmetric(s);
  r.hyperelliptic = is_hyperelliptic(s);
  r.bielliptic = is_bielliptic(s);
  r.kappa = detect_kappa(s);
  if (!r.kappa.empty()) r.technical_hypothesis = technical_hypothesis(s);
  return r;
}

}  // namespace semicurve
