#pragma once

// Straight-from-the-definition versions of the quantities the library
// computes cleverly. Slow on purpose; only for small inputs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

// Members of <gens> below `bound`, by dynamic programming over sums.
inline std::vector<bool> closure(const std::vector<int>& gens, int bound) {
  std::vector<bool> in(static_cast<std::size_t>(bound), false);
  in[0] = true;
  for (int n = 1; n < bound; ++n) {
    for (int g : gens) {
      if (g <= n && in[static_cast<std::size_t>(n - g)]) {
        in[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
  return in;
}

struct Set {
  std::vector<int> gaps;
  int conductor = 0;
  bool contains(int n) const {
    return n >= 0 && !std::binary_search(gaps.begin(), gaps.end(), n);
  }
};

inline Set from_generators(const std::vector<int>& gens) {
  // Frobenius < a*b for any coprime pair, so 4 * max^2 is plenty.
  const int m = *std::max_element(gens.begin(), gens.end());
  const auto in = closure(gens, 4 * m * m + 4);
  Set s;
  for (int n = 0; n < static_cast<int>(in.size()); ++n) {
    if (!in[static_cast<std::size_t>(n)]) s.gaps.push_back(n);
  }
  s.conductor = s.gaps.empty() ? 0 : s.gaps.back() + 1;
  return s;
}

inline std::int64_t weight(const Set& s) {
  std::int64_t w = 0;
  for (int i = 0; i < static_cast<int>(s.gaps.size()); ++i) w += s.gaps[static_cast<std::size_t>(i)] - (i + 1);
  return w;
}

// K = {a >= 0 : c - 1 - a not in S}.
inline Set k_set(const Set& s) {
  Set k;
  for (int a = 0; a < s.conductor; ++a) {
    if (s.contains(s.conductor - 1 - a)) k.gaps.push_back(a);
  }
  k.conductor = k.gaps.empty() ? 0 : k.gaps.back() + 1;
  return k;
}

inline bool symmetric(const Set& s) {
  for (int a = 0; a < s.conductor; ++a) {
    if (s.contains(a) == s.contains(s.conductor - 1 - a)) return false;
  }
  return true;
}

inline bool is_semigroup(const std::vector<int>& gaps, int bound) {
  Set s{gaps, gaps.empty() ? 0 : gaps.back() + 1};
  for (int a = 1; a < bound; ++a) {
    if (!s.contains(a)) continue;
    for (int b = a; a + b < bound; ++b) {
      if (s.contains(b) && !s.contains(a + b)) return false;
    }
  }
  return true;
}

// Number of semigroups of genus g: every gap lies in [1, 2g - 1], so try
// each g-subset of that interval.
inline std::uint64_t count_genus(int g) {
  if (g == 0) return 1;
  const int n = 2 * g - 1;
  std::uint64_t count = 0;
  std::vector<int> pick(static_cast<std::size_t>(g));
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    if (is_semigroup(pick, 2 * n + 2)) ++count;
    int i = g - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - g + 1 + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < g; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return count;
}

// Random generating set with gcd 1.
inline std::vector<int> random_generators(std::mt19937_64& rng, int max_gen = 20) {
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> pick(2, max_gen);
  while (true) {
    std::vector<int> gens;
    const int k = len(rng) + 1;
    for (int i = 0; i < k; ++i) gens.push_back(pick(rng));
    int d = 0;
    for (int x : gens) d = std::gcd(d, x);
    if (d == 1) return gens;
  }
}

}  // namespace oracle
