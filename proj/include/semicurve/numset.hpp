#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semicurve/error.hpp"

namespace semicurve {

/// A subset T of the naturals with finite complement and 0 in T.
///
/// Everything at or above the conductor is a member; below it, members and
/// gaps partition [0, c). Membership below the conductor is kept as a bitmap
/// as well as sorted lists.
class CofiniteSet {
 public:
  CofiniteSet() = default;  // the naturals

  /// Builds T = N minus `gaps`. Gaps must be distinct and positive.
  static CofiniteSet from_gaps(std::vector<int> gaps);

  int conductor() const { return conductor_; }
  int genus() const { return static_cast<int>(gaps_.size()); }
  bool contains(int n) const {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return below_[static_cast<std::size_t>(n)];
  }
  const std::vector<int>& gaps() const { return gaps_; }
  const std::vector<int>& members_below_conductor() const { return members_; }

  friend bool operator==(const CofiniteSet& a, const CofiniteSet& b) {
    return a.gaps_ == b.gaps_;
  }

  /// "{0,1,3,4,6,->}" style rendering.
  std::string to_string() const;

 private:
  int conductor_ = 0;
  std::vector<int> gaps_;
  std::vector<int> members_;
  std::vector<bool> below_;
};

/// A cofinite additive submonoid of the naturals.
class NumericalSemigroup : public CofiniteSet {
 public:
  NumericalSemigroup() = default;  // the naturals, <1>

  int multiplicity() const { return multiplicity_; }
  int frobenius() const { return conductor() - 1; }
  const std::vector<int>& minimal_generators() const { return generators_; }

  /// Validates additive closure; throws InputError("not a semigroup").
  static NumericalSemigroup from_set(CofiniteSet set);

 private:
  explicit NumericalSemigroup(CofiniteSet set);

  int multiplicity_ = 1;
  std::vector<int> generators_{1};
};

/// Smallest semigroup containing `gens`; the generating set may be redundant.
/// Throws InputError("infinite complement") when gcd(gens) != 1.
NumericalSemigroup from_generators(std::span<const int> gens);
NumericalSemigroup from_gaps(std::span<const int> gaps);

std::int64_t weight(const CofiniteSet& t);
/// Walks 0 -> c; every gap scores the positive members already passed.
std::int64_t weight_forward(const CofiniteSet& t);
/// Walks c -> 0; every positive member scores the gaps already passed.
std::int64_t weight_backward(const CofiniteSet& t);

/// K = {a : c - a - 1 not in S}, restricted to the naturals (K has no
/// negative elements).
CofiniteSet k_set(const NumericalSemigroup& s);

/// Pole orders of the regular differentials of a rational curve whose only
/// singularity is unibranch with semigroup S: {c - a : a in K, a < c},
/// ascending. There are exactly g of them.
std::vector<int> differential_pole_orders(const NumericalSemigroup& s);

/// sum_{i=1}^{g-1} (k_i - i) over the g-1 smallest pole orders.
std::int64_t weight_from_pole_orders(std::span<const int> pole_orders);

bool is_symmetric(const NumericalSemigroup& s);
bool is_hyperelliptic(const NumericalSemigroup& s);
bool is_bielliptic(const NumericalSemigroup& s);
bool is_kappa_hyperelliptic(const NumericalSemigroup& s, int kappa);
/// Every kappa in [0, g/2] for which S is kappa-hyperelliptic.
std::vector<int> detect_kappa(const NumericalSemigroup& s);

/// True iff each odd member of S in [1, 2g] exceeds the next-to-largest gap.
/// Throws std::domain_error if S is not kappa-hyperelliptic for any kappa.
bool technical_hypothesis(const NumericalSemigroup& s);

struct WeightReport {
  std::vector<int> generators;
  int genus = 0;
  int genus_k = 0;
  int conductor = 0;
  std::int64_t weight_s = 0;
  std::int64_t weight_k = 0;
  bool symmetric = false;
  bool hyperelliptic = false;
  bool bielliptic = false;
  std::vector<int> kappa;
  std::optional<bool> technical_hypothesis;
};

WeightReport weight_report(const NumericalSemigroup& s);

inline std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace semicurve
