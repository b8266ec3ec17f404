#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "semicurve/numset.hpp"

namespace semicurve::verify {

struct Record {
  std::vector<int> generators;
  int genus = 0;
  std::int64_t weight_s = 0;
  std::int64_t weight_k = 0;
  std::string detail;

  friend bool operator<(const Record& a, const Record& b) {
    return std::tie(a.genus, a.generators) < std::tie(b.genus, b.generators);
  }
  friend bool operator==(const Record& a, const Record& b) = default;
};

Record record(const NumericalSemigroup& s, std::string detail = {});

enum class Status { Holds, Fails, Data };
std::string to_string(Status s);

/// One genus of a scan.
struct Row {
  int genus = 0;
  std::string label;  // "min" / "max" when a genus carries two extrema
  std::uint64_t checked = 0;
  std::uint64_t satisfied = 0;
  std::uint64_t violated = 0;
  std::optional<std::int64_t> observed;  // extremal weight, when the statement has one
  std::optional<std::int64_t> expected;
  std::vector<Record> achievers;
  std::map<std::string, std::int64_t> counts;  // statement-specific tallies
  Status status = Status::Data;
};

struct ScanReport {
  std::string statement;
  int genus_min = 0;
  int genus_max = 0;
  std::optional<int> kappa;
  std::uint64_t checked = 0;
  std::uint64_t satisfied = 0;
  std::uint64_t violated = 0;
  std::vector<Record> violations;  // first kMaxListed, sorted
  std::vector<Row> rows;
  std::map<std::string, std::string> facts;
  double seconds = 0;  // not serialized unless asked

  bool ok() const { return violated == 0; }
};

inline constexpr std::size_t kMaxListed = 100;

struct ScanOptions {
  int threads = 1;
};

/// W_K = W_S + 2g - c and g(K) = c - g, plus both walk procedures and the
/// box counts of both diagrams.
ScanReport scan_lemma_weight_relation(int g_min, int g_max, const ScanOptions& opt = {});

/// max W_K = g(g-1)/2, attained only by the hyperelliptic semigroup; every
/// non-symmetric S has W_K below it and l_g <= 2g - 2.
ScanReport scan_max_weight(int g_min, int g_max, const ScanOptions& opt = {});

/// Among nonhyperelliptic S: max W_K = (g^2 - 5g + 10)/2 with the bielliptic
/// semigroups as the achievers, asserted for g >= 11 and reported below.
ScanReport scan_submaximal(int g_min, int g_max, const ScanOptions& opt = {});

/// kappa-hyperelliptic iff binom(g-2k,2) + 2k <= W_K <= binom(g-2k,2) + 2k^2.
/// Violations are data; facts["threshold_genus"] records the observed onset.
ScanReport scan_conjecture(int kappa, int g_min, int g_max, const ScanOptions& opt = {});

/// Same shape with W_S and bounds binom(g-2k,2) <= W_S <= binom(g-2k,2) + 2k^2.
ScanReport scan_torres(int kappa, int g_min, int g_max, const ScanOptions& opt = {});

/// Over kappa-hyperelliptic S of genus g passing the technical hypothesis:
/// min W_K = binom(g-2k,2) + 2k at evens 2k+2j, max = binom(g-2k,2) + k^2 + k
/// at evens 4j, and S_0 = <4, 4k+2, 2g-4k+1> is excluded with the top W_S.
ScanReport scan_kappa_weight_bounds(int kappa, int g, const ScanOptions& opt = {});

/// Nonhyperelliptic symmetric semigroups have no children.
ScanReport scan_leaf_law(int g_min, int g_max, const ScanOptions& opt = {});

/// The kappa even members of S in [2, 4 kappa].
std::vector<int> even_pattern(const NumericalSemigroup& s, int kappa);

}  // namespace semicurve::verify
