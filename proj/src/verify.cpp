#include "semicurve/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "semicurve/tableau.hpp"
#include "semicurve/tree.hpp"

namespace semicurve::verify {

Record record(const NumericalSemigroup& s, std::string detail) {
  Record r;
  r.generators = s.minimal_generators();
  r.genus = s.genus();
  r.weight_s = weight(s);
  r.weight_k = weight(k_set(s));
  r.detail = std::move(detail);
  return r;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Data: return "data";
  }
  return "?";
}

std::vector<int> even_pattern(const NumericalSemigroup& s, int kappa) {
  std::vector<int> out;
  for (int e = 2; e <= 4 * kappa; e += 2) {
    if (s.contains(e)) out.push_back(e);
  }
  return out;
}

namespace {

std::int64_t binom(std::int64_t n) { return n < 2 ? 0 : binom2(n); }

void keep_smallest(std::vector<Record>& v) {
  std::sort(v.begin(), v.end());
  if (v.size() > kMaxListed) v.resize(kMaxListed);
}

// Extremal value plus the semigroups attaining it.
struct Extremum {
  explicit Extremum(bool max) : want_max(max) {}

  bool want_max;
  std::optional<std::int64_t> value;
  std::vector<Record> achievers;
  std::int64_t count = 0;

  bool beats(std::int64_t x) const { return !value || (want_max ? x > *value : x < *value); }

  template <class Make>
  void offer(std::int64_t x, Make make) {
    if (beats(x)) {
      value = x;
      achievers.clear();
      count = 0;
    }
    if (x == *value) {
      achievers.push_back(make());
      ++count;
      if (achievers.size() > 2 * kMaxListed) keep_smallest(achievers);
    }
  }

  void merge(Extremum&& o) {
    if (!o.value) return;
    if (beats(*o.value)) {
      *this = std::move(o);
    } else if (*o.value == *value) {
      achievers.insert(achievers.end(), o.achievers.begin(), o.achievers.end());
      count += o.count;
    }
    keep_smallest(achievers);
  }
};

struct RowAcc {
  std::uint64_t checked = 0;
  std::uint64_t violated = 0;
  std::map<std::string, std::int64_t> counts;
  Extremum hi{true};
  Extremum lo{false};
};

struct Acc {
  std::map<int, RowAcc> rows;
  std::vector<Record> violations;
  std::uint64_t violated = 0;

  void violation(RowAcc& row, const NumericalSemigroup& s, std::string what) {
    ++row.violated;
    ++violated;
    violations.push_back(record(s, std::move(what)));
    if (violations.size() > 2 * kMaxListed) keep_smallest(violations);
  }

  void merge(Acc&& o) {
    for (auto& [g, r] : o.rows) {
      RowAcc& mine = rows[g];
      mine.checked += r.checked;
      mine.violated += r.violated;
      for (const auto& [k, v] : r.counts) mine.counts[k] += v;
      mine.hi.merge(std::move(r.hi));
      mine.lo.merge(std::move(r.lo));
    }
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    violated += o.violated;
    keep_smallest(violations);
  }
};

using Visit = std::function<void(Acc&, RowAcc&, const tree::Node&, const NumericalSemigroup&)>;

Acc run(int g_min, int g_max, int threads, const Visit& visit) {
  if (g_min < 0 || g_min > g_max) throw InputError("empty genus range");
  if (g_max > tree::kMaxGenus) throw InputError("genus exceeds tree limit");
  Acc result = tree::fold(
      g_max, Acc{},
      [&](Acc& acc, const tree::Node& n) {
        if (n.genus() < g_min) return;
        const NumericalSemigroup s = n.to_semigroup();
        RowAcc& row = acc.rows[n.genus()];
        ++row.checked;
        visit(acc, row, n, s);
      },
      [](Acc& into, Acc&& from) { into.merge(std::move(from)); }, threads);
  keep_smallest(result.violations);
  return result;
}

ScanReport base_report(std::string statement, int g_min, int g_max, const Acc& acc) {
  ScanReport rep;
  rep.statement = std::move(statement);
  rep.genus_min = g_min;
  rep.genus_max = g_max;
  rep.violated = acc.violated;
  rep.violations = acc.violations;
  for (const auto& [g, r] : acc.rows) rep.checked += r.checked;
  rep.satisfied = rep.checked - rep.violated;
  return rep;
}

Row base_row(int g, const RowAcc& r) {
  Row row;
  row.genus = g;
  row.checked = r.checked;
  row.violated = r.violated;
  row.satisfied = r.checked - r.violated;
  row.counts = r.counts;
  row.status = r.violated == 0 ? Status::Holds : Status::Fails;
  return row;
}

void fill(Row& row, const Extremum& e, std::optional<std::int64_t> expected) {
  row.observed = e.value;
  row.expected = expected;
  row.achievers = e.achievers;
  row.counts["achievers"] = e.count;
}

// Failed checks on one semigroup, joined with "; ".
struct Issues {
  std::string text;
  void check(bool ok, const char* what) {
    if (ok) return;
    if (!text.empty()) text += "; ";
    text += what;
  }
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

ScanReport scan_lemma_weight_relation(int g_min, int g_max, const ScanOptions& opt) {
  const Timer timer;
  const Acc acc = run(g_min, g_max, opt.threads, [](Acc& acc, RowAcc& row, const tree::Node&,
                                                    const NumericalSemigroup& s) {
    const CofiniteSet k = k_set(s);
    const std::int64_t ws = weight(s);
    const std::int64_t wk = weight(k);
    const int g = s.genus();
    const int c = s.conductor();
    Issues bad;
    bad.check(wk == ws + 2 * g - c, "W_K != W_S + 2g - c");
    bad.check(k.genus() == c - g, "g(K) != c - g");
    bad.check(weight_forward(s) == ws && weight_backward(s) == ws, "walks disagree on S");
    bad.check(weight_forward(k) == wk && weight_backward(k) == wk, "walks disagree on K");
    bad.check(weight_via_diagram(s) == ws && weight_via_diagram(k) == wk, "diagram box count");
    if (g >= 1) bad.check(verify_transpose(s), "t1 transpose");
    if (!bad.text.empty()) acc.violation(row, s, bad.text);
  });
  ScanReport rep = base_report("lemma-k", g_min, g_max, acc);
  for (const auto& [g, r] : acc.rows) rep.rows.push_back(base_row(g, r));
  rep.seconds = timer.seconds();
  return rep;
}

ScanReport scan_max_weight(int g_min, int g_max, const ScanOptions& opt) {
  const Timer timer;
  const Acc acc = run(g_min, g_max, opt.threads, [](Acc& acc, RowAcc& row, const tree::Node&,
                                                    const NumericalSemigroup& s) {
    const int g = s.genus();
    const std::int64_t wk = weight(k_set(s));
    const std::int64_t top = binom(g);
    const bool hyp = is_hyperelliptic(s);
    row.hi.offer(wk, [&] { return record(s); });
    if (hyp) ++row.counts["hyperelliptic"];
    Issues bad;
    bad.check(wk <= top, "W_K exceeds g(g-1)/2");
    if (g >= 1) bad.check((wk == top) == hyp, "W_K = g(g-1)/2 without 2 in S, or the converse");
    if (!is_symmetric(s)) {
      ++row.counts["nonsymmetric"];
      const auto& gaps = s.gaps();
      if (g >= 1) bad.check(wk < top, "nonsymmetric S with W_K >= g(g-1)/2");
      if (g >= 1) bad.check(gaps.back() <= 2 * g - 2, "nonsymmetric S with l_g > 2g - 2");
      if (g >= 2) bad.check(gaps[gaps.size() - 2] <= 2 * g - 3, "nonsymmetric S with l_{g-1} > 2g - 3");
    }
    if (!bad.text.empty()) acc.violation(row, s, bad.text);
  });
  ScanReport rep = base_report("max-weight", g_min, g_max, acc);
  for (const auto& [g, r] : acc.rows) {
    Row row = base_row(g, r);
    fill(row, r.hi, binom(g));
    if (row.observed != row.expected || r.hi.count != 1) row.status = Status::Fails;
    rep.rows.push_back(std::move(row));
  }
  rep.seconds = timer.seconds();
  return rep;
}

ScanReport scan_submaximal(int g_min, int g_max, const ScanOptions& opt) {
  const Timer timer;
  const auto expected = [](std::int64_t g) { return (g * g - 5 * g + 10) / 2; };
  const Acc acc = run(g_min, g_max, opt.threads, [&](Acc& acc, RowAcc& row, const tree::Node&,
                                                     const NumericalSemigroup& s) {
    if (is_hyperelliptic(s) || s.genus() == 0) return;
    const int g = s.genus();
    const std::int64_t wk = weight(k_set(s));
    const bool bi = is_bielliptic(s);
    ++row.counts["nonhyperelliptic"];
    if (bi) ++row.counts["bielliptic"];
    row.hi.offer(wk, [&] { return record(s, bi ? "bielliptic" : ""); });
    if (g < 11) return;
    Issues bad;
    bad.check(wk <= expected(g), "W_K above (g^2-5g+10)/2");
    bad.check(wk != expected(g) || bi, "submaximal weight without bielliptic shape");
    bad.check(!bi || wk == expected(g), "bielliptic S off the submaximal weight");
    if (!bad.text.empty()) acc.violation(row, s, bad.text);
  });
  ScanReport rep = base_report("submaximal", g_min, g_max, acc);
  for (const auto& [g, r] : acc.rows) {
    Row row = base_row(g, r);
    if (r.hi.value) fill(row, r.hi, expected(g));
    if (g < 11) {
      row.status = Status::Data;
    } else if (row.observed != row.expected || !r.counts.contains("bielliptic") ||
               r.hi.count != r.counts.at("bielliptic")) {
      row.status = Status::Fails;
    }
    rep.rows.push_back(std::move(row));
  }
  if (g_min <= 10 && 10 <= g_max) {
    const std::vector<int> gens{3, 11};
    const NumericalSemigroup s = from_generators(gens);
    const std::int64_t wk = weight(k_set(s));
    const auto& r = acc.rows.at(10);
    rep.facts["genus10_semigroup"] = "<3,11>";
    rep.facts["genus10_weight_k"] = std::to_string(wk);
    rep.facts["genus10_weight_s"] = std::to_string(weight(s));
    rep.facts["genus10_bound"] = std::to_string(expected(10));
    rep.facts["genus10_attains_max"] = (r.hi.value && *r.hi.value == wk) ? "true" : "false";
    rep.facts["genus10_bielliptic"] = is_bielliptic(s) ? "true" : "false";
  }
  rep.seconds = timer.seconds();
  return rep;
}

namespace {

ScanReport bounds_scan(std::string statement, int kappa, int g_min, int g_max, bool use_k,
                       const ScanOptions& opt) {
  if (kappa < 0) throw InputError("kappa must be nonnegative");
  const Timer timer;
  const auto bounds = [kappa, use_k](std::int64_t g) {
    const std::int64_t b = binom(g - 2 * kappa);
    return std::pair{b + (use_k ? 2 * kappa : 0), b + 2 * kappa * kappa};
  };
  const Acc acc = run(g_min, g_max, opt.threads, [&](Acc& acc, RowAcc& row, const tree::Node&,
                                                     const NumericalSemigroup& s) {
    const auto [lo, hi] = bounds(s.genus());
    const std::int64_t w = use_k ? weight(k_set(s)) : weight(s);
    const bool inside = lo <= w && w <= hi;
    const bool kh = is_kappa_hyperelliptic(s, kappa);
    if (kh) ++row.counts["kappa_hyperelliptic"];
    if (inside) ++row.counts["in_bounds"];
    if (kh && detect_kappa(s).size() > 1) ++row.counts["multiple_kappa"];
    if (kh) row.hi.offer(w, [&] { return record(s); });
    if (kh) row.lo.offer(w, [&] { return record(s); });
    if (kh && !inside) {
      ++row.counts["forward_violations"];
      acc.violation(row, s, "kappa-hyperelliptic, weight outside bounds");
    }
    if (!kh && inside) {
      ++row.counts["backward_violations"];
      acc.violation(row, s, "weight inside bounds, not kappa-hyperelliptic");
    }
  });
  ScanReport rep = base_report(std::move(statement), g_min, g_max, acc);
  rep.kappa = kappa;
  std::optional<int> threshold;
  for (auto it = acc.rows.rbegin(); it != acc.rows.rend() && it->second.violated == 0; ++it) threshold = it->first;
  rep.facts["threshold_genus"] = threshold ? std::to_string(*threshold) : "none";
  for (const auto& [g, r] : acc.rows) {
    Row row = base_row(g, r);
    for (const char* key : {"kappa_hyperelliptic", "in_bounds", "forward_violations", "backward_violations"}) {
      row.counts.try_emplace(key, 0);
    }
    const auto [lo, hi] = bounds(g);
    row.counts["lower_bound"] = lo;
    row.counts["upper_bound"] = hi;
    if (r.lo.value) row.counts["min_weight"] = *r.lo.value;
    if (r.hi.value) row.counts["max_weight"] = *r.hi.value;
    row.status = Status::Data;
    rep.rows.push_back(std::move(row));
  }
  rep.seconds = timer.seconds();
  return rep;
}

}  // namespace

ScanReport scan_conjecture(int kappa, int g_min, int g_max, const ScanOptions& opt) {
  return bounds_scan("conjecture", kappa, g_min, g_max, true, opt);
}

ScanReport scan_torres(int kappa, int g_min, int g_max, const ScanOptions& opt) {
  return bounds_scan("torres", kappa, g_min, g_max, false, opt);
}

ScanReport scan_kappa_weight_bounds(int kappa, int g, const ScanOptions& opt) {
  if (kappa < 1) throw InputError("kappa must be positive");
  if (g < 2 * kappa) throw InputError("genus must be at least 2 kappa");
  const Timer timer;
  const std::int64_t b = binom(g - 2 * kappa);
  const std::int64_t lo = b + 2 * kappa;
  const std::int64_t hi = b + static_cast<std::int64_t>(kappa) * kappa + kappa;
  const Acc acc = run(g, g, opt.threads, [&](Acc& acc, RowAcc& row, const tree::Node&,
                                             const NumericalSemigroup& s) {
    if (!is_kappa_hyperelliptic(s, kappa)) return;
    ++row.counts["kappa_hyperelliptic"];
    if (!technical_hypothesis(s)) return;
    ++row.counts["filtered"];
    const std::int64_t wk = weight(k_set(s));
    const auto make = [&] { return record(s, join(even_pattern(s, kappa))); };
    row.hi.offer(wk, make);
    row.lo.offer(wk, make);
    if (wk < lo || wk > hi) acc.violation(row, s, "W_K outside the bounds");
  });
  ScanReport rep = base_report("kappa-bounds", g, g, acc);
  rep.kappa = kappa;
  const RowAcc& r = acc.rows.at(g);

  std::vector<int> min_pattern;
  std::vector<int> max_pattern;
  for (int j = 1; j <= kappa; ++j) {
    min_pattern.push_back(2 * kappa + 2 * j);
    max_pattern.push_back(4 * j);
  }
  const auto has_pattern = [](const Extremum& e, const std::vector<int>& p) {
    return std::any_of(e.achievers.begin(), e.achievers.end(),
                       [&](const Record& a) { return a.detail == join(p); });
  };
  Row rmin = base_row(g, r);
  rmin.label = "min";
  fill(rmin, r.lo, lo);
  if (rmin.observed != rmin.expected || !has_pattern(r.lo, min_pattern)) rmin.status = Status::Fails;
  Row rmax = base_row(g, r);
  rmax.label = "max";
  fill(rmax, r.hi, hi);
  if (rmax.observed != rmax.expected || !has_pattern(r.hi, max_pattern)) rmax.status = Status::Fails;
  rep.facts["min_pattern"] = join(min_pattern);
  rep.facts["max_pattern"] = join(max_pattern);
  rep.facts["min_pattern_attained"] = has_pattern(r.lo, min_pattern) ? "true" : "false";
  rep.facts["max_pattern_attained"] = has_pattern(r.hi, max_pattern) ? "true" : "false";
  if (r.lo.value && r.hi.value) rep.facts["disparity"] = std::to_string(*r.hi.value - *r.lo.value);
  rep.facts["expected_disparity"] = std::to_string(static_cast<std::int64_t>(kappa) * kappa - kappa);

  // S_0 sits outside the filter and carries the largest W_S.
  if (2 * g - 4 * kappa + 1 > 0) {
    const std::vector<int> gens{4, 4 * kappa + 2, 2 * g - 4 * kappa + 1};
    try {
      const NumericalSemigroup s0 = from_generators(gens);
      rep.facts["s0"] = "<" + join(s0.minimal_generators()) + ">";
      rep.facts["s0_genus"] = std::to_string(s0.genus());
      rep.facts["s0_symmetric"] = is_symmetric(s0) ? "true" : "false";
      rep.facts["s0_weight_s"] = std::to_string(weight(s0));
      rep.facts["s0_expected_weight_s"] = std::to_string(b + 2 * static_cast<std::int64_t>(kappa) * kappa);
      const bool kh = is_kappa_hyperelliptic(s0, kappa);
      rep.facts["s0_kappa_hyperelliptic"] = kh ? "true" : "false";
      rep.facts["s0_technical_hypothesis"] = kh && technical_hypothesis(s0) ? "true" : "false";
    } catch (const InputError&) {
      rep.facts["s0"] = "undefined";
    }
  }
  rep.rows.push_back(std::move(rmin));
  rep.rows.push_back(std::move(rmax));
  rep.seconds = timer.seconds();
  return rep;
}

ScanReport scan_leaf_law(int g_min, int g_max, const ScanOptions& opt) {
  const Timer timer;
  const Acc acc = run(g_min, g_max, opt.threads, [](Acc& acc, RowAcc& row, const tree::Node& n,
                                                    const NumericalSemigroup& s) {
    const std::int64_t kids = static_cast<std::int64_t>(n.removable_generators().size());
    if (is_hyperelliptic(s)) {
      ++row.counts["hyperelliptic"];
      row.counts["hyperelliptic_children"] += kids;
      return;
    }
    if (!is_symmetric(s)) return;
    ++row.counts["symmetric_nonhyperelliptic"];
    if (kids > 0) acc.violation(row, s, "symmetric nonhyperelliptic S has children");
  });
  ScanReport rep = base_report("leaf-law", g_min, g_max, acc);
  for (const auto& [g, r] : acc.rows) rep.rows.push_back(base_row(g, r));
  rep.seconds = timer.seconds();
  return rep;
}

}  // namespace semicurve::verify
