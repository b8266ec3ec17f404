// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when a
// criterion fails that is not on the known-failure list below; known
// failures still print FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "semicurve/curve.hpp"
#include "semicurve/io.hpp"
#include "semicurve/tableau.hpp"
#include "semicurve/tree.hpp"
#include "semicurve/verify.hpp"

using namespace semicurve;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    note << "[" << what << "] ";
  }
};

// Criteria whose statement cannot hold as written; see README.
const std::map<int, std::string> kKnownFailures{
    {3, "at g = 2 the non-symmetric <3,4,5> also has W_K = 1 = binom(2,2)"},
};

int threads() { return 4; }

Poly P(const char* s) { return parse_poly(s); }

const verify::Row* find_row(const verify::ScanReport& r, int g, const std::string& label = "") {
  for (const auto& row : r.rows) {
    if (row.genus == g && row.label == label) return &row;
  }
  return nullptr;
}

std::string gens_text(const std::vector<int>& g) {
  std::string s = "<";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ">";
}

void weight_identity(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto r14 = verify::scan_lemma_weight_relation(0, 14, {threads()});
  // genus <= 14 holds only 4107 semigroups, so the scan is carried on to
  // genus 21 to cover more than 100k
  const auto r21 = verify::scan_lemma_weight_relation(0, 21, {threads()});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(r14.violated == 0, "violations for g <= 14");
  o.require(r21.violated == 0, "violations for g <= 21");
  o.require(r21.checked >= 100000, "fewer than 100k semigroups");
  o.require(secs < 120, "slower than 2 min");
  o.note << "g<=14: " << r14.checked << " checked, " << r14.violated << " violated; g<=21: " << r21.checked
         << " checked, " << r21.violated << " violated; " << secs << " s";
}

void worked_example(Outcome& o) {
  const auto s = from_generators(std::vector<int>{3, 13, 14});
  const CofiniteSet k = k_set(s);
  o.require(k.to_string() == "{0,1,3,4,6,7,9,10,12,->}", "K");
  const auto ko = oracle::k_set(oracle::from_generators({3, 13, 14}));
  o.require(oracle::weight(ko) == 16, "W_K by definition");
  o.require(weight(k) == 16 && weight_forward(k) == 16 && weight_backward(k) == 16, "W_K three ways");
  o.require(differential_pole_orders(s) == std::vector<int>{2, 3, 5, 6, 8, 9, 11, 12}, "pole orders");
  o.note << "K = " << k.to_string() << ", W_K = " << weight(k) << "/" << weight_forward(k) << "/"
         << weight_backward(k);
}

void max_weight(Outcome& o) {
  const auto r = verify::scan_max_weight(1, 14, {threads()});
  for (int g = 1; g <= 14; ++g) {
    const verify::Row* row = find_row(r, g);
    if (!row) {
      o.require(false, "missing genus " + std::to_string(g));
      continue;
    }
    const bool unique = row->achievers.size() == 1 && row->achievers[0].generators == std::vector<int>{2, 2 * g + 1};
    o.require(row->observed == row->expected, "max at g=" + std::to_string(g));
    if (!unique) {
      std::string who;
      for (const auto& a : row->achievers) who += gens_text(a.generators) + " ";
      o.require(false, "achievers at g=" + std::to_string(g) + ": " + who);
    }
  }
  o.note << r.checked << " checked, " << r.violated << " violated";
}

void submaximal(Outcome& o) {
  const auto r = verify::scan_submaximal(10, 14, {threads()});
  for (int g = 11; g <= 14; ++g) {
    const verify::Row* row = find_row(r, g);
    o.require(row && row->status == verify::Status::Holds, "g=" + std::to_string(g));
    if (!row) continue;
    std::vector<std::vector<int>> want{{4, 6, 2 * g - 3}, {4, 6, 2 * g - 1, 2 * g + 1}};
    std::sort(want.begin(), want.end());
    std::vector<std::vector<int>> got;
    for (const auto& a : row->achievers) got.push_back(a.generators);
    o.require(got == want, "achievers at g=" + std::to_string(g));
  }
  o.require(r.violated == 0, "violations");
  o.require(r.facts.count("genus10_attains_max") && r.facts.at("genus10_attains_max") == "true", "<3,11> at g=10");
  o.require(r.facts.count("genus10_weight_k") && r.facts.at("genus10_weight_k") == "30", "<3,11> weight");
  o.note << "g=11..14 hold; <3,11>: W_K = " << r.facts.at("genus10_weight_k") << " vs bound "
         << r.facts.at("genus10_bound");
}

void figures(Outcome& o) {
  const auto s = from_generators(std::vector<int>{4, 10, 11, 17});
  const int bs = diagram(s).boxes();
  const int bk = diagram(k_set(s)).boxes();
  o.require(bs == 10 && bk == 12, "boxes");
  o.require(verify_transpose(s), "transpose");
  o.require(top_row_lengths(s) == std::pair{5, 7}, "top rows");
  o.note << "boxes " << bs << "/" << bk << ", top rows (" << top_row_lengths(s).first << ", "
         << top_row_lengths(s).second << ")";
}

void kappa_bounds(Outcome& o) {
  const auto r = verify::scan_kappa_weight_bounds(3, 20, {threads()});
  const verify::Row* lo = find_row(r, 20, "min");
  const verify::Row* hi = find_row(r, 20, "max");
  if (!lo || !hi || !lo->observed || !hi->observed) {
    o.require(false, "empty filtered class");
    return;
  }
  o.require(*lo->observed == 97, "min");
  o.require(*hi->observed == 103, "max");
  o.require(*hi->observed - *lo->observed == 6, "disparity");
  bool min_pattern = !lo->achievers.empty();
  for (const auto& a : lo->achievers) min_pattern = min_pattern && a.detail == "8,10,12";
  bool max_pattern = !hi->achievers.empty();
  for (const auto& a : hi->achievers) max_pattern = max_pattern && a.detail == "4,8,12";
  o.require(min_pattern, "min pattern");
  o.require(max_pattern, "max pattern");
  o.require(r.violated == 0, "filtered semigroup outside the bounds");
  o.note << "min " << *lo->observed << " (" << lo->achievers.size() << " achievers), max " << *hi->observed << " ("
         << hi->achievers.size() << " achievers), S0 " << r.facts.at("s0") << " W_S " << r.facts.at("s0_weight_s");
}

void conjecture(Outcome& o) {
  for (int kappa : {1, 2}) {
    const auto a = verify::scan_conjecture(kappa, 1, 16, {1});
    const auto b = verify::scan_conjecture(kappa, 1, 16, {threads()});
    o.require(io::to_json(a).dump() == io::to_json(b).dump(), "nondeterministic report");
    o.require(!io::to_csv(a).empty(), "csv");
    o.note << "kappa=" << kappa << ": " << a.violated << " biconditional violations, threshold "
           << a.facts.at("threshold_genus") << "; ";
    if (kappa == 1) {
      for (int g = 11; g <= 16; ++g) {
        const verify::Row* row = find_row(a, g);
        const std::int64_t w = (g * g - 5 * g + 10) / 2;
        o.require(row && row->counts.at("forward_violations") == 0, "forward direction g=" + std::to_string(g));
        o.require(row && row->counts.count("min_weight") && row->counts.at("min_weight") == w &&
                      row->counts.at("max_weight") == w,
                  "bielliptic weights g=" + std::to_string(g));
      }
    }
  }
  const auto c0 = verify::scan_conjecture(0, 1, 14, {threads()});
  const auto mw = verify::scan_max_weight(1, 14, {threads()});
  std::vector<std::vector<int>> x;
  std::vector<std::vector<int>> y;
  for (const auto& v : c0.violations) x.push_back(v.generators);
  for (const auto& v : mw.violations) y.push_back(v.generators);
  o.require(x == y, "kappa=0 differs from the max-weight scan");
  o.note << "kappa=0 matches max-weight scan (" << x.size() << " exceptions)";
}

void tree_counts(Outcome& o) {
  const auto counts = tree::count_by_genus(8, threads());
  for (int g = 0; g <= 8; ++g) {
    o.require(counts[static_cast<std::size_t>(g)] == oracle::count_genus(g), "count g=" + std::to_string(g));
  }
  const auto leaf = verify::scan_leaf_law(0, 12, {threads()});
  o.require(leaf.violated == 0, "leaf law");
  o.note << "n_8 = " << counts[8] << "; leaf law: " << leaf.checked << " checked, " << leaf.violated << " violated";
}

void curve_examples(Outcome& o) {
  const Curve e1 = make_curve(CurveParametrization({P("1"), P("t^4"), P("t^6+t^7")}));
  o.require(e1.local.semigroup().gaps() == std::vector<int>{1, 2, 3, 5, 7, 9, 11, 15}, "example 1 gaps");
  o.require(e1.local.semigroup().minimal_generators() == std::vector<int>{4, 6, 13}, "example 1 generators");
  const std::vector<Poly> m1{P("1"), P("t^4"), P("t^6+t^7"), P("t^8")};
  const int d1 = map_degree(m1).degree;
  o.require(d1 == 1, "example 1 map degree");
  const Poly h = P("1+t^3");
  const Curve e2 = make_curve(
      CurveParametrization({pow(h, 3), P("t^4") * h, P("t^6"), P("t^9") * pow(h, 3), P("t^11") * pow(h, 3)}));
  o.require(e2.local.semigroup().gaps() == std::vector<int>{1, 2, 3, 5, 7}, "example 2 semigroup");
  o.require(membership(e2, P("t^4"), pow(h, 2)) && membership(e2, P("t^6"), pow(h, 3)), "u^2, u^3 in O_P");
  const std::vector<Poly> m2{h, P("t^2")};
  const int d2 = map_degree(m2).degree;
  o.require(d2 == 3, "example 2 map degree");
  o.note << "example 1: S = " << e1.local.semigroup().to_string() << ", map degree " << d1
         << "; example 2: S = " << e2.local.semigroup().to_string() << ", map degree " << d2;
}

void genus3(Outcome& o) {
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  const auto q = [&] {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    return x;
  };
  int samples = 0;
  int good = 0;
  int max_over = 0;
  int degenerate = 0;
  while (samples < 20) {
    const Rational a = q(), b = q(), c = q(), d = q();
    if (a == 0 || c == 0) continue;
    const std::vector<Poly> coords{Poly{1, -2 * a, b, c, d}, Poly{0, 0, 1, -a}, Poly::monomial(1, 4)};
    // some parameter choices fold the quartic onto a conic; those are not
    // genus 3 curves at all
    if (map_degree(coords).degree != 1) {
      ++degenerate;
      continue;
    }
    ++samples;
    const Curve cv = make_curve(CurveParametrization(coords));
    const auto hyp = is_hyperelliptic_curve(cv);
    const auto gon = gonality_bounds(cv);
    max_over = std::max(max_over, gon.upper - (genus(cv) + 1));
    if (hyp.verdict == Verdict::No && gon.lower == 3 && gon.upper == 3) {
      ++good;
    } else {
      o.require(false, "sample a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c) + " d=" + to_string(d));
    }
  }
  const Curve g1 = make_curve(CurveParametrization({P("1"), P("t^2"), P("t^3")}));
  const auto h1 = is_hyperelliptic_curve(g1);
  o.require(h1.verdict == Verdict::Yes && h1.witness && *h1.witness == Poly{1}, "genus 1 witness");
  bool g2ok = true;
  for (int a : {1, -2, 3}) {
    const Curve g2 = make_curve(CurveParametrization({P("1"), Poly{0, 0, 1, a}, P("t^4"), P("t^5")}));
    const auto h2 = is_hyperelliptic_curve(g2);
    g2ok = g2ok && h2.verdict == Verdict::Yes && h2.witness && *h2.witness == Poly{1, -a};
    max_over = std::max(max_over, gonality_bounds(g2).upper - (genus(g2) + 1));
  }
  o.require(g2ok, "genus 2 witnesses");
  max_over = std::max(max_over, gonality_bounds(g1).upper - (genus(g1) + 1));
  o.require(max_over <= 0, "gonality above g+1");
  o.note << good << "/20 samples no and (3,3) (" << degenerate << " non-birational draws redrawn); witnesses 1 and 1-a*t";
}

void embeddings(Outcome& o) {
  for (int g : {8, 12, 5, 9}) {
    const bool sym = g == 8 || g == 12;
    const auto s = sym ? from_generators(std::vector<int>{4, 6, 2 * g - 3})
                       : from_generators(std::vector<int>{4, 6, 2 * g - 1, 2 * g + 1});
    const BiellipticEmbedding e = bielliptic_embedding(s);
    const int m = g / 2;
    const int n = (g - 4 + 1) / 2;  // ceil((g - 4) / 2)
    const std::vector<int> want = sym ? std::vector<int>{m, n, 1} : std::vector<int>{m, n, 0, 0};
    o.require(e.layout.blocks == want, "layout g=" + std::to_string(g));
    o.require(verify_scroll_containment(e.curve, e.layout), "minors g=" + std::to_string(g));
    o.note << "g=" << g << " " << e.layout.name() << " in P^" << e.ambient << "; ";
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"weight identity W_K = W_S + 2g - c", weight_identity},
      {"<3,13,14> worked example", worked_example},
      {"maximal weight iff hyperelliptic, g = 1..14", max_weight},
      {"submaximal weight iff bielliptic, g = 11..14; <3,11> at g = 10", submaximal},
      {"<4,10,11,17> diagrams", figures},
      {"kappa = 3, g = 20 weight bounds", kappa_bounds},
      {"conjecture scan kappa = 1, 2", conjecture},
      {"tree counts and leaf law", tree_counts},
      {"curve examples 1 and 2", curve_examples},
      {"genus 3 family and low-genus witnesses", genus3},
      {"bielliptic embeddings on scrolls", embeddings},
  };
  int unexpected = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << index << " " << name << ": " << o.note.str();
    if (!o.pass) {
      const auto known = kKnownFailures.find(index);
      if (known != kKnownFailures.end()) {
        std::cout << " (known: " << known->second << ")";
      } else {
        ++unexpected;
      }
    }
    std::cout << "\n";
  }
  return unexpected == 0 ? 0 : 1;
}
