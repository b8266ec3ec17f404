#include "semicurve/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include "semicurve/io.hpp"
#include "semicurve/tableau.hpp"
#include "semicurve/tree.hpp"

namespace semicurve::cli {

namespace {

using io::Json;

struct Config {
  int genus = -1;
  int min_genus = -1;
  int max_genus = -1;
  int kappa = -1;
  int threads = 0;  // 0: SEMICURVE_THREADS, else 1
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out_path;
  bool fail_on_violation = false;
  bool timing = false;

  std::string gens;
  std::string gaps;
  std::string file;
  std::string statement;
  std::string u;
};

int thread_count(const Config& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("SEMICURVE_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("SEMICURVE_THREADS must be a positive integer, got \"") + env + "\"");
  }
  return 1;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("not an integer list: " + text);
    }
  }
  return out;
}

NumericalSemigroup semigroup_arg(const Config& cfg) {
  if (!cfg.gens.empty() && !cfg.gaps.empty()) throw InputError("give --gens or --gaps, not both");
  if (!cfg.gens.empty()) return from_generators(parse_int_list(cfg.gens));
  if (!cfg.gaps.empty()) return from_gaps(parse_int_list(cfg.gaps));
  if (!cfg.file.empty()) {
    std::ifstream in(cfg.file);
    if (!in) throw InputError("cannot open " + cfg.file);
    try {
      return io::semigroup_from_json(Json::parse(in));
    } catch (const Json::parse_error& e) {
      throw InputError(cfg.file + ": " + e.what());
    }
  }
  throw InputError("need --gens, --gaps or --file");
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw InputError("cannot write " + cfg.out_path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json semigroup_info(const NumericalSemigroup& s) {
  Json j = io::to_json(weight_report(s));
  j["gaps"] = s.gaps();
  j["multiplicity"] = s.multiplicity();
  j["frobenius"] = s.frobenius();
  const CofiniteSet k = k_set(s);
  j["K"] = k.to_string();
  j["K_gaps"] = k.gaps();
  j["pole_orders"] = differential_pole_orders(s);
  j["W_S_forward"] = weight_forward(s);
  j["W_S_backward"] = weight_backward(s);
  j["W_K_forward"] = weight_forward(k);
  j["W_K_backward"] = weight_backward(k);
  j["children"] = tree::children(s).size();
  return j;
}

int cmd_tree_count(const Config& cfg, std::ostream& out) {
  if (cfg.genus < 0) throw InputError("tree count needs --genus");
  const auto counts = tree::count_by_genus(cfg.genus, thread_count(cfg));
  std::uint64_t total = 0;
  for (auto n : counts) total += n;
  if (cfg.format == "csv") {
    std::string s = "# semicurve tree-count csv v" + std::to_string(io::kCsvVersion) + "\ngenus,count\n";
    for (std::size_t g = 0; g < counts.size(); ++g) s += std::to_string(g) + "," + std::to_string(counts[g]) + "\n";
    emit(cfg, s, out);
  } else {
    Json j;
    j["genus_max"] = cfg.genus;
    j["counts"] = counts;
    j["total"] = total;
    emit(cfg, dump(j), out);
  }
  return kOk;
}

int cmd_tree_dump(const Config& cfg, std::ostream& out) {
  if (cfg.genus < 0) throw InputError("tree dump needs --genus");
  std::vector<std::vector<int>> gens;
  std::mutex mu;
  tree::enumerate_genus(
      cfg.genus,
      [&](const tree::Node& n) {
        auto g = n.to_semigroup().minimal_generators();
        const std::lock_guard lock(mu);
        gens.push_back(std::move(g));
      },
      thread_count(cfg));
  std::sort(gens.begin(), gens.end());
  if (cfg.format == "csv") {
    std::string s = io::weight_csv_header();
    for (const auto& g : gens) s += io::weight_csv_row(weight_report(from_generators(g)));
    emit(cfg, s, out);
  } else {
    Json j = Json::array();
    for (const auto& g : gens) j.push_back(io::to_json(weight_report(from_generators(g))));
    emit(cfg, dump(j), out);
  }
  return kOk;
}

int cmd_semigroup_info(const Config& cfg, std::ostream& out) {
  const NumericalSemigroup s = semigroup_arg(cfg);
  if (cfg.format == "csv") {
    emit(cfg, io::weight_csv_header() + io::weight_csv_row(weight_report(s)), out);
  } else {
    emit(cfg, dump(semigroup_info(s)), out);
  }
  return kOk;
}

int cmd_tableau_render(const Config& cfg, std::ostream& out) {
  const NumericalSemigroup s = semigroup_arg(cfg);
  const CofiniteSet k = k_set(s);
  const YoungDiagram ds = diagram(s);
  const YoungDiagram dk = diagram(k);
  Json j;
  const auto part = [](const YoungDiagram& d) {
    Json p;
    p["partition"] = d.partition();
    p["boxes"] = d.boxes();
    return p;
  };
  j["S"] = part(ds);
  j["K"] = part(dk);
  if (s.genus() >= 1) {
    const auto [a, b] = top_row_lengths(s);
    j["top_rows"] = {a, b};
    j["t1_transpose"] = verify_transpose(s);
  }
  std::string text;
  if (cfg.format != "json") {
    text += "S = " + s.to_string() + "\n" + render_text(ds) + "\nK = " + k.to_string() + "\n" + render_text(dk) + "\n";
  }
  emit(cfg, text + dump(j), out);
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const verify::ScanOptions opt{thread_count(cfg)};
  // --genus G pins the range to G; --max-genus widens it from --min-genus.
  const auto range = [&](int lo, int hi) {
    if (cfg.genus >= 0) return std::pair{cfg.genus, cfg.genus};
    return std::pair{cfg.min_genus >= 0 ? cfg.min_genus : lo, cfg.max_genus >= 0 ? cfg.max_genus : hi};
  };
  verify::ScanReport rep;
  const std::string& st = cfg.statement;
  if (st == "lemma-k") {
    const auto [a, b] = range(0, 14);
    rep = verify::scan_lemma_weight_relation(a, b, opt);
  } else if (st == "max-weight") {
    const auto [a, b] = range(1, 14);
    rep = verify::scan_max_weight(a, b, opt);
  } else if (st == "submaximal") {
    const auto [a, b] = range(10, 14);
    rep = verify::scan_submaximal(a, b, opt);
  } else if (st == "conjecture" || st == "torres") {
    const auto [a, b] = range(1, 16);
    const int kappa = cfg.kappa >= 0 ? cfg.kappa : 1;
    rep = st == "conjecture" ? verify::scan_conjecture(kappa, a, b, opt) : verify::scan_torres(kappa, a, b, opt);
  } else if (st == "kappa-bounds") {
    const int kappa = cfg.kappa >= 0 ? cfg.kappa : 3;
    rep = verify::scan_kappa_weight_bounds(kappa, cfg.genus >= 0 ? cfg.genus : 20, opt);
  } else {
    const auto [a, b] = range(0, 12);
    rep = verify::scan_leaf_law(a, b, opt);
  }
  emit(cfg, cfg.format == "csv" ? io::to_csv(rep) : dump(io::to_json(rep, cfg.timing)), out);
  return cfg.fail_on_violation && rep.violated > 0 ? kViolations : kOk;
}

std::pair<Poly, Poly> parse_u(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("--u expects <f>,<h>");
  return {parse_poly(text.substr(0, comma)), parse_poly(text.substr(comma + 1))};
}

int cmd_curve(const std::string& what, const Config& cfg, std::ostream& out) {
  const Curve c = make_curve(io::read_curve_file(cfg.file));
  Json j;
  if (what == "analyze") {
    j = io::analyze(c, {cfg.seed});
  } else if (what == "gonality") {
    GonalityOptions opt;
    opt.seed = cfg.seed;
    j = io::to_json(gonality_bounds(c, opt));
    j["genus"] = genus(c);
  } else if (what == "scroll") {
    j = io::to_json(scroll_codimension(c));
  } else if (what == "hyperelliptic") {
    j = io::to_json(is_hyperelliptic_curve(c));
  } else {
    j["semigroup"] = io::to_json(c.local.semigroup());
    j["bielliptic_singularity"] = is_bielliptic(c.local.semigroup());
    LinearSeriesReport rep;
    if (cfg.u.empty()) {
      rep = g83_default(c, cfg.seed);
    } else {
      const auto [f, h] = parse_u(cfg.u);
      rep = g83_construction(c, {f, h}, cfg.seed);
      j["u"] = {io::to_json(f), io::to_json(h)};
    }
    j["g83"] = io::to_json(rep);
  }
  emit(cfg, dump(j), out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroups, weights and singular rational curves"};
  app.name("semicurve");
  app.require_subcommand(1);
  Config cfg;

  // formats[0] is the default
  const auto common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--threads", cfg.threads, "worker threads (default $SEMICURVE_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    std::string help = "output format:";
    for (const auto& f : formats) help += " " + f;
    help += " (default " + formats[0] + ")";
    sub->add_option("--format", cfg.format, help)->check(CLI::IsMember(formats));
    sub->preparse_callback([&cfg, d = formats[0]](std::size_t) { cfg.format = d; });
    sub->add_option("--out", cfg.out_path, "write output here instead of stdout");
    sub->add_option("--seed", cfg.seed, "seed for sampled checks");
  };
  const auto semigroup_input = [&](CLI::App* sub) {
    sub->add_option("--gens", cfg.gens, "generators, comma separated");
    sub->add_option("--gaps", cfg.gaps, "gaps, comma separated");
    sub->add_option("--file", cfg.file, "JSON file with generators or gaps");
  };

  CLI::App* tree_cmd = app.add_subcommand("tree", "semigroup tree")->require_subcommand(1);
  CLI::App* count = tree_cmd->add_subcommand("count", "number of semigroups per genus");
  CLI::App* dumpc = tree_cmd->add_subcommand("dump", "every semigroup of one genus");
  for (CLI::App* sub : {count, dumpc}) {
    sub->add_option("--genus", cfg.genus, "genus")->required()->check(CLI::Range(0, tree::kMaxGenus));
    common(sub, {"json", "csv"});
  }

  CLI::App* sg = app.add_subcommand("semigroup", "single semigroup")->require_subcommand(1);
  CLI::App* info = sg->add_subcommand("info", "weights, K and classification");
  semigroup_input(info);
  common(info, {"json", "csv"});

  CLI::App* tab = app.add_subcommand("tableau", "Young diagrams")->require_subcommand(1);
  CLI::App* render = tab->add_subcommand("render", "text art and partitions of S and K");
  semigroup_input(render);
  common(render, {"text", "json"});

  CLI::App* ver = app.add_subcommand("verify", "exhaustive scans over the tree");
  ver->add_option("statement", cfg.statement, "which statement")
      ->required()
      ->check(CLI::IsMember({"lemma-k", "max-weight", "submaximal", "conjecture", "torres", "kappa-bounds", "leaf-law"}));
  ver->add_option("--genus", cfg.genus, "single genus")->check(CLI::Range(0, tree::kMaxGenus));
  ver->add_option("--min-genus", cfg.min_genus, "lower end of the range")->check(CLI::Range(0, tree::kMaxGenus));
  ver->add_option("--max-genus", cfg.max_genus, "upper end of the range")->check(CLI::Range(0, tree::kMaxGenus));
  ver->add_option("--kappa", cfg.kappa, "kappa")->check(CLI::NonNegativeNumber);
  ver->add_flag("--fail-on-violation", cfg.fail_on_violation, "exit 1 when anything is violated");
  ver->add_flag("--timing", cfg.timing, "include wall-clock seconds in the JSON");
  common(ver, {"json", "csv"});

  CLI::App* cur = app.add_subcommand("curve", "rational curves with one unibranch singularity")->require_subcommand(1);
  std::string curve_cmd;
  const std::vector<std::pair<const char*, const char*>> curve_cmds{
      {"analyze", "semigroup, weights, classification, gonality and scroll"},
      {"gonality", "lower and upper bounds on the gonality"},
      {"scroll", "the space U and the 2-row matrix whose minors cut out a scroll"},
      {"hyperelliptic", "decide hyperellipticity, with a witness h when yes"},
      {"bielliptic", "bielliptic singularity test and the degree 8 series"},
  };
  for (const auto& [name, what] : curve_cmds) {
    CLI::App* sub = cur->add_subcommand(name, what);
    sub->add_option("file", cfg.file, "curve file (.json or .toml)")->required();
    if (std::string(name) == "bielliptic") sub->add_option("--u", cfg.u, "u = f/h given as <f>,<h>");
    common(sub, {"json"});
    sub->callback([&curve_cmd, name] { curve_cmd = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    // help for a subcommand also lands here
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (count->parsed()) return cmd_tree_count(cfg, out);
    if (dumpc->parsed()) return cmd_tree_dump(cfg, out);
    if (info->parsed()) return cmd_semigroup_info(cfg, out);
    if (render->parsed()) return cmd_tableau_render(cfg, out);
    if (ver->parsed()) return cmd_verify(cfg, out);
    if (cur->parsed()) return cmd_curve(curve_cmd, cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "error: no command\n";
  return kInputError;
}

}  // namespace semicurve::cli
