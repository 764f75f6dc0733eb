#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "minorcolor/canon.hpp"
#include "minorcolor/cockade.hpp"
#include "minorcolor/colorer.hpp"
#include "minorcolor/enumerate.hpp"
#include "minorcolor/invariants.hpp"
#include "minorcolor/io.hpp"
#include "minorcolor/named.hpp"
#include "minorcolor/serialize.hpp"
#include "minorcolor/structure.hpp"

using namespace minorcolor;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;  // empty or "-" reads stdin
  bool plain = false;
  std::optional<std::uint64_t> seed;

  std::string regime;
  std::string pattern;
  std::string certificate;
  std::string name;
  std::string cockade;
  int n = -1;
  bool alpha2 = false;
  std::optional<int> min_degree, max_degree;
  std::optional<std::size_t> sample;
  std::string lemma;
  int t = 7;
  std::size_t samples = 1000;
};

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Graph read_input(const Options& o) {
  std::istringstream in(read_text(o.input));
  return read_graph(in);
}

Json read_json(const std::string& path) {
  try {
    Json j = Json::parse(read_text(path));
    check_schema(j);
    return j;
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void emit(const Json& j) { std::cout << with_schema(j).dump() << "\n"; }

void print_sets(const std::vector<std::vector<int>>& sets) {
  for (const auto& set : sets) {
    for (std::size_t i = 0; i < set.size(); ++i) std::cout << (i ? " " : "") << set[i];
    std::cout << "\n";
  }
}

int cmd_color(const Options& o) {
  Graph g = read_input(o);
  Regime regime = parse_regime(o.regime);
  Certificate cert = color_or_minor(g, regime, ColorOptions{o.seed, default_minor_budget()});
  if (!o.plain) {
    emit(to_json(cert, regime));
  } else if (cert.kind == Certificate::Kind::Coloring) {
    std::cout << "coloring";
    for (int c : cert.coloring) std::cout << " " << c;
    std::cout << "\n";
  } else {
    std::cout << "minor " << regime.pattern().name() << "\n";
    print_sets(cert.model->branch_sets);
  }
  return kOk;
}

int cmd_find_minor(const Options& o) {
  Graph g = read_input(o);
  PatternSpec spec = parse_pattern(o.pattern);
  auto r = find_minor(g, spec);
  if (r.status == SearchStatus::NotFound) {
    std::cout << "not found (exhaustive)\n";
    return kNegative;
  }
  if (r.status == SearchStatus::BudgetExceeded) {
    std::cout << "not found (budget exceeded after " << r.nodes << " nodes)\n";
    return kNegative;
  }
  if (!verify_model(g, *r.model)) throw std::logic_error("find_minor returned an invalid model");
  if (o.plain) {
    print_sets(r.model->branch_sets);
  } else {
    emit(to_json(*r.model));
  }
  return kOk;
}

Verdict verify_paths(const Graph& g, const PathSystem& ps) {
  std::vector<int> seen(g.order(), 0);
  for (std::size_t i = 0; i < ps.apexes.size(); ++i) {
    for (const auto& path : ps.paths[i]) {
      if (path.size() < 2 || path.front() != ps.apexes[i]) return {false, "path does not start at its apex"};
      for (std::size_t j = 0; j < path.size(); ++j) {
        if (path[j] < 0 || path[j] >= g.order()) return {false, "vertex out of range"};
        if (j > 0 && !g.has_edge(path[j - 1], path[j])) return {false, "consecutive path vertices not adjacent"};
        if (j > 0 && j + 1 < path.size() && seen[path[j]]++) return {false, "paths share an internal vertex"};
      }
    }
  }
  return {true, ""};
}

int cmd_verify(const Options& o) {
  Json j = read_json(o.certificate);
  Graph g = read_input(o);
  Verdict verdict;
  std::string what;
  if (j.contains("branch_sets")) {
    what = "minor model";
    verdict = verify_model(g, model_from_json(j));
  } else if (j.contains("fans")) {
    what = "path system";
    verdict = verify_paths(g, paths_from_json(j));
  } else if (j.contains("regime") || j.contains("trace") || j.value("kind", "") == "coloring") {
    what = "certificate";
    std::string name = !o.regime.empty() ? o.regime : j.value("regime", "");
    if (name.empty()) throw UsageError("certificate names no regime; pass --regime");
    verdict = verify_certificate(g, parse_regime(name), certificate_from_json(j));
  } else if (j.contains("kind")) {
    what = "witness";
    auto w = witness_from_json(j);
    if (w.kind == Alpha2Witness::Kind::IsomorphicTo) recover_J();
    verdict = verify_witness(g, w);
  } else {
    throw SchemaError("unrecognized certificate document");
  }
  if (verdict.ok) {
    std::cout << "valid " << what << "\n";
    return kOk;
  }
  std::cout << "invalid " << what << ": " << verdict.reason << "\n";
  return kNegative;
}

int cmd_gen(const Options& o) {
  if (o.name.empty() == o.cockade.empty()) throw UsageError("gen needs exactly one of --name and --cockade");
  Graph g;
  if (!o.name.empty()) {
    if (o.name == "J") recover_J();
    g = build_named(o.name);
  } else {
    g = build_cockade(cockade_from_json(read_json(o.cockade)));
  }
  std::cout << to_graph6(g) << "\n";
  return kOk;
}

int cmd_enumerate(const Options& o) {
  EnumerationTask task;
  task.n = o.n;
  task.alpha_eq_2 = o.alpha2;
  task.min_degree = o.min_degree;
  task.max_degree = o.max_degree;
  if (o.sample) task.sample = EnumerationTask::Sample{*o.sample, o.seed.value_or(0)};
  enumerate(task, [](const Graph& g) {
    std::cout << to_graph6(g) << "\n";
    return true;
  });
  return kOk;
}

bool check_k_minus2(int t, std::size_t samples, std::uint64_t seed) {
  int n = 2 * t - 5;
  EnumerationTask task;
  task.n = n;
  if (n > kLimits.exhaustive_enumeration) task.sample = EnumerationTask::Sample{samples, seed};
  long long classes = 0, verified = 0;
  std::map<std::string, long long> routes;
  enumerate(task, [&](const Graph& g) {
    if (2 * g.size() == g.order() * (g.order() - 1)) return true;
    ++classes;
    std::string route;
    auto model = k_minus2_union_k1(g, t, &route);
    if (verify_model(g, model)) ++verified;
    ++routes[route];
    return true;
  });
  std::cout << "K_{t-2} u K1, t=" << t << " n=" << n << (task.sample ? " (sampled)" : " (exhaustive)") << ": " << classes
            << " classes, " << verified << " verified, " << classes - verified << " failures\n";
  for (const auto& [route, c] : routes) std::cout << "  route " << route << ": " << c << "\n";
  bool pass = classes > 0 && verified == classes;
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass;
}

bool check_maximal_graphs() {
  bool pass = true;
  recover_J();
  for (const auto& name : maximal_graph_names()) {
    auto c = maximal_graph_check(name, build_named(name));
    bool k6_expected = name == "C8bar" || name == "C4bar+C4bar" || name == "J";
    bool ok = c.min_degree >= 5 && c.max_degree <= c.order - 2 && !c.has_k6minus_k1 && c.edge_maximal &&
              c.has_k6 == k6_expected;
    pass = pass && ok;
    std::cout << name << ": n=" << c.order << " min_degree=" << c.min_degree << " max_degree=" << c.max_degree
              << " K6-uK1=" << (c.has_k6minus_k1 ? "yes" : "no") << " edge_maximal=" << (c.edge_maximal ? "yes" : "no")
              << " K6=" << (c.has_k6 ? "yes" : "no") << " " << (ok ? "ok" : "FAIL") << "\n";
  }
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass;
}

bool check_alpha2_10() {
  recover_J();
  std::map<std::string, long long> kinds;
  long long classes = 0, verified = 0;
  EnumerationTask task;
  task.n = 10;
  enumerate(task, [&](const Graph& g) {
    if (2 * g.size() == g.order() * (g.order() - 1)) return true;
    ++classes;
    auto w = classify_alpha2_10(g);
    if (verify_witness(g, w)) ++verified;
    ++kinds[witness_kind_name(w.kind)];
    return true;
  });
  std::cout << "alpha-2 graphs on 10 vertices: " << classes << " classes, " << verified << " verified\n";
  for (const auto& [kind, c] : kinds) std::cout << "  " << kind << ": " << c << "\n";
  bool pass = verified == classes && kinds["isomorphic"] == 1;
  std::cout << "J: " << to_graph6(recover_J()) << "\n" << (pass ? "PASS" : "FAIL") << "\n";
  return pass;
}

int cmd_lemma_check(const Options& o) {
  bool pass;
  if (o.lemma == "2.6") {
    if (o.t < 7 || o.t > 9) throw UsageError("--t must be 7, 8 or 9");
    pass = check_k_minus2(o.t, o.samples, o.seed.value_or(1));
  } else if (o.lemma == "3.3") {
    pass = check_maximal_graphs();
  } else if (o.lemma == "3.4") {
    pass = check_alpha2_10();
  } else {
    throw UsageError("unknown lemma '" + o.lemma + "' (expected 2.6, 3.3 or 3.4)");
  }
  return pass ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified colorings and clique minors"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--plain", o.plain, "plain text instead of JSON");
  app.add_option("--seed", o.seed, "random seed");

  auto* color = app.add_subcommand("color", "coloring within the regime's budget or a minor certificate");
  color->add_option("--regime", o.regime, "k7, k8, k9, k8- or k8=")->required();
  color->add_option("input", o.input, "graph6 or DIMACS file (default stdin)");

  auto* find = app.add_subcommand("find-minor", "exhaustive minor search");
  find->add_option("--pattern", o.pattern, "K7, K8-, K8=, K6-+K1, ...")->required();
  find->add_option("input", o.input, "graph6 or DIMACS file (default stdin)");

  auto* verify = app.add_subcommand("verify", "re-check a certificate against a graph");
  verify->add_option("--certificate", o.certificate, "certificate JSON file")->required();
  verify->add_option("--regime", o.regime, "regime for coloring certificates without one");
  verify->add_option("input", o.input, "graph6 or DIMACS file (default stdin)");

  auto* gen = app.add_subcommand("gen", "named graph or cockade as graph6");
  gen->add_option("--name", o.name, "K_{2,2,2,2,2}, K8-, C8bar, J, ...");
  gen->add_option("--cockade", o.cockade, "CockadeSpec JSON file");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "stream isomorphism classes as graph6");
  enumerate_cmd->add_option("--n", o.n, "order")->required()->check(CLI::Range(0, 64));
  enumerate_cmd->add_flag("--alpha2", o.alpha2, "only graphs with independence number at most 2");
  enumerate_cmd->add_option("--min-degree", o.min_degree);
  enumerate_cmd->add_option("--max-degree", o.max_degree);
  enumerate_cmd->add_option("--sample", o.sample, "sample this many graphs (uses --seed)");

  auto* lemma = app.add_subcommand("lemma-check", "run a structural lemma over its whole graph class");
  lemma->add_option("--lemma", o.lemma, "2.6, 3.3 or 3.4")->required();
  lemma->add_option("--t", o.t, "t for the K_{t-2} u K1 check (7, 8 or 9)");
  lemma->add_option("--samples", o.samples, "sample size when n is beyond exhaustive range");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (color->parsed()) return cmd_color(o);
    if (find->parsed()) return cmd_find_minor(o);
    if (verify->parsed()) return cmd_verify(o);
    if (gen->parsed()) return cmd_gen(o);
    if (enumerate_cmd->parsed()) return cmd_enumerate(o);
    if (lemma->parsed()) return cmd_lemma_check(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  }
  return kUsage;
}
