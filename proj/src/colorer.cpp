#include "minorcolor/colorer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <regex>
#include <stdexcept>

#include "minorcolor/canon.hpp"
#include "minorcolor/invariants.hpp"
#include "minorcolor/named.hpp"
#include "minorcolor/structure.hpp"

namespace minorcolor {

Regime Regime::kt(int t) {
  if (t < 7 || t > 9) throw PreconditionError("regime K_t needs t in {7, 8, 9}");
  return {Kind::Kt, t};
}
Regime Regime::k8minus() { return {Kind::K8Minus, 8}; }
Regime Regime::k8equal() { return {Kind::K8Equal, 8}; }

int Regime::budget() const {
  switch (kind) {
    case Kind::Kt:
      return 2 * t - 6;
    case Kind::K8Minus:
      return 9;
    case Kind::K8Equal:
      return 8;
  }
  return 0;
}

int Regime::p() const { return kind == Kind::Kt ? t : 8; }

Flavor Regime::flavor() const {
  switch (kind) {
    case Kind::Kt:
      return Flavor::Clique;
    case Kind::K8Minus:
      return Flavor::CliqueMinus;
    case Kind::K8Equal:
      return Flavor::CliqueEqual;
  }
  return Flavor::Clique;
}

PatternSpec Regime::pattern() const {
  switch (kind) {
    case Kind::Kt:
      return PatternSpec::clique(t);
    case Kind::K8Minus:
      return PatternSpec::clique_minus(8);
    case Kind::K8Equal:
      return PatternSpec::clique_equal(8);
  }
  return PatternSpec::clique(t);
}

std::string Regime::name() const {
  switch (kind) {
    case Kind::Kt:
      return "k" + std::to_string(t);
    case Kind::K8Minus:
      return "k8-";
    case Kind::K8Equal:
      return "k8=";
  }
  return "";
}

Regime parse_regime(const std::string& text) {
  static const std::regex kt(R"([kK][tT]?([789]))");
  std::smatch m;
  if (std::regex_match(text, m, kt)) return Regime::kt(std::stoi(m[1]));
  if (text == "k8-" || text == "k8minus" || text == "K8-") return Regime::k8minus();
  if (text == "k8=" || text == "k8equal" || text == "K8=") return Regime::k8equal();
  throw PreconditionError("unknown regime '" + text + "'");
}

std::vector<Regime> all_regimes() {
  return {Regime::kt(7), Regime::kt(8), Regime::kt(9), Regime::k8minus(), Regime::k8equal()};
}

PeelResult peel(const Graph& g, int budget) {
  int n = g.order();
  std::vector<int> deg(n);
  std::vector<bool> gone(n, false);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  PeelResult out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (gone[v] || deg[v] >= budget) continue;
      gone[v] = true;
      out.removed.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!gone[w]) --deg[w];
      }
      changed = true;
      break;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!gone[v]) out.core.push_back(v);
  }
  return out;
}

namespace {

using Parts = std::vector<std::vector<int>>;

struct Outcome {
  std::vector<int> coloring;
  std::optional<Parts> minor;  // branch sets in pattern vertex order
};

int lowest_free(const Graph& g, const std::vector<int>& color, int v, int budget) {
  std::vector<bool> used(budget + 2, false);
  for (int w : g.neighbors(v)) {
    if (color[w] >= 1 && color[w] <= budget) used[color[w]] = true;
  }
  for (int c = 1; c <= budget; ++c) {
    if (!used[c]) return c;
  }
  return 0;
}

Parts lift_subgraph(const Parts& parts, const std::vector<int>& to_parent) {
  Parts out;
  for (const auto& set : parts) {
    auto& lifted = out.emplace_back();
    for (int v : set) lifted.push_back(to_parent[v]);
    std::sort(lifted.begin(), lifted.end());
  }
  return out;
}

Parts lift_contraction(const Parts& parts, const Contraction& c) {
  std::vector<std::vector<int>> pre(c.graph.order());
  for (int v = 0; v < static_cast<int>(c.image.size()); ++v) pre[c.image[v]].push_back(v);
  Parts out;
  for (const auto& set : parts) {
    auto& lifted = out.emplace_back();
    for (int v : set) lifted.insert(lifted.end(), pre[v].begin(), pre[v].end());
    std::sort(lifted.begin(), lifted.end());
  }
  return out;
}

struct Config {
  std::string name;
  std::vector<int> s;
  std::vector<Fan> fans;
};

class Solver {
 public:
  Solver(const Regime& regime, long long budget)
      : regime_(regime), pattern_(regime.pattern().graph()), colors_(regime.budget()), k_(colors_ + 1),
        budget_(budget) {}

  std::vector<std::string> trace;

  Outcome solve(const Graph& g) {
    int n = g.order();
    if (n == 0) return {};

    auto peeled = peel(g, colors_);
    if (!peeled.removed.empty()) {
      note("peel");
      Outcome core = solve(induced(g, peeled.core));
      if (core.minor) return {{}, lift_subgraph(*core.minor, peeled.core)};
      std::vector<int> color(n, 0);
      for (std::size_t i = 0; i < peeled.core.size(); ++i) color[peeled.core[i]] = core.coloring[i];
      for (auto it = peeled.removed.rbegin(); it != peeled.removed.rend(); ++it) {
        color[*it] = lowest_free(g, color, *it, colors_);
        if (color[*it] == 0) throw std::logic_error("color_or_minor: peeled vertex has no free color");
      }
      return {color, std::nullopt};
    }

    auto comps = connected_components(g);
    if (comps.size() > 1) {
      note("components");
      std::vector<int> color(n, 0);
      for (auto& comp : comps) {
        std::sort(comp.begin(), comp.end());
        Outcome part = solve(induced(g, comp));
        if (part.minor) return {{}, lift_subgraph(*part.minor, comp)};
        for (std::size_t i = 0; i < comp.size(); ++i) color[comp[i]] = part.coloring[i];
      }
      return {color, std::nullopt};
    }

    if (auto out = cockade_tactic(g)) return *out;
    if (auto parts = clique_tactic(g)) {
      note("clique");
      return {{}, parts};
    }

    int x = 0;
    for (int v = 1; v < n; ++v) {
      if (g.degree(v) < g.degree(x)) x = v;
    }
    int d = g.degree(x);
    if (d <= kLimits.clique_order) {
      auto nx = g.neighbors(x);
      auto independent = maximum_independent_set(induced(g, nx));
      int alpha = static_cast<int>(independent.size());
      if (alpha >= d - colors_ + 2) {
        std::vector<int> s;
        for (int i = 0; i < d - colors_ + 2; ++i) s.push_back(nx[independent[i]]);
        note("dirac-contract");
        return contract_and_extend(g, x, s);
      }
      if (alpha == d - k_ + 2) {
        if (auto out = kempe_tactics(g, x)) return *out;
      }
    }
    if (auto parts = two_k6_tactic(g)) {
      note("two-k6");
      return {{}, parts};
    }
    return exhaustive(g);
  }

 private:
  void note(const std::string& what) { trace.push_back(what); }

  std::optional<Parts> minor_in(const Graph& h, long long budget) {
    auto r = find_minor(h, pattern_, budget);
    if (r.status != SearchStatus::Found) return std::nullopt;
    return r.model->branch_sets;
  }

  // Pattern minor of the quotient by `parts`, lifted by taking unions.
  std::optional<Parts> via_quotient(const Graph& g, const Parts& parts) {
    int q = static_cast<int>(parts.size());
    std::vector<int> owner(g.order(), -1);
    for (int i = 0; i < q; ++i) {
      for (int v : parts[i]) owner[v] = i;
    }
    Graph quotient(q);
    for (auto [u, v] : g.edges()) {
      if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v] && !quotient.has_edge(owner[u], owner[v])) {
        quotient.add_edge(owner[u], owner[v]);
      }
    }
    auto found = minor_in(quotient, kSmallBudget);
    if (!found) return std::nullopt;
    Parts out;
    for (const auto& set : *found) {
      auto& merged = out.emplace_back();
      for (int i : set) merged.insert(merged.end(), parts[i].begin(), parts[i].end());
      std::sort(merged.begin(), merged.end());
    }
    return out;
  }

  std::optional<Outcome> cockade_tactic(const Graph& g) {
    int n = g.order();
    if (n < regime_.p() || n > kLimits.cockade_order) return std::nullopt;
    if (g.size() < threshold(regime_.p(), regime_.flavor(), n)) return std::nullopt;
    auto verdict = extremal_verdict(g, regime_.p(), regime_.flavor());
    std::vector<int> color;
    if (verdict.kind == ExtremalVerdict::Kind::CockadeMember) {
      color = color_cockade(*verdict.recognition, n);
    } else if (verdict.kind == ExtremalVerdict::Kind::Exceptional) {
      color = chromatic_number(g).coloring;
    } else {
      note("density");
      return std::nullopt;
    }
    if (!is_proper_coloring(g, color, colors_)) return std::nullopt;
    note("cockade " + verdict.family);
    return Outcome{color, std::nullopt};
  }

  std::optional<Parts> clique_tactic(const Graph& g) {
    if (!g.fits_mask() || g.order() > kLimits.clique_order) return std::nullopt;
    auto rows = g.rows();
    for (const auto& h : cliques_of_size(g, regime_.p(), 1)) {
      Parts parts;
      for (int v : h) parts.push_back({v});
      if (auto model = model_from_parts(g, parts, pattern_)) return model->branch_sets;
    }
    for (const auto& h : cliques_of_size(g, regime_.p() - 1, 2000)) {
      Mask hm = vector_to_mask(h);
      for (Mask comp : components_within(rows, g.all() & ~hm)) {
        bool attached = true;
        for (int v : h) attached = attached && (rows[v] & comp) != 0;
        if (!attached) continue;
        Parts parts;
        for (int v : h) parts.push_back({v});
        parts.push_back(mask_to_vector(comp));
        if (auto model = model_from_parts(g, parts, pattern_)) return model->branch_sets;
      }
    }
    return std::nullopt;
  }

  Outcome contract_and_extend(const Graph& g, int x, const std::vector<int>& s) {
    std::vector<int> set = s;
    set.push_back(x);
    auto c = contract(g, set);
    Outcome sub = solve(c.graph);
    if (sub.minor) return {{}, lift_contraction(*sub.minor, c)};
    std::vector<int> color(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
      if (v != x) color[v] = sub.coloring[c.image[v]];
    }
    color[x] = lowest_free(g, color, x, colors_);
    if (color[x] == 0) throw std::logic_error("color_or_minor: contraction left no color for x");
    return {color, std::nullopt};
  }

  // N[x] plus an edge from each apex to its leaves carries the pattern.
  bool promising(const Graph& g, int x, const Config& config) {
    std::vector<int> closed = g.neighbors(x);
    closed.push_back(x);
    std::sort(closed.begin(), closed.end());
    std::map<int, int> index;
    for (std::size_t i = 0; i < closed.size(); ++i) index[closed[i]] = static_cast<int>(i);
    Graph h = induced(g, closed);
    for (const auto& fan : config.fans) {
      for (int b : fan.leaves) {
        if (!h.has_edge(index[fan.apex], index[b])) h.add_edge(index[fan.apex], index[b]);
      }
    }
    return minor_in(h, kSmallBudget).has_value();
  }

  std::vector<Config> kempe_configs(const Graph& g, int x) {
    const int d = g.degree(x), s = d - k_;
    const auto nx = g.neighbors(x);
    std::vector<Config> out;

    auto apex_fan = [&](int y, const std::string& name) {
      std::vector<int> leaves, common;
      for (int v : nx) {
        if (v == y) continue;
        (g.has_edge(v, y) ? common : leaves).push_back(v);
      }
      if (leaves.empty() || 1 + static_cast<int>(leaves.size()) > k_ - 2) return;
      auto independent = maximum_independent_set(induced(g, common));
      if (static_cast<int>(independent.size()) < s + 2) return;
      Config c{name, {}, {Fan{y, leaves}}};
      for (int i = 0; i < s + 2; ++i) c.s.push_back(common[independent[i]]);
      std::sort(c.s.begin(), c.s.end());
      if (promising(g, x, c)) out.push_back(std::move(c));
    };

    if (regime_.kind == Regime::Kind::Kt && d == 2 * regime_.t - 5 && s == 0) {
      try {
        auto model = k_minus2_union_k1(induced(g, nx), regime_.t);
        apex_fan(nx[model.branch_sets.back().front()], "k-minus2-fan");
      } catch (const PreconditionError&) {
      }
    }
    for (int y : nx) apex_fan(y, "kempe-fan");

    if (s != 0) return out;
    Graph h = induced(g, nx);

    if (regime_.kind == Regime::Kind::K8Minus && d == 10) {
      if (h.size() == 25 && min_degree(h) == 5 && max_degree(h) == 5 && is_isomorphic(h, recover_J())) {
        std::size_t cap = out.size() + 40;
        for (int u1 : nx) {
          std::vector<int> l1, near;
          for (int v : nx) {
            if (v != u1) (g.has_edge(u1, v) ? near : l1).push_back(v);
          }
          for (std::size_t a = 0; a < near.size(); ++a) {
            for (std::size_t b = a + 1; b < near.size(); ++b) {
              if (g.has_edge(near[a], near[b])) continue;
              std::vector<int> rest;
              for (int v : near) {
                if (v != near[a] && v != near[b]) rest.push_back(v);
              }
              for (std::size_t i = 0; i < rest.size(); ++i) {
                for (std::size_t jj = i + 1; jj < rest.size(); ++jj) {
                  if (g.has_edge(rest[i], rest[jj])) continue;
                  Config c{"kempe-J", {near[a], near[b]}, {Fan{u1, l1}, Fan{rest[i], {rest[jj]}}}};
                  if (out.size() < cap && promising(g, x, c)) out.push_back(std::move(c));
                }
              }
            }
          }
        }
      }
    }

    if (d <= kLimits.chromatic_order) {
      auto chi = chromatic_number(h);
      std::vector<std::vector<int>> pairs;
      for (int c = 1; c <= chi.chromatic; ++c) {
        std::vector<int> cls;
        for (int i = 0; i < d; ++i) {
          if (chi.coloring[i] == c) cls.push_back(nx[i]);
        }
        if (cls.size() == 2) pairs.push_back(cls);
      }
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        Config c{"kempe-chromatic", pairs[i], {}};
        for (std::size_t j = 0; j < pairs.size(); ++j) {
          if (j == i || 2 * static_cast<int>(c.fans.size() + 1) > k_ - 2) continue;
          c.fans.push_back(Fan{pairs[j][0], {pairs[j][1]}});
        }
        if (!c.fans.empty() && promising(g, x, c)) out.push_back(std::move(c));
      }
    }

    if (regime_.kind == Regime::Kind::K8Equal) {
      for (int y : nx) {
        std::vector<int> z, w;
        for (int v : nx) {
          if (v != y) (g.has_edge(v, y) ? z : w).push_back(v);
        }
        if (z.size() != 4) continue;
        for (std::size_t a = 0; a < z.size(); ++a) {
          for (std::size_t b = a + 1; b < z.size(); ++b) {
            if (g.has_edge(z[a], z[b])) continue;
            std::vector<int> apexes{y};
            for (std::size_t i = 0; i < z.size(); ++i) {
              if (i != a && i != b) apexes.push_back(z[i]);
            }
            std::vector<int> sset{z[a], z[b]};
            for (int apex : apexes) {
              std::vector<int> leaves;
              for (int v : w) {
                if (!g.has_edge(apex, v)) leaves.push_back(v);
              }
              if (!leaves.empty()) out.push_back({"k8equal-star", sset, {Fan{apex, leaves}}});
            }
            // Matchings of apexes into W along missing edges.
            std::vector<Fan> current;
            std::vector<bool> used(w.size(), false);
            auto extend = [&](auto&& self, std::size_t ai) -> void {
              if (ai == apexes.size()) {
                if (current.size() >= 2) out.push_back({"k8equal-matching", sset, current});
                return;
              }
              self(self, ai + 1);
              for (std::size_t wi = 0; wi < w.size(); ++wi) {
                if (used[wi] || g.has_edge(apexes[ai], w[wi])) continue;
                used[wi] = true;
                current.push_back(Fan{apexes[ai], {w[wi]}});
                self(self, ai + 1);
                current.pop_back();
                used[wi] = false;
              }
            };
            extend(extend, 0);
          }
        }
      }
    }
    return out;
  }

  std::optional<Outcome> kempe_tactics(const Graph& g, int x) {
    auto configs = kempe_configs(g, x);
    std::vector<std::vector<int>> order;
    for (const auto& c : configs) {
      if (std::find(order.begin(), order.end(), c.s) == order.end()) order.push_back(c.s);
    }
    if (order.size() > kMaxBases) order.resize(kMaxBases);
    const auto nx = g.neighbors(x);

    for (const auto& s : order) {
      std::vector<int> set = s;
      set.push_back(x);
      auto c = contract(g, set);
      Outcome sub = solve(c.graph);
      if (sub.minor) {
        note("kempe-base-minor");
        return Outcome{{}, lift_contraction(*sub.minor, c)};
      }
      std::vector<bool> extra(g.order(), false);
      for (const auto& config : configs) {
        if (config.s != s) continue;
        KempeRequest req{g, x, k_, s, config.fans};
        KempeOutcome out;
        try {
          out = kempe_resolve(req, sub.coloring);
        } catch (const KempeError&) {
          continue;
        }
        auto check = validate_outcome(req, out);
        if (!check) throw std::logic_error("color_or_minor: invalid Kempe outcome: " + check.reason);
        if (out.kind == KempeOutcome::Kind::ExtendedColoring) {
          note(config.name + " extend");
          return Outcome{out.coloring, std::nullopt};
        }
        Parts parts{{x}};
        std::vector<bool> taken(g.order(), false);
        taken[x] = true;
        for (std::size_t i = 0; i < config.fans.size(); ++i) {
          auto& set_i = parts.emplace_back();
          set_i.push_back(config.fans[i].apex);
          taken[config.fans[i].apex] = true;
          for (const auto& path : out.paths.paths[i]) {
            for (std::size_t t = 1; t + 1 < path.size(); ++t) {
              extra[path[t]] = true;
              if (!taken[path[t]]) {
                taken[path[t]] = true;
                set_i.push_back(path[t]);
              }
            }
          }
        }
        for (int v : nx) {
          if (!taken[v]) parts.push_back({v});
        }
        if (auto found = via_quotient(g, parts)) {
          note(config.name + " paths");
          return Outcome{{}, found};
        }
      }
      std::vector<int> span = nx;
      span.push_back(x);
      for (int v = 0; v < g.order(); ++v) {
        if (extra[v] && !std::binary_search(nx.begin(), nx.end(), v) && v != x) span.push_back(v);
      }
      std::sort(span.begin(), span.end());
      if (span.size() > nx.size() + 1) {
        if (auto found = minor_in(induced(g, span), kSmallBudget)) {
          note("kempe-union");
          return Outcome{{}, lift_subgraph(*found, span)};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Parts> two_k6_tactic(const Graph& g) {
    if (regime_.kind == Regime::Kind::Kt || !g.fits_mask() || g.order() > kLimits.clique_order) return std::nullopt;
    auto k6 = cliques_of_size(g, 6, 2);
    if (k6.size() < 2 || vertex_connectivity(g) < 7) return std::nullopt;
    auto model = two_k6_to_k8minus(g, k6[0], k6[1]);
    if (auto fitted = model_from_parts(g, model.branch_sets, pattern_)) return fitted->branch_sets;
    return std::nullopt;
  }

  Outcome exhaustive(const Graph& g) {
    auto r = find_minor(g, pattern_, budget_);
    if (r.status == SearchStatus::Found) {
      note("exhaustive-minor");
      return {{}, r.model->branch_sets};
    }
    if (g.order() > kLimits.chromatic_order) {
      throw SizeLimitError("color_or_minor: no tactic applied and the graph is too large for exact coloring");
    }
    if (auto color = k_coloring(g, colors_)) {
      note("exhaustive-coloring");
      return {*color, std::nullopt};
    }
    if (r.status == SearchStatus::BudgetExceeded) {
      throw SizeLimitError("color_or_minor: minor search budget exceeded on a graph that is not " +
                           std::to_string(colors_) + "-colorable");
    }
    throw std::logic_error("color_or_minor: graph has neither a " + regime_.pattern().name() + " minor nor a " +
                           std::to_string(colors_) + "-coloring");
  }

  static constexpr long long kSmallBudget = 200000;
  static constexpr std::size_t kMaxBases = 2;

  Regime regime_;
  Graph pattern_;
  int colors_;
  int k_;
  long long budget_;
};

}  // namespace

Certificate color_or_minor(const Graph& g, const Regime& regime, const ColorOptions& options) {
  int n = g.order();
  std::vector<int> perm(n);  // new vertex -> original vertex
  std::iota(perm.begin(), perm.end(), 0);
  if (options.seed) {
    std::mt19937_64 rng(*options.seed);
    std::shuffle(perm.begin(), perm.end(), rng);
  }
  Graph h = options.seed ? induced(g, perm) : g;

  Solver solver(regime, options.minor_budget);
  Outcome out = solver.solve(h);
  Certificate cert;
  cert.trace = std::move(solver.trace);
  if (out.minor) {
    cert.kind = Certificate::Kind::Minor;
    cert.model = MinorModel{regime.pattern().graph(), lift_subgraph(*out.minor, perm)};
  } else {
    cert.kind = Certificate::Kind::Coloring;
    cert.coloring.assign(n, 0);
    for (int i = 0; i < n; ++i) cert.coloring[perm[i]] = out.coloring[i];
  }
  auto ok = verify_certificate(g, regime, cert);
  if (!ok) throw std::logic_error("color_or_minor: produced an invalid certificate: " + ok.reason);
  return cert;
}

Verdict verify_certificate(const Graph& g, const Regime& regime, const Certificate& cert) {
  if (cert.kind == Certificate::Kind::Coloring) {
    if (static_cast<int>(cert.coloring.size()) != g.order()) return {false, "coloring has wrong length"};
    for (int c : cert.coloring) {
      if (c < 1 || c > regime.budget()) {
        return {false, "color " + std::to_string(c) + " outside 1.." + std::to_string(regime.budget())};
      }
    }
    for (auto [u, v] : g.edges()) {
      if (cert.coloring[u] == cert.coloring[v]) {
        return {false, "edge " + std::to_string(u) + "-" + std::to_string(v) + " is monochromatic"};
      }
    }
    return {true, ""};
  }
  if (!cert.model) return {false, "minor certificate without a model"};
  if (!is_isomorphic(cert.model->pattern, regime.pattern().graph())) {
    return {false, "model pattern is not " + regime.pattern().name()};
  }
  return verify_model(g, *cert.model);
}

RecolorResult kempe_recolor_pass(const Graph& g, const std::vector<int>& partial, int x, int budget) {
  int n = g.order();
  if (x < 0 || x >= n) throw PreconditionError("kempe_recolor_pass: x out of range");
  if (static_cast<int>(partial.size()) != n || partial[x] != 0) {
    throw PreconditionError("kempe_recolor_pass: x must be the only uncolored vertex");
  }
  for (int v = 0; v < n; ++v) {
    if (v != x && (partial[v] < 1 || partial[v] > budget)) {
      throw PreconditionError("kempe_recolor_pass: G - x is not colored within 1..budget");
    }
  }
  if (!is_proper_coloring(g, partial, budget)) throw PreconditionError("kempe_recolor_pass: coloring is not proper");

  RecolorResult result;
  std::vector<int> color = partial;
  if (int c = lowest_free(g, color, x, budget)) {
    color[x] = c;
    result.kind = RecolorResult::Kind::Improved;
    result.coloring = color;
    result.trace.push_back("greedy: color " + std::to_string(c) + " free at x");
    return result;
  }

  auto nx = g.neighbors(x);
  for (std::size_t i = 0; i < nx.size(); ++i) {
    for (std::size_t j = i + 1; j < nx.size(); ++j) {
      int a = color[nx[i]], b = color[nx[j]];
      if (a == b) continue;
      auto trial = color;
      kempe_switch(g, trial, nx[i], a, b);
      if (int c = lowest_free(g, trial, x, budget)) {
        trial[x] = c;
        result.kind = RecolorResult::Kind::Improved;
        result.coloring = trial;
        result.trace.push_back("switch {" + std::to_string(a) + "," + std::to_string(b) + "} at " +
                               std::to_string(nx[i]));
        return result;
      }
    }
  }

  const int k = budget + 1, d = static_cast<int>(nx.size()), s = d - k;
  if (s < 0) {
    result.reason = "d(x) = " + std::to_string(d) + " is below k = " + std::to_string(k);
    return result;
  }
  int alpha = independence_number(induced(g, nx));
  if (alpha != s + 2) {
    result.reason = "alpha(N(x)) = " + std::to_string(alpha) + " but the Kempe lemma needs " + std::to_string(s + 2);
    return result;
  }
  std::map<int, std::vector<int>> classes;
  for (int v : nx) classes[color[v]].push_back(v);
  std::vector<int> sset;
  for (const auto& [c, members] : classes) {
    if (static_cast<int>(members.size()) == s + 2) {
      sset = members;
      break;
    }
  }
  if (sset.empty()) {
    result.reason = "no color class of N(x) is an independent set of size " + std::to_string(s + 2);
    return result;
  }
  KempeRequest req{g, x, k, sset, {}};
  for (int y : nx) {
    if (std::find(sset.begin(), sset.end(), y) != sset.end()) continue;
    std::vector<int> leaves;
    for (int v : nx) {
      if (v != y && !g.has_edge(v, y) && std::find(sset.begin(), sset.end(), v) == sset.end()) leaves.push_back(v);
    }
    if (leaves.empty() || 1 + static_cast<int>(leaves.size()) > k - 2) continue;
    KempeRequest trial = req;
    trial.fans = {Fan{y, leaves}};
    try {
      check_request(trial);
    } catch (const KempeError&) {
      continue;
    }
    req = trial;
    break;
  }
  if (req.fans.empty()) {
    result.reason = "no admissible fan in N(x) \\ S";
    return result;
  }
  auto c = kempe_contraction(req);
  std::vector<int> base(c.graph.order(), 0);
  for (int v = 0; v < n; ++v) {
    if (v != x) base[c.image[v]] = color[v];
  }
  auto out = kempe_resolve(req, base);
  result.request = req;
  result.trace = out.trace;
  if (out.kind == KempeOutcome::Kind::ExtendedColoring) {
    result.kind = RecolorResult::Kind::Improved;
    result.coloring = out.coloring;
    return result;
  }
  result.paths = out.paths;
  result.reason = "Kempe lemma returned paths";
  return result;
}

}  // namespace minorcolor
