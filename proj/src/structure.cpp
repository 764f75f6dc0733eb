#include "minorcolor/structure.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <stdexcept>

#include "minorcolor/canon.hpp"
#include "minorcolor/enumerate.hpp"
#include "minorcolor/invariants.hpp"
#include "minorcolor/named.hpp"
#include "minorcolor/separators.hpp"

namespace minorcolor {

namespace {

std::atomic<long long> fallback_count{0};

using Path3 = std::vector<int>;  // a, b, c with b adjacent to both ends, a !~ c

std::vector<Path3> induced_p3s(const std::vector<Mask>& rows, Mask within) {
  std::vector<Path3> out;
  for_each_bit(within, [&](int b) {
    Mask nb = rows[b] & within;
    for_each_bit(nb, [&](int a) {
      Mask later = nb & ~low_bits(a + 1) & ~rows[a];
      for_each_bit(later, [&](int c) { out.push_back({a, b, c}); });
    });
  });
  return out;
}

Mask mask_of(const std::vector<int>& vs) { return vector_to_mask(vs); }

std::vector<std::vector<int>> singletons(const std::vector<int>& vs) {
  std::vector<std::vector<int>> out;
  for (int v : vs) out.push_back({v});
  return out;
}

std::vector<int> first_n(Mask m, int count) {
  auto vs = mask_to_vector(m);
  vs.resize(std::min<std::size_t>(vs.size(), count));
  return vs;
}

Graph pattern_union_k1(int q) { return PatternSpec::union_k1(complete_graph(q)).graph(); }

}  // namespace

long long k_minus2_fallbacks() { return fallback_count.load(); }

PatternSpec k6minus_union_k1() { return PatternSpec::union_k1(clique_minus(6)); }

MinorModel k_minus2_union_k1(const Graph& h, int t, std::string* route) {
  if (t < 7 || t > 9) throw PreconditionError("k_minus2_union_k1: t must be 7, 8 or 9");
  const int q = t - 2, n = 2 * t - 5;
  if (h.order() != n) throw PreconditionError("k_minus2_union_k1: H must have 2t-5 vertices");
  if (independence_number(h) != 2) throw PreconditionError("k_minus2_union_k1: alpha(H) must be 2");
  const Graph pattern = pattern_union_k1(q);
  const auto rows = h.rows();
  const Mask all = h.all();

  auto finish = [&](std::vector<std::vector<int>> blobs, const char* how) -> std::optional<MinorModel> {
    if (static_cast<int>(blobs.size()) != q) return std::nullopt;
    Mask used = 0;
    for (const auto& b : blobs) used |= mask_of(b);
    if ((all & ~used) == 0) return std::nullopt;
    blobs.push_back({lowest(all & ~used)});
    MinorModel model{pattern, std::move(blobs)};
    if (!verify_model(h, model)) return std::nullopt;
    if (route) *route = how;
    return model;
  };

  auto clique = maximum_clique(h);
  int omega = static_cast<int>(clique.size());
  if (omega >= q) {
    clique.resize(q);
    if (auto m = finish(singletons(clique), "clique")) return *m;
  } else if (omega == q - 1) {
    Mask rest = all & ~mask_of(clique);
    for (const auto& path : induced_p3s(rows, rest)) {
      auto blobs = singletons(clique);
      blobs.push_back(path);
      if (auto m = finish(blobs, "clique+path")) return *m;
    }
    // H \ K has no induced 3-path, so it splits into two cliques A1, A2.
    auto parts = components_within(rows, rest);
    if (parts.size() == 2) {
      for (int i = 0; i < 2; ++i) {
        Mask other = parts[1 - i], ki = 0;
        for (int v : clique) {
          if ((rows[v] & other) != other) ki |= bit(v);
        }
        auto remainder = mask_to_vector(all & ~(ki | parts[i]));
        if (static_cast<int>(remainder.size()) >= q && is_clique(h, remainder)) {
          remainder.resize(q);
          if (auto m = finish(singletons(remainder), "two-clique-cover")) return *m;
        }
      }
    }
  } else {
    int y = 0;
    for (int v = 1; v < n; ++v) {
      if (popcount(rows[v]) < popcount(rows[y])) y = v;
    }
    Mask closed = rows[y] | bit(y);
    auto j = mask_to_vector(all & ~closed);
    if (is_clique(h, j)) {
      auto try_pairs = [&](Mask within, std::vector<std::vector<int>> base,
                           const char* how) -> std::optional<MinorModel> {
        auto paths = induced_p3s(rows, within);
        for (std::size_t a = 0; a < paths.size(); ++a) {
          Mask pa = mask_of(paths[a]);
          for (std::size_t b = a + 1; b < paths.size(); ++b) {
            if (pa & mask_of(paths[b])) continue;
            auto blobs = base;
            blobs.push_back(paths[a]);
            blobs.push_back(paths[b]);
            if (auto m = finish(blobs, how)) return m;
          }
        }
        return std::nullopt;
      };
      if (static_cast<int>(j.size()) >= q - 2) {
        auto base = singletons(first_n(mask_of(j), q - 2));
        if (auto m = try_pairs(closed, base, "neighborhood-paths")) return *m;
      }
      if (static_cast<int>(j.size()) >= q - 3) {
        Mask jm = mask_of(first_n(mask_of(j), q - 3));
        auto base = singletons(mask_to_vector(jm));
        for (int z : mask_to_vector(rows[y])) {
          for (int w : mask_to_vector(rows[y] & rows[z] & ~low_bits(z + 1))) {
            if (((rows[z] | rows[w]) & jm) != jm) continue;
            auto with_edge = base;
            with_edge.push_back({z, w});
            if (auto m = try_pairs(closed & ~bit(z) & ~bit(w), with_edge, "dominating-edge")) return *m;
          }
        }
      }
    }
  }

  ++fallback_count;
  auto found = find_minor(h, pattern);
  if (found.status != SearchStatus::Found) {
    throw std::logic_error("k_minus2_union_k1: no K_{t-2} u K1 model found");
  }
  if (route) *route = "exhaustive";
  return *found.model;
}

std::string witness_kind_name(Alpha2Witness::Kind kind) {
  switch (kind) {
    case Alpha2Witness::Kind::MinorFound:
      return "minor";
    case Alpha2Witness::Kind::K5UK5:
      return "k5uk5";
    case Alpha2Witness::Kind::IsomorphicTo:
      return "isomorphic";
  }
  return "minor";
}

Alpha2Witness classify_alpha2_10(const Graph& g) {
  if (g.order() != 10) throw PreconditionError("classify_alpha2_10: G must have 10 vertices");
  if (independence_number(g) != 2) throw PreconditionError("classify_alpha2_10: alpha(G) must be 2");
  const auto rows = g.rows();
  const Graph pattern = k6minus_union_k1().graph();
  int x = 0;
  for (int v = 1; v < 10; ++v) {
    if (popcount(rows[v]) < popcount(rows[x])) x = v;
  }
  int d = popcount(rows[x]);
  auto far = mask_to_vector(g.all() & ~rows[x] & ~bit(x));  // a clique since alpha(G) = 2
  Alpha2Witness w;

  if (d <= 3) {
    far.resize(6);
    auto blobs = singletons(far);
    blobs.push_back({x});
    w.model = MinorModel{pattern, blobs};
    w.route = "low-degree";
    return w;
  }
  if (d == 4) {
    auto closed = mask_to_vector(rows[x] | bit(x));
    if (is_clique(g, closed)) {
      w.kind = Alpha2Witness::Kind::K5UK5;
      w.first = closed;
      w.second = far;
      w.route = "degree-4";
      return w;
    }
    auto nx = mask_to_vector(rows[x]);
    for (std::size_t a = 0; a < nx.size(); ++a) {
      for (std::size_t b = a + 1; b < nx.size(); ++b) {
        if (g.has_edge(nx[a], nx[b])) continue;
        auto blobs = singletons(far);
        blobs.push_back({x, nx[a], nx[b]});
        for (int v : nx) {
          if (v != nx[a] && v != nx[b]) {
            blobs.push_back({v});
            break;
          }
        }
        w.model = MinorModel{pattern, blobs};
        w.route = "degree-4-contraction";
        if (!verify_model(g, *w.model)) throw std::logic_error("classify_alpha2_10: {x,y,z} contraction failed");
        return w;
      }
    }
  }
  auto found = find_minor(g, pattern);
  if (found.status == SearchStatus::BudgetExceeded) throw SizeLimitError("classify_alpha2_10: minor budget exceeded");
  if (found.status == SearchStatus::Found) {
    w.model = found.model;
    w.route = "search";
    return w;
  }
  const Graph& j = recover_J();
  if (!is_isomorphic(g, j)) throw std::logic_error("classify_alpha2_10: minor-free graph with min degree >= 5 is not J");
  auto lg = canonical_labeling(g), lj = canonical_labeling(j);
  w.kind = Alpha2Witness::Kind::IsomorphicTo;
  w.named = "J";
  w.isomorphism.assign(10, -1);
  for (int i = 0; i < 10; ++i) w.isomorphism[lj.order[i]] = lg.order[i];
  w.route = "exceptional";
  return w;
}

Verdict verify_witness(const Graph& g, const Alpha2Witness& w) {
  switch (w.kind) {
    case Alpha2Witness::Kind::MinorFound: {
      if (!w.model) return {false, "missing model"};
      if (!is_isomorphic(w.model->pattern, k6minus_union_k1().graph())) return {false, "pattern is not K6^- u K1"};
      return verify_model(g, *w.model);
    }
    case Alpha2Witness::Kind::K5UK5: {
      if (w.first.size() != 5 || w.second.size() != 5) return {false, "K5UK5 needs two 5-sets"};
      Mask a = 0, b = 0;
      for (int v : w.first) {
        if (v < 0 || v >= g.order()) return {false, "vertex out of range"};
        a |= bit(v);
      }
      for (int v : w.second) {
        if (v < 0 || v >= g.order()) return {false, "vertex out of range"};
        b |= bit(v);
      }
      if (popcount(a) != 5 || popcount(b) != 5 || (a & b)) return {false, "the two 5-sets are not disjoint"};
      if (!is_clique(g, w.first) || !is_clique(g, w.second)) return {false, "a 5-set is not a clique"};
      return {true, ""};
    }
    case Alpha2Witness::Kind::IsomorphicTo: {
      if (w.named != "J") return {false, "unknown named graph " + w.named};
      const Graph& j = recover_J();
      if (g.order() != j.order() || static_cast<int>(w.isomorphism.size()) != j.order()) return {false, "order mismatch"};
      std::vector<bool> hit(g.order(), false);
      for (int v : w.isomorphism) {
        if (v < 0 || v >= g.order() || hit[v]) return {false, "isomorphism is not a bijection"};
        hit[v] = true;
      }
      for (int a = 0; a < j.order(); ++a) {
        for (int b = a + 1; b < j.order(); ++b) {
          if (j.has_edge(a, b) != g.has_edge(w.isomorphism[a], w.isomorphism[b])) {
            return {false, "isomorphism breaks adjacency"};
          }
        }
      }
      return {true, ""};
    }
  }
  return {false, "unknown witness kind"};
}

const Graph& recover_J() {
  static std::once_flag once;
  static Graph j;
  std::call_once(once, [] {
    EnumerationTask task;
    task.n = 10;
    task.min_degree = 5;
    task.max_degree = 8;
    const auto forbidden = k6minus_union_k1();
    std::vector<Graph> candidates;
    enumerate(task, [&](const Graph& g) {
      if (edge_maximal_without(g, forbidden) && find_minor(g, PatternSpec::clique(6)).status == SearchStatus::Found) {
        candidates.push_back(g);
      }
      return true;
    });
    if (candidates.size() != 1) {
      throw std::logic_error("recover_J: expected exactly one candidate, found " + std::to_string(candidates.size()));
    }
    Graph found = canonical_form(candidates.front());
    for (int i = 0; i < 5; ++i) {
      found.set_label(i, "u" + std::to_string(i + 1));
      found.set_label(i + 5, "v" + std::to_string(i + 1));
    }
    register_j(found);
    j = std::move(found);
  });
  return j;
}

MinorModel two_k6_to_k8minus(const Graph& g, const std::vector<int>& h1, const std::vector<int>& h2) {
  if (!g.fits_mask()) throw SizeLimitError("two_k6_to_k8minus: more than 64 vertices");
  auto check_k6 = [&](const std::vector<int>& h) {
    if (h.size() != 6) throw PreconditionError("two_k6_to_k8minus: a K6 needs six vertices");
    for (int v : h) {
      if (v < 0 || v >= g.order()) throw PreconditionError("two_k6_to_k8minus: vertex out of range");
    }
    if (popcount(mask_of(h)) != 6 || !is_clique(g, h)) throw PreconditionError("two_k6_to_k8minus: input is not a K6");
  };
  check_k6(h1);
  check_k6(h2);
  const Mask m1 = mask_of(h1), m2 = mask_of(h2);
  if (m1 == m2) throw PreconditionError("two_k6_to_k8minus: H1 and H2 coincide");
  int kappa = vertex_connectivity(g);
  if (kappa < 7) throw PreconditionError("two_k6_to_k8minus: connectivity " + std::to_string(kappa) + " is below 7");

  const auto rows = g.rows();
  const Graph pattern = clique_minus(8);
  auto common = mask_to_vector(m1 & m2);
  auto only1 = mask_to_vector(m1 & ~m2), only2 = mask_to_vector(m2 & ~m1);
  const int t = static_cast<int>(common.size());
  auto done = [&](std::vector<std::vector<int>> parts) {
    MinorModel model{pattern, std::move(parts)};
    auto ok = verify_model(g, model);
    if (!ok) throw std::logic_error("two_k6_to_k8minus: construction failed: " + ok.reason);
    return model;
  };

  if (t == 5) {
    auto comps = components_within(rows, g.all() & ~(m1 | m2));
    if (comps.empty()) throw std::logic_error("two_k6_to_k8minus: nothing outside H1 u H2");
    auto parts = singletons(common);
    parts.push_back(mask_to_vector(comps.front()));
    parts.push_back({only1[0]});
    parts.push_back({only2[0]});
    return done(parts);
  }

  // P[i] runs from v_i in H1 \ H2 to w_i in H2 \ H1, for i = t..5.
  auto found = disjoint_paths(g, only1, only2, common, 6 - t);
  if (static_cast<int>(found.size()) != 6 - t) throw std::logic_error("two_k6_to_k8minus: too few disjoint paths");
  std::vector<std::vector<int>> p(6);
  for (int i = t; i < 6; ++i) p[i] = found[i - t];

  // Q: from some P_i \ v_i (i <= 5 in the 1-based labels) to P6 \ w6,
  // avoiding v_1..v_5 and w_6.
  Mask blocked = mask_of(common) | bit(p[5].back());
  for (int i = t; i < 5; ++i) blocked |= bit(p[i].front());
  Mask xs = 0, ys = 0;
  for (int i = t; i < 5; ++i) xs |= mask_of(p[i]) & ~bit(p[i].front());
  ys = mask_of(p[5]) & ~bit(p[5].back());
  std::vector<int> parent(g.order(), -2);
  std::deque<int> queue;
  for_each_bit(xs, [&](int v) {
    parent[v] = -1;
    queue.push_back(v);
  });
  int reached = -1;
  while (!queue.empty() && reached < 0) {
    int u = queue.front();
    queue.pop_front();
    for_each_bit(rows[u] & ~blocked, [&](int w) {
      if (reached >= 0 || parent[w] != -2) return;
      parent[w] = u;
      if (ys & bit(w)) {
        reached = w;
      } else {
        queue.push_back(w);
      }
    });
  }
  if (reached < 0) throw std::logic_error("two_k6_to_k8minus: no bridging path Q");
  std::vector<int> q;
  for (int v = reached; v != -1; v = parent[v]) q.push_back(v);
  std::reverse(q.begin(), q.end());
  const int u = q.front(), v = q.back();
  for (int i = t; i < 5; ++i) {
    if (std::find(p[i].begin(), p[i].end(), u) != p[i].end()) std::swap(p[i], p[4]);
  }

  auto parts = singletons(common);
  for (int i = t; i < 4; ++i) parts.push_back(p[i]);
  auto cut5 = std::find(p[4].begin(), p[4].end(), u);
  std::vector<int> head5(p[4].begin(), cut5), tail5(cut5, p[4].end());  // P5 \ P5*, P5*
  auto cut6 = std::find(p[5].begin(), p[5].end(), v) + 1;
  std::vector<int> head6(p[5].begin(), cut6), tail6(cut6, p[5].end());  // P6*, P6 \ P6*
  head6.insert(head6.end(), q.begin() + 1, q.end() - 1);
  parts.push_back(tail5);
  parts.push_back(head6);
  parts.push_back(head5);
  parts.push_back(tail6);
  return done(parts);
}

bool DiracReport::passes() const {
  if (clique_separator) return false;
  return std::all_of(vertices.begin(), vertices.end(), [](const DiracVertex& d) { return d.ok; });
}

DiracReport dirac_checks(const Graph& g, int k) {
  DiracReport report;
  for (int v = 0; v < g.order(); ++v) {
    DiracVertex d;
    d.v = v;
    d.degree = g.degree(v);
    d.alpha = d.degree == 0 ? 0 : independence_number(induced(g, g.neighbors(v)));
    d.ok = d.alpha <= d.degree - k + 2;
    report.vertices.push_back(d);
  }
  if (!is_connected(g)) {
    report.clique_separator = std::vector<int>{};
  } else {
    auto seps = clique_minimal_separators(g);
    if (!seps.empty()) report.clique_separator = mask_to_vector(seps.front());
  }
  return report;
}

std::vector<std::string> maximal_graph_names() {
  return {"C8bar", "C4bar+C4bar", "K3bar+C5", "K2bar+C6bar", "K_{2,3,3}", "J"};
}

MaximalGraphCheck maximal_graph_check(const std::string& name, const Graph& g) {
  MaximalGraphCheck c;
  c.name = name;
  c.order = g.order();
  c.min_degree = min_degree(g);
  c.max_degree = max_degree(g);
  auto has = [&](const PatternSpec& spec) {
    auto r = find_minor(g, spec);
    if (r.status == SearchStatus::BudgetExceeded) throw SizeLimitError("maximal_graph_check: minor budget exceeded");
    return r.status == SearchStatus::Found;
  };
  c.has_k6minus_k1 = has(k6minus_union_k1());
  c.edge_maximal = !c.has_k6minus_k1 && edge_maximal_without(g, k6minus_union_k1());
  c.has_k6 = has(PatternSpec::clique(6));
  return c;
}

}  // namespace minorcolor
