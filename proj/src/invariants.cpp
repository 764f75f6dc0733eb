#include "minorcolor/invariants.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace minorcolor {

namespace {

void require_order(const Graph& g, int limit, const char* what) {
  if (g.order() > limit || !g.fits_mask()) {
    throw SizeLimitError(std::string(what) + ": order " + std::to_string(g.order()) + " exceeds exact-search limit " +
                         std::to_string(limit));
  }
}

// Tomita-style MCQ: candidates colored greedily, branch on vertices in
// decreasing color order and cut when |current| + color <= |best|.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Mask> rows) : rows_(std::move(rows)) {}

  Mask run(Mask candidates) {
    best_ = 0;
    best_size_ = 0;
    expand(0, 0, candidates);
    return best_;
  }

 private:
  void expand(Mask current, int size, Mask candidates) {
    if (candidates == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = current;
      }
      return;
    }
    std::vector<int> order;
    std::vector<int> color;
    color_sort(candidates, order, color);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + color[i] <= best_size_) return;
      int v = order[i];
      expand(current | bit(v), size + 1, candidates & rows_[v]);
      candidates &= ~bit(v);
    }
  }

  void color_sort(Mask candidates, std::vector<int>& order, std::vector<int>& color) const {
    int k = 0;
    Mask uncolored = candidates;
    while (uncolored) {
      ++k;
      Mask avail = uncolored;
      while (avail) {
        int v = lowest(avail);
        avail &= ~rows_[v] & ~bit(v);
        uncolored &= ~bit(v);
        order.push_back(v);
        color.push_back(k);
      }
    }
  }

  std::vector<Mask> rows_;
  Mask best_ = 0;
  int best_size_ = 0;
};

void enumerate_cliques(const std::vector<Mask>& rows, Mask current, int size, Mask candidates, int want,
                       std::size_t limit, std::vector<std::vector<int>>& out) {
  if (out.size() >= limit) return;
  if (size == want) {
    out.push_back(mask_to_vector(current));
    return;
  }
  if (size + popcount(candidates) < want) return;
  while (candidates) {
    int v = lowest(candidates);
    candidates &= ~bit(v);
    enumerate_cliques(rows, current | bit(v), size + 1, candidates & rows[v], want, limit, out);
    if (out.size() >= limit) return;
  }
}

// DSATUR backtracking for a fixed color count.
class KColoring {
 public:
  KColoring(const std::vector<Mask>& rows, int n, int k) : rows_(rows), n_(n), k_(k), color_(n, 0) {}

  bool run() {
    if (n_ == 0) return true;
    return step(0);
  }

  const std::vector<int>& coloring() const { return color_; }

 private:
  Mask used_around(int v) const {
    Mask used = 0;
    for_each_bit(rows_[v], [&](int w) {
      if (color_[w]) used |= bit(color_[w]);
    });
    return used;
  }

  bool step(int colored) {
    if (colored == n_) return true;
    int pick = -1, pick_sat = -1, pick_deg = -1;
    Mask pick_used = 0;
    for (int v = 0; v < n_; ++v) {
      if (color_[v]) continue;
      Mask used = used_around(v);
      int sat = popcount(used);
      int deg = 0;
      for_each_bit(rows_[v], [&](int w) { deg += color_[w] ? 0 : 1; });
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
        pick_used = used;
      }
    }
    if (pick_sat >= k_) return false;
    int max_used = 0;
    for (int c : color_) max_used = std::max(max_used, c);
    // Colors beyond max_used + 1 are symmetric; try only one fresh color.
    int limit = std::min(k_, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (pick_used & bit(c)) continue;
      color_[pick] = c;
      if (step(colored + 1)) return true;
    }
    color_[pick] = 0;
    return false;
  }

  const std::vector<Mask>& rows_;
  int n_;
  int k_;
  std::vector<int> color_;
};

// Unit-capacity flow on the split digraph: v_in = 2v, v_out = 2v+1.
class SplitFlow {
 public:
  explicit SplitFlow(int n) : n_(n), head_(2 * n + 2, -1) {}

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  int augment(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit) {
      std::vector<int> via(head_.size(), -1);
      std::vector<bool> seen(head_.size(), false);
      std::deque<int> q{s};
      seen[s] = true;
      while (!q.empty() && !seen[t]) {
        int u = q.front();
        q.pop_front();
        for (int a = head_[u]; a != -1; a = arcs_[a].next) {
          if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
            seen[arcs_[a].to] = true;
            via[arcs_[a].to] = a;
            q.push_back(arcs_[a].to);
          }
        }
      }
      if (!seen[t]) break;
      for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].cap -= 1;
        arcs_[via[v] ^ 1].cap += 1;
      }
      ++flow;
    }
    return flow;
  }

  struct Arc {
    int to;
    int next;
    int cap;
  };
  std::vector<Arc> arcs_;
  int n_;
  std::vector<int> head_;
};

int local_connectivity(const Graph& g, int s, int t, int cap) {
  int n = g.order();
  SplitFlow f(n);
  for (int v = 0; v < n; ++v) f.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
  for (auto [u, v] : g.edges()) {
    f.add_arc(2 * u + 1, 2 * v, n);
    f.add_arc(2 * v + 1, 2 * u, n);
  }
  return f.augment(2 * s + 1, 2 * t, cap);
}

}  // namespace

std::vector<int> maximum_clique(const Graph& g) {
  require_order(g, kLimits.clique_order, "maximum_clique");
  CliqueSearch search(g.rows());
  return mask_to_vector(search.run(g.all()));
}

std::vector<int> maximum_independent_set(const Graph& g) { return maximum_clique(complement(g)); }

int clique_number(const Graph& g) { return static_cast<int>(maximum_clique(g).size()); }

int independence_number(const Graph& g) { return static_cast<int>(maximum_independent_set(g).size()); }

std::vector<std::vector<int>> cliques_of_size(const Graph& g, int size, std::size_t limit) {
  if (!g.fits_mask()) throw SizeLimitError("cliques_of_size: graph too large");
  std::vector<std::vector<int>> out;
  if (size <= 0) {
    out.emplace_back();
    return out;
  }
  enumerate_cliques(g.rows(), 0, 0, g.all(), size, limit, out);
  return out;
}

std::optional<std::vector<int>> k_coloring(const Graph& g, int k) {
  require_order(g, kMaskVertices, "k_coloring");
  if (k < 0) return std::nullopt;
  if (g.order() == 0) return std::vector<int>{};
  if (k == 0) return std::nullopt;
  if (k >= g.order()) {
    std::vector<int> c(g.order());
    std::iota(c.begin(), c.end(), 1);
    return c;
  }
  auto rows = g.rows();
  KColoring search(rows, g.order(), std::min(k, kMaskVertices - 1));
  if (!search.run()) return std::nullopt;
  return search.coloring();
}

ChromaticResult chromatic_number(const Graph& g) {
  require_order(g, kLimits.chromatic_order, "chromatic_number");
  if (g.order() == 0) return {0, {}};
  int lower = std::max(1, clique_number(g));
  for (int k = lower;; ++k) {
    if (auto c = k_coloring(g, k)) return {k, *c};
  }
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring, int k) {
  if (static_cast<int>(coloring.size()) != g.order()) return false;
  for (int c : coloring) {
    if (c < 0 || c > k) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (coloring[u] != 0 && coloring[u] == coloring[v]) return false;
  }
  return true;
}

int vertex_connectivity(const Graph& g) {
  int n = g.order();
  if (n <= 1) return 0;
  int best = n - 1;
  // Even's scheme: a minimum separator misses one of the first best+1
  // vertices, so pairs (v_i, w) with i <= best cover it.
  for (int i = 0; i <= best && i < n; ++i) {
    for (int w = i + 1; w < n; ++w) {
      if (g.has_edge(i, w)) continue;
      best = std::min(best, local_connectivity(g, i, w, best));
    }
  }
  return best;
}

std::vector<std::vector<int>> disjoint_paths(const Graph& g, const std::vector<int>& sources,
                                             const std::vector<int>& sinks, const std::vector<int>& blocked,
                                             int want) {
  int n = g.order();
  std::vector<int> role(n, 0);  // 1 source, 2 sink, 3 blocked
  for (int v : blocked) role.at(v) = 3;
  for (int v : sources) role.at(v) = 1;
  for (int v : sinks) {
    if (role.at(v) == 1) throw PreconditionError("disjoint_paths: sources and sinks overlap");
    role[v] = 2;
  }
  SplitFlow f(n);
  int s = 2 * n, t = 2 * n + 1;
  for (int v = 0; v < n; ++v) {
    if (role[v] == 3) continue;
    f.add_arc(2 * v, 2 * v + 1, 1);
    if (role[v] == 1) f.add_arc(s, 2 * v, 1);
    if (role[v] == 2) f.add_arc(2 * v + 1, t, 1);
  }
  for (auto [u, v] : g.edges()) {
    if (role[u] == 3 || role[v] == 3) continue;
    // No arcs leaving a sink or entering a source keeps paths clean.
    if (role[u] != 2 && role[v] != 1) f.add_arc(2 * u + 1, 2 * v, 1);
    if (role[v] != 2 && role[u] != 1) f.add_arc(2 * v + 1, 2 * u, 1);
  }
  int flow = f.augment(s, t, want);
  std::vector<std::vector<int>> paths;
  // Decompose: follow saturated out->in arcs from each used source.
  std::vector<int> next(n, -1);
  for (int v = 0; v < n; ++v) {
    for (int a = f.head_[2 * v + 1]; a != -1; a = f.arcs_[a].next) {
      int to = f.arcs_[a].to;
      if ((a & 1) == 0 && to < 2 * n && to % 2 == 0 && f.arcs_[a].cap == 0) next[v] = to / 2;
    }
  }
  for (int v : sources) {
    bool used = false;
    for (int a = f.head_[s]; a != -1; a = f.arcs_[a].next) {
      if ((a & 1) == 0 && f.arcs_[a].to == 2 * v && f.arcs_[a].cap == 0) used = true;
    }
    if (!used) continue;
    std::vector<int> path{v};
    int cur = v;
    while (role[cur] != 2) {
      cur = next[cur];
      if (cur < 0) break;
      path.push_back(cur);
    }
    if (cur >= 0) paths.push_back(std::move(path));
  }
  (void)flow;
  return paths;
}

}  // namespace minorcolor
