#include "minorcolor/kempe.hpp"

#include <algorithm>
#include <deque>

#include "minorcolor/invariants.hpp"

namespace minorcolor {

namespace {

[[noreturn]] void invalid(const std::string& why) { throw KempeError(KempeError::Code::InvalidRequest, why); }

std::vector<bool> membership(int n, const std::vector<int>& vs) {
  std::vector<bool> in(n, false);
  for (int v : vs) in[v] = true;
  return in;
}

// Shortest path from a to b through vertices colored ca or cb, lowest-index
// neighbors first.
std::vector<int> bichromatic_path(const Graph& g, const std::vector<int>& color, int a, int b, int ca, int cb) {
  std::vector<int> parent(g.order(), -2);
  std::deque<int> queue{a};
  parent[a] = -1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == b) break;
    for (int w : g.neighbors(u)) {
      if (parent[w] != -2 || (color[w] != ca && color[w] != cb)) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (parent[b] == -2) return {};
  std::vector<int> path;
  for (int v = b; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

void check_request(const KempeRequest& req) {
  const Graph& g = req.g;
  int n = g.order();
  if (req.k < 4) invalid("k must be at least 4");
  if (req.x < 0 || req.x >= n) invalid("x out of range");
  int s = g.degree(req.x) - req.k;
  if (s < 0) invalid("d(x) = " + std::to_string(g.degree(req.x)) + " is below k = " + std::to_string(req.k));
  if (static_cast<int>(req.s.size()) != s + 2) {
    invalid("|S| = " + std::to_string(req.s.size()) + " but d(x) - k + 2 = " + std::to_string(s + 2));
  }
  auto in_s = membership(n, {});
  for (int v : req.s) {
    if (v < 0 || v >= n || !g.has_edge(req.x, v)) invalid("S is not contained in N(x)");
    if (in_s[v]) invalid("S repeats a vertex");
    in_s[v] = true;
  }
  if (!is_independent(g, req.s)) invalid("S is not independent");
  auto nx = g.neighbors(req.x);
  if (independence_number(induced(g, nx)) != s + 2) invalid("alpha(N(x)) differs from s + 2");
  std::vector<int> rest;
  for (int v : nx) {
    if (!in_s[v]) rest.push_back(v);
  }
  if (is_clique(g, rest)) invalid("N(x) \\ S is a clique");
  std::vector<bool> used(n, false);
  int ends = 0;
  for (const auto& fan : req.fans) {
    std::vector<int> all{fan.apex};
    all.insert(all.end(), fan.leaves.begin(), fan.leaves.end());
    for (int v : all) {
      if (v < 0 || v >= n || !g.has_edge(req.x, v) || in_s[v]) invalid("fan end outside N(x) \\ S");
      if (used[v]) invalid("fan ends are not distinct");
      used[v] = true;
    }
    if (fan.leaves.empty()) invalid("fan without leaves");
    for (int b : fan.leaves) {
      if (g.has_edge(fan.apex, b)) invalid("fan pair is an edge, not a missing edge");
    }
    ends += static_cast<int>(all.size());
  }
  if (ends > req.k - 2) invalid("fans use more than k - 2 ends");
}

Contraction kempe_contraction(const KempeRequest& req) {
  std::vector<int> set = req.s;
  set.push_back(req.x);
  return contract(req.g, set);
}

void kempe_switch(const Graph& g, std::vector<int>& coloring, int start, int a, int b) {
  if (coloring[start] != a && coloring[start] != b) return;
  std::vector<bool> seen(g.order(), false);
  std::vector<int> stack{start}, component;
  seen[start] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    component.push_back(u);
    for (int w : g.neighbors(u)) {
      if (!seen[w] && (coloring[w] == a || coloring[w] == b)) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (int v : component) coloring[v] = coloring[v] == a ? b : a;
}

KempeOutcome kempe_resolve(const KempeRequest& req, const std::vector<int>& base) {
  check_request(req);
  const Graph& g = req.g;
  int n = g.order(), palette = req.k - 1;
  auto contraction = kempe_contraction(req);
  const Graph& h = contraction.graph;
  if (static_cast<int>(base.size()) != h.order()) {
    throw KempeError(KempeError::Code::WrongColorCount,
                     "base coloring has " + std::to_string(base.size()) + " entries for " +
                         std::to_string(h.order()) + " vertices");
  }
  for (int c : base) {
    if (c < 1 || c > palette) {
      throw KempeError(KempeError::Code::WrongColorCount,
                       "base coloring uses color " + std::to_string(c) + " outside 1.." + std::to_string(palette));
    }
  }
  if (!is_proper_coloring(h, base, palette)) {
    throw KempeError(KempeError::Code::ImproperBase, "base coloring is not proper on G/(S u {x})");
  }

  KempeOutcome out;
  // Rename colors so that w gets color 1.
  int cw = base[contraction.merged];
  auto rename = [&](int c) { return c == cw ? 1 : (c == 1 ? cw : c); };
  std::vector<int> color(n, 0);
  for (int v = 0; v < n; ++v) {
    int image = contraction.image[v];
    if (image != contraction.merged) color[v] = rename(base[image]);
  }

  auto in_s = membership(n, req.s);
  std::vector<int> rest;
  for (int v : g.neighbors(req.x)) {
    if (!in_s[v]) rest.push_back(v);
  }

  auto try_extend = [&]() -> bool {
    std::vector<bool> present(palette + 1, false);
    for (int v : rest) present[color[v]] = true;
    for (int c = 2; c <= palette; ++c) {
      if (present[c]) continue;
      out.kind = KempeOutcome::Kind::ExtendedColoring;
      out.coloring = color;
      for (int v : req.s) out.coloring[v] = 1;
      out.coloring[req.x] = c;
      out.trace.push_back("extend: color " + std::to_string(c) + " free at x");
      return true;
    }
    return false;
  };

  if (try_extend()) return out;

  // Every color 2..k-1 now appears exactly once on N(x) \ S.
  std::vector<int> census(palette + 1, 0);
  for (int v : rest) ++census[color[v]];
  for (int c = 2; c <= palette; ++c) {
    if (census[c] != 1) throw std::logic_error("kempe_resolve: color census failed");
  }

  for (const auto& fan : req.fans) {
    for (int b : fan.leaves) {
      int ca = color[fan.apex], cb = color[b];
      if (!bichromatic_path(g, color, fan.apex, b, ca, cb).empty()) continue;
      kempe_switch(g, color, fan.apex, ca, cb);
      out.trace.push_back("switch {" + std::to_string(ca) + "," + std::to_string(cb) + "} at " +
                          std::to_string(fan.apex));
      if (!is_proper_coloring(g, color, palette)) throw std::logic_error("kempe_resolve: switch broke properness");
      if (!try_extend()) throw std::logic_error("kempe_resolve: switch did not free a color");
      return out;
    }
  }

  out.kind = KempeOutcome::Kind::Paths;
  for (const auto& fan : req.fans) {
    out.paths.apexes.push_back(fan.apex);
    auto& fan_paths = out.paths.paths.emplace_back();
    for (int b : fan.leaves) {
      auto path = bichromatic_path(g, color, fan.apex, b, color[fan.apex], color[b]);
      if (path.empty()) throw std::logic_error("kempe_resolve: bichromatic path vanished");
      fan_paths.push_back(std::move(path));
    }
  }
  out.trace.push_back("paths: " + std::to_string(req.fans.size()) + " fans");
  return out;
}

KempeCheck validate_outcome(const KempeRequest& req, const KempeOutcome& outcome) {
  const Graph& g = req.g;
  int n = g.order();
  if (outcome.kind == KempeOutcome::Kind::ExtendedColoring) {
    if (static_cast<int>(outcome.coloring.size()) != n) return {false, "coloring has wrong length"};
    for (int c : outcome.coloring) {
      if (c < 1 || c > req.k - 1) return {false, "coloring uses a color outside 1..k-1"};
    }
    for (auto [u, v] : g.edges()) {
      if (outcome.coloring[u] == outcome.coloring[v]) {
        return {false, "edge " + std::to_string(u) + "-" + std::to_string(v) + " is monochromatic"};
      }
    }
    return {true, ""};
  }
  const auto& ps = outcome.paths;
  if (ps.paths.size() != req.fans.size() || ps.apexes.size() != req.fans.size()) return {false, "fan count mismatch"};
  std::vector<bool> closed(n, false);
  if (req.x < 0 || req.x >= n) return {false, "x out of range"};
  closed[req.x] = true;
  for (int v : g.neighbors(req.x)) closed[v] = true;
  std::vector<int> fan_of(n, -1);
  for (std::size_t i = 0; i < req.fans.size(); ++i) {
    const auto& fan = req.fans[i];
    if (ps.apexes[i] != fan.apex) return {false, "apex mismatch"};
    if (ps.paths[i].size() != fan.leaves.size()) return {false, "path count mismatch in fan " + std::to_string(i)};
    for (std::size_t j = 0; j < fan.leaves.size(); ++j) {
      const auto& path = ps.paths[i][j];
      if (path.size() < 2 || path.front() != fan.apex || path.back() != fan.leaves[j]) {
        return {false, "path " + std::to_string(i) + "." + std::to_string(j) + " has wrong ends"};
      }
      std::vector<int> sorted = path;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {false, "path repeats a vertex"};
      for (std::size_t t = 0; t < path.size(); ++t) {
        int v = path[t];
        if (v < 0 || v >= n) return {false, "path vertex out of range"};
        if (t + 1 < path.size() && !g.has_edge(v, path[t + 1])) return {false, "path uses a non-edge"};
        if (t > 0 && t + 1 < path.size() && closed[v]) return {false, "internal path vertex lies in N[x]"};
        if (fan_of[v] != -1 && fan_of[v] != static_cast<int>(i)) return {false, "paths of different fans intersect"};
        fan_of[v] = static_cast<int>(i);
      }
    }
  }
  return {true, ""};
}

}  // namespace minorcolor
