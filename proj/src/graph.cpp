#include "minorcolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace minorcolor {

std::vector<int> mask_to_vector(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for_each_bit(m, [&](int v) { out.push_back(v); });
  return out;
}

Mask vector_to_mask(std::span<const int> vs) {
  Mask m = 0;
  for (int v : vs) {
    if (v < 0 || v >= kMaskVertices) throw SizeLimitError("vertex index does not fit a 64-bit mask");
    m |= bit(v);
  }
  return m;
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw PreconditionError("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

int Graph::size() const {
  long long total = 0;
  for (auto w : bits_) total += std::popcount(w);
  return static_cast<int>(total / 2);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (row_ptr(u)[v >> 6] >> (v & 63)) & 1U;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("self-loop on vertex " + std::to_string(u));
  row_ptr(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
  row_ptr(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  row_ptr(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  row_ptr(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(row_ptr(v)[w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  const auto* r = row_ptr(v);
  for (int w = 0; w < words_; ++w) {
    for_each_bit(r[w], [&](int b) { out.push_back(w * 64 + b); });
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Mask Graph::row(int v) const {
  if (!fits_mask()) throw SizeLimitError("graph too large for mask operations");
  check_vertex(v);
  return n_ == 0 ? 0 : row_ptr(v)[0];
}

std::vector<Mask> Graph::rows() const {
  if (!fits_mask()) throw SizeLimitError("graph too large for mask operations");
  std::vector<Mask> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = row_ptr(v)[0];
  return out;
}

Mask Graph::all() const {
  if (!fits_mask()) throw SizeLimitError("graph too large for mask operations");
  return low_bits(n_);
}

std::string Graph::label(int v) const {
  check_vertex(v);
  if (!labels_.empty() && !labels_[v].empty()) return labels_[v];
  return "v" + std::to_string(v);
}

void Graph::set_label(int v, std::string label) {
  check_vertex(v);
  if (labels_.empty()) labels_.resize(n_);
  labels_[v] = std::move(label);
}

bool Graph::check_invariants() const {
  if (bits_.size() != static_cast<std::size_t>(n_) * words_) return false;
  for (int u = 0; u < n_; ++u) {
    if ((row_ptr(u)[u >> 6] >> (u & 63)) & 1U) return false;
    if (words_ > 0 && n_ % 64 != 0 && (row_ptr(u)[words_ - 1] >> (n_ % 64)) != 0) return false;
    for (int v : neighbors(u)) {
      if (!((row_ptr(v)[u >> 6] >> (u & 63)) & 1U)) return false;
    }
  }
  return true;
}

namespace {

void copy_labels(const Graph& from, int v, Graph& to, int w) {
  if (from.has_labels()) to.set_label(w, from.label(v));
}

}  // namespace

Contraction contract(const Graph& g, std::span<const int> set) {
  if (set.empty()) throw PreconditionError("contract: empty vertex set");
  std::vector<bool> in(g.order(), false);
  for (int v : set) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("contract: vertex out of range");
    in[v] = true;
  }
  if (!is_connected_set(g, set)) throw PreconditionError("contract: set does not induce a connected subgraph");

  Contraction c;
  c.image.assign(g.order(), -1);
  int next = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (!in[v]) c.image[v] = next++;
  }
  c.merged = next;
  for (int v = 0; v < g.order(); ++v) {
    if (in[v]) c.image[v] = c.merged;
  }
  c.graph = Graph(next + 1);
  for (auto [u, v] : g.edges()) {
    int a = c.image[u], b = c.image[v];
    if (a != b) c.graph.add_edge(a, b);
  }
  std::string merged_label;
  for (int v = 0; v < g.order(); ++v) {
    if (in[v]) {
      merged_label += merged_label.empty() ? g.label(v) : "+" + g.label(v);
    } else if (g.has_labels()) {
      c.graph.set_label(c.image[v], g.label(v));
    }
  }
  c.graph.set_label(c.merged, merged_label);
  return c;
}

Graph induced(const Graph& g, std::span<const int> vs) {
  Graph h(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) throw PreconditionError("induced: repeated vertex");
      if (g.has_edge(vs[i], vs[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    copy_labels(g, vs[i], h, static_cast<int>(i));
  }
  return h;
}

Graph induced(const Graph& g, Mask vs) {
  auto list = mask_to_vector(vs);
  return induced(g, list);
}

Graph remove_vertices(const Graph& g, std::span<const int> vs) {
  std::vector<bool> drop(g.order(), false);
  for (int v : vs) drop.at(v) = true;
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced(g, keep);
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) h.add_edge(u, v);
    }
    copy_labels(g, u, h, u);
  }
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph h(a.order() + b.order());
  for (auto [u, v] : a.edges()) h.add_edge(u, v);
  for (auto [u, v] : b.edges()) h.add_edge(a.order() + u, a.order() + v);
  return h;
}

Graph join(const Graph& a, const Graph& b) {
  Graph h = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u) {
    for (int v = 0; v < b.order(); ++v) h.add_edge(u, a.order() + v);
  }
  return h;
}

int min_degree(const Graph& g) {
  int d = g.order() == 0 ? 0 : g.order();
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

bool is_clique(const Graph& g, std::span<const int> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.has_edge(vs[i], vs[j])) return false;
    }
  }
  return true;
}

bool is_independent(const Graph& g, std::span<const int> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j] || g.has_edge(vs[i], vs[j])) return false;
    }
  }
  return true;
}

bool is_connected_set(const Graph& g, std::span<const int> vs) {
  if (vs.empty()) return false;
  std::vector<bool> in(g.order(), false), seen(g.order(), false);
  for (int v : vs) in.at(v) = true;
  std::vector<int> stack{vs.front()};
  seen[vs.front()] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (in[w] && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  std::size_t distinct = 0;
  for (int v = 0; v < g.order(); ++v) distinct += in[v] ? 1 : 0;
  return count == distinct;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return is_connected_set(g, all);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(g.order(), false);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Mask reach_within(const std::vector<Mask>& rows, Mask from, Mask allowed) {
  Mask seen = from;
  Mask frontier = from;
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= rows[v]; });
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<Mask> components_within(const std::vector<Mask>& rows, Mask allowed) {
  std::vector<Mask> out;
  while (allowed) {
    Mask c = reach_within(rows, bit(lowest(allowed)), allowed);
    out.push_back(c);
    allowed &= ~c;
  }
  return out;
}

std::vector<int> shortest_path(const Graph& g, int from, int to, const std::vector<bool>& allowed) {
  std::vector<int> parent(g.order(), -2);
  std::deque<int> queue{from};
  parent[from] = -1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (int w : g.neighbors(u)) {
      if (parent[w] != -2) continue;
      if (w != to && !allowed[w]) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (parent[to] == -2) return {};
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace minorcolor
