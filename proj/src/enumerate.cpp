#include "minorcolor/enumerate.hpp"

#include <map>
#include <mutex>
#include <random>
#include <set>

#include "minorcolor/canon.hpp"

namespace minorcolor {

namespace {

bool triangle_free(const Graph& h) {
  auto rows = h.rows();
  for (int u = 0; u < h.order(); ++u) {
    Mask later = rows[u] & ~low_bits(u + 1);
    bool hit = false;
    for_each_bit(later, [&](int v) { hit = hit || (rows[u] & rows[v]) != 0; });
    if (hit) return false;
  }
  return true;
}

// Canonical augmentation: a child parent+w is kept when w lies in the
// automorphism orbit of the canonically chosen deletion vertex (the
// minimum-degree vertex placed last by the canonical labeling), and only once
// per parent up to isomorphism.
template <class F>
void for_each_child(const Graph& parent, bool independent_only, F&& emit) {
  int m = parent.order(), n = m + 1;
  auto rows = parent.rows();
  std::vector<int> deg(m);
  for (int v = 0; v < m; ++v) deg[v] = popcount(rows[v]);
  std::set<CanonicalCode> seen;
  for (Mask s = 0; s <= low_bits(m); ++s) {
    if (independent_only) {
      bool ok = true;
      for_each_bit(s, [&](int v) { ok = ok && (rows[v] & s) == 0; });
      if (!ok) continue;
    }
    int ds = popcount(s), child_min = ds;
    for (int v = 0; v < m; ++v) child_min = std::min(child_min, deg[v] + ((s >> v) & 1 ? 1 : 0));
    if (ds > child_min) continue;

    Graph child(n);
    for (auto [u, v] : parent.edges()) child.add_edge(u, v);
    for_each_bit(s, [&](int v) { child.add_edge(v, m); });
    auto labeling = canonical_labeling(child);
    int chosen = -1;
    for (int i = n - 1; i >= 0 && chosen < 0; --i) {
      if (child.degree(labeling.order[i]) == child_min) chosen = labeling.order[i];
    }
    if (chosen != m) {
      std::vector<int> mark_w(n, 1), mark_c(n, 1);
      mark_w[m] = 0;
      mark_c[chosen] = 0;
      if (canonical_labeling(child, mark_w).code != canonical_labeling(child, mark_c).code) continue;
    }
    if (!seen.insert(labeling.code).second) continue;
    emit(induced(child, labeling.order));
  }
}

// Level k holds one canonical representative per class on k vertices.
const std::vector<Graph>& level(int k, bool independent_only) {
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, std::vector<Graph>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(k, independent_only);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  int start = 0;
  for (int j = k; j >= 0; --j) {
    if (cache.count({j, independent_only})) {
      start = j;
      break;
    }
  }
  if (!cache.count({0, independent_only})) cache[{0, independent_only}] = {Graph(0)};
  for (int j = start + 1; j <= k; ++j) {
    std::vector<Graph> next;
    for (const auto& parent : cache[{j - 1, independent_only}]) {
      for_each_child(parent, independent_only, [&](Graph g) { next.push_back(std::move(g)); });
    }
    cache[{j, independent_only}] = std::move(next);
  }
  return cache[key];
}

bool degree_ok(const Graph& g, const EnumerationTask& task) {
  if (task.min_degree && g.order() > 0 && min_degree(g) < *task.min_degree) return false;
  if (task.max_degree && g.order() > 0 && max_degree(g) > *task.max_degree) return false;
  return true;
}

std::vector<Graph> sample_labeled(int n, std::size_t count, std::uint64_t seed, bool alpha) {
  std::vector<Graph> out;
  out.reserve(count);
  if (n < 2) {
    out.assign(count, Graph(n));
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  Graph h(n);
  auto step = [&] {
    int u = pick(rng), v = pick(rng);
    if (u == v) return;
    if (h.has_edge(u, v)) {
      h.remove_edge(u, v);
    } else if (!alpha || (h.row(u) & h.row(v)) == 0) {
      h.add_edge(u, v);
    }
  };
  const long long burn = 20LL * n * n, thin = 1LL * n * n;
  for (long long i = 0; i < burn; ++i) step();
  for (std::size_t c = 0; c < count; ++c) {
    for (long long i = 0; i < thin; ++i) step();
    out.push_back(alpha ? complement(h) : h);
  }
  return out;
}

}  // namespace

bool edge_maximal_without(const Graph& g, const PatternSpec& spec) {
  auto has = [&](const Graph& h) {
    auto r = find_minor(h, spec);
    if (r.status == SearchStatus::BudgetExceeded) throw SizeLimitError("edge-maximality check exceeded the minor budget");
    return r.status == SearchStatus::Found;
  };
  if (has(g)) return false;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) continue;
      Graph plus = g;
      plus.add_edge(u, v);
      if (!has(plus)) return false;
    }
  }
  return true;
}

int exhaustive_limit(const EnumerationTask& task) { return task.alpha_eq_2 ? kLimits.exhaustive_enumeration : 9; }

bool satisfies(const Graph& g, const EnumerationTask& task) {
  if (g.order() != task.n) return false;
  if (task.alpha_eq_2 && !triangle_free(complement(g))) return false;
  if (!degree_ok(g, task)) return false;
  if (task.edge_maximal_without && !edge_maximal_without(g, *task.edge_maximal_without)) return false;
  return true;
}

void enumerate(const EnumerationTask& task, const GraphSink& sink, const EnumerationCheckpoint& resume,
               const std::function<void(const EnumerationCheckpoint&)>& on_checkpoint) {
  if (task.n < 0) throw PreconditionError("enumerate: negative order");
  auto accept = [&](const Graph& g) {
    if (!degree_ok(g, task)) return true;
    if (task.edge_maximal_without && !edge_maximal_without(g, *task.edge_maximal_without)) return true;
    return sink(g);
  };

  if (task.sample) {
    std::set<CanonicalCode> seen;
    for (const auto& g : sample_labeled(task.n, task.sample->count, task.sample->seed, task.alpha_eq_2)) {
      auto labeling = canonical_labeling(g);
      if (!seen.insert(labeling.code).second) continue;
      if (!accept(induced(g, labeling.order))) return;
    }
    return;
  }

  if (task.n > exhaustive_limit(task)) {
    throw PreconditionError("enumerate: n = " + std::to_string(task.n) + " is beyond the exhaustive budget of " +
                            std::to_string(exhaustive_limit(task)) + "; use sample mode");
  }
  if (task.n == 0) {
    if (resume.next_parent == 0) accept(Graph(0));
    if (on_checkpoint) on_checkpoint({0, 1});
    return;
  }
  if (resume.n != 0 && resume.n != task.n) throw PreconditionError("enumerate: checkpoint is for another order");
  const auto& parents = level(task.n - 1, task.alpha_eq_2);
  for (std::size_t i = resume.next_parent; i < parents.size(); ++i) {
    bool go = true;
    for_each_child(parents[i], task.alpha_eq_2, [&](const Graph& h) {
      if (go) go = accept(task.alpha_eq_2 ? canonical_form(complement(h)) : h);
    });
    if (!go) return;
    if (on_checkpoint) on_checkpoint({task.n, i + 1});
  }
}

std::vector<Graph> enumerate_all(const EnumerationTask& task) {
  std::vector<Graph> out;
  enumerate(task, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

std::uint64_t count(const EnumerationTask& task) {
  std::uint64_t total = 0;
  enumerate(task, [&](const Graph&) {
    ++total;
    return true;
  });
  return total;
}

std::vector<Graph> sample_alpha2(int n, std::size_t count, std::uint64_t seed) {
  return sample_labeled(n, count, seed, true);
}

}  // namespace minorcolor
