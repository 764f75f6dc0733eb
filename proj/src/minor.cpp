#include "minorcolor/minor.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <regex>

#include "minorcolor/invariants.hpp"
#include "minorcolor/named.hpp"

namespace minorcolor {

PatternSpec PatternSpec::clique(int p) { return {PatternKind::Clique, p, false, {}}; }
PatternSpec PatternSpec::clique_minus(int p) { return {PatternKind::CliqueMinus, p, false, {}}; }
PatternSpec PatternSpec::clique_equal(int p, bool adjacent_missing) {
  return {PatternKind::CliqueEqual, p, adjacent_missing, {}};
}
PatternSpec PatternSpec::union_k1(const Graph& h) { return {PatternKind::UnionK1, h.order() + 1, false, h}; }
PatternSpec PatternSpec::explicit_graph(const Graph& h) { return {PatternKind::Explicit, h.order(), false, h}; }

Graph PatternSpec::graph() const {
  switch (kind) {
    case PatternKind::Clique:
      if (p < 1) throw PreconditionError("pattern order must be at least 1");
      return complete_graph(p);
    case PatternKind::CliqueMinus:
      return minorcolor::clique_minus(p);
    case PatternKind::CliqueEqual:
      return minorcolor::clique_equal(p, adjacent_missing);
    case PatternKind::UnionK1:
      return disjoint_union(base, Graph(1));
    case PatternKind::Explicit:
      return base;
  }
  return base;
}

std::string PatternSpec::name() const {
  switch (kind) {
    case PatternKind::Clique:
      return "K" + std::to_string(p);
    case PatternKind::CliqueMinus:
      return "K" + std::to_string(p) + "-";
    case PatternKind::CliqueEqual:
      return "K" + std::to_string(p) + (adjacent_missing ? "=adj" : "=");
    case PatternKind::UnionK1:
      return "H|K1";
    case PatternKind::Explicit:
      return "H";
  }
  return "H";
}

PatternSpec parse_pattern(const std::string& text) {
  static const std::regex clique(R"(K(\d+)(-|=|=adj)?)");
  auto bar = text.find_last_of("|+");
  if (bar != std::string::npos && bar > 0 && text.substr(bar + 1) == "K1") {
    auto inner = parse_pattern(text.substr(0, bar));
    auto spec = PatternSpec::union_k1(inner.graph());
    return spec;
  }
  std::smatch m;
  if (std::regex_match(text, m, clique)) {
    int p = std::stoi(m[1]);
    std::string suffix = m[2];
    if (suffix.empty()) return PatternSpec::clique(p);
    if (suffix == "-") return PatternSpec::clique_minus(p);
    return PatternSpec::clique_equal(p, suffix == "=adj");
  }
  return PatternSpec::explicit_graph(build_named(text));
}

long long default_minor_budget() {
  if (const char* env = std::getenv("MINORCOLOR_BUDGET")) {
    char* end = nullptr;
    long long value = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kLimits.minor_nodes;
}

Verdict verify_model(const Graph& g, const MinorModel& model) {
  const auto& sets = model.branch_sets;
  if (static_cast<int>(sets.size()) != model.pattern.order()) {
    return {false, "expected " + std::to_string(model.pattern.order()) + " branch sets, got " +
                       std::to_string(sets.size())};
  }
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) return {false, "branch set " + std::to_string(i) + " is empty"};
    for (int v : sets[i]) {
      if (v < 0 || v >= g.order()) return {false, "vertex " + std::to_string(v) + " out of range"};
      if (owner[v] != -1) {
        return {false, "vertex " + std::to_string(v) + " lies in branch sets " + std::to_string(owner[v]) +
                           " and " + std::to_string(i)};
      }
      owner[v] = static_cast<int>(i);
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    // Breadth-first search inside the branch set.
    std::vector<int> queue{sets[i][0]};
    std::vector<bool> seen(g.order(), false);
    seen[sets[i][0]] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int w : g.neighbors(queue[head])) {
        if (!seen[w] && owner[w] == static_cast<int>(i)) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    if (queue.size() != sets[i].size()) return {false, "branch set " + std::to_string(i) + " is not connected"};
  }
  std::vector<std::vector<bool>> touch(sets.size(), std::vector<bool>(sets.size(), false));
  for (auto [u, v] : g.edges()) {
    if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v]) touch[owner[u]][owner[v]] = touch[owner[v]][owner[u]] = true;
  }
  for (auto [a, b] : model.pattern.edges()) {
    if (!touch[a][b]) {
      return {false, "no host edge between branch sets " + std::to_string(a) + " and " + std::to_string(b)};
    }
  }
  return {true, ""};
}

namespace {

// Injective map of `pattern` into a graph given by masks, preserving edges.
// Returns pattern vertex -> host index.
std::optional<std::vector<int>> embed(const Graph& pattern, const std::vector<Mask>& host, int host_n) {
  int p = pattern.order();
  if (p > host_n) return std::nullopt;
  if (p == 0) return std::vector<int>{};
  std::vector<int> order;
  std::vector<bool> placed(p, false);
  for (int step = 0; step < p; ++step) {
    int pick = -1, best_links = -1, best_degree = -1;
    for (int v = 0; v < p; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : order) links += pattern.has_edge(u, v);
      int d = pattern.degree(v);
      if (links > best_links || (links == best_links && d > best_degree)) {
        pick = v;
        best_links = links;
        best_degree = d;
      }
    }
    placed[pick] = true;
    order.push_back(pick);
  }
  std::vector<int> host_degree(host_n);
  for (int h = 0; h < host_n; ++h) host_degree[h] = popcount(host[h]);
  std::vector<int> image(p, -1);
  std::function<bool(int, Mask)> place = [&](int i, Mask used) {
    if (i == p) return true;
    int v = order[i];
    Mask cand = low_bits(host_n) & ~used;
    for (int j = 0; j < i; ++j) {
      if (pattern.has_edge(order[j], v)) cand &= host[image[order[j]]];
    }
    int need = pattern.degree(v);
    while (cand) {
      int h = lowest(cand);
      cand &= cand - 1;
      if (host_degree[h] < need) continue;
      image[v] = h;
      if (place(i + 1, used | bit(h))) return true;
    }
    image[v] = -1;
    return false;
  };
  if (place(0, 0)) return image;
  return std::nullopt;
}

class BudgetExhausted {};

// Searches for a partition of all vertices of a connected host (masks) into
// exactly q connected parts whose quotient contains `pattern`.
class CoverSearch {
 public:
  CoverSearch(const std::vector<Mask>& rows, const Graph& pattern, long long& nodes, long long budget)
      : rows_(rows),
        n_(static_cast<int>(rows.size())),
        pattern_(pattern),
        q_(pattern.order()),
        co_pattern_(complement(pattern)),
        nodes_(nodes),
        budget_(budget) {
    co_edges_ = co_pattern_.size();
    co_max_degree_ = q_ > 0 ? max_degree(co_pattern_) : 0;
  }

  std::optional<std::vector<Mask>> run(const std::vector<int>& order) {
    order_ = order;
    parts_.assign(q_, 0);
    opened_ = 0;
    unassigned_ = low_bits(n_);
    if (q_ == 0) return std::vector<Mask>{};
    if (q_ > n_) return std::nullopt;
    if (assign(0)) return result_;
    return std::nullopt;
  }

 private:
  Mask reach(Mask from, Mask allowed) const { return reach_within(rows_, from, allowed); }

  Mask neighborhood(Mask set) const {
    Mask out = 0;
    for_each_bit(set, [&](int v) { out |= rows_[v]; });
    return out & ~set;
  }

  // Quotient over the opened parts, as masks over part indices.
  std::vector<Mask> quotient() const {
    std::vector<Mask> q(opened_, 0);
    for (int i = 0; i < opened_; ++i) {
      Mask nb = neighborhood(parts_[i]);
      for (int j = 0; j < opened_; ++j) {
        if (i != j && (nb & parts_[j])) q[i] |= bit(j);
      }
    }
    return q;
  }

  // Permanent non-adjacencies must fit into the complement of the pattern.
  // Parts not yet opened can never touch a frozen part.
  bool non_edges_fit(const std::vector<Mask>& q, Mask frozen) const {
    Graph forced(q_);
    int count = 0;
    for (int i = 0; i < opened_; ++i) {
      for (int j = i + 1; j < opened_; ++j) {
        if (!(q[i] & bit(j)) && ((frozen & bit(i)) || (frozen & bit(j)))) {
          forced.add_edge(i, j);
          ++count;
        }
      }
      if (frozen & bit(i)) {
        for (int j = opened_; j < q_; ++j) {
          forced.add_edge(i, j);
          ++count;
        }
      }
    }
    if (count == 0) return true;
    if (count > co_edges_) return false;
    if (max_degree(forced) > co_max_degree_) return false;
    return embed(forced, co_pattern_.rows(), q_).has_value();
  }

  bool feasible() const {
    if (q_ - opened_ > popcount(unassigned_)) return false;
    Mask frozen = 0;
    for (int i = 0; i < opened_; ++i) {
      Mask part = parts_[i];
      if ((reach(bit(lowest(part)), part | unassigned_) & part) != part) return false;
      if ((neighborhood(part) & unassigned_) == 0) frozen |= bit(i);
    }
    if (frozen == 0) return true;
    return non_edges_fit(quotient(), frozen);
  }

  // All parts opened and internally connected, quotient containing the
  // pattern: absorb the rest breadth-first and finish.
  bool try_finish() {
    if (opened_ != q_) return false;
    for (int i = 0; i < q_; ++i) {
      if (reach(bit(lowest(parts_[i])), parts_[i]) != parts_[i]) return false;
    }
    auto q = quotient();
    auto map = embed(pattern_, q, q_);
    if (!map) return false;
    std::vector<Mask> parts = parts_;
    Mask left = unassigned_;
    while (left) {
      bool grew = false;
      for (int i = 0; i < q_ && left; ++i) {
        Mask add = neighborhood(parts[i]) & left;
        if (add) {
          parts[i] |= add;
          left &= ~add;
          grew = true;
        }
      }
      if (!grew) return false;
    }
    result_.assign(q_, 0);
    for (int v = 0; v < q_; ++v) result_[v] = parts[(*map)[v]];
    return true;
  }

  bool assign(std::size_t index) {
    if (try_finish()) return true;
    if (index == order_.size()) return false;
    int v = order_[index];
    Mask vb = bit(v);
    auto attempt = [&](int part) {
      if (++nodes_ > budget_) throw BudgetExhausted{};
      bool fresh = part == opened_;
      if (fresh) ++opened_;
      parts_[part] |= vb;
      unassigned_ &= ~vb;
      bool ok = feasible() && assign(index + 1);
      unassigned_ |= vb;
      parts_[part] &= ~vb;
      if (fresh) --opened_;
      return ok;
    };
    if (opened_ < q_ && attempt(opened_)) return true;
    for (int i = 0; i < opened_; ++i) {
      if ((rows_[v] & parts_[i]) && attempt(i)) return true;
    }
    for (int i = 0; i < opened_; ++i) {
      if (!(rows_[v] & parts_[i]) && attempt(i)) return true;
    }
    return false;
  }

  const std::vector<Mask>& rows_;
  int n_;
  const Graph& pattern_;
  int q_;
  Graph co_pattern_;
  int co_edges_ = 0;
  int co_max_degree_ = 0;
  long long& nodes_;
  long long budget_;
  std::vector<int> order_;
  std::vector<Mask> parts_;
  int opened_ = 0;
  Mask unassigned_ = 0;
  std::vector<Mask> result_;
};

// Maximum clique first, then repeatedly the vertex with most neighbors among
// those already ordered; ties to the lowest index.
std::vector<int> search_order(const Graph& h) {
  int n = h.order();
  auto rows = h.rows();
  std::vector<int> order = n <= kLimits.clique_order ? maximum_clique(h) : std::vector<int>{};
  Mask placed = vector_to_mask(order);
  while (static_cast<int>(order.size()) < n) {
    int pick = -1, links = -1;
    for (int v = 0; v < n; ++v) {
      if (placed & bit(v)) continue;
      int l = popcount(rows[v] & placed);
      if (l > links) {
        pick = v;
        links = l;
      }
    }
    order.push_back(pick);
    placed |= bit(pick);
  }
  return order;
}

}  // namespace

MinorSearchResult find_minor(const Graph& g, const Graph& pattern, long long budget) {
  if (budget <= 0) throw PreconditionError("find_minor: budget must be positive");
  if (!g.fits_mask()) throw SizeLimitError("find_minor: host order above 64");
  MinorSearchResult result;
  int p = pattern.order();
  if (p > g.order()) return result;
  if (p == 0) {
    result.status = SearchStatus::Found;
    result.model = MinorModel{pattern, {}};
    return result;
  }
  auto host_components = connected_components(g);
  auto pattern_components = connected_components(pattern);
  std::sort(pattern_components.begin(), pattern_components.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });

  // (host component, assigned pattern components) -> branch sets in host
  // component coordinates, or nullopt.
  std::map<std::pair<std::size_t, std::vector<int>>, std::optional<std::vector<Mask>>> memo;
  auto solve = [&](std::size_t hc, const std::vector<int>& assigned) -> const std::optional<std::vector<Mask>>& {
    auto key = std::make_pair(hc, assigned);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<int> pattern_vertices;
    for (int c : assigned) {
      pattern_vertices.insert(pattern_vertices.end(), pattern_components[c].begin(), pattern_components[c].end());
    }
    Graph sub_pattern = induced(pattern, pattern_vertices);
    const auto& members = host_components[hc];
    Graph host = induced(g, members);
    std::optional<std::vector<Mask>> found;
    int m = host.order(), q = sub_pattern.order();
    if (q <= m && host.size() >= sub_pattern.size() + (m - q)) {
      auto rows = host.rows();
      CoverSearch search(rows, sub_pattern, result.nodes, budget);
      found = search.run(search_order(host));
    }
    return memo.emplace(key, std::move(found)).first->second;
  };

  std::size_t pc = pattern_components.size(), hcount = host_components.size();
  std::vector<std::size_t> choice(pc, 0);
  try {
    while (true) {
      std::vector<std::vector<int>> by_host(hcount);
      for (std::size_t c = 0; c < pc; ++c) by_host[choice[c]].push_back(static_cast<int>(c));
      bool all = true;
      for (std::size_t h = 0; h < hcount && all; ++h) {
        if (!by_host[h].empty() && !solve(h, by_host[h])) all = false;
      }
      if (all) {
        MinorModel model{pattern, std::vector<std::vector<int>>(p)};
        for (std::size_t h = 0; h < hcount; ++h) {
          if (by_host[h].empty()) continue;
          const auto& parts = *solve(h, by_host[h]);
          std::vector<int> pattern_vertices;
          for (int c : by_host[h]) {
            pattern_vertices.insert(pattern_vertices.end(), pattern_components[c].begin(),
                                    pattern_components[c].end());
          }
          for (std::size_t i = 0; i < pattern_vertices.size(); ++i) {
            for_each_bit(parts[i], [&](int local) {
              model.branch_sets[pattern_vertices[i]].push_back(host_components[h][local]);
            });
          }
        }
        for (auto& set : model.branch_sets) std::sort(set.begin(), set.end());
        result.status = SearchStatus::Found;
        result.model = std::move(model);
        return result;
      }
      std::size_t c = 0;
      while (c < pc && ++choice[c] == hcount) choice[c++] = 0;
      if (c == pc) break;
    }
  } catch (const BudgetExhausted&) {
    result.status = SearchStatus::BudgetExceeded;
    return result;
  }
  result.status = SearchStatus::NotFound;
  return result;
}

MinorSearchResult find_minor(const Graph& g, const PatternSpec& spec, long long budget) {
  return find_minor(g, spec.graph(), budget);
}

std::optional<std::vector<int>> find_subgraph(const Graph& g, const Graph& pattern) {
  if (!g.fits_mask()) throw SizeLimitError("find_subgraph: host order above 64");
  return embed(pattern, g.rows(), g.order());
}

std::optional<std::vector<int>> find_subgraph(const Graph& g, const PatternSpec& spec) {
  return find_subgraph(g, spec.graph());
}

std::optional<MinorModel> model_from_parts(const Graph& g, const std::vector<std::vector<int>>& parts,
                                           const Graph& pattern) {
  int q = static_cast<int>(parts.size());
  if (q < pattern.order() || q > kMaskVertices) return std::nullopt;
  std::vector<int> owner(g.order(), -1);
  for (int i = 0; i < q; ++i) {
    for (int v : parts[i]) {
      if (v < 0 || v >= g.order() || owner[v] != -1) return std::nullopt;
      owner[v] = i;
    }
    if (parts[i].empty() || !is_connected_set(g, parts[i])) return std::nullopt;
  }
  std::vector<Mask> quotient(q, 0);
  for (auto [u, v] : g.edges()) {
    if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v]) {
      quotient[owner[u]] |= bit(owner[v]);
      quotient[owner[v]] |= bit(owner[u]);
    }
  }
  auto map = embed(pattern, quotient, q);
  if (!map) return std::nullopt;
  MinorModel model{pattern, {}};
  for (int v = 0; v < pattern.order(); ++v) {
    auto set = parts[(*map)[v]];
    std::sort(set.begin(), set.end());
    model.branch_sets.push_back(std::move(set));
  }
  return model;
}

}  // namespace minorcolor
