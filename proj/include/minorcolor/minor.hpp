#ifndef MINORCOLOR_MINOR_HPP
#define MINORCOLOR_MINOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "minorcolor/graph.hpp"

namespace minorcolor {

/// Branch sets of the host, one per pattern vertex, realizing G > pattern.
struct MinorModel {
  Graph pattern;
  std::vector<std::vector<int>> branch_sets;
};

enum class PatternKind { Clique, CliqueMinus, CliqueEqual, UnionK1, Explicit };

struct PatternSpec {
  PatternKind kind = PatternKind::Clique;
  int p = 0;
  bool adjacent_missing = false;  // K_p^= variant
  Graph base;                     // UnionK1 / Explicit

  static PatternSpec clique(int p);
  static PatternSpec clique_minus(int p);
  static PatternSpec clique_equal(int p, bool adjacent_missing = false);
  static PatternSpec union_k1(const Graph& h);
  static PatternSpec explicit_graph(const Graph& h);

  Graph graph() const;
  std::string name() const;
};

/// Parses "K7", "K8-", "K8=", "K8=adj", "K6-+K1" or "K6-|K1" (union with K1) or any named graph.
PatternSpec parse_pattern(const std::string& text);

struct Verdict {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Checks disjointness, connectivity and pattern-edge realization; no search.
Verdict verify_model(const Graph& g, const MinorModel& model);

enum class SearchStatus { Found, NotFound, BudgetExceeded };

struct MinorSearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<MinorModel> model;
  long long nodes = 0;
};

/// Node budget from MINORCOLOR_BUDGET, else kLimits.minor_nodes.
long long default_minor_budget();

/// Exact branch-set search. Within each host component the search looks for a
/// partition of all its vertices into exactly q connected parts whose quotient
/// contains the assigned part of the pattern; any model extends to such a
/// partition by absorbing leftover vertices into adjacent branch sets.
MinorSearchResult find_minor(const Graph& g, const PatternSpec& spec, long long budget = default_minor_budget());
MinorSearchResult find_minor(const Graph& g, const Graph& pattern, long long budget = default_minor_budget());

/// Injective map pattern vertex -> host vertex preserving pattern edges.
std::optional<std::vector<int>> find_subgraph(const Graph& g, const PatternSpec& spec);
std::optional<std::vector<int>> find_subgraph(const Graph& g, const Graph& pattern);

/// Fits `pattern` to the quotient of the given disjoint connected parts, if
/// some bijection parts -> pattern vertices realizes every pattern edge.
std::optional<MinorModel> model_from_parts(const Graph& g, const std::vector<std::vector<int>>& parts,
                                           const Graph& pattern);

}  // namespace minorcolor

#endif  // MINORCOLOR_MINOR_HPP
