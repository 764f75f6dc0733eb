#ifndef MINORCOLOR_INVARIANTS_HPP
#define MINORCOLOR_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "minorcolor/graph.hpp"

namespace minorcolor {

// Exact alpha/omega by branch and bound with a greedy-coloring bound.
// Order limited to kLimits.clique_order.
std::vector<int> maximum_clique(const Graph& g);
std::vector<int> maximum_independent_set(const Graph& g);
int clique_number(const Graph& g);
int independence_number(const Graph& g);

/// Every clique of exactly `size` vertices, in lexicographic order, up to
/// `limit` of them.
std::vector<std::vector<int>> cliques_of_size(const Graph& g, int size, std::size_t limit = 100000);

struct ChromaticResult {
  int chromatic = 0;
  std::vector<int> coloring;  // colors 1..chromatic
};

/// Exact chromatic number with one optimal coloring (order <= kLimits.chromatic_order).
ChromaticResult chromatic_number(const Graph& g);

/// A proper coloring with colors 1..k, or nullopt if none exists.
std::optional<std::vector<int>> k_coloring(const Graph& g, int k);

/// Colors 1..k, 0 marks uncolored; checks every edge between colored vertices.
bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring, int k);

/// Vertex connectivity (n-1 for complete graphs) via unit-capacity max-flow on
/// the vertex-split digraph.
int vertex_connectivity(const Graph& g);

/// Maximum family of vertex-disjoint paths from `sources` to `sinks` avoiding
/// `blocked`. Each path starts in `sources`, ends in `sinks` and has no other
/// vertex in either set. At most `want` paths are returned.
std::vector<std::vector<int>> disjoint_paths(const Graph& g, const std::vector<int>& sources,
                                             const std::vector<int>& sinks, const std::vector<int>& blocked,
                                             int want);

}  // namespace minorcolor

#endif  // MINORCOLOR_INVARIANTS_HPP
