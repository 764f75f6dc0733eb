#ifndef MINORCOLOR_CANON_HPP
#define MINORCOLOR_CANON_HPP

#include <cstdint>
#include <vector>

#include "minorcolor/graph.hpp"

namespace minorcolor {

/// Upper-triangle adjacency bits in column order (x(0,1), x(0,2), x(1,2), ...)
/// packed into 64-bit words, preceded by the order. Comparable with `<`.
using CanonicalCode = std::vector<std::uint64_t>;

struct CanonicalLabeling {
  /// position -> vertex: `order[i]` is the vertex placed at position i.
  std::vector<int> order;
  CanonicalCode code;
};

/// Lexicographically least code over an individualization-refinement search
/// tree; twin vertices and discovered automorphisms prune equivalent branches.
CanonicalLabeling canonical_labeling(const Graph& g);
/// Same, restricted to orderings listing color classes in ascending color.
/// Codes are comparable only between colorings with equal class sizes.
CanonicalLabeling canonical_labeling(const Graph& g, const std::vector<int>& colors);
CanonicalCode canonical_code(const Graph& g);
/// g relabeled into canonical order.
Graph canonical_form(const Graph& g);

/// Exact isomorphism test. Orders above `order_limit` are refused.
bool is_isomorphic(const Graph& a, const Graph& b, int order_limit = kLimits.isomorphism_order);

/// Code of g under the given position -> vertex order.
CanonicalCode code_under(const Graph& g, const std::vector<int>& order);

}  // namespace minorcolor

#endif  // MINORCOLOR_CANON_HPP
