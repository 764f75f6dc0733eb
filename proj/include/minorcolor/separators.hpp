#ifndef MINORCOLOR_SEPARATORS_HPP
#define MINORCOLOR_SEPARATORS_HPP

#include <optional>
#include <vector>

#include "minorcolor/graph.hpp"

namespace minorcolor {

struct SeparatorEnumeration {
  std::vector<Mask> separators;  // in discovery order
  bool complete = true;          // false when `limit` cut the enumeration short
};

/// All minimal separators of g (Berry, Bordat and Cogis: start from the
/// neighborhoods of the components of G - N[v], then close under
/// S -> N(C) for the components C of G - (S u N(x)), x in S).
SeparatorEnumeration minimal_separators(const Graph& g, std::size_t limit = 200000);

/// Minimal separators that are cliques, optionally only those of a given size.
std::vector<Mask> clique_minimal_separators(const Graph& g, int size = -1);

/// Full components of G - S (components C with N(C) = S).
std::vector<Mask> full_components(const Graph& g, Mask separator);

/// Components of G - S.
std::vector<Mask> components_after_removal(const Graph& g, Mask separator);

}  // namespace minorcolor

#endif  // MINORCOLOR_SEPARATORS_HPP
