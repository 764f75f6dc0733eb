#ifndef MINORCOLOR_NAMED_HPP
#define MINORCOLOR_NAMED_HPP

#include <optional>
#include <string>
#include <vector>

#include "minorcolor/graph.hpp"

namespace minorcolor {

enum class NamedTag {
  C8bar,          // complement of the 8-cycle 0-1-...-7-0
  C4barJoinC4bar, // two copies of 2K2 (edges 01, 23), joined
  K3barJoinC5,    // 3 independent vertices, then a 5-cycle
  K2barJoinC6bar, // 2 independent vertices, then complement of C6
  K233,
  K22222,
  K122222,
  K22233,
  Kp,
  KpMinus,  // K_p without edge {p-2, p-1}
  KpEqual,  // K_p without {p-4, p-3} and {p-2, p-1}; adjacent variant drops {p-3, p-1} and {p-2, p-1}
  J,
};

struct NamedGraph {
  NamedTag tag;
  int p = 0;
  bool adjacent_missing = false;  // only meaningful for KpEqual
};

/// Concrete graph for a tag. Complete multipartite graphs list their parts
/// consecutively in the order of the name; joins place the left operand
/// first. Requesting J before `recover_J` has registered it throws.
Graph build_named(const NamedGraph& named);

/// Parses names such as "K_{2,2,2,3,3}", "K7", "K8-", "K8=", "K8=adj",
/// "C8bar", "C4bar+C4bar", "K3bar+C5", "K2bar+C6bar", "J", plus the
/// auxiliary "C<n>", "P<n>", "Petersen" and any "K_{a,b,...}".
Graph build_named(const std::string& name);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);
Graph petersen_graph();
Graph clique_minus(int p);
Graph clique_equal(int p, bool adjacent_missing = false);

/// Slot filled by structure::recover_J; safe for concurrent readers.
void register_j(const Graph& j);
std::optional<Graph> registered_j();

}  // namespace minorcolor

#endif  // MINORCOLOR_NAMED_HPP
