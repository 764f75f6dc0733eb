#ifndef MINORCOLOR_STRUCTURE_HPP
#define MINORCOLOR_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "minorcolor/graph.hpp"
#include "minorcolor/minor.hpp"

namespace minorcolor {

/// K_{t-2} u K_1 in a graph H on 2t-5 vertices with alpha(H) = 2, t in {7,8,9}.
/// Routes, in order: a (t-2)-clique; a (t-3)-clique plus a contracted induced
/// 3-path; the split of H \ K into two cliques; the clique H \ N[y] at a
/// minimum-degree vertex y plus two disjoint induced 3-paths in N[y]
/// (optionally with an edge dominating H \ N[y]). A dead end falls back to
/// find_minor and bumps `k_minus2_fallbacks()`.
MinorModel k_minus2_union_k1(const Graph& h, int t, std::string* route = nullptr);
long long k_minus2_fallbacks();

/// Pattern K6^- u K1 (missing edge 4-5, isolated vertex 6).
PatternSpec k6minus_union_k1();

struct Alpha2Witness {
  enum class Kind { MinorFound, K5UK5, IsomorphicTo };
  Kind kind = Kind::MinorFound;
  std::optional<MinorModel> model;    // MinorFound: K6^- u K1
  std::vector<int> first, second;     // K5UK5: the two disjoint 5-cliques
  std::string named;                  // IsomorphicTo
  std::vector<int> isomorphism;       // IsomorphicTo: named vertex -> vertex of G
  std::string route;
};

std::string witness_kind_name(Alpha2Witness::Kind kind);

/// Trichotomy for 10-vertex graphs with alpha = 2. A vertex x of minimum
/// degree d: d <= 3 makes G \ N[x] a clique on >= 6 vertices; d = 4 gives
/// two 5-cliques or a K6 from G \ N[x] plus a contracted {x,y,z}; d >= 5 is
/// either a minor or the exceptional graph J.
Alpha2Witness classify_alpha2_10(const Graph& g);
/// Re-checks the witness against g without searching.
Verdict verify_witness(const Graph& g, const Alpha2Witness& witness);

/// The unique 10-vertex graph with alpha = 2, min degree >= 5, max degree
/// <= 8, edge-maximal without a K6^- u K1 minor and with a K6 minor, found by
/// exhaustive enumeration on first use and registered under the name "J".
/// Returned in canonical form with vertices labeled u1..u5, v1..v5 by
/// canonical position.
const Graph& recover_J();

/// K8^- from two distinct K6 subgraphs of a 7-connected graph. Branch sets
/// 0..7 with the missing pair 6-7.
MinorModel two_k6_to_k8minus(const Graph& g, const std::vector<int>& h1, const std::vector<int>& h2);

struct DiracVertex {
  int v = -1;
  int degree = 0;
  int alpha = 0;
  bool ok = true;  // alpha(N(v)) <= d(v) - k + 2
};

struct DiracReport {
  std::vector<DiracVertex> vertices;
  /// A minimal separating set that is a clique (empty when g is disconnected).
  std::optional<std::vector<int>> clique_separator;
  bool passes() const;
};

/// Necessary conditions for k-contraction-criticality; a failing graph is
/// not k-contraction-critical.
DiracReport dirac_checks(const Graph& g, int k);

/// Properties listed for the graphs C8bar, C4bar+C4bar, K3bar+C5,
/// K2bar+C6bar, K_{2,3,3} and J.
struct MaximalGraphCheck {
  std::string name;
  int order = 0;
  int min_degree = 0;
  int max_degree = 0;
  bool has_k6minus_k1 = false;
  bool edge_maximal = false;
  bool has_k6 = false;
};
std::vector<std::string> maximal_graph_names();
MaximalGraphCheck maximal_graph_check(const std::string& name, const Graph& g);

}  // namespace minorcolor

#endif  // MINORCOLOR_STRUCTURE_HPP
