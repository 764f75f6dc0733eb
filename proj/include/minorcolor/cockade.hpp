#ifndef MINORCOLOR_COCKADE_HPP
#define MINORCOLOR_COCKADE_HPP

#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorcolor/graph.hpp"

namespace minorcolor {

enum class Flavor { Clique, CliqueMinus, CliqueEqual };

std::string flavor_name(Flavor f);

class ExtremalRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Minimum edge count on n vertices that forces a K_p / K_p^- / K_p^= minor
/// or membership in the exceptional families listed by `exceptional_families`.
///   K_p,   p <= 9:      (p-2)n - C(p-1,2) + 1   (6n-20 at p=8, 7n-27 at p=9)
///   K_p^-, 5 <= p <= 8: ceil((p - 5/2)n - (p-3)(p-1)/2)   (11n-35 halved at p=8)
///   K_p^=, 5 <= p <= 8: (p-3)n - (p-1)(p-4)/2
long long threshold(int p, Flavor flavor, int n);

/// Recursive clique-sum of copies of leaf graphs. A sum node identifies
/// glue_left[i] of the built left child with glue_right[i] of the built right
/// child; both glue sets are k-cliques.
struct CockadeSpec {
  std::optional<Graph> leaf;
  int k = 0;
  std::shared_ptr<const CockadeSpec> left;
  std::shared_ptr<const CockadeSpec> right;
  std::vector<int> glue_left;
  std::vector<int> glue_right;

  static CockadeSpec make_leaf(Graph g);
  static CockadeSpec make_sum(int k, CockadeSpec left, CockadeSpec right, std::vector<int> glue_left,
                              std::vector<int> glue_right);

  int leaf_count() const;
  int sum_count() const;
};

/// Left child's vertices keep their numbers; the right child's non-glue
/// vertices follow in increasing order.
Graph build_cockade(const CockadeSpec& spec);

/// (H1, H2, k). H1 == H2 gives an (H, k)-cockade.
struct CockadeFamily {
  std::string name;
  Graph h1;
  Graph h2;
  int k = 0;
};

/// The families appearing as exceptions at the thresholds above.
std::vector<CockadeFamily> exceptional_families(int p, Flavor flavor);
/// Looks up "K22222/5", "K122222/6", "K12222+K7/5", "K2222+K6/4", "K7/4", ...
CockadeFamily family_by_name(const std::string& name);

struct CockadeRecognition {
  CockadeSpec spec;
  /// built vertex -> vertex of the recognized graph
  std::vector<int> vertex_map;
};

/// Splits along k-clique minimal separators and matches the pieces against
/// the leaves; n <= kLimits.cockade_order.
std::optional<CockadeRecognition> recognize_cockade(const Graph& g, const CockadeFamily& family);

/// Exact max(chi(H1), chi(H2)); clique-sums of graphs never need more colors.
int cockade_chromatic(const CockadeFamily& family);
/// The bound quoted for the family in the source argument, when one is quoted.
std::optional<int> stated_cockade_chromatic(const std::string& family_name);

/// Proper coloring (colors 1..) of a recognized cockade by gluing optimal
/// leaf colorings along the clique-sums, indexed by vertices of the
/// recognized graph.
std::vector<int> color_cockade(const CockadeRecognition& recognition, int order);

/// Random cockade with `leaves` leaves drawn from the family.
CockadeSpec random_cockade(const CockadeFamily& family, int leaves, std::mt19937_64& rng);

struct ExtremalVerdict {
  enum class Kind { MinorForced, CockadeMember, Exceptional, BelowThreshold };
  Kind kind = Kind::BelowThreshold;
  int p = 0;
  Flavor flavor = Flavor::Clique;
  std::string family;
  std::optional<CockadeRecognition> recognition;
};

/// Evaluates the threshold at (n, e) and, when it is met, checks the
/// exceptional families.
ExtremalVerdict extremal_verdict(const Graph& g, int p, Flavor flavor);

}  // namespace minorcolor

#endif  // MINORCOLOR_COCKADE_HPP
