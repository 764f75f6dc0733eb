#ifndef MINORCOLOR_GRAPH_HPP
#define MINORCOLOR_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minorcolor {

/// Bitmask over at most 64 vertices. Every exponential search in the
/// library works on masks; callers check `fits_mask` first.
using Mask = std::uint64_t;
inline constexpr int kMaskVertices = 64;

/// Exact-search budgets. Exceeding one raises `SizeLimitError`, never a
/// silently wrong answer.
struct SearchLimits {
  int clique_order = 40;       // alpha / omega
  int chromatic_order = 20;    // exact chromatic number
  int isomorphism_order = 16;  // canonical forms used for isomorphism tests
  int canonical_order = 64;    // hard ceiling of the canonical labeler
  int exhaustive_enumeration = 11;
  int cockade_order = 60;
  long long minor_nodes = 10'000'000;
};
inline constexpr SearchLimits kLimits{};

class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline Mask bit(int v) { return Mask{1} << v; }
inline Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

template <class F>
inline void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

std::vector<int> mask_to_vector(Mask m);
Mask vector_to_mask(std::span<const int> vs);

/// Simple undirected graph on dense 0-based vertices. Adjacency is stored
/// as packed bit rows, so `has_edge` is O(1) at every order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const;

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  bool fits_mask() const { return n_ <= kMaskVertices; }
  /// Neighborhood of v as a mask; requires `fits_mask()`.
  Mask row(int v) const;
  std::vector<Mask> rows() const;
  Mask all() const;

  /// Provenance label, "v<i>" unless set (contractions record "a+b").
  std::string label(int v) const;
  void set_label(int v, std::string label);
  bool has_labels() const { return !labels_.empty(); }

  /// Symmetric, irreflexive, word padding clear.
  bool check_invariants() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void check_vertex(int v) const;
  const std::uint64_t* row_ptr(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  std::uint64_t* row_ptr(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
};

/// Result of contracting a connected set: `image[v]` is the vertex of
/// `graph` that v maps to. Untouched vertices keep their relative order and
/// the merged vertex is appended last.
struct Contraction {
  Graph graph;
  std::vector<int> image;
  int merged = -1;
};

Contraction contract(const Graph& g, std::span<const int> set);
/// Vertices listed in `vs` become 0..|vs|-1 in that order.
Graph induced(const Graph& g, std::span<const int> vs);
Graph induced(const Graph& g, Mask vs);
Graph remove_vertices(const Graph& g, std::span<const int> vs);
Graph complement(const Graph& g);
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);

int min_degree(const Graph& g);
int max_degree(const Graph& g);
bool is_clique(const Graph& g, std::span<const int> vs);
bool is_independent(const Graph& g, std::span<const int> vs);
bool is_connected(const Graph& g);
bool is_connected_set(const Graph& g, std::span<const int> vs);
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Components of g[allowed] as masks; requires `fits_mask()`.
std::vector<Mask> components_within(const std::vector<Mask>& rows, Mask allowed);
/// Vertices reachable from `from` inside `allowed` (from included).
Mask reach_within(const std::vector<Mask>& rows, Mask from, Mask allowed);

/// Shortest path from `from` to `to` using only vertices in `allowed`
/// (endpoints need not be in `allowed`). Empty when none exists.
std::vector<int> shortest_path(const Graph& g, int from, int to, const std::vector<bool>& allowed);

}  // namespace minorcolor

#endif  // MINORCOLOR_GRAPH_HPP
