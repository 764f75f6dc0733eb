#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "minorcolor/canon.hpp"
#include "minorcolor/invariants.hpp"
#include "minorcolor/io.hpp"
#include "minorcolor/named.hpp"
#include "minorcolor/structure.hpp"
#include "oracles.hpp"

using namespace minorcolor;

namespace {

// Smallest vertex cut by trying subsets in increasing size (n - 1 for cliques).
int brute_connectivity(const Graph& g) {
  int n = g.order();
  for (int size = 0; size < n - 1; ++size) {
    for (Mask cut = 0; cut < bit(n); ++cut) {
      if (popcount(cut) != size) continue;
      auto rest = mask_to_vector(low_bits(n) & ~cut);
      if (!is_connected(induced(g, rest))) return size;
    }
  }
  return n - 1;
}

}  // namespace

TEST_CASE("named graphs have the closed-form order and size") {
  struct Row {
    const char* name;
    int n, e, alpha, omega, chi;
  };
  for (const Row& r : {Row{"K_{2,2,2,2,2}", 10, 40, 2, 5, 5}, Row{"K_{2,2,2,3,3}", 12, 57, 3, 5, 5},
                       Row{"K_{1,2,2,2,2,2}", 11, 50, 2, 6, 6}, Row{"K_{2,3,3}", 8, 21, 3, 3, 3},
                       Row{"C8bar", 8, 20, 2, 4, 4}, Row{"K7", 7, 21, 1, 7, 7}, Row{"K8-", 8, 27, 2, 7, 7},
                       Row{"K8=", 8, 26, 2, 6, 6}}) {
    CAPTURE(r.name);
    Graph g = build_named(r.name);
    CHECK(g.check_invariants());
    CHECK(g.order() == r.n);
    CHECK(g.size() == r.e);
    CHECK(independence_number(g) == r.alpha);
    CHECK(clique_number(g) == r.omega);
    CHECK(chromatic_number(g).chromatic == r.chi);
  }
}

TEST_CASE("named constructors match the pinned fixture orderings") {
  recover_J();
  std::ifstream in(std::string(MINORCOLOR_FIXTURES) + "/named.txt");
  REQUIRE(in);
  std::string name, code;
  int rows = 0;
  while (in >> name >> code) {
    CAPTURE(name);
    CHECK(to_graph6(build_named(name)) == code);
    ++rows;
  }
  CHECK(rows == 14);
}

TEST_CASE("K_p^= variants") {
  Graph independent = clique_equal(8);
  CHECK(!independent.has_edge(4, 5));
  CHECK(!independent.has_edge(6, 7));
  Graph adjacent = clique_equal(8, true);
  CHECK(!adjacent.has_edge(5, 7));
  CHECK(!adjacent.has_edge(6, 7));
  CHECK(adjacent.size() == 26);
}

TEST_CASE("independence and clique numbers") {
  Graph c5 = cycle_graph(5);
  CHECK(independence_number(c5) == 2);
  CHECK(clique_number(c5) == 2);
  CHECK(chromatic_number(c5).chromatic == 3);
  CHECK(chromatic_number(complete_graph(7)).chromatic == 7);
  CHECK(independence_number(recover_J()) == 2);
  CHECK_THROWS_AS(independence_number(empty_graph(41)), SizeLimitError);
  CHECK_THROWS_AS(chromatic_number(empty_graph(21)), SizeLimitError);
}

TEST_CASE("exact invariants agree with brute force") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = oracle::random_graph(n, 0.15 + 0.7 * (i % 5) / 4.0, rng);
    int alpha = independence_number(g);
    auto chi = chromatic_number(g);
    CHECK(alpha == oracle::brute_independence(g));
    CHECK(clique_number(g) == oracle::brute_independence(complement(g)));
    CHECK(chi.chromatic == oracle::brute_chromatic(g));
    CHECK(is_proper_coloring(g, chi.coloring, chi.chromatic));
    CHECK(alpha * chi.chromatic >= n);
    CHECK(is_independent(g, maximum_independent_set(g)));
    CHECK(is_clique(g, maximum_clique(g)));
    auto three = k_coloring(g, 3);
    CHECK(three.has_value() == oracle::brute_colorable(g, 3));
    if (three) CHECK(is_proper_coloring(g, *three, 3));
  }
}

TEST_CASE("vertex connectivity agrees with brute force") {
  CHECK(vertex_connectivity(complete_graph(7)) == 6);
  CHECK(vertex_connectivity(petersen_graph()) == 3);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 120; ++i) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(n, 0.3 + 0.2 * (i % 4), rng);
    CHECK(vertex_connectivity(g) == brute_connectivity(g));
  }
}

TEST_CASE("contraction examples") {
  Graph p3 = path_graph(3);
  std::vector<int> all{0, 1, 2};
  CHECK(contract(p3, all).graph.order() == 1);

  Graph c5 = cycle_graph(5);
  std::vector<int> edge{0, 1};
  auto c = contract(c5, edge);
  CHECK(is_isomorphic(c.graph, cycle_graph(4)));
  CHECK(c.merged == 3);
  CHECK(c.graph.label(c.merged) == "v0+v1");

  Graph k222 = complete_multipartite({2, 2, 2});
  std::vector<int> part{0, 1};
  CHECK_THROWS_AS(contract(k222, part), PreconditionError);
  std::vector<int> k222_edge{0, 2};
  auto merged = contract(k222, k222_edge);
  CHECK(merged.graph.order() == 5);
  CHECK(merged.graph.size() == 9);

  std::vector<int> none;
  CHECK_THROWS_AS(contract(c5, none), PreconditionError);
}

TEST_CASE("contraction bookkeeping on random connected sets") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    int n = 3 + static_cast<int>(rng() % 10);
    Graph g = oracle::random_graph(n, 0.5, rng);
    std::vector<int> set{static_cast<int>(rng() % n)};
    for (int step = 0; step < 3; ++step) {
      auto nb = g.neighbors(set[rng() % set.size()]);
      for (int v : nb) {
        if (std::find(set.begin(), set.end(), v) == set.end()) {
          set.push_back(v);
          break;
        }
      }
    }
    auto c = contract(g, set);
    CHECK(c.graph.check_invariants());
    CHECK(c.graph.order() + static_cast<int>(set.size()) - 1 == n);
    std::vector<bool> in(n, false);
    for (int v : set) in[v] = true;
    std::vector<int> outside;
    for (int v = 0; v < n; ++v) {
      if (!in[v]) outside.push_back(v);
      CHECK(c.image[v] == (in[v] ? c.merged : c.image[v]));
    }
    for (int v : outside) {
      bool touches = false;
      for (int w : set) touches = touches || g.has_edge(v, w);
      CHECK(c.graph.has_edge(c.image[v], c.merged) == touches);
    }
  }
}

TEST_CASE("complements and joins") {
  Graph c8bar = complement(cycle_graph(8));
  CHECK(min_degree(c8bar) == 5);
  Graph k2bar_c6bar = join(empty_graph(2), complement(cycle_graph(6)));
  CHECK(k2bar_c6bar.order() == 8);
  CHECK(min_degree(k2bar_c6bar) == 5);
  Graph u = disjoint_union(complete_graph(3), cycle_graph(4));
  CHECK(u.size() == 7);
  CHECK(connected_components(u).size() == 2);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 12), 0.4, rng);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).size() + g.size() == g.order() * (g.order() - 1) / 2);
  }
}

TEST_CASE("mutations keep the graph simple and symmetric") {
  Graph g(70);
  g.add_edge(0, 69);
  g.add_edge(64, 3);
  CHECK(g.has_edge(69, 0));
  CHECK(g.has_edge(3, 64));
  CHECK(g.size() == 2);
  CHECK_THROWS_AS(g.add_edge(5, 5), PreconditionError);
  CHECK_THROWS_AS(g.add_edge(0, 70), std::out_of_range);
  g.remove_edge(69, 0);
  CHECK(g.size() == 1);
  CHECK(g.check_invariants());
}
