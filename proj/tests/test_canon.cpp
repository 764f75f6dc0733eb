#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "minorcolor/canon.hpp"
#include "minorcolor/named.hpp"
#include "minorcolor/separators.hpp"
#include "oracles.hpp"

using namespace minorcolor;

namespace {

Graph permuted(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return induced(g, perm);
}

// S is a minimal separator iff G - S has at least two full components.
bool brute_minimal_separator(const Graph& g, Mask s) {
  int n = g.order();
  Mask left = low_bits(n) & ~s;
  int full = 0;
  while (left) {
    Mask comp = bit(lowest(left)), frontier = comp;
    while (frontier) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.row(v); });
      next &= left & ~comp;
      comp |= next;
      frontier = next;
    }
    left &= ~comp;
    Mask touched = 0;
    for_each_bit(comp, [&](int v) { touched |= g.row(v); });
    if ((touched & s) == s) ++full;
  }
  return full >= 2;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = oracle::random_graph(n, 0.2 + 0.6 * (i % 4) / 3.0, rng);
    Graph h = permuted(g, rng);
    CHECK(canonical_code(g) == canonical_code(h));
    CHECK(canonical_form(g) == canonical_form(h));
    auto lab = canonical_labeling(g);
    CHECK(code_under(g, lab.order) == lab.code);
  }
}

TEST_CASE("isomorphism agrees with the brute-force oracle") {
  std::mt19937_64 rng(4);
  int same = 0, different = 0;
  for (int i = 0; i < 400; ++i) {
    int n = 2 + static_cast<int>(rng() % 6);
    int m = static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
    Graph a = oracle::random_graph_with_edges(n, m, rng);
    Graph b = oracle::random_graph_with_edges(n, m, rng);
    bool iso = oracle::brute_isomorphic(a, b);
    CHECK(is_isomorphic(a, b) == iso);
    CHECK((canonical_code(a) == canonical_code(b)) == iso);
    (iso ? same : different)++;
  }
  CHECK(same > 20);
  CHECK(different > 20);
}

TEST_CASE("canonical form is isomorphic to the input") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 7), 0.5, rng);
    auto brute = oracle::brute_canonical_code(g);
    auto ours = oracle::brute_canonical_code(canonical_form(g));
    CHECK(brute == ours);
  }
}

TEST_CASE("highly symmetric graphs") {
  std::mt19937_64 rng(1);
  for (const char* name : {"Petersen", "K_{2,2,2,2,2}", "C8bar", "C4bar+C4bar", "K8="}) {
    CAPTURE(name);
    Graph g = build_named(name);
    CHECK(is_isomorphic(g, permuted(g, rng)));
  }
  CHECK(!is_isomorphic(build_named("C8bar"), build_named("C4bar+C4bar")));
  CHECK(!is_isomorphic(clique_equal(8), clique_equal(8, true)));
  CHECK_THROWS_AS(is_isomorphic(empty_graph(17), empty_graph(17)), SizeLimitError);
}

TEST_CASE("colored canonical labeling lists color classes in order") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = oracle::random_graph(n, 0.5, rng);
    std::vector<int> colors(n);
    for (int& c : colors) c = static_cast<int>(rng() % 3);
    auto lab = canonical_labeling(g, colors);
    for (int p = 1; p < n; ++p) CHECK(colors[lab.order[p - 1]] <= colors[lab.order[p]]);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> moved_colors(n);
    for (int v = 0; v < n; ++v) moved_colors[v] = colors[perm[v]];
    CHECK(canonical_labeling(induced(g, perm), moved_colors).code == lab.code);
  }
}

TEST_CASE("minimal separators agree with brute force") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 80; ++i) {
    int n = 3 + static_cast<int>(rng() % 7);
    Graph g = oracle::random_graph(n, 0.45, rng);
    auto found = minimal_separators(g);
    REQUIRE(found.complete);
    std::set<Mask> ours(found.separators.begin(), found.separators.end());
    CHECK(ours.size() == found.separators.size());
    std::set<Mask> brute;
    for (Mask s = 1; s < bit(n); ++s) {
      if (brute_minimal_separator(g, s)) brute.insert(s);
    }
    CHECK(ours == brute);
  }
}

TEST_CASE("clique minimal separators") {
  Graph g(7);  // two K5's sharing the triangle 2,3,4
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
  }
  for (int u : {2, 3, 4, 5, 6}) {
    for (int v : {2, 3, 4, 5, 6}) {
      if (u < v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
  }
  auto seps = clique_minimal_separators(g);
  REQUIRE(seps.size() == 1);
  CHECK(seps[0] == (bit(2) | bit(3) | bit(4)));
  CHECK(full_components(g, seps[0]).size() == 2);
  CHECK(clique_minimal_separators(petersen_graph()).empty());
}
