#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "hosts.hpp"
#include "minorcolor/canon.hpp"
#include "minorcolor/enumerate.hpp"
#include "minorcolor/io.hpp"
#include "minorcolor/named.hpp"
#include "minorcolor/structure.hpp"
#include "oracles.hpp"

using namespace minorcolor;

namespace {

Graph fixture_j() {
  std::ifstream in(std::string(MINORCOLOR_FIXTURES) + "/J.g6");
  std::string line;
  std::getline(in, line);
  return from_graph6(line);
}

Graph union_k1(const Graph& clique_part) { return disjoint_union(clique_part, complete_graph(1)); }

}  // namespace

TEST_CASE("K_{t-2} u K1 examples") {
  Graph h = disjoint_union(complete_graph(4), complete_graph(5));
  std::string route;
  auto m = k_minus2_union_k1(h, 7, &route);
  CHECK(verify_model(h, m));
  CHECK(is_isomorphic(m.pattern, union_k1(complete_graph(5))));
  CHECK(route == "clique");

  for (int t : {7, 8, 9}) {
    Graph c = complement(cycle_graph(2 * t - 5));
    REQUIRE(independence_number(c) == 2);
    auto model = k_minus2_union_k1(c, t);
    CHECK(verify_model(c, model));
    CHECK(model.pattern.order() == t - 1);
  }
  CHECK_THROWS_AS(k_minus2_union_k1(complete_graph(9), 7), PreconditionError);
  CHECK_THROWS_AS(k_minus2_union_k1(complement(cycle_graph(9)), 8), PreconditionError);
}

TEST_CASE("K5 u K1 in every 9-vertex graph with alpha 2") {
  EnumerationTask task;
  task.n = 9;
  int classes = 0;
  long long before = k_minus2_fallbacks();
  enumerate(task, [&](const Graph& h) {
    if (independence_number(h) != 2) return true;
    ++classes;
    auto m = k_minus2_union_k1(h, 7);
    CHECK(verify_model(h, m));
    return true;
  });
  // Triangle-free graphs on 9 vertices, less the empty one.
  CHECK(classes == 1897 - 1);
  CHECK(k_minus2_fallbacks() == before);
}

TEST_CASE("K_{t-2} u K1 on sampled alpha-2 graphs") {
  for (int t : {8, 9}) {
    for (const Graph& h : sample_alpha2(2 * t - 5, 10000, 100 + t)) {
      if (independence_number(h) != 2) continue;
      CHECK(verify_model(h, k_minus2_union_k1(h, t)));
    }
  }
}

TEST_CASE("recovered J") {
  const Graph& j = recover_J();
  CHECK(j.order() == 10);
  CHECK(min_degree(j) >= 5);
  CHECK(max_degree(j) <= 8);
  CHECK(independence_number(j) == 2);
  CHECK(oracle::brute_independence(j) == 2);
  CHECK(j == fixture_j());
  CHECK(to_graph6(j) == "IJ]C{~cxG");
  CHECK(&recover_J() == &j);
  CHECK(find_minor(j, PatternSpec::clique(6)).status == SearchStatus::Found);
  CHECK(find_minor(j, k6minus_union_k1()).status == SearchStatus::NotFound);
  CHECK(edge_maximal_without(j, k6minus_union_k1()));
  for (const auto& name : maximal_graph_names()) {
    if (name != "J") CHECK(!is_isomorphic(j, build_named(name)));
  }
  CHECK(build_named("J") == j);
}

TEST_CASE("10-vertex alpha-2 classification examples") {
  Graph two_k5 = disjoint_union(complete_graph(5), complete_graph(5));
  auto w = classify_alpha2_10(two_k5);
  CHECK(w.kind == Alpha2Witness::Kind::K5UK5);
  CHECK(verify_witness(two_k5, w));

  const Graph& j = recover_J();
  auto wj = classify_alpha2_10(j);
  CHECK(wj.kind == Alpha2Witness::Kind::IsomorphicTo);
  CHECK(wj.named == "J");
  CHECK(verify_witness(j, wj));

  // K_{2,3,3} joined to K2, with both 3-parts completed to bring alpha to 2.
  Graph g = join(complete_multipartite({2, 3, 3}), complete_graph(2));
  for (int base : {2, 5}) {
    g.add_edge(base, base + 1);
    g.add_edge(base, base + 2);
    g.add_edge(base + 1, base + 2);
  }
  REQUIRE(independence_number(g) == 2);
  auto wm = classify_alpha2_10(g);
  CHECK(wm.kind == Alpha2Witness::Kind::MinorFound);
  CHECK(verify_witness(g, wm));
  CHECK(oracle::brute_has_minor(g, k6minus_union_k1().graph()));

  CHECK_THROWS_AS(classify_alpha2_10(complete_graph(10)), PreconditionError);
  CHECK_THROWS_AS(classify_alpha2_10(complete_graph(9)), PreconditionError);
}

TEST_CASE("10-vertex alpha-2 witnesses on sampled graphs") {
  const Graph& j = recover_J();
  for (const Graph& g : sample_alpha2(10, 300, 9)) {
    if (independence_number(g) != 2) continue;
    auto w = classify_alpha2_10(g);
    CHECK(verify_witness(g, w));
    if (w.kind == Alpha2Witness::Kind::IsomorphicTo) CHECK(is_isomorphic(g, j));
    auto tampered = w;
    if (w.kind == Alpha2Witness::Kind::K5UK5) {
      tampered.second = tampered.first;
      CHECK(!verify_witness(g, tampered));
    } else if (w.kind == Alpha2Witness::Kind::MinorFound) {
      tampered.model->branch_sets.pop_back();
      CHECK(!verify_witness(g, tampered));
    }
  }
}

TEST_CASE("edge-maximal K6^- u K1-free graphs") {
  for (const auto& name : maximal_graph_names()) {
    Graph g = build_named(name);
    auto c = maximal_graph_check(name, g);
    INFO(name);
    CHECK(c.min_degree >= 5);
    CHECK(c.max_degree <= c.order - 2);
    CHECK(!c.has_k6minus_k1);
    CHECK(c.edge_maximal);
    CHECK((c.order == 8 || c.order == 10));
    if (name == "C8bar" || name == "C4bar+C4bar" || name == "J") CHECK(c.has_k6);
  }
}

TEST_CASE("two K6 subgraphs in a 7-connected graph give K8^-") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 36; ++i) {
    int overlap = i % 6;
    int n = 13 - overlap + static_cast<int>(rng() % (6 + overlap));
    auto host = hosts::two_k6_host(overlap, std::min(n, 18), rng);
    REQUIRE(vertex_connectivity(host.g) >= 7);
    auto m = two_k6_to_k8minus(host.g, host.h1, host.h2);
    CHECK(verify_model(host.g, m));
    CHECK(is_isomorphic(m.pattern, clique_minus(8)));
  }
  Graph k8m = clique_minus(8);
  CHECK_THROWS_AS(two_k6_to_k8minus(k8m, {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 6, 7}), PreconditionError);
  Graph k9 = complete_graph(9);
  CHECK_THROWS_AS(two_k6_to_k8minus(k9, {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}), PreconditionError);
  CHECK(verify_model(k9, two_k6_to_k8minus(k9, {0, 1, 2, 3, 4, 5}, {3, 4, 5, 6, 7, 8})));
}

TEST_CASE("Dirac filter") {
  for (int k = 4; k <= 8; ++k) {
    auto r = dirac_checks(complete_graph(k), k);
    CHECK(r.passes());
    for (const auto& v : r.vertices) {
      CHECK(v.alpha == 1);
      CHECK(v.ok);
    }
  }

  Graph glued(7);
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) glued.add_edge(a, b);
  }
  for (int a : {2, 3, 4, 5, 6}) {
    for (int b : {2, 3, 4, 5, 6}) {
      if (a < b && !glued.has_edge(a, b)) glued.add_edge(a, b);
    }
  }
  auto r = dirac_checks(glued, 5);
  CHECK(!r.passes());
  REQUIRE(r.clique_separator);
  CHECK(*r.clique_separator == std::vector<int>{2, 3, 4});

  auto p = dirac_checks(petersen_graph(), 4);
  CHECK(!p.passes());
  for (const auto& v : p.vertices) {
    CHECK(v.alpha == 3);
    CHECK(!v.ok);
  }
}
