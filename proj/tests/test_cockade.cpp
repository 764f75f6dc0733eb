#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "minorcolor/canon.hpp"
#include "minorcolor/cockade.hpp"
#include "minorcolor/invariants.hpp"
#include "minorcolor/minor.hpp"
#include "minorcolor/named.hpp"
#include <functional>
#include "oracles.hpp"

using namespace minorcolor;

namespace {

PatternSpec pattern_for(int p, Flavor flavor) {
  switch (flavor) {
    case Flavor::Clique: return PatternSpec::clique(p);
    case Flavor::CliqueMinus: return PatternSpec::clique_minus(p);
    case Flavor::CliqueEqual: return PatternSpec::clique_equal(p);
  }
  return PatternSpec::clique(p);
}

std::vector<int> range(int from, int to) {
  std::vector<int> r;
  for (int v = from; v < to; ++v) r.push_back(v);
  return r;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace

TEST_CASE("threshold values") {
  CHECK(threshold(7, Flavor::Clique, 9) == 31);
  CHECK(threshold(8, Flavor::Clique, 10) == 40);
  CHECK(threshold(9, Flavor::Clique, 11) == 50);
  CHECK(build_named("K_{2,2,2,2,2}").size() == 40);
  CHECK(build_named("K_{1,2,2,2,2,2}").size() == 50);
  for (int n = 9; n <= 30; ++n) {
    CHECK(threshold(8, Flavor::Clique, n) == 6 * n - 20);
    CHECK(threshold(9, Flavor::Clique, n) == 7 * n - 27);
    CHECK(threshold(8, Flavor::CliqueMinus, n) == (11 * n - 35 + 1) / 2);
    CHECK(threshold(8, Flavor::CliqueEqual, n) == 5 * n - 14);
  }
  for (int p = 5; p <= 8; ++p) {
    for (int n = p; n <= 20; ++n) {
      long long twice = (2LL * p - 5) * n - (p - 3) * (p - 1);
      CHECK(threshold(p, Flavor::CliqueMinus, n) == (twice + 1) / 2);
    }
  }
  CHECK_THROWS_AS(threshold(10, Flavor::Clique, 12), ExtremalRangeError);
  CHECK_THROWS_AS(threshold(9, Flavor::CliqueMinus, 12), ExtremalRangeError);
  CHECK_THROWS_AS(threshold(4, Flavor::CliqueEqual, 12), ExtremalRangeError);
  CHECK_THROWS_AS(threshold(8, Flavor::Clique, 7), PreconditionError);
}

TEST_CASE("build_cockade examples") {
  Graph k22222 = build_named("K_{2,2,2,2,2}");
  auto leaf = CockadeSpec::make_leaf(k22222);
  CHECK(build_cockade(leaf) == k22222);

  auto clique = find_subgraph(k22222, PatternSpec::clique(5));
  REQUIRE(clique);
  auto pair = CockadeSpec::make_sum(5, leaf, leaf, *clique, *clique);
  Graph g = build_cockade(pair);
  CHECK(g.order() == 15);
  CHECK(g.size() == 70);
  CHECK(g.size() == threshold(8, Flavor::Clique, 15));

  Graph k7 = complete_graph(7);
  auto two = CockadeSpec::make_sum(4, CockadeSpec::make_leaf(k7), CockadeSpec::make_leaf(k7), range(0, 4), range(0, 4));
  auto three = CockadeSpec::make_sum(4, two, CockadeSpec::make_leaf(k7), range(3, 7), range(0, 4));
  Graph h = build_cockade(three);
  CHECK(h.order() == 13);
  CHECK(h.size() == 51);
  CHECK(three.leaf_count() == 3);
  CHECK(three.sum_count() == 2);

  CHECK_THROWS_AS(build_cockade(CockadeSpec::make_sum(2, leaf, leaf, {0, 1}, {0, 1})), PreconditionError);
}

TEST_CASE("build_cockade size formula on random specs") {
  std::mt19937_64 rng(8);
  for (const char* name : {"K22222/5", "K122222/6", "K7/4", "K2222+K6/4", "K12222+K7/5"}) {
    auto family = family_by_name(name);
    for (int leaves = 1; leaves <= 4; ++leaves) {
      auto spec = random_cockade(family, leaves, rng);
      Graph g = build_cockade(spec);
      CHECK(spec.leaf_count() == leaves);
      int k = family.k;
      long long clique_edges = static_cast<long long>(k) * (k - 1) / 2;
      // Every leaf is H1 or H2; sum of leaf orders and sizes minus the glued cliques.
      int orders = 0;
      long long sizes = 0;
      std::function<void(const CockadeSpec&)> walk = [&](const CockadeSpec& s) {
        if (s.leaf) {
          orders += s.leaf->order();
          sizes += s.leaf->size();
          return;
        }
        walk(*s.left);
        walk(*s.right);
      };
      walk(spec);
      CHECK(g.order() == orders - (leaves - 1) * k);
      CHECK(g.size() == sizes - (leaves - 1) * clique_edges);
    }
  }
}

TEST_CASE("recognize_cockade") {
  auto family = family_by_name("K22222/5");
  Graph k22222 = build_named("K_{2,2,2,2,2}");
  auto single = recognize_cockade(k22222, family);
  REQUIRE(single);
  CHECK(single->spec.leaf_count() == 1);

  auto clique = find_subgraph(k22222, PatternSpec::clique(5));
  REQUIRE(clique);
  auto leaf = CockadeSpec::make_leaf(k22222);
  Graph pair = build_cockade(CockadeSpec::make_sum(5, leaf, leaf, *clique, *clique));
  auto two = recognize_cockade(pair, family);
  REQUIRE(two);
  CHECK(two->spec.leaf_count() == 2);
  CHECK(is_isomorphic(build_cockade(two->spec), pair));

  CHECK(!recognize_cockade(complete_graph(8), family_by_name("K7/4")));
  CHECK(!recognize_cockade(petersen_graph(), family));
}

TEST_CASE("recognize inverts build on random specs") {
  std::mt19937_64 rng(19);
  for (const char* name : {"K22222/5", "K122222/6", "K7/4", "K2222+K6/4", "K12222+K7/5"}) {
    auto family = family_by_name(name);
    for (int i = 0; i < 6; ++i) {
      auto spec = random_cockade(family, 1 + static_cast<int>(rng() % 3), rng);
      Graph g = build_cockade(spec);
      auto perm = range(0, g.order());
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph shuffled = relabel(g, perm);
      auto rec = recognize_cockade(shuffled, family);
      REQUIRE(rec);
      Graph rebuilt = build_cockade(rec->spec);
      CHECK(is_isomorphic(rebuilt, shuffled, 32));
      REQUIRE(rec->vertex_map.size() == static_cast<std::size_t>(rebuilt.order()));
      for (auto [u, v] : rebuilt.edges()) CHECK(shuffled.has_edge(rec->vertex_map[u], rec->vertex_map[v]));
      auto colors = color_cockade(*rec, shuffled.order());
      CHECK(is_proper_coloring(shuffled, colors, cockade_chromatic(family)));
    }
  }
}

TEST_CASE("cockade chromatic numbers") {
  CHECK(cockade_chromatic(family_by_name("K22222/5")) == 5);
  CHECK(cockade_chromatic(family_by_name("K122222/6")) == 6);
  CHECK(stated_cockade_chromatic("K22222/5") == 5);
  CHECK(stated_cockade_chromatic("K122222/6") == 6);
  // The quoted bound for K7-cockades is below omega(K7) = 7.
  CHECK(cockade_chromatic(family_by_name("K7/4")) == 7);
  Graph k7 = complete_graph(7);
  auto two = CockadeSpec::make_sum(4, CockadeSpec::make_leaf(k7), CockadeSpec::make_leaf(k7), range(0, 4), range(0, 4));
  Graph h = build_cockade(CockadeSpec::make_sum(4, two, CockadeSpec::make_leaf(k7), range(3, 7), range(0, 4)));
  CHECK(oracle::brute_chromatic(h) == 7);
}

TEST_CASE("threshold tightness and no-minor certification") {
  std::mt19937_64 rng(23);
  struct Row {
    const char* family;
    int p;
    Flavor flavor;
  };
  for (const auto& row : {Row{"K22222/5", 8, Flavor::Clique}, Row{"K122222/6", 9, Flavor::Clique},
                          Row{"K7/4", 8, Flavor::CliqueEqual}}) {
    auto family = family_by_name(row.family);
    for (int leaves = 1; leaves <= 2; ++leaves) {
      Graph g = build_cockade(random_cockade(family, leaves, rng));
      if (g.order() < row.p) continue;
      long long need = threshold(row.p, row.flavor, g.order());
      CHECK(g.size() >= need - 1);
      CHECK(g.size() <= need);
      if (g.order() <= 16) {
        auto r = find_minor(g, pattern_for(row.p, row.flavor), 50'000'000);
        INFO(row.family << " on " << g.order() << " vertices");
        CHECK(r.status == SearchStatus::NotFound);
      }
    }
  }
}

TEST_CASE("extremal verdicts") {
  auto k22222 = extremal_verdict(build_named("K_{2,2,2,2,2}"), 8, Flavor::Clique);
  CHECK(k22222.kind == ExtremalVerdict::Kind::CockadeMember);
  CHECK(k22222.family == "K22222/5");

  auto k22233 = extremal_verdict(build_named("K_{2,2,2,3,3}"), 9, Flavor::Clique);
  CHECK(k22233.kind == ExtremalVerdict::Kind::Exceptional);
  CHECK(build_named("K_{2,2,2,3,3}").size() == threshold(9, Flavor::Clique, 12));

  CHECK(extremal_verdict(petersen_graph(), 6, Flavor::Clique).kind == ExtremalVerdict::Kind::BelowThreshold);
  CHECK(extremal_verdict(complete_graph(9), 8, Flavor::Clique).kind == ExtremalVerdict::Kind::MinorForced);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    int n = 8 + static_cast<int>(rng() % 5);
    Graph g = oracle::random_graph_with_edges(n, static_cast<int>(threshold(8, Flavor::Clique, n)), rng);
    auto v = extremal_verdict(g, 8, Flavor::Clique);
    if (v.kind == ExtremalVerdict::Kind::MinorForced) {
      CHECK(find_minor(g, PatternSpec::clique(8)).status == SearchStatus::Found);
    }
    CHECK(v.kind != ExtremalVerdict::Kind::BelowThreshold);
  }
}
