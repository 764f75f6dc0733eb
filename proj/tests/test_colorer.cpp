#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "minorcolor/canon.hpp"
#include "minorcolor/colorer.hpp"
#include "minorcolor/invariants.hpp"
#include "minorcolor/named.hpp"
#include "minorcolor/serialize.hpp"
#include "oracles.hpp"

using namespace minorcolor;

TEST_CASE("regimes") {
  CHECK(Regime::kt(7).budget() == 8);
  CHECK(Regime::kt(8).budget() == 10);
  CHECK(Regime::kt(9).budget() == 12);
  CHECK(Regime::k8minus().budget() == 9);
  CHECK(Regime::k8equal().budget() == 8);
  CHECK(Regime::k8minus().name() == "k8-");
  CHECK(Regime::k8equal().name() == "k8=");
  CHECK(all_regimes().size() == 5);
  for (const auto& r : all_regimes()) CHECK(parse_regime(r.name()).name() == r.name());
  CHECK(parse_regime("kt9").name() == "k9");
  CHECK(parse_regime("k8minus").name() == "k8-");
  CHECK(parse_regime("k8equal").name() == "k8=");
  CHECK_THROWS(parse_regime("k6"));
  CHECK_THROWS(parse_regime("k10"));
  CHECK_THROWS(Regime::kt(6));
}

TEST_CASE("color_or_minor examples") {
  Graph k22222 = build_named("K_{2,2,2,2,2}");
  auto c = color_or_minor(k22222, Regime::kt(8));
  REQUIRE(c.kind == Certificate::Kind::Coloring);
  CHECK(verify_certificate(k22222, Regime::kt(8), c));
  CHECK(*std::max_element(c.coloring.begin(), c.coloring.end()) == 5);

  Graph k9 = complete_graph(9);
  auto m = color_or_minor(k9, Regime::kt(7));
  REQUIRE(m.kind == Certificate::Kind::Minor);
  CHECK(verify_certificate(k9, Regime::kt(7), m));
  for (const auto& set : m.model->branch_sets) CHECK(set.size() == 1);

  Graph k22233 = build_named("K_{2,2,2,3,3}");
  auto e = color_or_minor(k22233, Regime::kt(9));
  REQUIRE(e.kind == Certificate::Kind::Coloring);
  CHECK(verify_certificate(k22233, Regime::kt(9), e));
}

TEST_CASE("random G(14, 0.8) cross-checked against exact oracles") {
  std::mt19937_64 rng(140);
  for (int i = 0; i < 12; ++i) {
    Graph g = oracle::random_graph(14, 0.8, rng);
    auto cert = color_or_minor(g, Regime::kt(7));
    CHECK(verify_certificate(g, Regime::kt(7), cert));
    if (cert.kind == Certificate::Kind::Minor) {
      CHECK(verify_model(g, *cert.model));
    } else {
      CHECK(is_proper_coloring(g, cert.coloring, 8));
      CHECK(oracle::brute_colorable(g, 8));
    }
  }
}

TEST_CASE("verify_certificate examples") {
  Graph c5 = cycle_graph(5);
  Certificate ok;
  ok.coloring = {1, 2, 1, 2, 3};
  CHECK(verify_certificate(c5, Regime::kt(7), ok));
  Certificate mono = ok;
  mono.coloring[4] = 1;
  CHECK(!verify_certificate(c5, Regime::kt(7), mono));
  Certificate over = ok;
  over.coloring[4] = 9;
  CHECK(!verify_certificate(c5, Regime::kt(7), over));
  Certificate short_cert = ok;
  short_cert.coloring.pop_back();
  CHECK(!verify_certificate(c5, Regime::kt(7), short_cert));

  Graph petersen = petersen_graph();
  Certificate bogus;
  bogus.kind = Certificate::Kind::Minor;
  bogus.model = MinorModel{complete_graph(7), {{0}, {1}, {2}, {3}, {4}, {5}, {6, 7, 8, 9}}};
  CHECK(!verify_certificate(petersen, Regime::kt(7), bogus));

  Graph k8 = complete_graph(8);
  Certificate wrong_pattern;
  wrong_pattern.kind = Certificate::Kind::Minor;
  wrong_pattern.model = MinorModel{complete_graph(7), {{0}, {1}, {2}, {3}, {4}, {5}, {6}}};
  CHECK(verify_certificate(k8, Regime::kt(7), wrong_pattern));
  CHECK(!verify_certificate(k8, Regime::kt(8), wrong_pattern));
}

TEST_CASE("every certificate verifies") {
  std::mt19937_64 rng(99);
  for (const auto& regime : all_regimes()) {
    for (int i = 0; i < 150; ++i) {
      int n = 4 + static_cast<int>(rng() % 11);
      double p = std::array{0.3, 0.5, 0.8}[i % 3];
      Graph g = oracle::random_graph(n, p, rng);
      auto cert = color_or_minor(g, regime);
      INFO(regime.name() << " " << to_json(cert, regime).dump());
      CHECK(verify_certificate(g, regime, cert));
      CHECK(!cert.trace.empty());
    }
  }
}

TEST_CASE("seeded runs are deterministic") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    Graph g = oracle::random_graph(12, 0.7, rng);
    for (const auto& regime : {Regime::kt(7), Regime::k8equal()}) {
      ColorOptions opts;
      opts.seed = 17 + i;
      auto a = to_json(color_or_minor(g, regime, opts), regime).dump();
      auto b = to_json(color_or_minor(g, regime, opts), regime).dump();
      CHECK(a == b);
      auto plain_a = to_json(color_or_minor(g, regime), regime).dump();
      auto plain_b = to_json(color_or_minor(g, regime), regime).dump();
      CHECK(plain_a == plain_b);
      auto seeded = color_or_minor(g, regime, opts);
      CHECK(verify_certificate(g, regime, seeded));
    }
  }
}

TEST_CASE("peel leaves a core of minimum degree at least the budget") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::random_graph(6 + static_cast<int>(rng() % 14), 0.3 + 0.6 * (i % 4) / 3.0, rng);
    int budget = 3 + static_cast<int>(rng() % 8);
    auto r = peel(g, budget);
    CHECK(r.core.size() + r.removed.size() == static_cast<std::size_t>(g.order()));
    CHECK(std::is_sorted(r.core.begin(), r.core.end()));
    if (!r.core.empty()) CHECK(min_degree(induced(g, r.core)) >= budget);
    // Each removed vertex had degree < budget when it was removed.
    std::vector<bool> gone(g.order(), false);
    for (int v : r.removed) {
      int d = 0;
      for (int u : g.neighbors(v)) d += gone[u] ? 0 : 1;
      CHECK(d < budget);
      gone[v] = true;
    }
  }
  auto k9 = peel(complete_graph(9), 8);
  CHECK(k9.removed.empty());
  auto p = peel(path_graph(5), 2);
  CHECK(p.core.empty());
  CHECK(p.removed.front() == 0);
}

TEST_CASE("kempe_recolor_pass") {
  Graph c5 = cycle_graph(5);
  auto free_color = kempe_recolor_pass(c5, {0, 1, 2, 1, 2}, 0, 3);
  REQUIRE(free_color.kind == RecolorResult::Kind::Improved);
  CHECK(is_proper_coloring(c5, free_color.coloring, 3));

  auto stuck = kempe_recolor_pass(c5, {0, 1, 2, 1, 2}, 0, 2);
  CHECK(stuck.kind == RecolorResult::Kind::Stuck);
  CHECK(!stuck.reason.empty());

  // A wheel over C4 colored 1,2,1,2 around: a single switch frees a color.
  Graph w(5);
  for (int v = 1; v <= 4; ++v) {
    w.add_edge(0, v);
    w.add_edge(v, v % 4 + 1);
  }
  auto switched = kempe_recolor_pass(w, {0, 1, 2, 3, 2}, 0, 3);
  REQUIRE(switched.kind == RecolorResult::Kind::Improved);
  CHECK(is_proper_coloring(w, switched.coloring, 3));

  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    int n = 6 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(n, 0.55, rng);
    int x = static_cast<int>(rng() % n);
    int budget = 3 + static_cast<int>(rng() % 4);
    std::vector<int> others;
    for (int v = 0; v < n; ++v) {
      if (v != x) others.push_back(v);
    }
    auto rest = k_coloring(induced(g, others), budget);
    if (!rest) continue;
    std::vector<int> partial(n, 0);
    for (std::size_t j = 0; j < others.size(); ++j) partial[others[j]] = (*rest)[j];
    auto r = kempe_recolor_pass(g, partial, x, budget);
    if (r.kind == RecolorResult::Kind::Improved) {
      CHECK(is_proper_coloring(g, r.coloring, budget));
    } else if (r.paths) {
      REQUIRE(r.request);
      KempeOutcome out;
      out.kind = KempeOutcome::Kind::Paths;
      out.paths = *r.paths;
      CHECK(validate_outcome(*r.request, out));
    }
  }
}
