#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "minorcolor/io.hpp"
#include "minorcolor/named.hpp"
#include "oracles.hpp"

using namespace minorcolor;

TEST_CASE("graph6 reference strings") {
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(complete_graph(2)) == "A_");
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(petersen_graph()) == "IheA@GUAo");
  CHECK(from_graph6("C~") == complete_graph(4));
  CHECK(from_graph6("IheA@GUAo") == petersen_graph());
}

TEST_CASE("graph6 round trip, including the long order prefix") {
  std::mt19937_64 rng(2);
  for (int n : {0, 1, 2, 5, 12, 62, 63, 64, 100, 300}) {
    Graph g = oracle::random_graph(n, 0.3, rng);
    std::string text = to_graph6(g);
    if (n >= 63) CHECK(text[0] == '~');
    CHECK(from_graph6(text) == g);
  }
}

TEST_CASE("graph6 errors carry line and column") {
  try {
    from_graph6("C~x", 4);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() >= 1);
  }
  try {
    from_graph6("C\x01");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 2);
  }
  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("I?"), ParseError);
}

TEST_CASE("DIMACS") {
  std::istringstream in("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\n");
  Graph g = from_dimacs(in);
  CHECK(g == complete_graph(3));
  std::istringstream again(to_dimacs(petersen_graph()));
  CHECK(from_dimacs(again) == petersen_graph());

  std::istringstream bad_vertex("p edge 3 1\ne 1 4\n");
  try {
    from_dimacs(bad_vertex);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream no_header("e 1 2\n");
  CHECK_THROWS_AS(from_dimacs(no_header), ParseError);
  std::istringstream junk("p edge 2 1\ne 1 x\n");
  CHECK_THROWS_AS(from_dimacs(junk), ParseError);
}

TEST_CASE("format detection and graph6 streams") {
  std::istringstream g6("IheA@GUAo\n");
  CHECK(read_graph(g6) == petersen_graph());
  std::istringstream dimacs("c comment\np edge 2 1\ne 1 2\n");
  CHECK(read_graph(dimacs) == complete_graph(2));
  std::istringstream lines("C~\n\nA_\n?\n");
  auto all = read_graph6_lines(lines);
  REQUIRE(all.size() == 3);
  CHECK(all[1] == complete_graph(2));
  std::istringstream broken("C~\nC\x7f\n");
  try {
    read_graph6_lines(broken);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}
