#ifndef MINORCOLOR_KEMPE_HPP
#define MINORCOLOR_KEMPE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "minorcolor/graph.hpp"

namespace minorcolor {

/// Missing edges a-b_1, ..., a-b_r of N(x) \ S sharing the end a.
struct Fan {
  int apex = -1;
  std::vector<int> leaves;
};

/// x has degree k+s, S is an independent set of size s+2 in N(x) with
/// alpha(N(x)) = s+2, and the fans are missing edges of N(x) \ S with pairwise
/// distinct ends and at most k-2 ends in total.
struct KempeRequest {
  Graph g;
  int x = -1;
  int k = 0;
  std::vector<int> s;
  std::vector<Fan> fans;
};

/// paths[i][j] runs from fans[i].apex to fans[i].leaves[j].
struct PathSystem {
  std::vector<int> apexes;
  std::vector<std::vector<std::vector<int>>> paths;
};

struct KempeOutcome {
  enum class Kind { ExtendedColoring, Paths };
  Kind kind = Kind::ExtendedColoring;
  std::vector<int> coloring;  // colors 1..k-1 on all of G
  PathSystem paths;
  std::vector<std::string> trace;
};

class KempeError : public PreconditionError {
 public:
  enum class Code { InvalidRequest, ImproperBase, WrongColorCount };
  KempeError(Code code, const std::string& what) : PreconditionError(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Throws KempeError(InvalidRequest) naming the first violated hypothesis.
void check_request(const KempeRequest& req);

/// G / (S u {x}); the merged vertex w is the last vertex of the result.
Contraction kempe_contraction(const KempeRequest& req);

/// `base` colors the vertices of kempe_contraction(req).graph with 1..k-1.
/// Either extends a (k-1)-coloring to all of G, switching one bichromatic
/// component if that frees a color at x, or returns for every fan pair the
/// shortest bichromatic path through G \ N[x].
KempeOutcome kempe_resolve(const KempeRequest& req, const std::vector<int>& base);

struct KempeCheck {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

KempeCheck validate_outcome(const KempeRequest& req, const KempeOutcome& outcome);

/// Swaps colors a and b on the component of the {a,b}-colored subgraph
/// containing `start`; vertices with color 0 are ignored.
void kempe_switch(const Graph& g, std::vector<int>& coloring, int start, int a, int b);

}  // namespace minorcolor

#endif  // MINORCOLOR_KEMPE_HPP
