#ifndef MINORCOLOR_COLORER_HPP
#define MINORCOLOR_COLORER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minorcolor/cockade.hpp"
#include "minorcolor/graph.hpp"
#include "minorcolor/kempe.hpp"
#include "minorcolor/minor.hpp"

namespace minorcolor {

/// Forbidden minor and color budget: K_t with 2t-6 colors (t = 7, 8, 9),
/// K8^- with 9 colors, K8^= with 8 colors.
struct Regime {
  enum class Kind { Kt, K8Minus, K8Equal };
  Kind kind = Kind::Kt;
  int t = 7;

  static Regime kt(int t);
  static Regime k8minus();
  static Regime k8equal();

  int budget() const;
  int p() const;
  Flavor flavor() const;
  PatternSpec pattern() const;
  std::string name() const;  // "k7", "k8", "k9", "k8-", "k8="
};

/// Accepts "k7".."k9", "kt7".."kt9", "k8-", "k8minus", "k8=", "k8equal".
Regime parse_regime(const std::string& text);
std::vector<Regime> all_regimes();

struct Certificate {
  enum class Kind { Coloring, Minor };
  Kind kind = Kind::Coloring;
  std::vector<int> coloring;  // colors 1..budget
  std::optional<MinorModel> model;
  std::vector<std::string> trace;
};

struct ColorOptions {
  /// Relabels the input by a seeded random permutation before solving.
  std::optional<std::uint64_t> seed;
  long long minor_budget = default_minor_budget();
};

/// A proper coloring within the regime's budget or a model of its pattern.
/// Peels vertices of degree below the budget, splits components, colors
/// members of the exceptional cockade families at the extremal threshold,
/// then tries in order: a (p-1)-clique with a fully attached component;
/// contracting an independent set of N(x) that is too large for x to be
/// critical; Kempe resolution at a minimum-degree vertex x with fan systems
/// taken from the proofs (the isolated vertex of a K_{t-2} u K1 model, every apex, J, color classes of
/// N(x), the K8^= case analysis); two K6 subgraphs in a 7-connected graph;
/// exhaustive minor search; exact coloring.
Certificate color_or_minor(const Graph& g, const Regime& regime, const ColorOptions& options = {});

/// Coloring: length, range and properness. Minor: pattern isomorphic to the
/// regime's and verify_model. No search.
Verdict verify_certificate(const Graph& g, const Regime& regime, const Certificate& cert);

/// Repeatedly removes the lowest-index vertex of degree < budget.
struct PeelResult {
  std::vector<int> core;     // ascending
  std::vector<int> removed;  // removal order
};
PeelResult peel(const Graph& g, int budget);

struct RecolorResult {
  enum class Kind { Improved, Stuck };
  Kind kind = Kind::Stuck;
  std::vector<int> coloring;             // Improved: all of G, colors 1..budget
  std::optional<KempeRequest> request;   // the Kempe request, when one was built
  std::optional<PathSystem> paths;       // Stuck with paths
  std::string reason;
  std::vector<std::string> trace;
};

/// `partial` colors G - x with 1..budget (0 at x). Tries a free color, then a
/// single Kempe switch between two colors of N(x), then the Kempe lemma with
/// k = budget + 1, S = a color class of N(x) and one apex fan.
RecolorResult kempe_recolor_pass(const Graph& g, const std::vector<int>& partial, int x, int budget);

}  // namespace minorcolor

#endif  // MINORCOLOR_COLORER_HPP
