#ifndef MINORCOLOR_ENUMERATE_HPP
#define MINORCOLOR_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "minorcolor/graph.hpp"
#include "minorcolor/minor.hpp"

namespace minorcolor {

struct EnumerationTask {
  int n = 0;
  /// Complements of triangle-free graphs, i.e. every graph with alpha <= 2.
  /// When false every graph on n vertices is generated.
  bool alpha_eq_2 = true;
  std::optional<int> min_degree;
  std::optional<int> max_degree;
  /// Keep only graphs with no such minor where every added edge creates one.
  std::optional<PatternSpec> edge_maximal_without;

  /// Uniform over labeled graphs (edge-toggle Markov chain on the
  /// complements), then deduplicated up to isomorphism.
  struct Sample {
    std::size_t count = 0;
    std::uint64_t seed = 0;
  };
  std::optional<Sample> sample;
};

/// Largest n enumerated exhaustively: alpha_eq_2 uses
/// kLimits.exhaustive_enumeration, unrestricted generation stops at 9.
int exhaustive_limit(const EnumerationTask& task);

/// Generation is resumable per parent of the last augmentation step:
/// every graph descending from parents [0, next_parent) has been emitted.
struct EnumerationCheckpoint {
  int n = 0;
  std::size_t next_parent = 0;
};

using GraphSink = std::function<bool(const Graph&)>;  // false stops the run

/// One representative per isomorphism class meeting every constraint, in a
/// fixed order. Exhaustive representatives are in canonical form.
void enumerate(const EnumerationTask& task, const GraphSink& sink, const EnumerationCheckpoint& resume = {},
               const std::function<void(const EnumerationCheckpoint&)>& on_checkpoint = {});
std::vector<Graph> enumerate_all(const EnumerationTask& task);
std::uint64_t count(const EnumerationTask& task);

/// Whether g meets the task's constraints (n and alpha included).
bool satisfies(const Graph& g, const EnumerationTask& task);

/// No `spec` minor, and adding any missing edge creates one. Throws
/// SizeLimitError when a search exceeds the minor budget.
bool edge_maximal_without(const Graph& g, const PatternSpec& spec);

/// Labeled graphs with alpha <= 2 whose complements are close to uniform
/// among labeled triangle-free graphs on n vertices.
std::vector<Graph> sample_alpha2(int n, std::size_t count, std::uint64_t seed);

}  // namespace minorcolor

#endif  // MINORCOLOR_ENUMERATE_HPP
