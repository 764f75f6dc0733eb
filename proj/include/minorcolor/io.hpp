#ifndef MINORCOLOR_IO_HPP
#define MINORCOLOR_IO_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorcolor/graph.hpp"

namespace minorcolor {

/// Malformed graph text. `line` and `column` are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// graph6: order prefix, then the upper triangle in column order, six bits
/// per byte, offset 63, zero padded.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text, int line = 1);

/// DIMACS edge format: "c" comments, one "p edge n m" line, "e u v" lines (1-based).
Graph from_dimacs(std::istream& in);
std::string to_dimacs(const Graph& g);

/// Reads one graph, detecting DIMACS ("p"/"c" lines) or graph6.
Graph read_graph(std::istream& in);
/// Reads every non-empty line as graph6.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace minorcolor

#endif  // MINORCOLOR_IO_HPP
