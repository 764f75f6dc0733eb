#include "minorcolor/io.hpp"

#include <sstream>

namespace minorcolor {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::string to_graph6(const Graph& g) {
  std::string out;
  long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph from_graph6(const std::string& raw, int line) {
  std::string text = raw;
  std::size_t offset = 0;
  if (text.rfind(">>graph6<<", 0) == 0) offset = 10;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6 data truncated", line, static_cast<int>(i) + 1);
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 byte '" + std::string(1, text[i]) + "'", line, static_cast<int>(i) + 1);
    return c - 63;
  };
  std::size_t pos = offset;
  long long n = 0;
  if (pos >= text.size()) throw ParseError("empty graph6 string", line, 1);
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      for (int k = 0; k < 6; ++k) n = (n << 6) | byte_at(pos + 2 + k);
      pos += 8;
    } else {
      for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos + 1 + k);
      pos += 4;
    }
  } else {
    n = byte_at(pos);
    pos += 1;
  }
  if (n > 100000) throw ParseError("graph6 order too large", line, 1);
  Graph g(static_cast<int>(n));
  long long nbits = n * (n - 1) / 2;
  std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() - pos != nbytes) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " + std::to_string(nbytes),
                     line, static_cast<int>(text.size() < pos + nbytes ? text.size() : pos + nbytes) + 1);
  }
  long long b = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++b) {
      int value = byte_at(pos + static_cast<std::size_t>(b / 6));
      if ((value >> (5 - b % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (nbits % 6 != 0) {
    int last = byte_at(pos + nbytes - 1);
    if (last & ((1 << (6 - nbits % 6)) - 1)) throw ParseError("nonzero graph6 padding bits", line, static_cast<int>(pos + nbytes));
  }
  return g;
}

Graph from_dimacs(std::istream& in) {
  std::string text;
  int line_no = 0;
  long long declared_edges = -1;
  Graph g;
  bool have_header = false;
  long long seen_edges = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::size_t first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    char kind = text[first];
    if (kind == 'c') continue;
    std::istringstream fields(text.substr(first + 1));
    if (kind == 'p') {
      if (have_header) throw ParseError("duplicate 'p' line", line_no, static_cast<int>(first) + 1);
      std::string format;
      long long n = -1;
      fields >> format >> n >> declared_edges;
      if (!fields || (format != "edge" && format != "col") || n < 0 || declared_edges < 0) {
        throw ParseError("expected 'p edge <n> <m>'", line_no, static_cast<int>(first) + 1);
      }
      g = Graph(static_cast<int>(n));
      have_header = true;
    } else if (kind == 'e') {
      if (!have_header) throw ParseError("edge before 'p' line", line_no, static_cast<int>(first) + 1);
      long long u = 0, v = 0;
      fields >> u >> v;
      if (!fields) throw ParseError("expected 'e <u> <v>'", line_no, static_cast<int>(first) + 1);
      if (u < 1 || v < 1 || u > g.order() || v > g.order()) {
        throw ParseError("edge endpoint out of range 1.." + std::to_string(g.order()), line_no, static_cast<int>(first) + 3);
      }
      if (u == v) throw ParseError("self-loop", line_no, static_cast<int>(first) + 3);
      g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
      ++seen_edges;
    } else {
      throw ParseError("unknown line type '" + std::string(1, kind) + "'", line_no, static_cast<int>(first) + 1);
    }
  }
  if (!have_header) throw ParseError("missing 'p edge' line", line_no + 1, 1);
  (void)seen_edges;
  return g;
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << "p edge " << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph read_graph(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string all = buffer.str();
  std::size_t first = all.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty input", 1, 1);
  if (all[first] == 'p' || all[first] == 'c') {
    std::istringstream again(all);
    return from_dimacs(again);
  }
  std::istringstream lines(all);
  std::string text;
  int line_no = 0;
  while (std::getline(lines, text)) {
    ++line_no;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    return from_graph6(text, line_no);
  }
  throw ParseError("empty input", 1, 1);
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string text;
  int line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(from_graph6(text, line_no));
  }
  return out;
}

}  // namespace minorcolor
