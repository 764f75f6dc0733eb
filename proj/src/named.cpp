#include "minorcolor/named.hpp"

#include <mutex>
#include <regex>

namespace minorcolor {

namespace {

std::mutex j_mutex;
std::optional<Graph> j_slot;

}  // namespace

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw PreconditionError("negative part size");
    n += parts[i];
    part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  }
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph clique_minus(int p) {
  if (p < 2) throw PreconditionError("K_p^- needs p >= 2");
  Graph g = complete_graph(p);
  g.remove_edge(p - 2, p - 1);
  return g;
}

Graph clique_equal(int p, bool adjacent_missing) {
  if (p < (adjacent_missing ? 3 : 4)) throw PreconditionError("K_p^= needs two distinct missing edges");
  Graph g = complete_graph(p);
  g.remove_edge(p - 2, p - 1);
  if (adjacent_missing) g.remove_edge(p - 3, p - 1);
  else g.remove_edge(p - 4, p - 3);
  return g;
}

Graph build_named(const NamedGraph& named) {
  switch (named.tag) {
    case NamedTag::C8bar:
      return complement(cycle_graph(8));
    case NamedTag::C4barJoinC4bar:
      return join(complement(cycle_graph(4)), complement(cycle_graph(4)));
    case NamedTag::K3barJoinC5:
      return join(empty_graph(3), cycle_graph(5));
    case NamedTag::K2barJoinC6bar:
      return join(empty_graph(2), complement(cycle_graph(6)));
    case NamedTag::K233:
      return complete_multipartite({2, 3, 3});
    case NamedTag::K22222:
      return complete_multipartite({2, 2, 2, 2, 2});
    case NamedTag::K122222:
      return complete_multipartite({1, 2, 2, 2, 2, 2});
    case NamedTag::K22233:
      return complete_multipartite({2, 2, 2, 3, 3});
    case NamedTag::Kp:
      if (named.p < 0) throw PreconditionError("K_p needs p >= 0");
      return complete_graph(named.p);
    case NamedTag::KpMinus:
      return clique_minus(named.p);
    case NamedTag::KpEqual:
      return clique_equal(named.p, named.adjacent_missing);
    case NamedTag::J: {
      auto j = registered_j();
      if (!j) throw PreconditionError("graph J requested before recovery (run recover_J first)");
      return *j;
    }
  }
  throw PreconditionError("unknown named graph tag");
}

Graph build_named(const std::string& name) {
  static const std::regex multipartite(R"(K_\{(\d+(?:,\d+)*)\})");
  static const std::regex clique(R"(K(\d+)(-|=|=adj)?)");
  static const std::regex cycle(R"(C(\d+))");
  static const std::regex path(R"(P(\d+))");
  std::smatch m;
  if (name == "C8bar") return build_named(NamedGraph{NamedTag::C8bar});
  if (name == "C4bar+C4bar") return build_named(NamedGraph{NamedTag::C4barJoinC4bar});
  if (name == "K3bar+C5") return build_named(NamedGraph{NamedTag::K3barJoinC5});
  if (name == "K2bar+C6bar") return build_named(NamedGraph{NamedTag::K2barJoinC6bar});
  if (name == "J") return build_named(NamedGraph{NamedTag::J});
  if (name == "Petersen") return petersen_graph();
  if (std::regex_match(name, m, multipartite)) {
    std::vector<int> parts;
    std::string body = m[1];
    std::size_t start = 0;
    while (start <= body.size()) {
      auto comma = body.find(',', start);
      parts.push_back(std::stoi(body.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return complete_multipartite(parts);
  }
  if (std::regex_match(name, m, clique)) {
    int p = std::stoi(m[1]);
    std::string suffix = m[2];
    if (suffix.empty()) return complete_graph(p);
    if (suffix == "-") return clique_minus(p);
    return clique_equal(p, suffix == "=adj");
  }
  if (std::regex_match(name, m, cycle)) return cycle_graph(std::stoi(m[1]));
  if (std::regex_match(name, m, path)) return path_graph(std::stoi(m[1]));
  throw PreconditionError("unknown graph name '" + name + "'");
}

void register_j(const Graph& j) {
  std::lock_guard lock(j_mutex);
  if (!j_slot) j_slot = j;
}

std::optional<Graph> registered_j() {
  std::lock_guard lock(j_mutex);
  return j_slot;
}

}  // namespace minorcolor
