#include "minorcolor/cockade.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <regex>
#include <set>

#include "minorcolor/canon.hpp"
#include "minorcolor/invariants.hpp"
#include "minorcolor/named.hpp"
#include "minorcolor/separators.hpp"

namespace minorcolor {

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Clique:
      return "K_p";
    case Flavor::CliqueMinus:
      return "K_p^-";
    case Flavor::CliqueEqual:
      return "K_p^=";
  }
  return "?";
}

long long threshold(int p, Flavor flavor, int n) {
  auto beyond = [&]() {
    return ExtremalRangeError("threshold: " + flavor_name(flavor) + " with p = " + std::to_string(p) +
                              " is beyond proven extremal function");
  };
  long long pp = p, nn = n;
  switch (flavor) {
    case Flavor::Clique:
      if (p < 1 || p > 9) throw beyond();
      break;
    case Flavor::CliqueMinus:
    case Flavor::CliqueEqual:
      if (p < 5 || p > 8) throw beyond();
      break;
  }
  if (n < p) throw PreconditionError("threshold: need n >= p");
  switch (flavor) {
    case Flavor::Clique:
      return std::max(0LL, (pp - 2) * nn - (pp - 1) * (pp - 2) / 2 + 1);
    case Flavor::CliqueMinus: {
      // (2p-5)n/2 - (p-3)(p-1)/2, rounded up.
      long long twice = (2 * pp - 5) * nn - (pp - 3) * (pp - 1);
      return twice >= 0 ? (twice + 1) / 2 : -((-twice) / 2);
    }
    case Flavor::CliqueEqual: {
      long long twice = 2 * (pp - 3) * nn - (pp - 1) * (pp - 4);
      return twice >= 0 ? (twice + 1) / 2 : -((-twice) / 2);
    }
  }
  return 0;
}

CockadeSpec CockadeSpec::make_leaf(Graph g) {
  CockadeSpec spec;
  spec.leaf = std::move(g);
  return spec;
}

CockadeSpec CockadeSpec::make_sum(int k, CockadeSpec left, CockadeSpec right, std::vector<int> glue_left,
                                  std::vector<int> glue_right) {
  CockadeSpec spec;
  spec.k = k;
  spec.left = std::make_shared<const CockadeSpec>(std::move(left));
  spec.right = std::make_shared<const CockadeSpec>(std::move(right));
  spec.glue_left = std::move(glue_left);
  spec.glue_right = std::move(glue_right);
  return spec;
}

int CockadeSpec::leaf_count() const { return leaf ? 1 : left->leaf_count() + right->leaf_count(); }

int CockadeSpec::sum_count() const { return leaf ? 0 : 1 + left->sum_count() + right->sum_count(); }

Graph build_cockade(const CockadeSpec& spec) {
  if (spec.leaf) return *spec.leaf;
  if (!spec.left || !spec.right) throw PreconditionError("cockade sum node without children");
  Graph left = build_cockade(*spec.left);
  Graph right = build_cockade(*spec.right);
  int k = spec.k;
  if (static_cast<int>(spec.glue_left.size()) != k || static_cast<int>(spec.glue_right.size()) != k) {
    throw PreconditionError("cockade glue sets must have exactly k vertices");
  }
  for (int v : spec.glue_left) {
    if (v < 0 || v >= left.order()) throw PreconditionError("cockade glue vertex out of range");
  }
  for (int v : spec.glue_right) {
    if (v < 0 || v >= right.order()) throw PreconditionError("cockade glue vertex out of range");
  }
  auto distinct = [](std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
  };
  if (!distinct(spec.glue_left) || !distinct(spec.glue_right)) throw PreconditionError("cockade glue set repeats a vertex");
  if (!is_clique(left, spec.glue_left) || !is_clique(right, spec.glue_right)) {
    throw PreconditionError("cockade glue set is not a clique");
  }
  std::vector<int> image(right.order(), -1);
  for (int i = 0; i < k; ++i) image[spec.glue_right[i]] = spec.glue_left[i];
  int next = left.order();
  for (int v = 0; v < right.order(); ++v) {
    if (image[v] < 0) image[v] = next++;
  }
  Graph g(next);
  for (auto [u, v] : left.edges()) g.add_edge(u, v);
  for (auto [u, v] : right.edges()) {
    if (!g.has_edge(image[u], image[v])) g.add_edge(image[u], image[v]);
  }
  return g;
}

std::vector<CockadeFamily> exceptional_families(int p, Flavor flavor) {
  threshold(p, flavor, std::max(p, 1));
  std::vector<CockadeFamily> out;
  switch (flavor) {
    case Flavor::Clique:
      if (p == 8) out.push_back(family_by_name("K22222/5"));
      if (p == 9) out.push_back(family_by_name("K122222/6"));
      break;
    case Flavor::CliqueMinus:
      if (p == 5) out.push_back(family_by_name("K4/2"));
      if (p == 6) out.push_back(family_by_name("K5/3"));
      if (p == 7) out.push_back(family_by_name("K2222+K6/4"));
      if (p == 8) out.push_back(family_by_name("K12222+K7/5"));
      break;
    case Flavor::CliqueEqual:
      out.push_back(family_by_name("K" + std::to_string(p - 1) + "/" + std::to_string(p - 4)));
      break;
  }
  return out;
}

CockadeFamily family_by_name(const std::string& name) {
  static const std::regex form(R"(([^+/]+)(?:\+([^+/]+))?/(\d+))");
  std::smatch m;
  if (!std::regex_match(name, m, form)) throw PreconditionError("unknown cockade family '" + name + "'");
  auto leaf = [](const std::string& tag) -> Graph {
    static const std::regex multipartite(R"(K([12]{2,}))");
    std::smatch mm;
    if (std::regex_match(tag, mm, multipartite) && tag.size() > 2) {
      std::vector<int> parts;
      for (char c : std::string(mm[1])) parts.push_back(c - '0');
      return complete_multipartite(parts);
    }
    return build_named(tag);
  };
  CockadeFamily family;
  family.name = name;
  family.h1 = leaf(m[1]);
  family.h2 = m[2].matched ? leaf(m[2]) : family.h1;
  family.k = std::stoi(m[3]);
  return family;
}

namespace {

using Piece = std::pair<CockadeSpec, std::vector<int>>;

std::optional<std::vector<int>> isomorphism(const Graph& from, const Graph& to) {
  if (from.order() != to.order() || from.size() != to.size()) return std::nullopt;
  auto a = canonical_labeling(from);
  auto b = canonical_labeling(to);
  if (a.code != b.code) return std::nullopt;
  std::vector<int> map(from.order());
  for (int i = 0; i < from.order(); ++i) map[a.order[i]] = b.order[i];
  return map;
}

class Recognizer {
 public:
  Recognizer(const Graph& g, const CockadeFamily& family) : g_(g), family_(family) {
    min_leaf_ = std::min(family.h1.order(), family.h2.order());
  }

  std::optional<Piece> run(const std::vector<int>& vertices) {
    if (static_cast<int>(vertices.size()) < min_leaf_) return std::nullopt;
    Mask key = vector_to_mask(vertices);
    if (failed_.count(key)) return std::nullopt;
    Graph piece = induced(g_, vertices);
    for (const Graph* leaf : {&family_.h1, &family_.h2}) {
      if (auto map = isomorphism(*leaf, piece)) {
        std::vector<int> to_host(leaf->order());
        for (int v = 0; v < leaf->order(); ++v) to_host[v] = vertices[(*map)[v]];
        return Piece{CockadeSpec::make_leaf(*leaf), std::move(to_host)};
      }
    }
    for (Mask s : clique_minimal_separators(piece, family_.k)) {
      auto comps = components_after_removal(piece, s);
      if (comps.size() < 2) continue;
      Mask left_local = comps[0] | s;
      Mask right_local = piece.all() & ~comps[0];
      auto lift = [&](Mask local) {
        std::vector<int> out;
        for_each_bit(local, [&](int v) { out.push_back(vertices[v]); });
        return out;
      };
      auto left = run(lift(left_local));
      if (!left) continue;
      auto right = run(lift(right_local));
      if (!right) continue;
      std::vector<int> glue_left, glue_right;
      for_each_bit(s, [&](int local) {
        int host = vertices[local];
        glue_left.push_back(static_cast<int>(std::find(left->second.begin(), left->second.end(), host) - left->second.begin()));
        glue_right.push_back(
            static_cast<int>(std::find(right->second.begin(), right->second.end(), host) - right->second.begin()));
      });
      std::vector<int> to_host = left->second;
      std::vector<bool> is_glue(right->second.size(), false);
      for (int v : glue_right) is_glue[v] = true;
      for (std::size_t v = 0; v < right->second.size(); ++v) {
        if (!is_glue[v]) to_host.push_back(right->second[v]);
      }
      return Piece{CockadeSpec::make_sum(family_.k, std::move(left->first), std::move(right->first),
                                         std::move(glue_left), std::move(glue_right)),
                   std::move(to_host)};
    }
    failed_.insert(key);
    return std::nullopt;
  }

 private:
  const Graph& g_;
  const CockadeFamily& family_;
  int min_leaf_ = 0;
  std::set<Mask> failed_;
};

std::vector<int> color_spec(const CockadeSpec& spec) {
  if (spec.leaf) return chromatic_number(*spec.leaf).coloring;
  auto left = color_spec(*spec.left);
  auto right = color_spec(*spec.right);
  int palette = std::max(*std::max_element(left.begin(), left.end()), *std::max_element(right.begin(), right.end()));
  // Rename right colors so the glue clique agrees with the left side.
  std::vector<int> rename(palette + 1, 0);
  std::vector<bool> taken(palette + 1, false);
  for (int i = 0; i < spec.k; ++i) {
    rename[right[spec.glue_right[i]]] = left[spec.glue_left[i]];
    taken[left[spec.glue_left[i]]] = true;
  }
  int next = 1;
  for (int c = 1; c <= palette; ++c) {
    if (rename[c] != 0) continue;
    while (taken[next]) ++next;
    rename[c] = next;
    taken[next] = true;
  }
  std::vector<bool> is_glue(right.size(), false);
  for (int v : spec.glue_right) is_glue[v] = true;
  std::vector<int> out = left;
  for (std::size_t v = 0; v < right.size(); ++v) {
    if (!is_glue[v]) out.push_back(rename[right[v]]);
  }
  return out;
}

}  // namespace

std::optional<CockadeRecognition> recognize_cockade(const Graph& g, const CockadeFamily& family) {
  if (g.order() > kLimits.cockade_order) throw SizeLimitError("recognize_cockade: order above cockade limit");
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  Recognizer recognizer(g, family);
  auto piece = recognizer.run(all);
  if (!piece) return std::nullopt;
  return CockadeRecognition{std::move(piece->first), std::move(piece->second)};
}

int cockade_chromatic(const CockadeFamily& family) {
  return std::max(chromatic_number(family.h1).chromatic, chromatic_number(family.h2).chromatic);
}

std::optional<int> stated_cockade_chromatic(const std::string& family_name) {
  static const std::map<std::string, int> stated{
      {"K22222/5", 5},
      {"K122222/6", 6},
      {"K12222+K7/5", 7},
      {"K7/4", 4},
  };
  auto it = stated.find(family_name);
  if (it == stated.end()) return std::nullopt;
  return it->second;
}

std::vector<int> color_cockade(const CockadeRecognition& recognition, int order) {
  auto built = color_spec(recognition.spec);
  std::vector<int> out(order, 0);
  for (std::size_t v = 0; v < built.size(); ++v) out[recognition.vertex_map[v]] = built[v];
  return out;
}

CockadeSpec random_cockade(const CockadeFamily& family, int leaves, std::mt19937_64& rng) {
  if (leaves < 1) throw PreconditionError("random_cockade: need at least one leaf");
  std::vector<CockadeSpec> pool;
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < leaves; ++i) pool.push_back(CockadeSpec::make_leaf(coin(rng) ? family.h1 : family.h2));
  auto pick_clique = [&](const Graph& g) {
    auto cliques = cliques_of_size(g, family.k, 5000);
    if (cliques.empty()) throw PreconditionError("random_cockade: leaf without a k-clique");
    std::uniform_int_distribution<std::size_t> which(0, cliques.size() - 1);
    auto c = cliques[which(rng)];
    std::shuffle(c.begin(), c.end(), rng);
    return c;
  };
  while (pool.size() > 1) {
    std::uniform_int_distribution<std::size_t> which(0, pool.size() - 1);
    std::size_t i = which(rng), j = which(rng);
    while (j == i) j = which(rng);
    auto left = pool[i], right = pool[j];
    auto gl = pick_clique(build_cockade(left));
    auto gr = pick_clique(build_cockade(right));
    auto sum = CockadeSpec::make_sum(family.k, std::move(left), std::move(right), std::move(gl), std::move(gr));
    if (i > j) std::swap(i, j);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    pool[i] = std::move(sum);
  }
  return pool.front();
}

ExtremalVerdict extremal_verdict(const Graph& g, int p, Flavor flavor) {
  ExtremalVerdict verdict;
  verdict.p = p;
  verdict.flavor = flavor;
  if (g.order() < p) return verdict;
  long long needed = threshold(p, flavor, g.order());
  if (g.size() < needed) return verdict;
  if (flavor == Flavor::Clique && p == 9 && g.order() == 12 &&
      is_isomorphic(g, complete_multipartite({2, 2, 2, 3, 3}), kLimits.cockade_order)) {
    verdict.kind = ExtremalVerdict::Kind::Exceptional;
    verdict.family = "K_{2,2,2,3,3}";
    return verdict;
  }
  if (g.size() == needed && g.order() <= kLimits.cockade_order) {
    for (const auto& family : exceptional_families(p, flavor)) {
      if (auto rec = recognize_cockade(g, family)) {
        verdict.kind = ExtremalVerdict::Kind::CockadeMember;
        verdict.family = family.name;
        verdict.recognition = std::move(rec);
        return verdict;
      }
    }
  }
  verdict.kind = ExtremalVerdict::Kind::MinorForced;
  return verdict;
}

}  // namespace minorcolor
