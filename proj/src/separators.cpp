#include "minorcolor/separators.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace minorcolor {

namespace {

Mask neighborhood_of(const std::vector<Mask>& rows, Mask set) {
  Mask out = 0;
  for_each_bit(set, [&](int v) { out |= rows[v]; });
  return out & ~set;
}

void require_mask(const Graph& g) {
  if (!g.fits_mask()) throw SizeLimitError("separator search limited to 64 vertices");
}

}  // namespace

std::vector<Mask> components_after_removal(const Graph& g, Mask separator) {
  require_mask(g);
  return components_within(g.rows(), g.all() & ~separator);
}

std::vector<Mask> full_components(const Graph& g, Mask separator) {
  auto rows = g.rows();
  std::vector<Mask> out;
  for (Mask c : components_within(rows, g.all() & ~separator)) {
    if (neighborhood_of(rows, c) == separator) out.push_back(c);
  }
  return out;
}

SeparatorEnumeration minimal_separators(const Graph& g, std::size_t limit) {
  require_mask(g);
  auto rows = g.rows();
  Mask all = g.all();
  SeparatorEnumeration result;
  std::unordered_set<Mask> seen;
  std::deque<Mask> queue;
  auto offer = [&](Mask s) {
    if (s == 0 || seen.count(s)) return;
    if (seen.size() >= limit) {
      result.complete = false;
      return;
    }
    seen.insert(s);
    queue.push_back(s);
    result.separators.push_back(s);
  };
  for (int v = 0; v < g.order(); ++v) {
    Mask closed = rows[v] | bit(v);
    for (Mask c : components_within(rows, all & ~closed)) offer(neighborhood_of(rows, c));
  }
  while (!queue.empty()) {
    Mask s = queue.front();
    queue.pop_front();
    for_each_bit(s, [&](int x) {
      Mask removed = s | rows[x];
      for (Mask c : components_within(rows, all & ~removed)) offer(neighborhood_of(rows, c));
    });
  }
  return result;
}

std::vector<Mask> clique_minimal_separators(const Graph& g, int size) {
  auto rows = g.rows();
  auto is_clique_mask = [&](Mask s) {
    bool ok = true;
    for_each_bit(s, [&](int v) { ok = ok && (s & ~bit(v) & ~rows[v]) == 0; });
    return ok;
  };
  auto all = minimal_separators(g);
  if (!all.complete) throw SizeLimitError("too many minimal separators to enumerate");
  std::vector<Mask> out;
  for (Mask s : all.separators) {
    if ((size < 0 || popcount(s) == size) && is_clique_mask(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace minorcolor
