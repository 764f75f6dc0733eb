#include "minorcolor/canon.hpp"

#include <algorithm>
#include <numeric>

namespace minorcolor {

namespace {

using Cells = std::vector<Mask>;

void set_code_bit(CanonicalCode& code, std::size_t b) { code[1 + b / 64] |= std::uint64_t{1} << (63 - b % 64); }

bool code_bit(const CanonicalCode& code, std::size_t b) { return (code[1 + b / 64] >> (63 - b % 64)) & 1U; }

CanonicalCode code_from_rows(const std::vector<Mask>& rows, const std::vector<int>& order) {
  std::size_t n = order.size();
  std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  CanonicalCode code(1 + (nbits + 63) / 64, 0);
  code[0] = n;
  std::size_t b = 0;
  for (std::size_t j = 1; j < n; ++j) {
    Mask rj = rows[order[j]];
    for (std::size_t i = 0; i < j; ++i, ++b) {
      if (rj & bit(order[i])) set_code_bit(code, b);
    }
  }
  return code;
}

// Splits every cell by neighbor counts into each splitter cell until the
// partition is equitable. Fragments are ordered by ascending count.
void refine(const std::vector<Mask>& rows, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      Mask splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        Mask cell = cells[c];
        if (popcount(cell) <= 1) continue;
        int first = -1;
        bool uniform = true;
        for_each_bit(cell, [&](int v) {
          int k = popcount(rows[v] & splitter);
          if (first < 0) first = k;
          else if (k != first) uniform = false;
        });
        if (uniform) continue;
        std::vector<std::pair<int, int>> keyed;
        for_each_bit(cell, [&](int v) { keyed.emplace_back(popcount(rows[v] & splitter), v); });
        std::sort(keyed.begin(), keyed.end());
        Cells parts;
        int current = -1;
        for (auto [k, v] : keyed) {
          if (k != current) {
            parts.push_back(0);
            current = k;
          }
          parts.back() |= bit(v);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
        changed = true;
      }
    }
  }
}

class Labeler {
 public:
  explicit Labeler(const Graph& g) : rows_(g.rows()), n_(g.order()) {}

  CanonicalLabeling run(Cells cells) {
    refine(rows_, cells);
    std::vector<int> path;
    search(cells, path);
    return {best_order_, best_code_};
  }

 private:
  static bool discrete(const Cells& cells) {
    return std::all_of(cells.begin(), cells.end(), [](Mask c) { return popcount(c) == 1; });
  }

  // -1 if the partial code is smaller than the best's prefix, 0 equal, 1 larger.
  int compare_prefix(const Cells& cells) const {
    if (best_code_.empty()) return -1;
    std::size_t lead = 0;
    while (lead < cells.size() && popcount(cells[lead]) == 1) ++lead;
    std::size_t b = 0;
    for (std::size_t j = 1; j < lead; ++j) {
      Mask rj = rows_[lowest(cells[j])];
      for (std::size_t i = 0; i < j; ++i, ++b) {
        bool mine = rj & cells[i];
        bool theirs = code_bit(best_code_, b);
        if (mine != theirs) return mine ? 1 : -1;
      }
    }
    return 0;
  }

  bool twins(int u, int v) const { return (rows_[u] & ~bit(v)) == (rows_[v] & ~bit(u)); }

  // Orbit representative of v under the stored automorphisms fixing `path`.
  bool equivalent_to_tried(int v, Mask tried, const std::vector<int>& path) const {
    if (tried == 0 || autos_.empty()) return false;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (const auto& gamma : autos_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int a = 0; a < n_; ++a) {
        int ra = find(a), rb = find(gamma[a]);
        if (ra != rb) parent[ra] = rb;
      }
    }
    int rv = find(v);
    bool hit = false;
    for_each_bit(tried, [&](int u) { hit = hit || find(u) == rv; });
    return hit;
  }

  void leaf(const Cells& cells) {
    std::vector<int> order(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) order[i] = lowest(cells[i]);
    CanonicalCode code = code_from_rows(rows_, order);
    if (best_code_.empty() || code < best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    } else if (code == best_code_ && autos_.size() < kMaxAutos) {
      std::vector<int> gamma(n_);
      for (int i = 0; i < n_; ++i) gamma[best_order_[i]] = order[i];
      autos_.push_back(std::move(gamma));
    }
  }

  void search(const Cells& cells, std::vector<int>& path) {
    if (discrete(cells)) {
      leaf(cells);
      return;
    }
    if (compare_prefix(cells) > 0) return;
    std::size_t target = 0;
    int target_size = n_ + 1;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      int sz = popcount(cells[c]);
      if (sz > 1 && sz < target_size) {
        target = c;
        target_size = sz;
      }
    }
    Mask tried = 0;
    for_each_bit(cells[target], [&](int v) {
      bool skip = false;
      for_each_bit(tried, [&](int u) { skip = skip || twins(u, v); });
      if (!skip) skip = equivalent_to_tried(v, tried, path);
      if (!skip) {
        Cells next = cells;
        next[target] = cells[target] & ~bit(v);
        next.insert(next.begin() + static_cast<std::ptrdiff_t>(target), bit(v));
        refine(rows_, next);
        path.push_back(v);
        search(next, path);
        path.pop_back();
      }
      tried |= bit(v);
    });
  }

  static constexpr std::size_t kMaxAutos = 512;
  std::vector<Mask> rows_;
  int n_;
  CanonicalCode best_code_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace

CanonicalCode code_under(const Graph& g, const std::vector<int>& order) {
  std::size_t n = order.size();
  std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  CanonicalCode code(1 + (nbits + 63) / 64, 0);
  code[0] = n;
  std::size_t b = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++b) {
      if (g.has_edge(order[i], order[j])) set_code_bit(code, b);
    }
  }
  return code;
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kLimits.canonical_order || !g.fits_mask()) {
    throw SizeLimitError("canonical_labeling: order " + std::to_string(g.order()) + " too large");
  }
  if (g.order() == 0) return {{}, CanonicalCode{0}};
  return Labeler(g).run({low_bits(g.order())});
}

CanonicalLabeling canonical_labeling(const Graph& g, const std::vector<int>& colors) {
  if (g.order() > kLimits.canonical_order || !g.fits_mask()) {
    throw SizeLimitError("canonical_labeling: order " + std::to_string(g.order()) + " too large");
  }
  if (static_cast<int>(colors.size()) != g.order()) throw PreconditionError("canonical_labeling: one color per vertex");
  if (g.order() == 0) return {{}, CanonicalCode{0}};
  std::vector<int> distinct = colors;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Cells cells(distinct.size(), 0);
  for (int v = 0; v < g.order(); ++v) {
    cells[std::lower_bound(distinct.begin(), distinct.end(), colors[v]) - distinct.begin()] |= bit(v);
  }
  return Labeler(g).run(std::move(cells));
}

CanonicalCode canonical_code(const Graph& g) { return canonical_labeling(g).code; }

Graph canonical_form(const Graph& g) {
  auto lab = canonical_labeling(g);
  return induced(g, lab.order);
}

bool is_isomorphic(const Graph& a, const Graph& b, int order_limit) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.order() > order_limit) {
    throw SizeLimitError("is_isomorphic: order " + std::to_string(a.order()) + " exceeds isomorphism limit");
  }
  std::vector<int> da(a.order()), db(b.order());
  for (int v = 0; v < a.order(); ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace minorcolor
