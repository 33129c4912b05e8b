#include "triedge/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace triedge {

namespace {

using Cells = std::vector<Mask>;
using Perm = std::vector<int>;

// Splits cells until every cell is equitable with respect to every other cell.
// Fragments are ordered by neighbour count, which keeps the result invariant
// under relabelling.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const Mask splitter = cells[s];
      for (std::size_t x = 0; x < cells.size(); ++x) {
        const Mask cell = cells[x];
        if ((cell & (cell - 1)) == 0) continue;
        int lo = 65;
        int hi = -1;
        for_each_bit(cell, [&](int v) {
          int c = popcount(g.row(v) & splitter);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        });
        if (lo == hi) continue;
        std::map<int, Mask> parts;
        for_each_bit(cell, [&](int v) { parts[popcount(g.row(v) & splitter)] |= bit(v); });
        Cells pieces;
        for (auto& [count, m] : parts) pieces.push_back(m);
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  Canonical run(Cells cells) {
    refine(g_, cells);
    dfs(cells, 0);

    Canonical out;
    out.lab = best_lab_;
    out.form = relabel(best_lab_);
    UnionFind uf(n_);
    for (const Perm& p : gens_)
      for (int v = 0; v < n_; ++v) uf.unite(v, p[v]);
    out.orbit.resize(n_);
    for (int v = 0; v < n_; ++v) out.orbit[v] = uf.find(v);
    out.generators = static_cast<int>(gens_.size());
    return out;
  }

 private:
  Graph relabel(const std::vector<int>& lab) const {
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[lab[i]] = i;
    Graph out(n_);
    for (int i = 0; i < n_; ++i)
      for_each_bit(g_.row(lab[i]), [&](int u) {
        if (pos[u] > i) out.add_edge(i, pos[u]);
      });
    return out;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    Perm p(n_);
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      p[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) gens_.push_back(std::move(p));
  }

  void leaf(const Cells& cells) {
    std::vector<int> lab(n_);
    for (int i = 0; i < n_; ++i) lab[i] = std::countr_zero(cells[i]);
    Graph form = relabel(lab);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_form_ = best_form_ = form;
      first_lab_ = best_lab_ = lab;
      return;
    }
    if (form == first_form_) {
      record_automorphism(first_lab_, lab);
    } else if (form == best_form_) {
      record_automorphism(best_lab_, lab);
    } else if (best_form_ < form) {
      best_form_ = form;
      best_lab_ = lab;
    }
  }

  // Orbit representative of v under the generators fixing `fixed` pointwise.
  std::vector<int> stabiliser_orbits(Mask fixed) const {
    UnionFind uf(n_);
    for (const Perm& p : gens_) {
      bool fixes = true;
      for_each_bit(fixed, [&](int v) { fixes = fixes && p[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) uf.unite(v, p[v]);
    }
    std::vector<int> orbit(n_);
    for (int v = 0; v < n_; ++v) orbit[v] = uf.find(v);
    return orbit;
  }

  void dfs(const Cells& cells, Mask fixed) {
    if (static_cast<int>(cells.size()) == n_) {
      leaf(cells);
      return;
    }
    std::size_t target = 0;
    while (popcount(cells[target]) == 1) ++target;
    const Mask cell = cells[target];

    std::vector<int> tried;
    for_each_bit(cell, [&](int v) {
      if (!tried.empty()) {
        std::vector<int> orbit = stabiliser_orbits(fixed);
        for (int u : tried)
          if (orbit[u] == orbit[v]) return;
      }
      tried.push_back(v);
      Cells next;
      next.reserve(cells.size() + 1);
      next.insert(next.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      next.push_back(bit(v));
      next.push_back(cell & ~bit(v));
      next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      refine(g_, next);
      dfs(next, fixed | bit(v));
    });
  }

  const Graph& g_;
  int n_;
  bool have_leaf_ = false;
  Graph first_form_;
  Graph best_form_;
  std::vector<int> first_lab_;
  std::vector<int> best_lab_;
  std::vector<Perm> gens_;
};

}  // namespace

Canonical canonical_form(const Graph& g) {
  if (g.order() == 0) return Canonical{g, {}, {}, 0};
  return Search(g).run(Cells{g.vertices()});
}

Canonical canonical_form(const Graph& g, std::span<const int> colours) {
  if (g.order() == 0) return Canonical{g, {}, {}, 0};
  std::map<int, Mask> by_colour;
  for (int v = 0; v < g.order(); ++v) by_colour[colours[v]] |= bit(v);
  Cells cells;
  for (auto& [c, m] : by_colour) cells.push_back(m);
  return Search(g).run(std::move(cells));
}

}  // namespace triedge
