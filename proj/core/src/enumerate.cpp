#include "triedge/enumerate.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "triedge/canonical.hpp"

namespace triedge {

namespace {

constexpr int choose2(int m) { return m * (m - 1) / 2; }

// Packed (degree, neighbour-degree sum, triangles through v); isomorphism
// invariant. Smaller is "more removable".
std::uint64_t vertex_invariant(const Graph& g, int v) {
  std::uint64_t deg = static_cast<std::uint64_t>(g.degree(v));
  std::uint64_t nsum = 0;
  std::uint64_t tri = 0;
  for_each_bit(g.row(v), [&](int u) {
    nsum += static_cast<std::uint64_t>(g.degree(u));
    tri += static_cast<std::uint64_t>(popcount(g.row(u) & g.row(v)));
  });
  return (deg << 24) | (nsum << 12) | (tri / 2);
}

}  // namespace

GraphEnumerator::GraphEnumerator(int n, int e_min, int e_max) : n_(n), lo_(n + 1), hi_(n + 1) {
  if (n < 1 || n > kMaxVertices) throw CapacityError("enumeration order must lie in [1, 64]");
  e_min = std::max(e_min, 0);
  e_max = std::min(e_max, choose2(n));
  lo_[n] = e_min;
  hi_[n] = e_max;
  for (int m = n - 1; m >= 1; --m) {
    // lo[m] = max(ceil(lo[m+1] (m-1)/(m+1)), lo[m+1] - m, 0).
    int by_degree = (lo_[m + 1] * (m - 1) + m) / (m + 1);
    int by_room = lo_[m + 1] - m;
    lo_[m] = std::max({by_degree, by_room, 0});
    hi_[m] = std::min(hi_[m + 1], choose2(m));
  }
}

void GraphEnumerator::children(const Graph& parent, const std::function<void(const Graph&)>& emit) const {
  const int m = parent.order();
  if (m >= n_) return;
  const int pe = parent.edge_count();
  int min_deg = m;
  for (int v = 0; v < m; ++v) min_deg = std::min(min_deg, parent.degree(v));

  const int k_lo = std::max(0, lo_[m + 1] - pe);
  const int k_hi = std::min({m, hi_[m + 1] - pe, min_deg + 1});

  std::unordered_set<Graph, GraphHash> seen;
  for (int k = k_lo; k <= k_hi; ++k) {
    // Old vertices of degree k-1 are forced into the new vertex's neighbourhood.
    Mask forced = 0;
    for (int v = 0; v < m; ++v)
      if (parent.degree(v) == k - 1) forced |= bit(v);
    const int need = k - popcount(forced);
    if (need < 0) continue;
    std::vector<int> free_vertices;
    for (int v = 0; v < m; ++v)
      if (!((forced >> v) & 1U)) free_vertices.push_back(v);
    const int f = static_cast<int>(free_vertices.size());
    if (need > f) continue;

    // Gosper iteration over need-subsets of the free vertices.
    std::uint64_t sel = need == 0 ? 0 : low_bits(need);
    const std::uint64_t limit = bit(f);
    while (true) {
      Mask nbrs = forced;
      for_each_bit(sel, [&](int i) { nbrs |= bit(free_vertices[i]); });

      Graph child(m + 1);
      for (int v = 0; v < m; ++v)
        for_each_bit(parent.row(v) & ~low_bits(v + 1), [&](int u) { child.add_edge(v, u); });
      for_each_bit(nbrs, [&](int u) { child.add_edge(m, u); });

      std::uint64_t best = vertex_invariant(child, m);
      bool reject = false;
      Mask candidates = bit(m);
      for (int v = 0; v < m && !reject; ++v) {
        std::uint64_t iv = vertex_invariant(child, v);
        if (iv < best) reject = true;
        else if (iv == best) candidates |= bit(v);
      }
      if (!reject) {
        Canonical can = canonical_form(child);
        int w = -1;
        for (int i = 0; i <= m && w < 0; ++i)
          if ((candidates >> can.lab[i]) & 1U) w = can.lab[i];
        if (can.orbit[w] == can.orbit[m] && seen.insert(can.form).second) emit(can.form);
      }

      if (need == 0) break;
      std::uint64_t c = sel & (~sel + 1);
      std::uint64_t r = sel + c;
      sel = (((r ^ sel) >> 2) / c) | r;
      if (sel >= limit) break;
    }
  }
}

namespace {

struct Counter {
  std::uint64_t count = 0;
  bool prune(const Graph&) { return false; }
  void visit(const Graph&) { ++count; }
};

}  // namespace

std::uint64_t count_graphs(int n, int e_min, int e_max, int workers) {
  GraphEnumerator gen(n, e_min, e_max);
  EnumerationControl ctl;
  ctl.workers = workers;
  auto parts = enumerate_graphs<Counter>(gen, [] { return Counter{}; }, ctl);
  std::uint64_t total = 0;
  for (const Counter& c : parts) total += c.count;
  return total;
}

}  // namespace triedge
