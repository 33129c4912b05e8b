#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "triedge/enumerate.hpp"
#include "triedge/graph.hpp"

namespace triedge::testing {

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Graph random_graph_with_edges(std::mt19937_64& rng, int n, int e) {
  EdgeList all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(e);
  return Graph(n, all);
}

/// g relabelled so that vertex v becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// One representative per isomorphism class on n vertices.
inline std::vector<Graph> all_graphs(int n) {
  struct Collect {
    std::vector<Graph>* out;
    bool prune(const Graph&) { return false; }
    void visit(const Graph& g) { out->push_back(g); }
  };
  std::vector<Graph> out;
  GraphEnumerator gen(n, 0, n * (n - 1) / 2);
  enumerate_graphs<Collect>(gen, [&] { return Collect{&out}; });
  return out;
}

/// Every labelled graph on n vertices (n <= 6), by edge bitmask.
inline std::vector<Graph> all_labelled_graphs(int n) {
  EdgeList slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  std::vector<Graph> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((m >> i) & 1U) g.add_edge(slots[i].u, slots[i].v);
    out.push_back(g);
  }
  return out;
}

}  // namespace triedge::testing
