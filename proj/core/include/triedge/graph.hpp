#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace triedge {

using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

struct Edge {
  int u = 0;
  int v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Lexicographically ordered (u < v) edges.
using EdgeList = std::vector<Edge>;

/// Dense simple graph on at most 64 vertices, one adjacency word per vertex.
///
/// Rows are kept symmetric with a zero diagonal. Vertices are 0-indexed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, std::span<const Edge> edges);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph complete_bipartite(int p, int q);
  static Graph petersen();

  int order() const noexcept { return n_; }
  Mask vertices() const noexcept { return low_bits(n_); }
  Mask row(int v) const noexcept { return adj_[v]; }

  bool has_edge(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
  int degree(int v) const noexcept { return std::popcount(adj_[v]); }
  int edge_count() const noexcept;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  EdgeList edges() const;
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept;
  friend bool operator<(const Graph& a, const Graph& b) noexcept;

 private:
  int n_ = 0;
  std::array<Mask, kMaxVertices> adj_{};
};

/// Edges uv with a common neighbour, i.e. adj[u] & adj[v] != 0.
EdgeList triangular_edges(const Graph& g);

/// Number of triangular edges, Tr(G).
int tr_count(const Graph& g);

/// Same vertex set; keeps only the edges that lie in no triangle.
Graph non_triangular_subgraph(const Graph& g);

/// Exact clique number by branch and bound over bit rows.
int clique_number(const Graph& g);

/// Maximum clique restricted to `within`, returned as a vertex mask.
Mask max_clique(const Graph& g, Mask within);

/// Exact independence number of g[within].
int independence_number(const Graph& g, Mask within);

/// First independent set of size `size` inside `within` in lexicographic
/// order of vertex tuples, or 0 if none exists.
Mask find_independent_set(const Graph& g, Mask within, int size);

/// Graph on popcount(subset) vertices, relabelled in increasing vertex order.
Graph induced(const Graph& g, Mask subset);

/// Number of edges with both ends in `subset`.
int edges_within(const Graph& g, Mask subset);

/// Number of edges with one end in `x` and the other in `y` (x, y disjoint).
int edges_between(const Graph& g, Mask x, Mask y);

bool is_clique(const Graph& g, Mask subset);
bool is_independent(const Graph& g, Mask subset);

/// True iff non-adjacency is an equivalence relation (no induced K1 + K2).
bool is_complete_multipartite(const Graph& g);

inline int popcount(Mask m) { return std::popcount(m); }

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    f(v);
  }
}

struct GraphHash {
  std::size_t operator()(const Graph& g) const noexcept;
};

}  // namespace triedge
