#include "triedge/graph.hpp"

#include <algorithm>
#include <string>

#include "triedge/errors.hpp"

namespace triedge {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices)
    throw CapacityError("graph order " + std::to_string(n) + " outside [0, 64]");
}

void check_pair(int n, int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n || u == v)
    throw std::invalid_argument("bad edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
}

// Greedy colouring of `cand` in vertex order; colour classes give an upper
// bound on the clique number of any subset.
int colour_bound_order(const Graph& g, Mask cand, std::vector<int>& order, std::vector<int>& bound) {
  order.clear();
  bound.clear();
  int colour = 0;
  Mask uncoloured = cand;
  while (uncoloured) {
    ++colour;
    Mask avail = uncoloured;
    while (avail) {
      int v = std::countr_zero(avail);
      avail &= ~bit(v);
      avail &= ~g.row(v);
      uncoloured &= ~bit(v);
      order.push_back(v);
      bound.push_back(colour);
    }
  }
  return colour;
}

void expand(const Graph& g, Mask current, int size, Mask cand, Mask& best, int& best_size) {
  std::vector<int> order;
  std::vector<int> bound;
  colour_bound_order(g, cand, order, bound);
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    if (size + bound[i] <= best_size) return;
    int v = order[i];
    Mask next = cand & g.row(v);
    if (next == 0) {
      if (size + 1 > best_size) {
        best_size = size + 1;
        best = current | bit(v);
      }
    } else {
      expand(g, current | bit(v), size + 1, next, best, best_size);
    }
    cand &= ~bit(v);
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.adj_[v] = low_bits(n) & ~bit(v);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::complete_bipartite(int p, int q) {
  Graph g(p + q);
  for (int u = 0; u < p; ++u)
    for (int v = p; v < p + q; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_pair(n_, u, v);
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_pair(n_, u, v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

EdgeList Graph::edges() const {
  EdgeList out;
  for (int u = 0; u < n_; ++u)
    for_each_bit(adj_[u] & ~low_bits(u + 1), [&](int v) { out.push_back({u, v}); });
  return out;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int v = 0; v < n_; ++v) g.adj_[v] = ~adj_[v] & low_bits(n_) & ~bit(v);
  return g;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

bool operator<(const Graph& a, const Graph& b) noexcept {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return std::lexicographical_compare(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin(),
                                      b.adj_.begin() + b.n_);
}

std::size_t GraphHash::operator()(const Graph& g) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(g.order());
  for (int v = 0; v < g.order(); ++v) {
    h ^= g.row(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

EdgeList triangular_edges(const Graph& g) {
  EdgeList out;
  for (int u = 0; u < g.order(); ++u)
    for_each_bit(g.row(u) & ~low_bits(u + 1), [&](int v) {
      if (g.row(u) & g.row(v)) out.push_back({u, v});
    });
  return out;
}

int tr_count(const Graph& g) {
  int count = 0;
  for (int u = 0; u < g.order(); ++u)
    for_each_bit(g.row(u) & ~low_bits(u + 1), [&](int v) { count += (g.row(u) & g.row(v)) != 0; });
  return count;
}

Graph non_triangular_subgraph(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for_each_bit(g.row(u) & ~low_bits(u + 1), [&](int v) {
      if ((g.row(u) & g.row(v)) == 0) out.add_edge(u, v);
    });
  return out;
}

Mask max_clique(const Graph& g, Mask within) {
  within &= g.vertices();
  if (within == 0) return 0;
  Mask best = bit(std::countr_zero(within));
  int best_size = 1;
  expand(g, 0, 0, within, best, best_size);
  return best;
}

int clique_number(const Graph& g) { return popcount(max_clique(g, g.vertices())); }

int independence_number(const Graph& g, Mask within) {
  return popcount(max_clique(g.complement(), within));
}

Mask find_independent_set(const Graph& g, Mask within, int size) {
  within &= g.vertices();
  if (size <= 0) return 0;
  // Depth-first over increasing vertex tuples.
  std::function<Mask(Mask, Mask, int)> rec = [&](Mask chosen, Mask cand, int need) -> Mask {
    if (need == 0) return chosen;
    while (popcount(cand) >= need) {
      int v = std::countr_zero(cand);
      cand &= ~bit(v);
      Mask found = rec(chosen | bit(v), cand & ~g.row(v), need - 1);
      if (found) return found;
    }
    return 0;
  };
  return rec(0, within, size);
}

Graph induced(const Graph& g, Mask subset) {
  subset &= g.vertices();
  std::vector<int> keep;
  for_each_bit(subset, [&](int v) { keep.push_back(v); });
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

int edges_within(const Graph& g, Mask subset) {
  int twice = 0;
  for_each_bit(subset, [&](int v) { twice += popcount(g.row(v) & subset); });
  return twice / 2;
}

int edges_between(const Graph& g, Mask x, Mask y) {
  int count = 0;
  for_each_bit(x, [&](int v) { count += popcount(g.row(v) & y); });
  return count;
}

bool is_clique(const Graph& g, Mask subset) {
  bool ok = true;
  for_each_bit(subset, [&](int v) { ok = ok && (subset & ~bit(v) & ~g.row(v)) == 0; });
  return ok;
}

bool is_independent(const Graph& g, Mask subset) {
  bool ok = true;
  for_each_bit(subset, [&](int v) { ok = ok && (g.row(v) & subset) == 0; });
  return ok;
}

bool is_complete_multipartite(const Graph& g) {
  // Non-neighbours of v together with v must all share v's neighbourhood.
  for (int v = 0; v < g.order(); ++v) {
    Mask non = g.vertices() & ~g.row(v);
    bool ok = true;
    for_each_bit(non, [&](int u) { ok = ok && g.row(u) == g.row(v); });
    if (!ok) return false;
  }
  return true;
}

}  // namespace triedge
