#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "triedge/errors.hpp"
#include "triedge/graph.hpp"

namespace triedge {

using Clock = std::chrono::steady_clock;

/// Isomorphism-free generation of all graphs on `n` vertices whose edge
/// count lies in [e_min, e_max], by canonical augmentation one vertex at a
/// time. The vertex removed by the canonical construction path is a vertex of
/// minimum (degree, neighbour-degree sum, triangle count), ties broken by the
/// canonical labelling, so every generated graph is reached from exactly one
/// parent class.
class GraphEnumerator {
 public:
  GraphEnumerator(int n, int e_min, int e_max);

  int order() const noexcept { return n_; }
  int e_min() const noexcept { return lo_[n_]; }
  int e_max() const noexcept { return hi_[n_]; }

  /// Edge-count window a graph on m vertices must fall in to have any
  /// descendant in range.
  int lower_edges(int m) const { return lo_[m]; }
  int upper_edges(int m) const { return hi_[m]; }

  /// Graph on one vertex, in canonical form.
  Graph root() const { return Graph(1); }

  /// Calls `emit` once per isomorphism class of accepted children of
  /// `parent`, each in canonical form.
  void children(const Graph& parent, const std::function<void(const Graph&)>& emit) const;

 private:
  int n_;
  std::vector<int> lo_;
  std::vector<int> hi_;
};

struct EnumerationControl {
  int workers = 1;
  /// Frontier depth (vertex count) at which subtrees become work items.
  int split_order = 6;
  std::optional<Clock::time_point> deadline;
};

/// Visitor contract:
///   bool prune(const Graph&)  -- called on every node; true cuts the subtree
///   void visit(const Graph&)  -- called on every n-vertex graph in range
///
/// One visitor per worker is created by `make`; the returned vector holds
/// them in worker order so the caller can merge results deterministically.
/// Throws BudgetExceeded once the deadline passes.
template <class Visitor, class Factory>
std::vector<Visitor> enumerate_graphs(const GraphEnumerator& gen, Factory make, const EnumerationControl& ctl = {}) {
  const int n = gen.order();
  const int workers = std::max(1, ctl.workers);
  std::vector<Visitor> visitors;
  visitors.reserve(workers);
  for (int w = 0; w < workers; ++w) visitors.push_back(make());

  std::atomic<bool> expired{false};
  std::atomic<std::uint64_t> tick{0};
  auto check_deadline = [&] {
    if (!ctl.deadline) return;
    if ((tick.fetch_add(1, std::memory_order_relaxed) & 1023U) == 0 && Clock::now() > *ctl.deadline)
      expired.store(true, std::memory_order_relaxed);
  };

  std::function<void(const Graph&, Visitor&)> grow = [&](const Graph& g, Visitor& v) {
    if (expired.load(std::memory_order_relaxed)) return;
    check_deadline();
    if (v.prune(g)) return;
    if (g.order() == n) {
      int e = g.edge_count();
      if (e >= gen.e_min() && e <= gen.e_max()) v.visit(g);
      return;
    }
    gen.children(g, [&](const Graph& c) { grow(c, v); });
  };

  // Frontier of subtrees, collected on the calling thread with visitor 0.
  const int split = std::clamp(ctl.split_order, 1, n);
  std::vector<Graph> frontier;
  std::function<void(const Graph&)> collect = [&](const Graph& g) {
    if (visitors[0].prune(g)) return;
    if (g.order() == split) {
      frontier.push_back(g);
      return;
    }
    gen.children(g, collect);
  };
  collect(gen.root());

  std::atomic<std::size_t> next{0};
  auto work = [&](int w) {
    for (std::size_t i = next.fetch_add(1); i < frontier.size(); i = next.fetch_add(1)) {
      const Graph& g = frontier[i];
      if (g.order() == n) {
        int e = g.edge_count();
        if (e >= gen.e_min() && e <= gen.e_max()) visitors[w].visit(g);
      } else {
        gen.children(g, [&](const Graph& c) { grow(c, visitors[w]); });
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  if (expired.load()) throw BudgetExceeded("enumeration exceeded its time budget");
  return visitors;
}

/// Number of isomorphism classes of graphs on n vertices with e in range.
std::uint64_t count_graphs(int n, int e_min, int e_max, int workers = 1);

}  // namespace triedge
