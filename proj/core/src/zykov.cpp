#include "triedge/simplex.hpp"

namespace triedge {

Graph zykov_symmetrize(const Graph& g) {
  const int n = g.order();
  Graph h = g;
  const long cap = 4L * n * n * n + 16;
  for (long step = 0; step < cap; ++step) {
    int best_i = -1;
    int best_j = -1;
    int best_gap = -1;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j || h.has_edge(i, j)) continue;
        const int gap = h.degree(i) - h.degree(j);
        const bool eligible = gap > 0 || (gap == 0 && i < j && h.row(i) != h.row(j));
        if (eligible && gap > best_gap) {
          best_gap = gap;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_i < 0) return h;
    for_each_bit(h.row(best_j), [&](int u) { h.remove_edge(best_j, u); });
    for_each_bit(h.row(best_i), [&](int u) { h.add_edge(best_j, u); });
  }
  throw InvariantViolation("zykov_symmetrize did not settle");
}

}  // namespace triedge
