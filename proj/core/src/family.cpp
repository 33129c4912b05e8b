#include <array>

#include "triedge/search.hpp"

namespace triedge {

namespace {

// Two-colours the non-isolated vertices of f; false if f is not bipartite.
bool bipartition(const Graph& f, Mask& x, Mask& y) {
  x = y = 0;
  Mask unseen = 0;
  for (int v = 0; v < f.order(); ++v)
    if (f.row(v)) unseen |= bit(v);
  while (unseen) {
    Mask side[2] = {bit(std::countr_zero(unseen)), 0};
    Mask frontier = side[0];
    int colour = 0;
    while (frontier) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) { next |= f.row(v); });
      colour ^= 1;
      if (next & side[colour ^ 1]) return false;
      next &= ~side[colour];
      side[colour] |= next;
      frontier = next;
    }
    x |= side[0];
    y |= side[1];
    unseen &= ~(side[0] | side[1]);
  }
  return true;
}

}  // namespace

std::optional<ConstructionParams> is_in_family(const Graph& g) {
  const Graph f = non_triangular_subgraph(g);
  const int fe = f.edge_count();
  if (fe == 0) return std::nullopt;
  Mask x = 0;
  Mask y = 0;
  if (!bipartition(f, x, y)) return std::nullopt;
  if (fe != popcount(x) * popcount(y)) return std::nullopt;

  // Prefer the orientation with the larger C.
  std::array<std::pair<Mask, Mask>, 2> orientations{{{x, y}, {y, x}}};
  if (popcount(x) > popcount(y)) std::swap(orientations[0], orientations[1]);
  for (auto [b_set, c_set] : orientations) {
    const Mask a_set = g.vertices() & ~(b_set | c_set);
    const std::int64_t a = popcount(a_set);
    const std::int64_t b = popcount(b_set);
    const std::int64_t c = popcount(c_set);
    if (a < 2) continue;
    if (!is_independent(g, b_set) || !is_independent(g, c_set)) continue;
    if (edges_between(g, b_set, c_set) != b * c) continue;
    bool c_only_to_b = true;
    for_each_bit(c_set, [&](int v) { c_only_to_b = c_only_to_b && (g.row(v) & ~b_set) == 0; });
    if (!c_only_to_b) continue;
    const std::int64_t dense = edges_within(g, a_set) + edges_between(g, a_set, b_set);
    if (dense <= choose2(a - 1) + a * b) continue;
    return ConstructionParams{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
  }
  return std::nullopt;
}

std::optional<ConstructionParams> degenerate_family_member(const Graph& g) {
  const int n = g.order();
  const std::int64_t e = g.edge_count();
  const int alpha = independence_number(g, g.vertices());
  for (int b = alpha; b >= 0; --b) {
    const std::int64_t a = n - b;
    if (a < 2) continue;
    if (e > choose2(a - 1) + a * b) return ConstructionParams{static_cast<int>(a), b, 0};
  }
  return std::nullopt;
}

}  // namespace triedge
