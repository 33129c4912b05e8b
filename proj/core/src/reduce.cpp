#include "triedge/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace triedge {

namespace {

std::vector<double> tracked_values(const Graph& g1, const Graph& g2, const WeightVector& y) {
  return {quad_form(g1, y), quad_form(g2, y)};
}

void check_reduction_input(const Graph& g1, const Graph& g2, const WeightVector& x) {
  if (g1.order() != g2.order() || x.size() != g1.order())
    throw std::invalid_argument("reduce_triangular: size mismatch");
  if (g2.edge_count() == 0) throw std::invalid_argument("reduce_triangular: g2 has no edges");
  for (const Edge& e : g2.edges()) {
    if (!g1.has_edge(e.u, e.v)) throw std::invalid_argument("reduce_triangular: g2 is not a subgraph of g1");
    if (g1.row(e.u) & g1.row(e.v)) throw std::invalid_argument("reduce_triangular: g2 edge lies in a triangle");
  }
}

EdgeList edges_inside(const Graph& g, Mask subset) {
  EdgeList out;
  for_each_bit(subset, [&](int u) {
    for_each_bit(g.row(u) & subset & ~low_bits(u + 1), [&](int v) { out.push_back({u, v}); });
  });
  return out;
}

}  // namespace

bool single_edge_certificate(const Graph& g1, const Graph& g2, Mask support, Edge* edge) {
  EdgeList inside = edges_inside(g2, support);
  if (inside.size() != 1) return false;
  const Edge e = inside.front();
  if (!is_clique(g1, support & ~bit(e.u) & ~bit(e.v))) return false;
  if (edge) *edge = e;
  return true;
}

Reduction reduce_triangular(const Graph& g1, const Graph& g2, const WeightVector& x) {
  check_reduction_input(g1, g2, x);
  const int n = g1.order();
  const Graph tracked[] = {g1, g2};

  Symmetrized start = symmetrize_multi(g1, tracked, x);
  ReductionTrace trace = std::move(start.trace);
  WeightVector y = std::move(start.y);

  auto record = [&](MoveKind kind, std::vector<int> vertices, double t, const WeightVector& next) {
    trace.moves.push_back({kind, std::move(vertices), t, tracked_values(g1, g2, y), tracked_values(g1, g2, next)});
    y = next;
  };

  if (quad_form(g1, y) <= 0.25) {
    EdgeList inside = edges_inside(g2, y.support());
    const Edge e = inside.empty() ? g2.edges().front() : inside.front();
    record(MoveKind::concentrate, {e.u, e.v}, 0, WeightVector::on_edge(n, e));
  }

  for (int pass = 0; pass <= n; ++pass) {
    const Mask support = y.support();
    Edge survivor;
    if (single_edge_certificate(g1, g2, support, &survivor)) return {y, survivor, std::move(trace)};

    bool moved = false;
    // 1. Merge h into k for a non-adjacent pair dominated in both graphs.
    for (int k = 0; k < n && !moved; ++k) {
      if (!((support >> k) & 1U)) continue;
      for (int h = k + 1; h < n && !moved; ++h) {
        if (!((support >> h) & 1U) || g1.has_edge(k, h)) continue;
        for (auto [to, from] : {std::pair{k, h}, std::pair{h, k}}) {
          if (auto next = merge_move(g1, g2, y, to, from)) {
            record(MoveKind::merge, {to, from}, y[from], *next);
            moved = true;
            break;
          }
        }
      }
    }
    if (moved) continue;

    // 2. Trade weight between two disjoint g2 edges along a g1-neutral line.
    EdgeList inside = edges_inside(g2, support);
    for (std::size_t p = 0; p < inside.size() && !moved; ++p) {
      for (std::size_t q = p + 1; q < inside.size() && !moved; ++q) {
        const Edge e = inside[p];
        const Edge f = inside[q];
        if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
        if (auto step = endpoint_line_search(g1, g2, y, {e.u, e.v, f.u, f.v})) {
          record(MoveKind::line_search, {e.u, e.v, f.u, f.v}, step->t, step->y);
          moved = true;
        }
      }
    }
    if (moved) continue;

    // 3. An independent triple is left: one more d = 2 symmetrisation pass.
    if (find_independent_set(g1, support, 3)) {
      Symmetrized s = symmetrize_multi(g1, tracked, y);
      for (Move& m : s.trace.moves) trace.moves.push_back(std::move(m));
      y = std::move(s.y);
      continue;
    }

    throw ReductionStalled("no improving move applies but the support still holds " +
                               std::to_string(edges_inside(g2, support).size()) + " g2 edges",
                           std::move(trace), y);
  }
  throw ReductionStalled("reduction did not finish within n passes", std::move(trace), y);
}

std::optional<TriangularBound> reduction_lower_bound(const Graph& g) {
  const int n = g.order();
  const std::int64_t e = g.edge_count();
  if (4 * e <= static_cast<std::int64_t>(n) * n)
    throw InfeasibleInstance("triangular-edge bound needs e > n^2/4");
  const Graph g2 = non_triangular_subgraph(g);
  if (g2.edge_count() == 0) return std::nullopt;

  Reduction red = reduce_triangular(g, g2, WeightVector::uniform(n));
  const double y1 = std::max(red.y[red.edge.u], red.y[red.edge.v]);
  const double y2 = std::min(red.y[red.edge.u], red.y[red.edge.v]);
  const double nn = n;
  const double b = y1 * nn;
  const double c = y2 * nn;
  const double a = nn - b - c;
  const double bound = static_cast<double>(e) - b * c;

  const double start = static_cast<double>(e) / (nn * nn);
  const double reached = quad_form(g, red.y);
  const double relaxed = (b * c + a * b + a * a / 2) / (nn * nn);
  if (start > reached + Tolerances::assertion)
    throw AssertionViolation("f(G, y) fell below e/n^2 during the reduction");
  if (reached > relaxed + Tolerances::assertion)
    throw AssertionViolation("f(G, y) exceeds (bc + ab + a^2/2)/n^2");

  const double t = t_of(n, static_cast<double>(e)).value;
  if (bound < t - Tolerances::loose) throw AssertionViolation("extracted bound e - bc lies below t(n,e)");
  if (tr_count(g) < bound - Tolerances::loose) throw AssertionViolation("Tr(G) lies below the extracted bound");
  return TriangularBound{bound, RealParams{a, b, c}, std::move(red.y), red.edge};
}

}  // namespace triedge
