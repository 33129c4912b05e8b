#include <cmath>
#include <functional>

#include <gtest/gtest.h>

#include "support.hpp"
#include "triedge/canonical.hpp"
#include "triedge/extremal.hpp"
#include "triedge/graph6.hpp"
#include "triedge/simplex.hpp"

using namespace triedge;
using namespace triedge::testing;

namespace {

WeightVector random_weights(std::mt19937_64& rng, int n, double zero_prob = 0.0) {
  std::exponential_distribution<> expo(1.0);
  std::bernoulli_distribution zero(zero_prob);
  std::vector<double> x(n);
  double sum = 0;
  for (double& v : x) sum += v = zero(rng) ? 0.0 : expo(rng);
  if (sum == 0) x[0] = sum = 1;
  for (double& v : x) v /= sum;
  return WeightVector(x);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double sum(const std::vector<double>& z) { return std::accumulate(z.begin(), z.end(), 0.0); }
double norm(const std::vector<double>& z) { return std::sqrt(dot(z, z)); }

void expect_monotone(const ReductionTrace& trace) {
  for (const Move& m : trace.moves) {
    ASSERT_EQ(m.before.size(), m.after.size());
    for (std::size_t i = 0; i < m.before.size(); ++i)
      EXPECT_GE(m.after[i], m.before[i] - Tolerances::equality) << to_string(m.kind);
  }
}

// Largest f over the grid {k/steps} on the simplex, n <= 4.
double grid_max(const Graph& g, int steps) {
  const int n = g.order();
  double best = 0;
  std::vector<int> k(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      k[i] = left;
      std::vector<double> x(n);
      for (int j = 0; j < n; ++j) x[j] = double(k[j]) / steps;
      best = std::max(best, quad_form(g, x));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, steps);
  return best;
}

}  // namespace

TEST(WeightVector, Validation) {
  EXPECT_THROW(WeightVector({0.5, -0.1, 0.6}), std::invalid_argument);
  EXPECT_THROW(WeightVector({0.5, 0.4}), std::invalid_argument);
  EXPECT_THROW(WeightVector(std::vector<double>(65, 1.0 / 65)), std::invalid_argument);
  const WeightVector w({0.5, 1e-13, 0.5 - 1e-13});
  EXPECT_EQ(w[1], 0.0);
  EXPECT_EQ(w.support(), Mask{0b101});
  EXPECT_NEAR(w[0] + w[2], 1.0, 1e-15);
  EXPECT_EQ(WeightVector::on_edge(4, {1, 3}).support(), Mask{0b1010});
}

TEST(QuadForm, Examples) {
  EXPECT_NEAR(quad_form(Graph::complete(3), WeightVector::uniform(3)), 1.0 / 3, 1e-15);
  EXPECT_NEAR(quad_form(Graph::complete(2), WeightVector::uniform(2)), 0.25, 1e-15);
  EXPECT_NEAR(quad_form(Graph::cycle(5), WeightVector::uniform(5)), 0.2, 1e-15);
}

TEST(QuadForm, ExactRationalAgreement) {
  const Graph c5 = Graph::cycle(5);
  std::vector<Rational> x(5, Rational(1, 5));
  EXPECT_EQ(quad_form_exact(c5, x), Rational(1, 5));
  EXPECT_EQ(partial_exact(c5, x, 0), Rational(2, 5));
  std::mt19937_64 rng(31);
  for (int it = 0; it < 200; ++it) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = random_graph(rng, n, 0.5);
    std::vector<Rational> q(n);
    std::int64_t total = 0;
    std::vector<std::int64_t> w(n);
    for (auto& v : w) total += v = 1 + static_cast<std::int64_t>(rng() % 20);
    std::vector<double> xd(n);
    for (int i = 0; i < n; ++i) {
      q[i] = Rational(w[i], total);
      xd[i] = double(w[i]) / double(total);
    }
    const Rational f = quad_form_exact(g, q);
    ASSERT_NEAR(quad_form(g, xd), boost::rational_cast<double>(f), 1e-14);
    for (int k = 0; k < n; ++k)
      ASSERT_NEAR(partial(g, xd, k), boost::rational_cast<double>(partial_exact(g, q, k)), 1e-14);
  }
}

TEST(Partial, Examples) {
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(partial(Graph::complete(3), WeightVector::uniform(3), k), 2.0 / 3, 1e-15);
  const Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_NEAR(partial(star, WeightVector::uniform(5), 0), 0.8, 1e-15);
}

TEST(Partial, FiniteDifferenceOracle) {
  std::mt19937_64 rng(32);
  const double h = 1e-6;
  for (int it = 0; it < 300; ++it) {
    const int n = 2 + static_cast<int>(rng() % 12);
    const Graph g = random_graph(rng, n, 0.5);
    const WeightVector x = random_weights(rng, n);
    std::vector<double> v(x.values().begin(), x.values().end());
    for (int k = 0; k < n; ++k) {
      std::vector<double> up = v, down = v;
      up[k] += h;
      down[k] -= h;
      const double fd = (quad_form(g, up) - quad_form(g, down)) / (2 * h);
      ASSERT_NEAR(partial(g, x, k), fd, 1e-8);
    }
  }
}

TEST(BalancedHalfspace, Examples) {
  {
    const std::vector<std::vector<double>> a{{2, 1}};
    const auto z = solve_balanced_halfspace(a);
    EXPECT_NEAR(z[0], 1, 1e-12);
    EXPECT_NEAR(z[1], -1, 1e-12);
  }
  {
    const std::vector<std::vector<double>> a{{1, 1}};
    const auto z = solve_balanced_halfspace(a);
    EXPECT_NEAR(z[0] + z[1], 0, 1e-12);
    EXPECT_NEAR(dot(a[0], z), 0, 1e-12);
    EXPECT_GT(norm(z), 0.5);
  }
  {
    const std::vector<std::vector<double>> a{{1, 0, 0}, {0, 1, 0}};
    const auto z = solve_balanced_halfspace(a);
    EXPECT_NEAR(z[0], 1, 1e-12);
    EXPECT_NEAR(z[1], 1, 1e-12);
    EXPECT_NEAR(z[2], -2, 1e-12);
  }
}

TEST(EqualityVariant, Examples) {
  {
    const std::vector<std::vector<double>> a{{2, 1}};
    const auto z = solve_equality_variant(a, 0);
    const auto w = solve_balanced_halfspace(a);
    EXPECT_NEAR(z[0], w[0], 1e-12);
    EXPECT_NEAR(z[1], w[1], 1e-12);
  }
  {
    const std::vector<std::vector<double>> a{{1, 0, 0}, {0, 1, 0}};
    const auto z = solve_equality_variant(a, 1);
    EXPECT_NEAR(z[0], 0, 1e-12);
    EXPECT_NEAR(z[1], 1, 1e-12);
    EXPECT_NEAR(z[2], -1, 1e-12);
  }
  {
    const std::vector<std::vector<double>> a{{1, 1, 1}, {1, 2, 3}};
    const auto z = solve_equality_variant(a, 0);
    EXPECT_NEAR(dot(a[1], z), 0, 1e-12);
    EXPECT_NEAR(sum(z), 0, 1e-12);
    EXPECT_GE(dot(a[0], z), -1e-12);
    // Proportional to (1, -2, 1).
    EXPECT_NEAR(z[0], z[2], 1e-12);
    EXPECT_NEAR(z[1], -2 * z[0], 1e-12);
    EXPECT_GT(norm(z), 0.5);
  }
}

TEST(BalancedHalfspace, RandomContracts) {
  std::mt19937_64 rng(33);
  std::normal_distribution<> normal;
  for (int it = 0; it < 100000; ++it) {
    const int d = 1 + static_cast<int>(rng() % 3);
    std::vector<std::vector<double>> a(d, std::vector<double>(d + 1));
    for (auto& row : a)
      for (double& v : row) v = (it % 5 == 0) ? std::round(normal(rng) * 2) : normal(rng);
    if (it % 7 == 0 && d > 1) a[1] = a[0];
    const auto z = solve_balanced_halfspace(a);
    ASSERT_EQ(z.size(), static_cast<std::size_t>(d + 1));
    ASSERT_GT(norm(z), 1e-9);
    ASSERT_NEAR(sum(z) / norm(z), 0, 1e-9);
    for (const auto& row : a) ASSERT_GE(dot(row, z) / norm(z), -1e-9);

    const int keep = static_cast<int>(rng() % d);
    const auto w = solve_equality_variant(a, keep);
    ASSERT_GT(norm(w), 1e-9);
    ASSERT_NEAR(sum(w) / norm(w), 0, 1e-9);
    for (int i = 0; i < d; ++i) {
      const double r = dot(a[i], w) / norm(w);
      if (i == keep)
        ASSERT_GE(r, -1e-9);
      else
        ASSERT_NEAR(r, 0, 1e-9 * (1 + norm(a[i])));
    }
  }
}

TEST(SymmetrizeMulti, C5ReachesAnEdge) {
  const Graph c5 = Graph::cycle(5);
  const std::vector<Graph> subs{c5};
  const Symmetrized s = symmetrize_multi(c5, subs, WeightVector::uniform(5));
  EXPECT_EQ(popcount(s.y.support()), 2);
  EXPECT_TRUE(is_clique(c5, s.y.support()));
  EXPECT_GE(quad_form(c5, s.y), 0.2 - 1e-12);
  EXPECT_LE(quad_form(c5, s.y), 0.25 + 1e-12);
  expect_monotone(s.trace);
  // Spreading the weight evenly over the surviving edge reaches the maximum.
  const Graph support = induced(c5, s.y.support());
  EXPECT_NEAR(quad_form(support, WeightVector::uniform(2)), 0.25, 1e-12);
  EXPECT_NEAR(maximize_lagrangian(c5, 5, 0).value, 0.25, 1e-12);
}

TEST(SymmetrizeMulti, CompleteGraphIsFixed) {
  for (int n = 2; n <= 8; ++n) {
    const Graph k = Graph::complete(n);
    const std::vector<Graph> subs{k};
    const Symmetrized s = symmetrize_multi(k, subs, WeightVector::uniform(n));
    EXPECT_TRUE(s.trace.moves.empty());
    for (int i = 0; i < n; ++i) EXPECT_NEAR(s.y[i], 1.0 / n, 1e-15);
  }
}

TEST(SymmetrizeMulti, C4WithItsNonTriangularPart) {
  const Graph c4 = Graph::cycle(4);
  const std::vector<Graph> subs{c4, non_triangular_subgraph(c4)};
  const WeightVector x = WeightVector::uniform(4);
  const Symmetrized s = symmetrize_multi(c4, subs, x);
  for (const Graph& h : subs) {
    EXPECT_GE(quad_form(h, s.y), quad_form(h, x) - 1e-12);
    EXPECT_LE(quad_form(h, s.y), grid_max(h, 60) + 1e-9);
  }
  EXPECT_LE(independence_number(c4, s.y.support()), 2);
  expect_monotone(s.trace);
}

TEST(SymmetrizeMulti, RandomPostconditions) {
  std::mt19937_64 rng(34);
  for (int it = 0; it < 2000; ++it) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph g = random_graph(rng, n, 0.2 + 0.6 * (it % 5) / 5.0);
    const int d = 1 + static_cast<int>(rng() % 3);
    std::vector<Graph> subs{g};
    while (static_cast<int>(subs.size()) < d) {
      Graph h(n);
      for (const Edge& e : g.edges())
        if (rng() & 1U) h.add_edge(e.u, e.v);
      subs.push_back(h);
    }
    const WeightVector x = random_weights(rng, n, 0.2);
    const bool preserve = d > 1 && (it % 3 == 0);
    const SymmetrizeMode mode = preserve ? SymmetrizeMode::preserve_except(0) : SymmetrizeMode::all_nondecreasing();
    const Symmetrized s = symmetrize_multi(g, subs, x, mode);
    ASSERT_LE(independence_number(g, s.y.support()), d);
    const int prev = popcount(x.support());
    for (const Move& m : s.trace.moves) {
      for (int i = 0; i < d; ++i) {
        ASSERT_GE(m.after[i], m.before[i] - Tolerances::equality);
        if (preserve && i != 0) ASSERT_NEAR(m.after[i], m.before[i], Tolerances::equality);
      }
    }
    // Each move zeroes at least one coordinate.
    ASSERT_LE(popcount(s.y.support()), prev - static_cast<int>(s.trace.moves.size()));
    for (int i = 0; i < d; ++i) ASSERT_GE(quad_form(subs[i], s.y), quad_form(subs[i], x) - 1e-9);
  }
}

TEST(SymmetrizeMulti, RejectsBadInput) {
  const Graph c5 = Graph::cycle(5);
  const std::vector<Graph> none;
  EXPECT_THROW(symmetrize_multi(c5, none, WeightVector::uniform(5)), std::invalid_argument);
  const std::vector<Graph> k5{Graph::complete(5)};
  EXPECT_THROW(symmetrize_multi(c5, k5, WeightVector::uniform(5)), std::invalid_argument);
  const std::vector<Graph> self{c5};
  EXPECT_THROW(symmetrize_multi(c5, self, WeightVector::uniform(4)), std::invalid_argument);
}

TEST(MergeMove, IsolatedPair) {
  const Graph g(4);
  const WeightVector y({0.5, 0.5, 0, 0});
  const auto out = merge_move(g, g, y, 0, 1);
  ASSERT_TRUE(out.has_value());
  EXPECT_EQ((*out)[0], 1.0);
  EXPECT_EQ((*out)[1], 0.0);
  EXPECT_EQ(out->support(), Mask{1});
}

TEST(MergeMove, RefusesAdjacentOrWorsePairs) {
  const Graph p3(3, {{0, 1}, {1, 2}});
  const WeightVector u = WeightVector::uniform(3);
  EXPECT_FALSE(merge_move(p3, p3, u, 0, 1).has_value());
  EXPECT_TRUE(merge_move(p3, p3, u, 0, 2).has_value());
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const WeightVector y({0.1, 0.2, 0.3, 0.4});
  const Graph g1 = Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  EXPECT_TRUE(merge_move(g1, star, y, 1, 3).has_value());
  EXPECT_FALSE(merge_move(g1, star, y, 3, 1).has_value());
}

TEST(MergeMove, NeverDecreasesEitherForm) {
  std::mt19937_64 rng(35);
  int applied = 0;
  for (int it = 0; it < 3000; ++it) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g1 = random_graph(rng, n, 0.5);
    const Graph g2 = non_triangular_subgraph(g1);
    const WeightVector y = random_weights(rng, n);
    const int k = static_cast<int>(rng() % n), h = static_cast<int>(rng() % n);
    if (auto out = merge_move(g1, g2, y, k, h)) {
      ++applied;
      ASSERT_GE(quad_form(g1, *out), quad_form(g1, y) - 1e-12);
      ASSERT_GE(quad_form(g2, *out), quad_form(g2, y) - 1e-12);
      ASSERT_EQ((*out)[h], 0.0);
    }
  }
  EXPECT_GT(applied, 100);
}

TEST(EndpointLineSearch, AppliedStepsPreserveG1AndImproveG2) {
  std::mt19937_64 rng(36);
  int applied = 0;
  for (int it = 0; it < 20000 && applied < 200; ++it) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const Graph g1 = random_graph(rng, n, 0.6);
    const Graph g2 = non_triangular_subgraph(g1);
    const WeightVector y = WeightVector::uniform(n);
    std::array<int, 4> q{};
    auto perm = random_permutation(rng, n);
    std::copy_n(perm.begin(), 4, q.begin());
    const auto step = endpoint_line_search(g1, g2, y, q);
    if (!step) continue;
    ++applied;
    ASSERT_NEAR(quad_form(g1, step->y), quad_form(g1, y), 1e-10);
    ASSERT_GE(quad_form(g2, step->y), quad_form(g2, y) - 1e-10);
    ASSERT_LT(popcount(step->y.support()), popcount(y.support()));
  }
  EXPECT_GT(applied, 0);
}

TEST(EndpointLineSearch, RefusesWhenG1WouldChange) {
  const Graph k4 = Graph::complete(4);
  EXPECT_FALSE(endpoint_line_search(k4, Graph(4), WeightVector::uniform(4), {0, 1, 2, 3}).has_value());
}

TEST(ReduceTriangular, ConstructionWitness) {
  const Graph g1 = build_construction({2, 2, 1}, 7);
  const Graph g2 = non_triangular_subgraph(g1);
  ASSERT_EQ(g2.edge_count(), 2);
  const WeightVector x = WeightVector::uniform(5);
  const Reduction r = reduce_triangular(g1, g2, x);
  Edge e;
  ASSERT_TRUE(single_edge_certificate(g1, g2, r.y.support(), &e));
  EXPECT_EQ(e, r.edge);
  EXPECT_TRUE(g2.has_edge(e.u, e.v));
  EXPECT_EQ(edges_within(g2, r.y.support()), 1);
  EXPECT_TRUE(is_clique(g1, r.y.support() & ~bit(e.u) & ~bit(e.v)));
  EXPECT_GE(quad_form(g1, r.y), quad_form(g1, x) - 1e-9);
  EXPECT_GE(quad_form(g2, r.y), quad_form(g2, x) - 1e-9);
  expect_monotone(r.trace);
}

TEST(ReduceTriangular, SingleEdgeWithCompleteRest) {
  // Vertex 0 hangs off a K5 through the edge 01.
  Graph g1 = Graph::complete(6);
  for (int w = 2; w < 6; ++w) g1.remove_edge(0, w);
  const Graph g2 = non_triangular_subgraph(g1);
  ASSERT_EQ(g2, Graph(6, {{0, 1}}));
  const Reduction r = reduce_triangular(g1, g2, WeightVector::uniform(6));
  EXPECT_EQ(r.edge, (Edge{0, 1}));
  EXPECT_TRUE(single_edge_certificate(g1, g2, r.y.support()));
}

TEST(ReduceTriangular, TriangleFreeConcentrates) {
  for (const Graph& g : {Graph::cycle(5), Graph::cycle(6), Graph::complete_bipartite(2, 3), Graph::petersen()}) {
    const Reduction r = reduce_triangular(g, g, WeightVector::uniform(g.order()));
    EXPECT_EQ(popcount(r.y.support()), 2);
    EXPECT_NEAR(quad_form(g, r.y), 0.25, 1e-12);
    EXPECT_TRUE(g.has_edge(r.edge.u, r.edge.v));
  }
}

TEST(ReduceTriangular, RandomStartsHoldPostconditions) {
  std::mt19937_64 rng(37);
  int done = 0;
  for (int it = 0; it < 2000 && done < 300; ++it) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g1 = random_graph(rng, n, 0.6);
    const Graph g2 = non_triangular_subgraph(g1);
    if (g2.edge_count() == 0) continue;
    const WeightVector x = random_weights(rng, n);
    Reduction r;
    try {
      r = reduce_triangular(g1, g2, x);
    } catch (const ReductionStalled&) {
      continue;
    }
    ++done;
    ASSERT_TRUE(single_edge_certificate(g1, g2, r.y.support()));
    ASSERT_GE(quad_form(g1, r.y), quad_form(g1, x) - 1e-9);
    ASSERT_GE(quad_form(g2, r.y), quad_form(g2, x) - 1e-9);
  }
  EXPECT_GE(done, 250);
}

TEST(ReduceTriangular, RejectsBadInput) {
  const Graph k4 = Graph::complete(4);
  EXPECT_THROW(reduce_triangular(k4, Graph(4), WeightVector::uniform(4)), std::invalid_argument);
  EXPECT_THROW(reduce_triangular(k4, Graph(4, {{0, 1}}), WeightVector::uniform(4)), std::invalid_argument);
}

TEST(ReductionLowerBound, ConstructionWitness) {
  const Graph g = build_construction({2, 2, 1}, 7);
  const auto b = reduction_lower_bound(g);
  ASSERT_TRUE(b.has_value());
  EXPECT_LE(b->bound, tr_count(g) + 1e-9);
  EXPECT_EQ(tr_count(g), 5);
  EXPECT_GE(b->bound, t_of(5, 7).value - 1e-6);
}

TEST(ReductionLowerBound, NotApplicable) {
  EXPECT_FALSE(reduction_lower_bound(Graph::complete(5)).has_value());
  EXPECT_THROW(reduction_lower_bound(Graph::cycle(5)), InfeasibleInstance);
}

TEST(ReductionLowerBound, RandomGraphs) {
  std::mt19937_64 rng(38);
  int done = 0;
  while (done < 50) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const int lo = n * n / 4 + 1, hi = n * (n - 1) / 2;
    const Graph g = random_graph_with_edges(rng, n, lo + static_cast<int>(rng() % (hi - lo + 1)));
    const auto b = reduction_lower_bound(g);
    if (!b) continue;
    ++done;
    ASSERT_LE(b->bound, tr_count(g) + 1e-6) << to_graph6(g);
  }
}

TEST(Zykov, Examples) {
  const Graph z = zykov_symmetrize(Graph::cycle(5));
  EXPECT_TRUE(is_complete_multipartite(z));
  EXPECT_EQ(clique_number(z), 2);
  EXPECT_EQ(z.edge_count(), 6);
  EXPECT_EQ(canonical_form(z).form, canonical_form(Graph::complete_bipartite(2, 3)).form);
  EXPECT_EQ(zykov_symmetrize(Graph::complete(4)), Graph::complete(4));
  const Graph k233 = [] {
    Graph g = Graph::complete(7);
    g.remove_edge(0, 1);
    g.remove_edge(2, 3);
    g.remove_edge(2, 4);
    g.remove_edge(3, 4);
    return g;
  }();
  EXPECT_EQ(zykov_symmetrize(k233), k233);
}

TEST(Lagrangian, MotzkinStraus) {
  std::mt19937_64 rng(39);
  for (int it = 0; it < 100; ++it) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = random_graph(rng, n, 0.5);
    const int w = clique_number(g);
    const LagrangianMax m = maximize_lagrangian(g, 20, it);
    ASSERT_NEAR(m.value, (w - 1.0) / (2.0 * w), 1e-6) << to_graph6(g);
    ASSERT_TRUE(is_clique(g, m.y.support()));
  }
}

TEST(Lagrangian, SeedDeterminism) {
  const Graph p = Graph::petersen();
  const auto a = maximize_lagrangian(p, 10, 5), b = maximize_lagrangian(p, 10, 5);
  EXPECT_EQ(std::vector<double>(a.y.values().begin(), a.y.values().end()),
            std::vector<double>(b.y.values().begin(), b.y.values().end()));
}
