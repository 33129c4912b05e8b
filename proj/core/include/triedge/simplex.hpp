#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "triedge/errors.hpp"
#include "triedge/extremal.hpp"
#include "triedge/graph.hpp"

namespace triedge {

/// Every numerical threshold used by the symmetrisation code.
struct Tolerances {
  /// Entries at or below this are flushed to exactly zero.
  static constexpr double support = 1e-12;
  /// Slack allowed in the comparisons that gate a merge.
  static constexpr double merge = 1e-12;
  /// "Exactly preserved" / "non-decreasing" along a trace.
  static constexpr double equality = 1e-10;
  /// |det| of the row-normalised system below which it counts as singular.
  static constexpr double singular = 1e-10;
  /// Contract checks on final f-values.
  static constexpr double assertion = 1e-9;
  /// Cross-checks against independently computed bounds.
  static constexpr double loose = 1e-6;
};

/// A point of the simplex S_n. Entries <= Tolerances::support are flushed to 0
/// and the rest rescaled to sum to 1.
class WeightVector {
 public:
  WeightVector() = default;
  /// Throws std::invalid_argument on negative entries, n > 64, or a sum more
  /// than 1e-6 away from 1.
  explicit WeightVector(std::vector<double> x);

  static WeightVector uniform(int n);
  static WeightVector uniform_on(int n, Mask support);
  /// Weight 1/2 on each end of `e`.
  static WeightVector on_edge(int n, Edge e);

  int size() const noexcept { return static_cast<int>(x_.size()); }
  double operator[](int i) const { return x_[i]; }
  std::span<const double> values() const noexcept { return x_; }
  Mask support() const noexcept { return support_; }

 private:
  std::vector<double> x_;
  Mask support_ = 0;
};

/// f(G, x) = sum over edges ij of x_i x_j, in lexicographic edge order.
double quad_form(const Graph& g, const WeightVector& x);
double quad_form(const Graph& g, std::span<const double> x);

/// d f(G, x) / d x_k = sum of x_l over neighbours l of k.
double partial(const Graph& g, const WeightVector& x, int k);
double partial(const Graph& g, std::span<const double> x, int k);

using Rational = boost::rational<std::int64_t>;

/// Exact rational evaluation of f(G, x); used by golden tests.
Rational quad_form_exact(const Graph& g, std::span<const Rational> x);
Rational partial_exact(const Graph& g, std::span<const Rational> x, int k);

/// Given a_1..a_d in R^{d+1}, returns z != 0 with sum z = 0 and a_i . z >= 0.
///
/// With A = [a_1 .. a_d, 1]: if the row-normalised A^T is singular, z is a
/// unit null vector of A^T (all a_i . z = 0); otherwise z solves
/// A^T z = (1, ..., 1, 0).
std::vector<double> solve_balanced_halfspace(std::span<const std::vector<double>> a);

/// Sharper variant keeping every constraint but `keep` (0-based) at equality:
/// z != 0, sum z = 0, a_keep . z >= 0 and a_i . z = 0 for i != keep. Solves
/// A^T z = e_keep, or returns a unit null vector when A^T is singular.
std::vector<double> solve_equality_variant(std::span<const std::vector<double>> a, int keep);

enum class MoveKind { independent_set, merge, line_search, concentrate };

std::string to_string(MoveKind kind);

/// One applied weight move and the tracked f-values around it.
struct Move {
  MoveKind kind = MoveKind::independent_set;
  std::vector<int> vertices;
  double t = 0;
  std::vector<double> before;
  std::vector<double> after;
};

struct ReductionTrace {
  std::vector<Move> moves;
};

/// Which tracked forms must be preserved exactly. With `free_index` unset all
/// forms are only required not to decrease.
struct SymmetrizeMode {
  std::optional<int> free_index;

  static SymmetrizeMode all_nondecreasing() { return {}; }
  static SymmetrizeMode preserve_except(int index) { return {index}; }
};

struct Symmetrized {
  WeightVector y;
  ReductionTrace trace;
};

/// Multi-graph support reduction. While G[support] contains an independent
/// set of size d+1 (d = number of tracked subgraphs), every tracked f is
/// linear along directions supported on that set; a balanced half-space
/// direction is followed until a coordinate hits zero. On exit
/// alpha(G[support(y)]) <= d and no tracked f has decreased.
///
/// Each subgraph must be a spanning subgraph of `g`.
Symmetrized symmetrize_multi(const Graph& g, std::span<const Graph> subgraphs, const WeightVector& x,
                             SymmetrizeMode mode = {});

/// Moves all of y_h onto y_k when k, h are non-adjacent in g1 and
/// d_k f(G_i, y) >= d_h f(G_i, y) for both graphs. nullopt if inapplicable.
std::optional<WeightVector> merge_move(const Graph& g1, const Graph& g2, const WeightVector& y, int k, int h);

struct LineSearchStep {
  WeightVector y;
  double t = 0;
};

/// Moves along e_i + e_j - e_k - e_l to whichever end of the feasible interval
/// gives the larger f(g2); the left end on ties. Applicable only when the
/// direction leaves f(g1) unchanged, the interval is non-degenerate, and f(g2)
/// does not drop.
std::optional<LineSearchStep> endpoint_line_search(const Graph& g1, const Graph& g2, const WeightVector& y,
                                                   std::array<int, 4> quad);

/// Raised when no improving move applies but the reduction postcondition is
/// still unmet. Carries the moves applied so far.
class ReductionStalled : public Error {
 public:
  ReductionStalled(const std::string& what, ReductionTrace trace, WeightVector y)
      : Error(what), trace_(std::move(trace)), y_(std::move(y)) {}
  const ReductionTrace& trace() const noexcept { return trace_; }
  const WeightVector& last() const noexcept { return y_; }

 private:
  ReductionTrace trace_;
  WeightVector y_;
};

struct Reduction {
  WeightVector y;
  Edge edge;
  ReductionTrace trace;
};

/// True iff g2[support] has exactly one edge and g1[support] minus its ends is
/// a clique. The surviving edge is written to `edge` when given.
bool single_edge_certificate(const Graph& g1, const Graph& g2, Mask support, Edge* edge = nullptr);

/// Finds y with f(g1,y) >= f(g1,x), f(g2,y) >= f(g2,x) whose support K has
/// exactly one g2-edge uv and g1[K - {u,v}] complete.
///
/// g2 must be a non-empty spanning subgraph of g1 made of edges lying in no
/// triangle of g1. Throws ReductionStalled if the move loop gets stuck and
/// std::invalid_argument on bad input.
Reduction reduce_triangular(const Graph& g1, const Graph& g2, const WeightVector& x);

struct TriangularBound {
  double bound = 0;
  RealParams params;
  WeightVector y;
  Edge edge;
};

/// Lower bound e - bc <= Tr(G) extracted from a reduction started at the
/// uniform vector. nullopt when every edge of g is triangular. Throws
/// InfeasibleInstance if e(G) <= n^2/4 and AssertionViolation if any link of
/// the certificate chain fails.
std::optional<TriangularBound> reduction_lower_bound(const Graph& g);

/// Vertex-copying symmetrisation: while some non-adjacent i, j have
/// deg(i) > deg(j), or equal degrees, N(i) != N(j) and i < j, replace N(j) by
/// N(i). Pairs with the largest degree gap go first, then lexicographic.
/// The result is complete multipartite.
Graph zykov_symmetrize(const Graph& g);

struct LagrangianMax {
  double value = 0;
  WeightVector y;
};

/// Best f(G, .) reached from `restarts` Dirichlet(1) starts: each start is
/// improved by replicator steps, symmetrised with d = 1 (support becomes a
/// clique), grown greedily to a maximal clique and spread uniformly over it.
LagrangianMax maximize_lagrangian(const Graph& g, int restarts, std::uint64_t seed);

}  // namespace triedge
