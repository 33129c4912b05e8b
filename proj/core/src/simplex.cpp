#include "triedge/simplex.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

namespace triedge {

WeightVector::WeightVector(std::vector<double> x) : x_(std::move(x)) {
  if (x_.size() > static_cast<std::size_t>(kMaxVertices)) throw std::invalid_argument("weight vector longer than 64");
  double sum = 0;
  for (double& v : x_) {
    if (!(v >= -Tolerances::support)) throw std::invalid_argument("negative or NaN weight");
    if (v <= Tolerances::support) v = 0;
    sum += v;
  }
  if (std::abs(sum - 1) > 1e-6) throw std::invalid_argument("weights do not sum to 1");
  support_ = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    x_[i] /= sum;
    if (x_[i] > 0) support_ |= bit(static_cast<int>(i));
  }
}

WeightVector WeightVector::uniform(int n) { return uniform_on(n, low_bits(n)); }

WeightVector WeightVector::uniform_on(int n, Mask support) {
  std::vector<double> x(n, 0.0);
  const double w = 1.0 / popcount(support & low_bits(n));
  for_each_bit(support & low_bits(n), [&](int v) { x[v] = w; });
  return WeightVector(std::move(x));
}

WeightVector WeightVector::on_edge(int n, Edge e) {
  std::vector<double> x(n, 0.0);
  x[e.u] = x[e.v] = 0.5;
  return WeightVector(std::move(x));
}

double quad_form(const Graph& g, std::span<const double> x) {
  double f = 0;
  for (int u = 0; u < g.order(); ++u)
    for_each_bit(g.row(u) & ~low_bits(u + 1), [&](int v) { f += x[u] * x[v]; });
  return f;
}

double quad_form(const Graph& g, const WeightVector& x) { return quad_form(g, x.values()); }

double partial(const Graph& g, std::span<const double> x, int k) {
  double s = 0;
  for_each_bit(g.row(k), [&](int l) { s += x[l]; });
  return s;
}

double partial(const Graph& g, const WeightVector& x, int k) { return partial(g, x.values(), k); }

Rational quad_form_exact(const Graph& g, std::span<const Rational> x) {
  Rational f = 0;
  for (int u = 0; u < g.order(); ++u)
    for_each_bit(g.row(u) & ~low_bits(u + 1), [&](int v) { f += x[u] * x[v]; });
  return f;
}

Rational partial_exact(const Graph& g, std::span<const Rational> x, int k) {
  Rational s = 0;
  for_each_bit(g.row(k), [&](int l) { s += x[l]; });
  return s;
}

namespace {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Rows a_1..a_d followed by the all-ones row.
Matrix constraint_rows(std::span<const std::vector<double>> a) {
  const auto d = static_cast<Eigen::Index>(a.size());
  if (d < 1) throw std::invalid_argument("need at least one constraint vector");
  Matrix m(d + 1, d + 1);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (static_cast<Eigen::Index>(a[i].size()) != d + 1)
      throw std::invalid_argument("constraint vectors must have length d+1");
    for (Eigen::Index j = 0; j <= d; ++j) m(i, j) = a[i][j];
  }
  m.row(d).setOnes();
  return m;
}

bool nearly_singular(const Matrix& m) {
  Matrix scaled = m;
  for (Eigen::Index i = 0; i < scaled.rows(); ++i) {
    double norm = scaled.row(i).norm();
    if (norm == 0) return true;
    scaled.row(i) /= norm;
  }
  return std::abs(scaled.fullPivLu().determinant()) < Tolerances::singular;
}

std::vector<double> null_vector(const Matrix& m) {
  Matrix scaled = m;
  for (Eigen::Index i = 0; i < scaled.rows(); ++i) {
    double norm = scaled.row(i).norm();
    if (norm > 0) scaled.row(i) /= norm;
  }
  Eigen::JacobiSVD<Matrix> svd(scaled, Eigen::ComputeFullV);
  Vector z = svd.matrixV().col(scaled.cols() - 1);
  // Remove the residual component along the all-ones row exactly.
  z.array() -= z.mean();
  z.normalize();
  return {z.data(), z.data() + z.size()};
}

std::vector<double> solve_rhs(const Matrix& m, const Vector& rhs) {
  Vector z = m.fullPivLu().solve(rhs);
  z.array() -= z.mean();
  return {z.data(), z.data() + z.size()};
}

}  // namespace

std::vector<double> solve_balanced_halfspace(std::span<const std::vector<double>> a) {
  Matrix m = constraint_rows(a);
  if (nearly_singular(m)) return null_vector(m);
  Vector rhs = Vector::Ones(m.rows());
  rhs(m.rows() - 1) = 0;
  return solve_rhs(m, rhs);
}

std::vector<double> solve_equality_variant(std::span<const std::vector<double>> a, int keep) {
  Matrix m = constraint_rows(a);
  if (keep < 0 || keep >= static_cast<int>(a.size())) throw std::invalid_argument("keep index out of range");
  if (nearly_singular(m)) return null_vector(m);
  Vector rhs = Vector::Zero(m.rows());
  rhs(keep) = 1;
  return solve_rhs(m, rhs);
}

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::independent_set: return "independent_set";
    case MoveKind::merge: return "merge";
    case MoveKind::line_search: return "line_search";
    case MoveKind::concentrate: return "concentrate";
  }
  return "unknown";
}

namespace {

std::vector<double> f_values(std::span<const Graph> graphs, const WeightVector& y) {
  std::vector<double> out;
  out.reserve(graphs.size());
  for (const Graph& g : graphs) out.push_back(quad_form(g, y));
  return out;
}

bool is_spanning_subgraph(const Graph& sub, const Graph& g) {
  if (sub.order() != g.order()) return false;
  for (int v = 0; v < g.order(); ++v)
    if (sub.row(v) & ~g.row(v)) return false;
  return true;
}

}  // namespace

Symmetrized symmetrize_multi(const Graph& g, std::span<const Graph> subgraphs, const WeightVector& x,
                             SymmetrizeMode mode) {
  const int n = g.order();
  const int d = static_cast<int>(subgraphs.size());
  if (d < 1) throw std::invalid_argument("symmetrize_multi needs at least one subgraph");
  if (x.size() != n) throw std::invalid_argument("weight vector size does not match graph order");
  for (const Graph& sub : subgraphs)
    if (!is_spanning_subgraph(sub, g)) throw std::invalid_argument("tracked graph is not a subgraph of g");
  if (mode.free_index && (*mode.free_index < 0 || *mode.free_index >= d))
    throw std::invalid_argument("free index out of range");

  Symmetrized out{x, {}};
  WeightVector& y = out.y;
  for (int pass = 0; pass <= n; ++pass) {
    const Mask indep = find_independent_set(g, y.support(), d + 1);
    if (indep == 0) return out;

    std::vector<int> u;
    for_each_bit(indep, [&](int v) { u.push_back(v); });
    std::vector<std::vector<double>> a(d, std::vector<double>(d + 1));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j <= d; ++j) a[i][j] = partial(subgraphs[i], y, u[j]);

    std::vector<double> z =
        mode.free_index ? solve_equality_variant(a, *mode.free_index) : solve_balanced_halfspace(a);

    // Largest step keeping y >= 0.
    double t = std::numeric_limits<double>::infinity();
    int hit = -1;
    for (int j = 0; j <= d; ++j) {
      if (z[j] < 0) {
        double tj = y[u[j]] / -z[j];
        if (tj < t) {
          t = tj;
          hit = j;
        }
      }
    }
    if (hit < 0) throw InvariantViolation("balanced direction has no negative coordinate");

    std::vector<double> next(y.values().begin(), y.values().end());
    for (int j = 0; j <= d; ++j) next[u[j]] = std::max(0.0, next[u[j]] + t * z[j]);
    next[u[hit]] = 0;

    Move move{MoveKind::independent_set, u, t, f_values(subgraphs, y), {}};
    y = WeightVector(std::move(next));
    move.after = f_values(subgraphs, y);
    out.trace.moves.push_back(std::move(move));
  }
  throw InvariantViolation("symmetrize_multi did not terminate within n passes");
}

std::optional<WeightVector> merge_move(const Graph& g1, const Graph& g2, const WeightVector& y, int k, int h) {
  if (k == h || g1.has_edge(k, h)) return std::nullopt;
  if (!((y.support() >> k) & 1U) || !((y.support() >> h) & 1U)) return std::nullopt;
  if (partial(g1, y, k) < partial(g1, y, h) - Tolerances::merge) return std::nullopt;
  if (partial(g2, y, k) < partial(g2, y, h) - Tolerances::merge) return std::nullopt;
  std::vector<double> next(y.values().begin(), y.values().end());
  next[k] += next[h];
  next[h] = 0;
  return WeightVector(std::move(next));
}

std::optional<LineSearchStep> endpoint_line_search(const Graph& g1, const Graph& g2, const WeightVector& y,
                                                   std::array<int, 4> quad) {
  const auto [i, j, k, l] = quad;
  std::vector<double> dir(y.size(), 0.0);
  dir[i] += 1;
  dir[j] += 1;
  dir[k] -= 1;
  dir[l] -= 1;
  auto linear = [&](const Graph& g) {
    double s = 0;
    for (int v : {i, j, k, l}) s += dir[v] * partial(g, y, v);
    return s;
  };
  // f(G, y + t dir) = f(G, y) + t * linear(G) + t^2 * f(G, dir).
  if (quad_form(g1, dir) != 0 || std::abs(linear(g1)) > Tolerances::equality) return std::nullopt;

  const double left = std::max(-y[i], -y[j]);
  const double right = std::min(y[k], y[l]);
  if (right - left <= Tolerances::support) return std::nullopt;

  const double lin2 = linear(g2);
  const double quad2 = quad_form(g2, dir);
  auto gain = [&](double t) { return t * lin2 + t * t * quad2; };
  const double t = gain(right) > gain(left) ? right : left;
  if (gain(t) < -Tolerances::equality) return std::nullopt;

  std::vector<double> next(y.values().begin(), y.values().end());
  for (int v : {i, j, k, l}) next[v] = std::max(0.0, next[v] + t * dir[v]);
  // Pin the coordinate that defines the chosen endpoint.
  if (t == left) next[y[i] <= y[j] ? i : j] = 0;
  else next[y[k] <= y[l] ? k : l] = 0;
  return LineSearchStep{WeightVector(std::move(next)), t};
}

namespace {

constexpr int kReplicatorSteps = 200;

// x_i <- x_i * d_i f / (2 f): a growth transform that never decreases f.
void replicator_ascent(const Graph& g, std::vector<double>& x, int steps) {
  const int n = g.order();
  std::vector<double> grad(n);
  for (int s = 0; s < steps; ++s) {
    const double f = quad_form(g, x);
    if (f <= 0) return;
    for (int i = 0; i < n; ++i) grad[i] = partial(g, x, i);
    for (int i = 0; i < n; ++i) x[i] *= grad[i] / (2 * f);
    double sum = 0;
    for (double& v : x) {
      if (v <= Tolerances::support) v = 0;
      sum += v;
    }
    for (double& v : x) v /= sum;
  }
}

}  // namespace

LagrangianMax maximize_lagrangian(const Graph& g, int restarts, std::uint64_t seed) {
  const int n = g.order();
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  LagrangianMax best{-1, {}};
  const Graph tracked[] = {g};
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> x(n);
    double sum = 0;
    for (double& v : x) sum += (v = expo(rng));
    for (double& v : x) v /= sum;
    replicator_ascent(g, x, kReplicatorSteps);
    Symmetrized s = symmetrize_multi(g, tracked, WeightVector(std::move(x)));
    Mask clique = s.y.support();
    for (int v = 0; v < n; ++v)
      if (!((clique >> v) & 1U) && (g.row(v) & clique) == clique) clique |= bit(v);
    WeightVector y = WeightVector::uniform_on(n, clique);
    double f = quad_form(g, y);
    if (f > best.value) best = {f, y};
  }
  return best;
}

}  // namespace triedge
