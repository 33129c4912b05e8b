#include "triedge/extremal.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "triedge/errors.hpp"

namespace triedge {

namespace {

constexpr int kScanPoints = 10000;
constexpr double kGolden = 0.6180339887498949;

std::string pair_text(int n, double e) {
  return "(n=" + std::to_string(n) + ", e=" + std::to_string(e) + ")";
}

double ceil_tol(double x) { return std::ceil(x - 1e-9); }

}  // namespace

bool integer_feasible(const ConstructionParams& p, std::int64_t e) {
  if (p.a < 0 || p.b < 0 || p.c < 0) return false;
  std::int64_t a = p.a, b = p.b, c = p.c;
  return choose2(a) + a * b + b * c >= e;
}

bool real_feasible(const RealParams& p, double e, double tol) {
  if (p.a < -tol || p.b < -tol || p.c < -tol) return false;
  return p.a * p.a / 2 + p.a * p.b + p.b * p.c >= e - tol;
}

GValue g_of(int n, std::int64_t e) {
  if (n < 3) throw InfeasibleInstance("g(n,e) needs n >= 3, got n=" + std::to_string(n));
  if (e < 0 || e > choose2(n)) throw InfeasibleInstance("no graph with " + pair_text(n, static_cast<double>(e)));

  bool found = false;
  std::int64_t best = 0;
  ConstructionParams arg;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      ConstructionParams p{a, b, n - a - b};
      if (!integer_feasible(p, e)) continue;
      std::int64_t v = e - static_cast<std::int64_t>(p.b) * p.c;
      bool better = !found || v < best || (v == best && (p.c > arg.c || (p.c == arg.c && p.b > arg.b)));
      if (better) {
        found = true;
        best = v;
        arg = p;
      }
    }
  }
  // a = n is always feasible for e <= C(n,2).
  return {static_cast<int>(std::max<std::int64_t>(best, 0)), arg};
}

std::optional<TValue> t_inner(int n, double e, double a) {
  const double s = n - a;
  if (s < 0) return std::nullopt;
  const double disc = static_cast<double>(n) * n - 4 * e + 2 * a * a;
  if (disc < 0) return std::nullopt;
  const double root = std::sqrt(disc);
  const double lo = std::max(0.0, (n - root) / 2);
  const double hi = std::min(s, (n + root) / 2);
  if (lo > hi) return std::nullopt;
  const double b = std::clamp(s / 2, lo, hi);
  return TValue{e - b * (s - b), RealParams{a, b, s - b}};
}

TValue t_of(int n, double e) {
  if (n < 1 || e < 0 || e > static_cast<double>(n) * n / 2)
    throw InfeasibleInstance("t(n,e) undefined for " + pair_text(n, e));

  const double inf = std::numeric_limits<double>::infinity();
  auto value_at = [&](double a) {
    auto r = t_inner(n, e, a);
    return r ? r->value : inf;
  };

  TValue best{inf, {}};
  double best_a = 0;
  int best_k = 0;
  const double step = static_cast<double>(n) / kScanPoints;
  auto consider = [&](double a, int k) {
    auto r = t_inner(n, e, a);
    if (r && r->value < best.value) {
      best = *r;
      best_a = a;
      best_k = k;
    }
  };
  for (int k = 0; k <= kScanPoints; ++k) consider(k * step, k);
  // Feasibility frontier a^2 >= (4e - n^2)/2.
  const double frontier = std::sqrt(std::max(0.0, (4 * e - static_cast<double>(n) * n) / 2));
  consider(frontier, static_cast<int>(frontier / step));
  if (!std::isfinite(best.value)) throw InvariantViolation("t(n,e) scan found no feasible point for " + pair_text(n, e));

  double lo = std::max(0.0, std::min(best_a, (best_k - 1) * step));
  double hi = std::min(static_cast<double>(n), std::max(best_a, (best_k + 1) * step));
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = value_at(x1);
  double f2 = value_at(x2);
  while (hi - lo > 1e-13 * std::max(1.0, static_cast<double>(n))) {
    if (f1 <= f2 && !(std::isinf(f1) && std::isinf(f2))) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = value_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = value_at(x2);
    }
  }
  for (double a : {lo, hi, x1, x2}) consider(a, best_k);
  return best;
}

ConstructionParams round_params(const RealParams& p, int n) {
  int a = static_cast<int>(ceil_tol(p.a + 1));
  int b = static_cast<int>(ceil_tol(p.b));
  a = std::clamp(a, 0, n);
  b = std::clamp(b, 0, n - a);
  return {a, b, n - a - b};
}

Graph build_construction(const ConstructionParams& p, std::int64_t e) {
  const std::int64_t a = p.a, b = p.b, c = p.c;
  if (p.a < 2 || p.b < 0 || p.c < 0)
    throw ConstructionError("G(a,b,c) needs a >= 2 and b, c >= 0");
  if (p.order() > kMaxVertices) throw CapacityError("construction exceeds 64 vertices");
  const std::int64_t upper = e - b * c;
  if (!(choose2(a - 1) + a * b < upper && upper <= choose2(a) + a * b))
    throw ConstructionError("e - bc = " + std::to_string(upper) + " outside (C(a-1,2)+ab, C(a,2)+ab] for (a,b,c)=(" +
                            std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");

  const int n = p.order();
  Graph g(n);
  const int b0 = p.a;
  const int c0 = p.a + p.b;
  for (int u = 0; u < p.a; ++u)
    for (int v = u + 1; v < p.a; ++v) g.add_edge(u, v);
  for (int u = 0; u < p.a; ++u)
    for (int v = b0; v < c0; ++v) g.add_edge(u, v);
  for (int u = b0; u < c0; ++u)
    for (int v = c0; v < n; ++v) g.add_edge(u, v);

  std::int64_t deficiency = choose2(a) + a * b - upper;
  for (int u = 0; u < p.a && deficiency > 0; ++u)
    for (int v = u + 1; v < p.a && deficiency > 0; ++v, --deficiency) g.remove_edge(u, v);

  if (g.edge_count() != e) throw ConstructionError("construction has wrong edge count");
  if (tr_count(g) != upper)
    throw ConstructionError("construction has " + std::to_string(tr_count(g)) + " triangular edges, expected " +
                            std::to_string(upper));
  return g;
}

}  // namespace triedge
