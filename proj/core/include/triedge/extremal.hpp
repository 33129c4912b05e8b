#pragma once

#include <cstdint>
#include <optional>

#include "triedge/graph.hpp"

namespace triedge {

/// Part sizes (a, b, c) of the family G(a,b,c): A almost complete and almost
/// complete to B, B x C complete bipartite, B and C independent, C joined to
/// B only.
struct ConstructionParams {
  int a = 0;
  int b = 0;
  int c = 0;

  int order() const noexcept { return a + b + c; }
  friend constexpr bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

/// Real relaxation of ConstructionParams.
struct RealParams {
  double a = 0;
  double b = 0;
  double c = 0;
};

struct GValue {
  int value = 0;
  ConstructionParams params;
};

struct TValue {
  double value = 0;
  RealParams params;
};

constexpr std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

/// C(a,2) + ab + bc >= e.
bool integer_feasible(const ConstructionParams& p, std::int64_t e);

/// a^2/2 + ab + bc >= e - tol.
bool real_feasible(const RealParams& p, double e, double tol = 1e-9);

/// g(n,e) = min{ e - bc : a+b+c = n, C(a,2)+ab+bc >= e } over nonnegative
/// integers, by exhaustive scan of (a, b). Ties go to the largest c, then the
/// largest b. The value is clamped at 0: for e <= n^2/4 the formula would
/// otherwise go negative while Tr(n,e) = 0.
/// Throws InfeasibleInstance unless 3 <= n and 0 <= e <= C(n,2).
GValue g_of(int n, std::int64_t e);

/// t(n,e) = min{ e - bc : a+b+c = n, a,b,c >= 0 real, a^2/2+ab+bc >= e }.
///
/// For fixed a the constraint reads b^2 - n b + (e - a^2/2) <= 0, an interval
/// of b; the concave inner objective b(n-a-b) is maximised at the projection
/// of (n-a)/2 onto that interval. The outer problem over a in [0,n] is a dense
/// scan followed by golden-section refinement around the best grid point.
/// Absolute accuracy 1e-9. Unlike g_of the value is not clamped.
/// Throws InfeasibleInstance unless 0 <= e <= n^2/2.
TValue t_of(int n, double e);

/// Inner problem of t_of for a fixed a: the minimum of e - bc, or nullopt if
/// no b is feasible.
std::optional<TValue> t_inner(int n, double e, double a);

/// Rounds a real optimum to (ceil(a+1), ceil(b), n - a' - b'); when a'+b'
/// exceeds n, b' (then a') is reduced so that c' = 0.
ConstructionParams round_params(const RealParams& p, int n);

/// Member of G(a,b,c) with exactly e edges. Vertices 0..a-1 form A, then B,
/// then C. All of B x C and A x B are present; inside A the deficiency
/// C(a,2)+ab+bc-e edges are removed in lexicographic order.
///
/// Requires a >= 2 and C(a-1,2)+ab < e-bc <= C(a,2)+ab; throws
/// ConstructionError otherwise, or if the result does not have exactly e-bc
/// triangular edges.
Graph build_construction(const ConstructionParams& p, std::int64_t e);

}  // namespace triedge
