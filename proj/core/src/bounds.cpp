#include "triedge/bounds.hpp"

#include <sstream>

namespace triedge {

namespace {

constexpr double kTol = 1e-9;

BoundsRecord formulas(int n, int e) {
  if (n < 3 || e < 0 || e > choose2(n))
    throw InfeasibleInstance("no bounds for n=" + std::to_string(n) + ", e=" + std::to_string(e));
  BoundsRecord r;
  r.n = n;
  r.e = e;
  const TValue t = t_of(n, e);
  r.t = t.value;
  r.t_params = t.params;
  const GValue g = g_of(n, e);
  r.g = g.value;
  r.g_params = g.params;
  return r;
}

}  // namespace

std::vector<std::string> sandwich_violations(const BoundsRecord& r) {
  std::vector<std::string> out;
  auto fail = [&](const std::string& what) {
    std::ostringstream s;
    s << "(n=" << r.n << ", e=" << r.e << "): " << what;
    out.push_back(s.str());
  };
  const bool dense = 4L * r.e > static_cast<long>(r.n) * r.n;
  const double gap = 1.5 * r.n;
  if (r.t > r.g + kTol) fail("t > g");
  if (dense && r.g > r.t + gap + kTol) fail("g - t > 1.5n");
  if (r.tr_exact) {
    const int tr = *r.tr_exact;
    if (r.t > tr + kTol) fail("t > Tr");
    if (tr > r.g) fail("Tr > g");
    if (dense && r.g - tr > gap + kTol) fail("g - Tr > 1.5n");
  }
  return out;
}

BoundsRecord bounds(int n, int e, const BoundsOptions& opts) {
  BoundsRecord r = formulas(n, e);
  if (opts.exact) r.tr_exact = brute_tr(n, e, opts.search).tr_min;
  if (auto bad = sandwich_violations(r); !bad.empty()) throw AssertionViolation(bad.front());
  return r;
}

std::vector<BoundsRecord> sweep_bounds(int n, const BoundsOptions& opts) {
  const int lo = n * n / 4 + 1;
  const int hi = static_cast<int>(choose2(n));
  std::vector<BoundsRecord> rows;
  for (int e = lo; e <= hi; ++e) rows.push_back(formulas(n, e));
  if (opts.exact && lo <= hi) {
    auto exact = brute_tr_range(n, lo, hi, opts.search);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].tr_exact = exact[i].tr_min;
  }
  return rows;
}

}  // namespace triedge
