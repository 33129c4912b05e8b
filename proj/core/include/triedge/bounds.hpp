#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triedge/extremal.hpp"
#include "triedge/search.hpp"

namespace triedge {

/// t(n,e), g(n,e) and optionally the exact Tr(n,e) for one pair.
struct BoundsRecord {
  int n = 0;
  int e = 0;
  double t = 0;
  RealParams t_params;
  int g = 0;
  ConstructionParams g_params;
  std::optional<int> tr_exact;
};

struct BoundsOptions {
  bool exact = false;
  SearchOptions search;
};

/// Human-readable list of failed links in t <= Tr <= g and g - t <= 1.5n.
/// The 1.5n gap is only checked for e > n^2/4.
std::vector<std::string> sandwich_violations(const BoundsRecord& r);

/// Throws AssertionViolation if the sandwich fails, CapacityError if an exact
/// value is requested for n > 10.
BoundsRecord bounds(int n, int e, const BoundsOptions& opts = {});

/// Rows for every e in (n^2/4, C(n,2)]. The exact column comes from a single
/// enumeration. Does not throw on sandwich failures; check each row with
/// sandwich_violations.
std::vector<BoundsRecord> sweep_bounds(int n, const BoundsOptions& opts = {});

}  // namespace triedge
