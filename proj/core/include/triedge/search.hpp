#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "triedge/enumerate.hpp"
#include "triedge/extremal.hpp"
#include "triedge/graph.hpp"

namespace triedge {

/// Largest order the native exhaustive search accepts.
inline constexpr int kMaxSearchOrder = 10;

/// (a, b, c) with b, c >= 1 such that g is in G(a,b,c), if any.
///
/// The non-triangular edges must form a complete bipartite graph on sides
/// X, Y; both orientations (B, C) = (X, Y), (Y, X) are tried with A the rest,
/// checking B and C independent, C joined only to B, a >= 2 and
/// e(G[A]) + e(G[A,B]) > C(a-1,2) + ab.
std::optional<ConstructionParams> is_in_family(const Graph& g);

/// Degenerate reading with c = 0: an independent B of size b and A = V - B,
/// a >= 2, with e(G) > C(a-1,2) + ab. Only meaningful when every edge is
/// triangular. Returns the largest such b.
std::optional<ConstructionParams> degenerate_family_member(const Graph& g);

struct SearchOptions {
  int workers = 1;
  /// Witnesses kept per edge count; 0 keeps all of them.
  std::size_t witness_cap = 100;
  /// Start the branch and bound at g(n,e), inclusive.
  bool seed_with_construction = true;
  /// Classify every minimiser with is_in_family (conjecture mode).
  bool classify_minimizers = false;
  std::optional<Clock::time_point> deadline;
};

struct SearchResult {
  int n = 0;
  int e = 0;
  int tr_min = 0;
  /// Canonical graph6 strings attaining tr_min, sorted, at most witness_cap.
  std::vector<std::string> witnesses;
  /// Parallel to `witnesses`.
  std::vector<std::optional<ConstructionParams>> family_verdicts;
  /// Isomorphism classes attaining tr_min (uncapped).
  std::uint64_t minimizer_count = 0;
  std::uint64_t nodes_explored = 0;

  /// Filled in conjecture mode: minimisers that are members, degenerate
  /// members, or neither (the last listed as graph6, capped like witnesses).
  std::uint64_t family_members = 0;
  std::uint64_t degenerate_members = 0;
  std::uint64_t non_members = 0;
  std::vector<std::string> non_member_witnesses;
};

/// Exact Tr(n,e) by isomorphism-free enumeration with pruning on the number
/// of edges already forced into triangles. Throws CapacityError for n > 10.
SearchResult brute_tr(int n, int e, const SearchOptions& opts = {});

/// One enumeration serving every e in [e_min, e_max]; results in e order.
std::vector<SearchResult> brute_tr_range(int n, int e_min, int e_max, const SearchOptions& opts = {});

/// Minimum Tr over a graph6 stream of n-vertex e-edge graphs (for orders the
/// native search does not reach). Duplicates are collapsed by canonical form.
/// Throws StreamError on a mismatched record or an empty stream.
SearchResult brute_tr_from_stream(int n, int e, std::istream& in, const SearchOptions& opts = {});

struct EfrCheck {
  int n = 0;
  int e = 0;
  int expected = 0;
  int tr = 0;
  bool ok() const noexcept { return tr == expected; }
};

/// Exact Tr(n, floor(n^2/4)+1) next to 2 floor(n/2) + 1, for 4 <= n <= 10.
EfrCheck efr_check(int n, const SearchOptions& opts = {});
bool verify_efr(int n, const SearchOptions& opts = {});

struct ConjectureRow {
  enum class Status { ok, degenerate_pass, violation, open };

  int e = 0;
  int g = 0;
  std::optional<int> tr;
  Status status = Status::ok;
  std::uint64_t minimizers = 0;
  std::uint64_t members = 0;
  std::uint64_t degenerate = 0;
  std::vector<std::string> violations;
};

std::string to_string(ConjectureRow::Status s);

struct ConjectureReport {
  int n = 0;
  std::vector<ConjectureRow> rows;

  bool ok() const;
};

/// Edge counts on which every minimiser is expected to lie in G(n,e): all
/// e > n^2/4 for n <= 8, otherwise e >= C(n,2) - (3n - 13).
std::pair<int, int> conjecture_dense_range(int n);

/// Re-verifies membership of every minimiser on the dense range by exhaustive
/// search. Tr(10,27) is listed as open and not computed.
ConjectureReport check_family_conjecture_dense(int n, const SearchOptions& opts = {});

}  // namespace triedge
