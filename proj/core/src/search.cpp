#include "triedge/search.hpp"

#include <algorithm>
#include <climits>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_set>

#include "triedge/canonical.hpp"
#include "triedge/graph6.hpp"

namespace triedge {

namespace {

struct SharedBounds {
  int e_min = 0;
  bool complement = false;
  std::unique_ptr<std::atomic<int>[]> best;
  int size = 0;

  int max_bound() const {
    int m = 0;
    for (int i = 0; i < size; ++i) m = std::max(m, best[i].load(std::memory_order_relaxed));
    return m;
  }

  void lower(int idx, int value) {
    int cur = best[idx].load(std::memory_order_relaxed);
    while (value < cur && !best[idx].compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
  }
};

struct EdgeTally {
  int best = INT_MAX;
  std::uint64_t count = 0;
  std::uint64_t members = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t non_members = 0;
  std::set<std::string> witnesses;
  std::set<std::string> non_member_witnesses;
};

void insert_capped(std::set<std::string>& set, std::string s, std::size_t cap) {
  set.insert(std::move(s));
  if (cap != 0 && set.size() > cap) set.erase(std::prev(set.end()));
}

class TrVisitor {
 public:
  TrVisitor(SharedBounds* shared, const SearchOptions* opts) : shared_(shared), opts_(opts), tally_(shared->size) {}

  bool prune(const Graph& node) {
    ++nodes_;
    const Graph g = shared_->complement ? node.complement() : node;
    return tr_count(g) > shared_->max_bound();
  }

  void visit(const Graph& node) {
    const Graph g = shared_->complement ? node.complement() : node;
    const int idx = g.edge_count() - shared_->e_min;
    const int tr = tr_count(g);
    EdgeTally& t = tally_[idx];
    if (tr > std::min(t.best, shared_->best[idx].load(std::memory_order_relaxed))) return;
    if (tr < t.best) {
      t = EdgeTally{};
      t.best = tr;
    }
    shared_->lower(idx, tr);
    ++t.count;

    const std::size_t cap = opts_->witness_cap;
    const std::string g6 = to_graph6(canonical_form(g).form);
    insert_capped(t.witnesses, g6, cap);

    if (opts_->classify_minimizers) {
      if (is_in_family(g)) {
        ++t.members;
      } else if (tr == g.edge_count() && degenerate_family_member(g)) {
        ++t.degenerate;
      } else {
        ++t.non_members;
        insert_capped(t.non_member_witnesses, g6, cap);
      }
    }
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<EdgeTally>& tally() const { return tally_; }

 private:
  SharedBounds* shared_;
  const SearchOptions* opts_;
  std::vector<EdgeTally> tally_;
  std::uint64_t nodes_ = 0;
};

void check_search_order(int n) {
  if (n > kMaxSearchOrder)
    throw CapacityError("exhaustive search supports n <= " + std::to_string(kMaxSearchOrder) + ", got n=" +
                        std::to_string(n) + "; pipe an external enumeration through brute_tr_from_stream");
  if (n < 1) throw InfeasibleInstance("search needs n >= 1");
}

std::vector<std::string> take(const std::set<std::string>& s, std::size_t cap) {
  std::vector<std::string> out;
  for (const std::string& x : s) {
    if (cap != 0 && out.size() >= cap) break;
    out.push_back(x);
  }
  return out;
}

void fill_verdicts(SearchResult& r) {
  r.family_verdicts.clear();
  for (const std::string& w : r.witnesses) r.family_verdicts.push_back(is_in_family(parse_graph6(w)));
}

}  // namespace

std::vector<SearchResult> brute_tr_range(int n, int e_min, int e_max, const SearchOptions& opts) {
  check_search_order(n);
  const int total = static_cast<int>(choose2(n));
  if (e_min < 0 || e_max > total || e_min > e_max)
    throw InfeasibleInstance("edge range [" + std::to_string(e_min) + ", " + std::to_string(e_max) +
                             "] invalid for n=" + std::to_string(n));

  SharedBounds shared;
  shared.e_min = e_min;
  shared.size = e_max - e_min + 1;
  shared.complement = e_min + e_max > total;
  shared.best = std::make_unique<std::atomic<int>[]>(shared.size);
  for (int e = e_min; e <= e_max; ++e) {
    int start = e;
    if (opts.seed_with_construction && n >= 3) start = g_of(n, e).value;
    shared.best[e - e_min].store(start);
  }

  GraphEnumerator gen = shared.complement ? GraphEnumerator(n, total - e_max, total - e_min)
                                          : GraphEnumerator(n, e_min, e_max);
  EnumerationControl ctl;
  ctl.workers = opts.workers;
  ctl.split_order = std::max(1, n - 3);
  ctl.deadline = opts.deadline;
  auto visitors = enumerate_graphs<TrVisitor>(gen, [&] { return TrVisitor(&shared, &opts); }, ctl);

  std::vector<SearchResult> out;
  for (int e = e_min; e <= e_max; ++e) {
    const int idx = e - e_min;
    SearchResult r;
    r.n = n;
    r.e = e;
    r.tr_min = INT_MAX;
    for (const TrVisitor& v : visitors) r.tr_min = std::min(r.tr_min, v.tally()[idx].best);
    if (r.tr_min == INT_MAX) throw InvariantViolation("search found no graph with n=" + std::to_string(n) +
                                                      ", e=" + std::to_string(e));
    std::set<std::string> witnesses;
    std::set<std::string> non_members;
    for (const TrVisitor& v : visitors) {
      r.nodes_explored += v.nodes();
      const EdgeTally& t = v.tally()[idx];
      if (t.best != r.tr_min) continue;
      r.minimizer_count += t.count;
      r.family_members += t.members;
      r.degenerate_members += t.degenerate;
      r.non_members += t.non_members;
      witnesses.insert(t.witnesses.begin(), t.witnesses.end());
      non_members.insert(t.non_member_witnesses.begin(), t.non_member_witnesses.end());
    }
    r.witnesses = take(witnesses, opts.witness_cap);
    r.non_member_witnesses = take(non_members, opts.witness_cap);
    fill_verdicts(r);
    out.push_back(std::move(r));
  }
  return out;
}

SearchResult brute_tr(int n, int e, const SearchOptions& opts) {
  check_search_order(n);
  return brute_tr_range(n, e, e, opts).front();
}

SearchResult brute_tr_from_stream(int n, int e, std::istream& in, const SearchOptions& opts) {
  Graph6Reader reader(in);
  Graph g;
  SearchResult r;
  r.n = n;
  r.e = e;
  r.tr_min = INT_MAX;
  std::set<std::string> witnesses;
  std::unordered_set<Graph, GraphHash> seen;
  while (reader.next(g)) {
    if (g.order() != n)
      throw StreamError("expected " + std::to_string(n) + " vertices, got " + std::to_string(g.order()),
                        reader.line_number());
    if (g.edge_count() != e)
      throw StreamError("expected " + std::to_string(e) + " edges, got " + std::to_string(g.edge_count()),
                        reader.line_number());
    ++r.nodes_explored;
    const int tr = tr_count(g);
    if (tr > r.tr_min) continue;
    Graph form = canonical_form(g).form;
    if (tr < r.tr_min) {
      r.tr_min = tr;
      r.minimizer_count = 0;
      witnesses.clear();
      seen.clear();
    }
    if (!seen.insert(form).second) continue;
    ++r.minimizer_count;
    insert_capped(witnesses, to_graph6(form), opts.witness_cap);
  }
  if (r.nodes_explored == 0) throw StreamError("no graphs in input stream", 0);
  r.witnesses = take(witnesses, opts.witness_cap);
  fill_verdicts(r);
  return r;
}

EfrCheck efr_check(int n, const SearchOptions& opts) {
  if (n < 4) throw InfeasibleInstance("verify_efr needs n >= 4");
  check_search_order(n);
  EfrCheck c;
  c.n = n;
  c.e = n * n / 4 + 1;
  c.expected = 2 * (n / 2) + 1;
  c.tr = brute_tr(n, c.e, opts).tr_min;
  return c;
}

bool verify_efr(int n, const SearchOptions& opts) { return efr_check(n, opts).ok(); }

std::string to_string(ConjectureRow::Status s) {
  switch (s) {
    case ConjectureRow::Status::ok: return "ok";
    case ConjectureRow::Status::degenerate_pass: return "degenerate-pass";
    case ConjectureRow::Status::violation: return "violation";
    case ConjectureRow::Status::open: return "open";
  }
  return "unknown";
}

bool ConjectureReport::ok() const {
  return std::none_of(rows.begin(), rows.end(),
                      [](const ConjectureRow& r) { return r.status == ConjectureRow::Status::violation; });
}

std::pair<int, int> conjecture_dense_range(int n) {
  const int total = static_cast<int>(choose2(n));
  int lo = n * n / 4 + 1;
  if (n > 8) lo = std::max(lo, total - (3 * n - 13));
  return {lo, total};
}

ConjectureReport check_family_conjecture_dense(int n, const SearchOptions& opts) {
  check_search_order(n);
  if (n < 3) throw InfeasibleInstance("conjecture check needs n >= 3");
  const auto [lo, hi] = conjecture_dense_range(n);
  SearchOptions o = opts;
  o.classify_minimizers = true;

  ConjectureReport report;
  report.n = n;
  if (n == 10) {
    ConjectureRow open;
    open.e = 27;
    open.g = g_of(10, 27).value;
    open.status = ConjectureRow::Status::open;
    report.rows.push_back(open);
  }
  for (const SearchResult& r : brute_tr_range(n, lo, hi, o)) {
    ConjectureRow row;
    row.e = r.e;
    row.g = g_of(n, r.e).value;
    row.tr = r.tr_min;
    row.minimizers = r.minimizer_count;
    row.members = r.family_members;
    row.degenerate = r.degenerate_members;
    row.violations = r.non_member_witnesses;
    if (r.tr_min != row.g || r.non_members > 0) row.status = ConjectureRow::Status::violation;
    else if (r.degenerate_members > 0) row.status = ConjectureRow::Status::degenerate_pass;
    else row.status = ConjectureRow::Status::ok;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace triedge
