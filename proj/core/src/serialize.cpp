#include "triedge/serialize.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace triedge {

namespace {

using nlohmann::json;

json params_json(const std::optional<ConstructionParams>& p) {
  if (!p) return nullptr;
  return json{{"a", p->a}, {"b", p->b}, {"c", p->c}};
}

json bounds_json(const BoundsRecord& r) {
  json j{{"n", r.n}, {"e", r.e}, {"t", r.t}, {"g", r.g}, {"a", r.g_params.a}, {"b", r.g_params.b}, {"c", r.g_params.c}};
  if (r.tr_exact) j["tr_exact"] = *r.tr_exact;
  return j;
}

}  // namespace

std::string to_json(const BoundsRecord& r) { return bounds_json(r).dump(); }

std::string bounds_csv_header() { return "n,e,t,g,a,b,c,tr_exact"; }

std::string to_csv_row(const BoundsRecord& r) {
  std::ostringstream s;
  s.precision(17);
  s << r.n << ',' << r.e << ',' << r.t << ',' << r.g << ',' << r.g_params.a << ',' << r.g_params.b << ','
    << r.g_params.c << ',';
  if (r.tr_exact) s << *r.tr_exact;
  return s.str();
}

std::string to_json(const SearchResult& r) {
  json verdicts = json::array();
  for (const auto& v : r.family_verdicts) verdicts.push_back(params_json(v));
  json j{{"n", r.n},
         {"e", r.e},
         {"tr_min", r.tr_min},
         {"witnesses", r.witnesses},
         {"family_verdicts", verdicts},
         {"minimizer_count", r.minimizer_count},
         {"nodes_explored", r.nodes_explored}};
  return j.dump();
}

std::string to_json(const ConjectureReport& r) {
  json rows = json::array();
  for (const ConjectureRow& row : r.rows) {
    json jr{{"e", row.e}, {"g", row.g}, {"status", to_string(row.status)}};
    jr["tr"] = row.tr ? json(*row.tr) : json(nullptr);
    if (row.status != ConjectureRow::Status::open) {
      jr["minimizers"] = row.minimizers;
      jr["members"] = row.members;
      jr["degenerate"] = row.degenerate;
      jr["violations"] = row.violations;
    }
    rows.push_back(std::move(jr));
  }
  return json{{"n", r.n}, {"ok", r.ok()}, {"rows", rows}}.dump();
}

std::string to_json_line(const Move& m) {
  return json{{"kind", to_string(m.kind)}, {"vertices", m.vertices}, {"t", m.t}, {"before", m.before}, {"after", m.after}}
      .dump();
}

std::string to_json_lines(const ReductionTrace& trace) {
  std::string out;
  for (const Move& m : trace.moves) {
    out += to_json_line(m);
    out += '\n';
  }
  return out;
}

}  // namespace triedge
