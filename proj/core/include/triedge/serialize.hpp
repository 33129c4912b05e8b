#pragma once

#include <string>

#include "triedge/bounds.hpp"
#include "triedge/search.hpp"
#include "triedge/simplex.hpp"

namespace triedge {

/// {"n","e","t","g","a","b","c"[,"tr_exact"]}; (a,b,c) are the g minimiser.
std::string to_json(const BoundsRecord& r);
std::string bounds_csv_header();
std::string to_csv_row(const BoundsRecord& r);

std::string to_json(const SearchResult& r);
std::string to_json(const ConjectureReport& r);

/// One JSON object per move: kind, vertices, t, before, after.
std::string to_json_line(const Move& m);
/// Newline-terminated JSON lines, one per move.
std::string to_json_lines(const ReductionTrace& trace);

}  // namespace triedge
