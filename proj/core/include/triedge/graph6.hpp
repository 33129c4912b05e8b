#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "triedge/graph.hpp"

namespace triedge {

/// Decode one graph6 string (dense format, optional ">>graph6<<" header).
/// Throws ParseError carrying the byte offset of the first problem.
Graph parse_graph6(std::string_view text);

/// Encode in graph6 (dense) format, no header, no newline.
std::string to_graph6(const Graph& g);

/// Reads graph6 lines one at a time, skipping blank lines.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}

  /// False at end of input. Parse errors are rethrown with the line number.
  bool next(Graph& out);
  std::size_t line_number() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

}  // namespace triedge
