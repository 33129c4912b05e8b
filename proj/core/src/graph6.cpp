#include "triedge/graph6.hpp"

#include "triedge/errors.hpp"

namespace triedge {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);

  long n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~')
      throw ParseError("graph order too large for 64-vertex graphs", pos);
    if (pos + 4 > text.size()) throw ParseError("truncated order field", text.size());
    for (std::size_t k = 1; k <= 3; ++k) {
      char c = text[pos + k];
      if (!printable(c)) throw ParseError("invalid order byte", pos + k);
      n = (n << 6) | (c - kBias);
    }
    pos += 4;
  } else {
    if (!printable(text[pos])) throw ParseError("invalid order byte", pos);
    n = text[pos] - kBias;
    pos += 1;
  }
  if (n < 1) throw ParseError("graph order must be at least 1", pos - 1);
  if (n > kMaxVertices) throw ParseError("graph order " + std::to_string(n) + " exceeds 64", pos - 1);

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("adjacency data too short", text.size());
  if (text.size() - pos > bytes) throw ParseError("trailing bytes after adjacency data", pos + bytes);

  Graph g(order);
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      char c = text[pos + k / 6];
      if (!printable(c)) throw ParseError("invalid adjacency byte", pos + k / 6);
      if (((c - kBias) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bytes > 0) {
    std::size_t last = pos + bytes - 1;
    if (!printable(text[last])) throw ParseError("invalid adjacency byte", last);
    int pad = static_cast<int>(bytes * 6 - bits);
    if ((text[last] - kBias) & ((1 << pad) - 1)) throw ParseError("non-zero padding bits", last);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
  return out;
}

bool Graph6Reader::next(Graph& out) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty()) continue;
    try {
      out = parse_graph6(line);
    } catch (const ParseError& err) {
      throw ParseError(err.detail(), err.offset(), line_);
    }
    return true;
  }
  return false;
}

}  // namespace triedge
