#include "bellrec/graph6.hpp"

#include <cctype>
#include <sstream>

namespace bellrec {

namespace {

constexpr int kOffset = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  int v = static_cast<unsigned char>(c) - kOffset;
  if (v < 0 || v > 63) throw Graph6Error(std::string("invalid graph6 character '") + c + "'");
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Graph6Error("empty graph6 string");
  std::size_t pos = 0;
  long n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') throw Graph6Error("graph6 order too large");
    if (text.size() < 4) throw Graph6Error("truncated graph6 size field");
    n = (static_cast<long>(sextet(text[1])) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    pos = 4;
  } else {
    n = sextet(text[0]);
    pos = 1;
  }
  if (n > Graph::kMaxVertices) throw Graph6Error("graph6 order exceeds 64 vertices");
  const long bits = n * (n - 1) / 2;
  const std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != expected)
    throw Graph6Error("graph6 length mismatch: expected " + std::to_string(expected) + " data bytes, got " +
                      std::to_string(text.size() - pos));
  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = sextet(text[pos + static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  // Padding bits must be zero for a canonical string.
  if (bits % 6 != 0) {
    int last = sextet(text.back());
    if (last & ((1 << (6 - bits % 6)) - 1)) throw Graph6Error("graph6 padding bits are not zero");
  }
  return g;
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(from_graph6(t));
  }
  return out;
}

}  // namespace bellrec
