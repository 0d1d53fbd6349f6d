#include "cliquevec/graph_io.hpp"

#include <sstream>
#include <stdexcept>

namespace cliquevec {

namespace {

constexpr int kG6Offset = 63;

void append_bits(std::string& out, int& bit_pos, unsigned char& current,
                 bool bit) {
  if (bit) current |= static_cast<unsigned char>(1 << (5 - bit_pos));
  if (++bit_pos == 6) {
    out.push_back(static_cast<char>(current + kG6Offset));
    bit_pos = 0;
    current = 0;
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Offset));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Offset));
    out.push_back(static_cast<char>((n & 0x3f) + kG6Offset));
  } else {
    throw std::invalid_argument("to_graph6: graph too large for graph6");
  }
  int bit_pos = 0;
  unsigned char current = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      append_bits(out, bit_pos, current, g.has_edge(row, col));
    }
  }
  if (bit_pos != 0) {
    out.push_back(static_cast<char>(current + kG6Offset));
  }
  return out;
}

Graph from_graph6(std::string_view text) {
  // Trim a trailing newline so files written one-graph-per-line parse.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw std::invalid_argument("from_graph6: empty input");
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) {
      throw std::invalid_argument("from_graph6: truncated input");
    }
    int c = static_cast<unsigned char>(text[pos++]);
    if (c < kG6Offset || c > 126) {
      throw std::invalid_argument("from_graph6: byte out of range");
    }
    return c - kG6Offset;
  };

  long long n;
  int first = next();
  if (first != 63) {
    n = first;
  } else {
    long long a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  }
  if (n > kMaxExplicitVertices) {
    throw ResourceError("from_graph6: vertex count exceeds the explicit cap");
  }

  Graph g(static_cast<int>(n));
  int bits_left = 0;
  int chunk = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (bits_left == 0) {
        chunk = next();
        bits_left = 6;
      }
      if (chunk & (1 << (bits_left - 1))) g.add_edge(row, col);
      --bits_left;
    }
  }
  if (pos != text.size()) {
    throw std::invalid_argument("from_graph6: trailing bytes");
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (g.has_edge(u, v)) out << (u + 1) << ' ' << (v + 1) << '\n';
    }
  }
  return out.str();
}

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  long long n;
  if (!(in >> tag >> n) || tag != "n" || n < 0) {
    throw std::invalid_argument("from_edge_list: expected header line 'n <count>'");
  }
  if (n > kMaxExplicitVertices) {
    throw ResourceError("from_edge_list: vertex count exceeds the explicit cap");
  }
  Graph g(static_cast<int>(n));
  long long u, v;
  while (in >> u >> v) {
    if (u < 1 || v < 1 || u > n || v > n) {
      throw std::invalid_argument("from_edge_list: vertex label out of range");
    }
    g.add_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
  }
  if (!in.eof()) {
    throw std::invalid_argument("from_edge_list: malformed edge line");
  }
  return g;
}

}  // namespace cliquevec
