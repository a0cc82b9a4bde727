#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pclist/graph.hpp"

// Edge-list file format: a header line "n m directed_flag" with flag 'd' or
// 'u', followed by m lines "u v". Undirected files list each edge once.
namespace pclist {

struct EdgeListParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };

  if (!next_line()) throw EdgeListParseError("edge list: missing header");
  std::istringstream header(line);
  long long n = -1, m = -1;
  char flag = 0;
  if (!(header >> n >> m >> flag) || (flag != 'd' && flag != 'u') || n < 0 || m < 0)
    throw EdgeListParseError("edge list: bad header '" + line + "'");

  Graph g(static_cast<int>(n), flag == 'd');
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw EdgeListParseError("edge list: expected " + std::to_string(m) +
                                               " edges, got " + std::to_string(i));
    std::istringstream row(line);
    long long u = -1, v = -1;
    if (!(row >> u >> v)) throw EdgeListParseError("edge list: bad edge line '" + line + "'");
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
      throw EdgeListParseError("edge list: invalid edge " + line);
    try {
      g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    } catch (const std::invalid_argument& e) {
      throw EdgeListParseError(e.what());
    }
  }
  if (next_line()) throw EdgeListParseError("edge list: trailing content '" + line + "'");
  try {
    g.finalize();
  } catch (const std::invalid_argument& e) {
    throw EdgeListParseError(e.what());
  }
  return g;
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  const int n = g.vertex_count();
  if (g.directed()) {
    out << n << ' ' << g.arc_count() << " d\n";
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v : g.out_neighbors(u)) out << u << ' ' << v << '\n';
  } else {
    out << n << ' ' << g.arc_count() / 2 << " u\n";
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v : g.out_neighbors(u))
        if (u < v) out << u << ' ' << v << '\n';
  }
}

}  // namespace pclist
