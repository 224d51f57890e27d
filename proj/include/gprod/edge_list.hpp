#pragma once

// Edge-list text format:
//   n m
//   u v        (m lines, 0-indexed, u < v)
// Loops, duplicate edges and out-of-range indices are rejected on read.

#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>

#include "gprod/error.hpp"
#include "gprod/graph.hpp"

namespace gprod {

inline void write_edge_list(std::ostream& os, const Graph& g) {
  const auto edges = g.edges();
  os << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) os << u << ' ' << v << '\n';
}

inline Graph read_edge_list(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) -> parse_error {
    return parse_error("edge list line " + std::to_string(line_no) + ": " + what);
  };

  if (!next_line()) throw parse_error("edge list is empty");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) throw fail("expected header \"n m\"");
  }
  if (n < 0 || m < 0) throw fail("negative size in header");
  if (n > static_cast<long long>(UINT32_MAX)) throw fail("vertex count too large");

  Graph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw fail("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    std::istringstream edge(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(edge >> u >> v) || (edge >> extra)) throw fail("expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) throw fail("vertex index out of range");
    if (u == v) throw fail("self-loop");
    if (u > v) throw fail("edge endpoints must satisfy u < v");
    const auto a = static_cast<vertex_t>(u);
    const auto b = static_cast<vertex_t>(v);
    if (g.adjacent(a, b)) throw fail("duplicate edge");
    g.add_edge(a, b);
  }
  if (next_line()) throw fail("trailing content after " + std::to_string(m) + " edges");
  return g;
}

inline Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path.string());
  return read_edge_list(in);
}

/// Writes through a temporary sibling file and renames it into place, so the
/// target never holds partial content.
inline void write_file_atomic(const std::filesystem::path& path,
                              const std::function<void(std::ostream&)>& writer) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + tmp.string() + " for writing");
    try {
      writer(out);
    } catch (...) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw;
    }
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw io_error("write failed for " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw io_error("cannot rename into " + path.string());
  }
}

inline void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  write_file_atomic(path, [&](std::ostream& os) { write_edge_list(os, g); });
}

}  // namespace gprod
