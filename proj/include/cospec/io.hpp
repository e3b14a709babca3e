#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cospec/census.hpp"
#include "cospec/graph.hpp"
#include "cospec/switching.hpp"

namespace cospec {

/// Raised on any malformed input file; message names the offense.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Splits into LF-terminated lines; trailing bytes after the last LF are an
/// error so the formats stay byte-exact.
inline std::vector<std::string> strict_lines(const std::string& text, const char* what) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string::npos)
      throw ParseError(std::string(what) + ": missing final newline");
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

inline std::vector<long long> parse_ints(const std::string& line, const char* what) {
  std::istringstream in(line);
  std::vector<long long> out;
  long long v = 0;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw ParseError(std::string(what) + ": non-numeric token in '" + line + "'");
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Edge-list format: `n <node_count> <edge_count>` then one `u v` per line,
// 0-based, u < v, sorted lexicographically, every line LF-terminated.
// ---------------------------------------------------------------------------

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.node_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline Graph read_edge_list(const std::string& text) {
  auto lines = detail::strict_lines(text, "edge list");
  if (lines.empty()) throw ParseError("edge list: empty input");
  std::istringstream header(lines[0]);
  std::string tag;
  long long n = -1, m = -1;
  std::string rest;
  if (!(header >> tag >> n >> m) || tag != "n" || (header >> rest))
    throw ParseError("edge list: bad header '" + lines[0] + "'");
  if (n < 0 || m < 0) throw ParseError("edge list: negative counts in header");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError("edge list: header promises " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  Edge prev{-1, -1};
  for (size_t i = 1; i < lines.size(); ++i) {
    auto nums = detail::parse_ints(lines[i], "edge list");
    if (nums.size() != 2) throw ParseError("edge list: expected 'u v' on line " + std::to_string(i + 1));
    long long u = nums[0], v = nums[1];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge list: endpoint out of range on line " + std::to_string(i + 1));
    if (u >= v) throw ParseError("edge list: need u < v on line " + std::to_string(i + 1));
    Edge e{static_cast<int>(u), static_cast<int>(v)};
    if (!(prev < e)) throw ParseError("edge list: edges not strictly sorted at line " + std::to_string(i + 1));
    prev = e;
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

// ---------------------------------------------------------------------------
// Switching-partition format: `cells <l>` then one line of space-separated
// node indices per cell; nodes not listed form Y.
// ---------------------------------------------------------------------------

inline std::string write_partition(const SwitchingPartition& p) {
  std::ostringstream out;
  out << "cells " << p.cell_count() << '\n';
  for (const auto& cell : p.cells) {
    for (size_t i = 0; i < cell.size(); ++i) out << (i ? " " : "") << cell[i];
    out << '\n';
  }
  return out.str();
}

inline SwitchingPartition read_partition(const std::string& text, const Graph& g) {
  auto lines = detail::strict_lines(text, "partition");
  if (lines.empty()) throw ParseError("partition: empty input");
  std::istringstream header(lines[0]);
  std::string tag, rest;
  long long l = -1;
  if (!(header >> tag >> l) || tag != "cells" || (header >> rest))
    throw ParseError("partition: bad header '" + lines[0] + "'");
  if (l < 1) throw ParseError("partition: need at least one cell");
  if (static_cast<long long>(lines.size()) - 1 != l)
    throw ParseError("partition: header promises " + std::to_string(l) + " cells, found " +
                     std::to_string(lines.size() - 1));
  std::vector<std::vector<int>> cells;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto nums = detail::parse_ints(lines[i], "partition");
    if (nums.empty()) throw ParseError("partition: empty cell on line " + std::to_string(i + 1));
    std::vector<int> cell;
    for (long long v : nums) {
      if (v < 0 || v >= g.node_count())
        throw ParseError("partition: node out of range on line " + std::to_string(i + 1));
      cell.push_back(static_cast<int>(v));
    }
    cells.push_back(std::move(cell));
  }
  try {
    return make_partition(g, std::move(cells));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("partition: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Census format: `len count` per line, ascending; when the girth is known
// every length from the girth to the cap is printed, zeros included.
// ---------------------------------------------------------------------------

inline std::string serialize_census(const CycleCensus& census, std::optional<int> graph_girth) {
  std::ostringstream out;
  if (graph_girth && *graph_girth <= census.max_len) {
    for (int len = *graph_girth; len <= census.max_len; ++len)
      out << len << ' ' << census.count_at(len) << '\n';
  } else if (!graph_girth) {
    // acyclic: nothing to print
  } else {
    for (const auto& [len, count] : census.counts) out << len << ' ' << count << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// alist import (LDPC Tanner graphs): `n m`, `max_col_deg max_row_deg`, column
// degrees, row degrees, then 1-based neighbor lists per column and per row
// (zero padding ignored). Column and row lists must describe the same edges.
// Variables map to nodes 0..n-1 (side U), checks to n..n+m-1 (side W).
// ---------------------------------------------------------------------------

inline std::pair<Graph, Bipartition> import_alist(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::vector<long long>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto nums = detail::parse_ints(line, "alist");
    if (!nums.empty()) rows.push_back(std::move(nums));
  }
  if (rows.size() < 4) throw ParseError("alist: truncated file");
  if (rows[0].size() != 2) throw ParseError("alist: first line must be 'n m'");
  long long n = rows[0][0], m = rows[0][1];
  if (n < 1 || m < 1) throw ParseError("alist: need positive n and m");
  if (rows[1].size() != 2) throw ParseError("alist: second line must hold the max degrees");
  if (rows.size() != 4 + static_cast<size_t>(n) + static_cast<size_t>(m))
    throw ParseError("alist: expected " + std::to_string(4 + n + m) + " nonempty lines, found " +
                     std::to_string(rows.size()));
  const auto& col_degrees = rows[2];
  const auto& row_degrees = rows[3];
  if (static_cast<long long>(col_degrees.size()) != n)
    throw ParseError("alist: column degree list has wrong length");
  if (static_cast<long long>(row_degrees.size()) != m)
    throw ParseError("alist: row degree list has wrong length");

  auto neighbor_set = [&](size_t line_index, long long degree, long long limit,
                          const char* what) -> std::vector<int> {
    std::vector<int> out;
    for (long long v : rows[line_index]) {
      if (v == 0) continue;  // padding
      if (v < 1 || v > limit)
        throw ParseError(std::string("alist: ") + what + " index " + std::to_string(v) +
                         " out of range");
      out.push_back(static_cast<int>(v - 1));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
      throw ParseError(std::string("alist: repeated ") + what + " index");
    if (static_cast<long long>(out.size()) != degree)
      throw ParseError(std::string("alist: ") + what + " list length disagrees with its degree");
    return out;
  };

  std::vector<Edge> from_columns, from_rows;
  for (long long c = 0; c < n; ++c) {
    for (int r : neighbor_set(4 + static_cast<size_t>(c), col_degrees[static_cast<size_t>(c)], m,
                              "check"))
      from_columns.emplace_back(static_cast<int>(c), static_cast<int>(n) + r);
  }
  for (long long r = 0; r < m; ++r) {
    for (int c : neighbor_set(4 + static_cast<size_t>(n) + static_cast<size_t>(r),
                              row_degrees[static_cast<size_t>(r)], n, "variable"))
      from_rows.emplace_back(c, static_cast<int>(n + r));
  }
  std::sort(from_columns.begin(), from_columns.end());
  std::sort(from_rows.begin(), from_rows.end());
  if (from_columns != from_rows)
    throw ParseError("alist: column and row adjacency lists disagree");

  Graph g(static_cast<int>(n + m), std::move(from_columns));
  Bipartition b;
  b.side_of.assign(static_cast<size_t>(n + m), Side::U);
  for (long long r = 0; r < m; ++r) b.side_of[static_cast<size_t>(n + r)] = Side::W;
  return {std::move(g), std::move(b)};
}

// ---------------------------------------------------------------------------
// Files and fingerprints.
// ---------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

/// FNV-1a, used for char-poly fingerprints in reports.
inline std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char byte : data) {
    hash ^= byte;
    hash *= 1099511628211ull;
  }
  return hash;
}

}  // namespace cospec
