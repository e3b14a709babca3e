#pragma once

#include <array>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

/// Godsil-McKay switching partition: cells X_1..X_l plus the rest Y
/// (implicitly everything outside the cells; may be empty).
struct SwitchingPartition {
  std::vector<std::vector<int>> cells;
  std::vector<int> rest;

  int cell_count() const { return static_cast<int>(cells.size()); }
};

/// Builds a partition from cells, filling rest with the remaining nodes.
/// Throws if the cells are not disjoint non-empty in-range sets, or if there
/// are no cells at all.
inline SwitchingPartition make_partition(const Graph& g, std::vector<std::vector<int>> cells) {
  if (cells.empty()) throw std::invalid_argument("partition: need at least one cell");
  const int n = g.node_count();
  std::vector<int> owner(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].empty()) throw std::invalid_argument("partition: empty cell " + std::to_string(i + 1));
    for (int v : cells[i]) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("partition: node " + std::to_string(v) + " out of range");
      if (owner[static_cast<size_t>(v)] != -1)
        throw std::invalid_argument("partition: node " + std::to_string(v) + " in two cells");
      owner[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    std::sort(cells[i].begin(), cells[i].end());
  }
  SwitchingPartition p;
  p.cells = std::move(cells);
  for (int v = 0; v < n; ++v)
    if (owner[static_cast<size_t>(v)] == -1) p.rest.push_back(v);
  return p;
}

struct Violation {
  std::string message;
  int node = -1;    // witness node, when applicable
  int cell = -1;    // 0-based cell index
  int other_cell = -1;
};

enum class YClass { Zero, Half, Full, Invalid };

/// Outcome of checking the two switching-partition conditions: (a) every
/// Y-node sees 0, |X_i|/2 or |X_i| nodes of each cell, and (b) within every
/// ordered cell pair the neighbor count is constant. Invalidity is data, not
/// an exception; only structurally malformed partitions throw upstream.
struct ValidationReport {
  bool valid = false;
  bool y_empty = false;
  /// l x l, entry (i,j) = common neighbor count of X_i nodes in X_j.
  /// Left empty when the equitability condition fails.
  std::vector<std::vector<int>> cell_degree_matrix;
  /// Per node of rest (in rest order), per cell.
  std::vector<std::vector<YClass>> y_profile;
  std::vector<Violation> violations;
};

namespace detail {

inline int count_neighbors_in(const Graph& g, int v, const std::vector<int>& cell) {
  int count = 0;
  for (int w : cell)
    if (g.has_edge(v, w)) ++count;
  return count;
}

inline void check_partition_structure(const Graph& g, const SwitchingPartition& p) {
  const int n = g.node_count();
  std::vector<int> seen(static_cast<size_t>(n), 0);
  if (p.cells.empty()) throw std::invalid_argument("partition: need at least one cell");
  auto mark = [&](int v) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("partition: node " + std::to_string(v) + " out of range");
    if (seen[static_cast<size_t>(v)]++)
      throw std::invalid_argument("partition: node " + std::to_string(v) + " repeated");
  };
  for (const auto& cell : p.cells) {
    if (cell.empty()) throw std::invalid_argument("partition: empty cell");
    for (int v : cell) mark(v);
  }
  for (int v : p.rest) mark(v);
  for (int v = 0; v < n; ++v)
    if (!seen[static_cast<size_t>(v)])
      throw std::invalid_argument("partition: node " + std::to_string(v) + " unassigned");
}

}  // namespace detail

inline ValidationReport validate_partition(const Graph& g, const SwitchingPartition& p) {
  detail::check_partition_structure(g, p);
  ValidationReport report;
  report.y_empty = p.rest.empty();
  const int l = p.cell_count();

  bool equitable = true;
  std::vector<std::vector<int>> matrix(static_cast<size_t>(l), std::vector<int>(static_cast<size_t>(l), 0));
  for (int i = 0; i < l; ++i) {
    const auto& xi = p.cells[static_cast<size_t>(i)];
    for (int j = 0; j < l; ++j) {
      const auto& xj = p.cells[static_cast<size_t>(j)];
      int common = detail::count_neighbors_in(g, xi[0], xj);
      matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] = common;
      for (size_t t = 1; t < xi.size(); ++t) {
        int c = detail::count_neighbors_in(g, xi[t], xj);
        if (c != common) {
          equitable = false;
          std::ostringstream msg;
          msg << "nodes " << xi[0] << " and " << xi[t] << " of X" << i + 1
              << " have " << common << " vs " << c << " neighbors in X" << j + 1;
          report.violations.push_back({msg.str(), xi[t], i, j});
          break;
        }
      }
    }
  }
  if (equitable) report.cell_degree_matrix = std::move(matrix);

  for (int y : p.rest) {
    std::vector<YClass> row;
    for (int i = 0; i < l; ++i) {
      const auto& xi = p.cells[static_cast<size_t>(i)];
      const int size = static_cast<int>(xi.size());
      int c = detail::count_neighbors_in(g, y, xi);
      if (c == 0) {
        row.push_back(YClass::Zero);
      } else if (c == size) {
        row.push_back(YClass::Full);
      } else if (2 * c == size) {
        row.push_back(YClass::Half);
      } else {
        row.push_back(YClass::Invalid);
        std::ostringstream msg;
        msg << "node " << y << " has " << c << " neighbors in X" << i + 1 << " of size " << size;
        report.violations.push_back({msg.str(), y, i, -1});
      }
    }
    report.y_profile.push_back(std::move(row));
  }

  report.valid = report.violations.empty();
  return report;
}

/// Godsil-McKay switch: for every y in Y with exactly |X_i|/2 neighbors in a
/// cell X_i, the neighborhood of y inside X_i is complemented. Refuses to run
/// on an invalid partition.
inline Graph apply_switching(const Graph& g, const SwitchingPartition& p) {
  ValidationReport report = validate_partition(g, p);
  if (!report.valid) {
    std::string msg = "apply_switching: invalid partition";
    if (!report.violations.empty()) msg += ": " + report.violations.front().message;
    throw std::invalid_argument(msg);
  }
  std::set<Edge> edges(g.edges().begin(), g.edges().end());
  auto toggle = [&edges](int a, int b) {
    Edge e = a < b ? Edge{a, b} : Edge{b, a};
    auto it = edges.find(e);
    if (it != edges.end())
      edges.erase(it);
    else
      edges.insert(e);
  };
  for (size_t yi = 0; yi < p.rest.size(); ++yi) {
    for (int i = 0; i < p.cell_count(); ++i) {
      if (report.y_profile[yi][static_cast<size_t>(i)] != YClass::Half) continue;
      for (int v : p.cells[static_cast<size_t>(i)]) toggle(p.rest[yi], v);
    }
  }
  return Graph(g.node_count(), std::vector<Edge>(edges.begin(), edges.end()));
}

/// Switching complements fixed neighborhoods, so applying it twice must give
/// back the original edge set.
inline bool switching_is_involution_check(const Graph& g, const SwitchingPartition& p) {
  return apply_switching(apply_switching(g, p), p) == g;
}

enum class CellType { Type1, Type2, Type3_1, Type3_2 };

inline const char* cell_type_name(CellType t) {
  switch (t) {
    case CellType::Type1: return "1";
    case CellType::Type2: return "2";
    case CellType::Type3_1: return "3.1";
    case CellType::Type3_2: return "3.2";
  }
  return "?";
}

/// Per-cell side classification: Type 1 all-U, Type 2 all-W, Type 3 mixed,
/// subdivided by whether the U/W split is balanced.
struct CellTyping {
  std::vector<CellType> types;
  std::vector<std::pair<int, int>> splits;  // (|X_i ∩ U|, |X_i ∩ W|)
  std::vector<std::vector<int>> cells;      // copy of the partition cells

  bool mixed(int i) const {
    return types[static_cast<size_t>(i)] == CellType::Type3_1 ||
           types[static_cast<size_t>(i)] == CellType::Type3_2;
  }
};

inline CellTyping classify_cells(const Graph& g, const Bipartition& b, const SwitchingPartition& p) {
  if (!valid_bipartition(g, b))
    throw std::invalid_argument("classify_cells: bipartition invalid for graph");
  CellTyping typing;
  typing.cells = p.cells;
  for (const auto& cell : p.cells) {
    int u_count = 0;
    for (int v : cell)
      if (b.side(v) == Side::U) ++u_count;
    const int w_count = static_cast<int>(cell.size()) - u_count;
    typing.splits.emplace_back(u_count, w_count);
    if (w_count == 0)
      typing.types.push_back(CellType::Type1);
    else if (u_count == 0)
      typing.types.push_back(CellType::Type2);
    else if (u_count == w_count)
      typing.types.push_back(CellType::Type3_1);
    else
      typing.types.push_back(CellType::Type3_2);
  }
  return typing;
}

/// Pass/fail per structural property P1..P5 of switching partitions of
/// bi-regular bipartite graphs, with witnesses for every failure.
struct StructuralReport {
  struct Property {
    bool holds = true;
    std::vector<std::string> witnesses;
  };

  std::array<Property, 5> properties;  // index k-1 holds Pk

  bool all_hold() const {
    for (const auto& prop : properties)
      if (!prop.holds) return false;
    return true;
  }
};

/// P1: no Type-3 to Type-1/2 edges. P2: no Type-3.1 to Type-3.2 edges.
/// P3: adjacent Type-3.2 cells have opposing splits. P4: a Y-node with a
/// neighbor in a Type-3 cell meets exactly half the cell, entirely inside one
/// part. P5: within each cell, the neighbor count toward the union of all
/// cells is constant. Requires a bi-regular graph and a valid partition.
inline StructuralReport check_structural_properties(const Graph& g, const Bipartition& b,
                                                    const SwitchingPartition& p) {
  RegularityClass rc = classify_regularity(degree_sequences(g, b));
  if (rc.kind != RegularityClass::Kind::BiRegular)
    throw std::invalid_argument("check_structural_properties: graph is not bi-regular");
  ValidationReport validation = validate_partition(g, p);
  if (!validation.valid)
    throw std::invalid_argument("check_structural_properties: partition is not a switching partition");
  CellTyping typing = classify_cells(g, b, p);

  StructuralReport report;
  auto fail = [&report](int property, std::string witness) {
    auto& prop = report.properties[static_cast<size_t>(property) - 1];
    prop.holds = false;
    prop.witnesses.push_back(std::move(witness));
  };

  const int l = p.cell_count();
  std::vector<int> cell_of(static_cast<size_t>(g.node_count()), -1);
  for (int i = 0; i < l; ++i)
    for (int v : p.cells[static_cast<size_t>(i)]) cell_of[static_cast<size_t>(v)] = i;

  for (auto [u, v] : g.edges()) {
    int ci = cell_of[static_cast<size_t>(u)];
    int cj = cell_of[static_cast<size_t>(v)];
    if (ci == -1 || cj == -1 || ci == cj) continue;
    CellType tu = typing.types[static_cast<size_t>(ci)];
    CellType tv = typing.types[static_cast<size_t>(cj)];
    bool u_mixed = typing.mixed(ci), v_mixed = typing.mixed(cj);
    if (u_mixed != v_mixed) {
      std::ostringstream msg;
      msg << "edge (" << u << "," << v << ") joins Type-" << cell_type_name(tu) << " X" << ci + 1
          << " to Type-" << cell_type_name(tv) << " X" << cj + 1;
      fail(1, msg.str());
    } else if (u_mixed && v_mixed && tu != tv) {
      std::ostringstream msg;
      msg << "edge (" << u << "," << v << ") joins Type-3.1 and Type-3.2 cells X" << ci + 1
          << ", X" << cj + 1;
      fail(2, msg.str());
    }
  }

  for (int i = 0; i < l; ++i) {
    if (typing.types[static_cast<size_t>(i)] != CellType::Type3_2) continue;
    for (int j = 0; j < l; ++j) {
      if (i == j || typing.types[static_cast<size_t>(j)] != CellType::Type3_2) continue;
      if (validation.cell_degree_matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) continue;
      auto [ui, wi] = typing.splits[static_cast<size_t>(i)];
      auto [uj, wj] = typing.splits[static_cast<size_t>(j)];
      if ((ui > wi && uj >= wj) || (ui < wi && uj <= wj)) {
        std::ostringstream msg;
        msg << "adjacent Type-3.2 cells X" << i + 1 << " (split " << ui << "/" << wi << ") and X"
            << j + 1 << " (split " << uj << "/" << wj << ") do not oppose";
        fail(3, msg.str());
      }
    }
  }

  for (int i = 0; i < l; ++i) {
    if (!typing.mixed(i)) continue;
    const auto& cell = p.cells[static_cast<size_t>(i)];
    const int half = static_cast<int>(cell.size()) / 2;
    for (int y : p.rest) {
      int in_u = 0, in_w = 0;
      for (int v : cell) {
        if (!g.has_edge(y, v)) continue;
        (b.side(v) == Side::U ? in_u : in_w)++;
      }
      if (in_u + in_w == 0) continue;
      bool ok = (in_u == half && in_w == 0) || (in_w == half && in_u == 0);
      if (!ok) {
        std::ostringstream msg;
        msg << "node " << y << " meets X" << i + 1 << " with " << in_u << " U-nodes and " << in_w
            << " W-nodes";
        fail(4, msg.str());
      }
    }
  }

  for (int i = 0; i < l; ++i) {
    const auto& cell = p.cells[static_cast<size_t>(i)];
    int expected = -1;
    for (int v : cell) {
      int total = 0;
      for (int w : g.neighbors(v))
        if (cell_of[static_cast<size_t>(w)] != -1) ++total;
      if (expected == -1) {
        expected = total;
      } else if (total != expected) {
        std::ostringstream msg;
        msg << "node " << v << " of X" << i + 1 << " has " << total
            << " neighbors in the cell union, expected " << expected;
        fail(5, msg.str());
      }
    }
  }

  return report;
}

/// Rules 1-3 relabeling: Y and Type-1/2 cells keep their sides, Type-3 cells
/// swap. For bi-regular inputs the result is a valid bipartition of the
/// switched graph.
inline Bipartition induced_bipartition(const Bipartition& b, const CellTyping& typing) {
  Bipartition out = b;
  for (size_t i = 0; i < typing.cells.size(); ++i) {
    if (!typing.mixed(static_cast<int>(i))) continue;
    for (int v : typing.cells[i])
      out.side_of[static_cast<size_t>(v)] =
          out.side_of[static_cast<size_t>(v)] == Side::U ? Side::W : Side::U;
  }
  return out;
}

struct DegreePreservation {
  bool equal = false;
  DegreeSequences before;
  DegreeSequences after;
};

/// Compares per-side degree sequences of g (under b) and of the switched
/// graph under the bipartition induced by Rules 1-3.
inline DegreePreservation verify_degree_preservation(const Graph& g, const Graph& g_switched,
                                                     const Bipartition& b,
                                                     const SwitchingPartition& p) {
  CellTyping typing = classify_cells(g, b, p);
  Bipartition after_sides = induced_bipartition(b, typing);
  DegreePreservation out;
  out.before = degree_sequences(g, b);
  out.after = degree_sequences(g_switched, after_sides);
  out.equal = out.before.u_side == out.after.u_side && out.before.w_side == out.after.w_side;
  return out;
}

}  // namespace cospec
