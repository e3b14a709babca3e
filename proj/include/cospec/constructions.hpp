#pragma once

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cospec/census.hpp"
#include "cospec/charpoly.hpp"
#include "cospec/graph.hpp"
#include "cospec/switching.hpp"

namespace cospec {

/// A graph together with its canonical bipartition and switching partition.
struct SwitchedFamily {
  Graph graph;
  Bipartition bip;
  SwitchingPartition partition;
};

namespace detail {

/// Every primed graph is assembled twice, by an explicit edge recipe and by
/// switching the base graph, and the two must agree edge-for-edge.
inline Graph checked_prime(const Graph& base, const SwitchingPartition& p, const Graph& direct,
                           const char* family) {
  Graph switched = apply_switching(base, p);
  if (!(switched == direct))
    throw std::logic_error(std::string(family) + ": switched graph differs from direct recipe");
  return switched;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The 54-node 3-regular pair built around a Heawood fragment.
//
// Frozen labeling:
//   d_1..d_6   ->  0..5     (6-ring in index order)
//   a_1..a_6   ->  6..11    18-ring in the listed order
//   b_1..b_6   -> 12..17      a1..a6 b1..b6 c1..c6
//   c_1..c_6   -> 18..23
//   v_1..v_6   -> 24..29, u_1..u_6 -> 30..35
//   v' 36, v'' 37, u' 38, u'' 39
//   Heawood copy -> 40..53 (heawood() labels shifted), with its ring edge
//   (0,1) removed; z = 40 and z' = 41 pick up the edges u_1-z, u_2-z'.
// Cells: X_i = {a_i, b_i, c_i, d_i}.
// ---------------------------------------------------------------------------
struct Heawood54Layout {
  int d(int i) const { return i - 1; }
  int a(int i) const { return 5 + i; }
  int b(int i) const { return 11 + i; }
  int c(int i) const { return 17 + i; }
  int v(int i) const { return 23 + i; }
  int u(int i) const { return 29 + i; }
  int v_prime() const { return 36; }
  int v_second() const { return 37; }
  int u_prime() const { return 38; }
  int u_second() const { return 39; }
  int heawood_node(int i) const { return 40 + i; }
  int z() const { return heawood_node(0); }
  int z_prime() const { return heawood_node(1); }
  int node_count() const { return 54; }
};

namespace detail {

/// Shared skeleton of G and G'; the spoke edges differ between the two.
inline std::vector<Edge> heawood54_frame() {
  const Heawood54Layout idx;
  std::vector<Edge> edges;
  for (int i = 1; i <= 6; ++i) edges.emplace_back(idx.d(i), idx.d(i % 6 + 1));
  std::vector<int> ring18;
  for (int i = 1; i <= 6; ++i) ring18.push_back(idx.a(i));
  for (int i = 1; i <= 6; ++i) ring18.push_back(idx.b(i));
  for (int i = 1; i <= 6; ++i) ring18.push_back(idx.c(i));
  for (size_t i = 0; i < ring18.size(); ++i)
    edges.emplace_back(ring18[i], ring18[(i + 1) % ring18.size()]);
  edges.emplace_back(idx.v_prime(), idx.v(1));
  edges.emplace_back(idx.v_prime(), idx.v(3));
  edges.emplace_back(idx.v_prime(), idx.v(5));
  edges.emplace_back(idx.v_second(), idx.v(2));
  edges.emplace_back(idx.v_second(), idx.v(4));
  edges.emplace_back(idx.v_second(), idx.v(6));
  edges.emplace_back(idx.u_prime(), idx.u(3));
  edges.emplace_back(idx.u_prime(), idx.u(5));
  edges.emplace_back(idx.u_second(), idx.u(4));
  edges.emplace_back(idx.u_second(), idx.u(6));
  edges.emplace_back(idx.u_prime(), idx.u_second());
  const Graph heawood_copy = heawood();
  for (auto [p, q] : heawood_copy.edges()) {
    if ((p == 0 && q == 1) || (p == 1 && q == 0)) continue;  // the removed ring edge zz'
    edges.emplace_back(idx.heawood_node(p), idx.heawood_node(q));
  }
  edges.emplace_back(idx.u(1), idx.z());
  edges.emplace_back(idx.u(2), idx.z_prime());
  return edges;
}

inline SwitchingPartition heawood54_partition(const Graph& g) {
  const Heawood54Layout idx;
  std::vector<std::vector<int>> cells;
  for (int i = 1; i <= 6; ++i) cells.push_back({idx.a(i), idx.b(i), idx.c(i), idx.d(i)});
  return make_partition(g, std::move(cells));
}

}  // namespace detail

inline SwitchedFamily build_heawood54() {
  const Heawood54Layout idx;
  std::vector<Edge> edges = detail::heawood54_frame();
  for (int i = 1; i <= 6; ++i) {
    edges.emplace_back(idx.v(i), idx.d(i));
    edges.emplace_back(idx.v(i), idx.a(i));
    edges.emplace_back(idx.u(i), idx.b(i));
    edges.emplace_back(idx.u(i), idx.c(i));
  }
  Graph g(idx.node_count(), std::move(edges));
  SwitchingPartition p = detail::heawood54_partition(g);
  return SwitchedFamily{g, bipartition(g), std::move(p)};
}

inline Graph build_heawood54_prime() {
  const Heawood54Layout idx;
  std::vector<Edge> edges = detail::heawood54_frame();
  for (int i = 1; i <= 6; ++i) {  // each v_i / u_i picks up the other cell half
    edges.emplace_back(idx.v(i), idx.b(i));
    edges.emplace_back(idx.v(i), idx.c(i));
    edges.emplace_back(idx.u(i), idx.d(i));
    edges.emplace_back(idx.u(i), idx.a(i));
  }
  Graph direct(idx.node_count(), std::move(edges));
  SwitchedFamily base = build_heawood54();
  return detail::checked_prime(base.graph, base.partition, direct, "heawood54");
}

// ---------------------------------------------------------------------------
// The 21-node half-regular pair on a 4-ring plus a 12-ring.
//
// Frozen labeling: v_1..v_4 -> 0..3 (ring), u_1..u_12 -> 4..15 (ring),
// w 16, w' 17, w'' 18, x 19, y 20.
// Cells: X_1 = odd-index ring nodes, X_2 = even-index ring nodes.
// ---------------------------------------------------------------------------
struct CalGLayout {
  int v(int i) const { return i - 1; }
  int u(int i) const { return 3 + i; }
  int w() const { return 16; }
  int w_prime() const { return 17; }
  int w_second() const { return 18; }
  int x() const { return 19; }
  int y() const { return 20; }
  int node_count() const { return 21; }
};

namespace detail {

inline std::vector<Edge> calg_rings() {
  const CalGLayout idx;
  std::vector<Edge> edges;
  for (int i = 1; i <= 4; ++i) edges.emplace_back(idx.v(i), idx.v(i % 4 + 1));
  for (int i = 1; i <= 12; ++i) edges.emplace_back(idx.u(i), idx.u(i % 12 + 1));
  for (int target : {idx.v(2), idx.v(4), idx.u(2), idx.u(4), idx.u(6), idx.u(8), idx.u(10), idx.u(12)}) {
    edges.emplace_back(idx.x(), target);
    edges.emplace_back(idx.y(), target);
  }
  return edges;
}

inline SwitchingPartition calg_partition(const Graph& g) {
  const CalGLayout idx;
  std::vector<int> odd, even;
  for (int i = 1; i <= 4; ++i) (i % 2 ? odd : even).push_back(idx.v(i));
  for (int i = 1; i <= 12; ++i) (i % 2 ? odd : even).push_back(idx.u(i));
  return make_partition(g, {odd, even});
}

}  // namespace detail

inline SwitchedFamily build_calG() {
  const CalGLayout idx;
  std::vector<Edge> edges = detail::calg_rings();
  for (int target : {idx.v(1), idx.v(3), idx.u(1), idx.u(3)}) {
    edges.emplace_back(idx.w(), target);
    edges.emplace_back(idx.w_prime(), target);
  }
  for (int target : {idx.u(5), idx.u(7), idx.u(9), idx.u(11)})
    edges.emplace_back(idx.w_second(), target);
  Graph g(idx.node_count(), std::move(edges));
  SwitchingPartition p = detail::calg_partition(g);
  return SwitchedFamily{g, bipartition(g), std::move(p)};
}

inline Graph build_calGprime() {
  const CalGLayout idx;
  std::vector<Edge> edges = detail::calg_rings();
  for (int target : {idx.u(5), idx.u(7), idx.u(9), idx.u(11)}) {
    edges.emplace_back(idx.w(), target);
    edges.emplace_back(idx.w_prime(), target);
  }
  for (int target : {idx.v(1), idx.v(3), idx.u(1), idx.u(3)})
    edges.emplace_back(idx.w_second(), target);
  Graph direct(idx.node_count(), std::move(edges));
  SwitchedFamily base = build_calG();
  return detail::checked_prime(base.graph, base.partition, direct, "calG");
}

// ---------------------------------------------------------------------------
// G_t: four t-edge paths with three attachment nodes; exactly one cycle of
// length 6+2t (the c-path is a separate component until the switch).
//
// Frozen labeling: a_1..a_{t+1} -> 0..t, b -> t+1..2t+1, c -> 2t+2..3t+2,
// d -> 3t+3..4t+3, v_1 = 4t+4, v_2 = 4t+5, u = 4t+6.
// Cells: X_i = {a_i, b_i, c_i, d_i}, Y = {v_1, v_2, u}.
// ---------------------------------------------------------------------------
struct GtLayout {
  int t;

  explicit GtLayout(int t_in) : t(t_in) {}

  int a(int i) const { return i - 1; }
  int b(int i) const { return t + i; }
  int c(int i) const { return 2 * t + 1 + i; }
  int d(int i) const { return 3 * t + 2 + i; }
  int v1() const { return 4 * t + 4; }
  int v2() const { return 4 * t + 5; }
  int u() const { return 4 * t + 6; }
  int node_count() const { return 4 * t + 7; }
};

namespace detail {

inline std::vector<Edge> gt_paths(const GtLayout& idx) {
  std::vector<Edge> edges;
  for (int i = 1; i <= idx.t; ++i) {
    edges.emplace_back(idx.a(i), idx.a(i + 1));
    edges.emplace_back(idx.b(i), idx.b(i + 1));
    edges.emplace_back(idx.c(i), idx.c(i + 1));
    edges.emplace_back(idx.d(i), idx.d(i + 1));
  }
  return edges;
}

inline SwitchingPartition gt_partition(const Graph& g, const GtLayout& idx) {
  std::vector<std::vector<int>> cells;
  for (int i = 1; i <= idx.t + 1; ++i)
    cells.push_back({idx.a(i), idx.b(i), idx.c(i), idx.d(i)});
  return make_partition(g, std::move(cells));
}

inline void require_gt_param(int t) {
  if (t < 1) throw std::invalid_argument("G_t: need t >= 1");
}

inline std::vector<Edge> gt_base_edges(const GtLayout& idx) {
  std::vector<Edge> edges = gt_paths(idx);
  edges.emplace_back(idx.v1(), idx.a(1));
  edges.emplace_back(idx.v1(), idx.b(1));
  edges.emplace_back(idx.v2(), idx.a(1));
  edges.emplace_back(idx.v2(), idx.d(1));
  edges.emplace_back(idx.u(), idx.d(idx.t + 1));
  edges.emplace_back(idx.u(), idx.b(idx.t + 1));
  return edges;
}

inline std::vector<Edge> gt_prime_edges(const GtLayout& idx) {
  std::vector<Edge> edges = gt_paths(idx);
  edges.emplace_back(idx.v1(), idx.c(1));
  edges.emplace_back(idx.v1(), idx.d(1));
  edges.emplace_back(idx.v2(), idx.b(1));
  edges.emplace_back(idx.v2(), idx.c(1));
  edges.emplace_back(idx.u(), idx.a(idx.t + 1));
  edges.emplace_back(idx.u(), idx.c(idx.t + 1));
  return edges;
}

}  // namespace detail

inline SwitchedFamily build_Gt(int t) {
  detail::require_gt_param(t);
  const GtLayout idx(t);
  Graph g(idx.node_count(), detail::gt_base_edges(idx));
  SwitchingPartition p = detail::gt_partition(g, idx);
  return SwitchedFamily{g, bipartition(g), std::move(p)};
}

inline Graph build_Gt_prime(int t) {
  detail::require_gt_param(t);
  const GtLayout idx(t);
  Graph direct(idx.node_count(), detail::gt_prime_edges(idx));
  SwitchedFamily base = build_Gt(t);
  return detail::checked_prime(base.graph, base.partition, direct, "Gt");
}

// ---------------------------------------------------------------------------
// G_{t,k}: G_t plus a k-edge bridge path f_1..f_{k+1} from u to v_2.
// f nodes take indices 4t+7..4t+7+k and join Y.
// ---------------------------------------------------------------------------
struct GtkLayout : GtLayout {
  int k;

  GtkLayout(int t_in, int k_in) : GtLayout(t_in), k(k_in) {}

  int f(int i) const { return 4 * t + 6 + i; }
  int node_count() const { return 4 * t + k + 8; }
};

namespace detail {

inline void require_gtk_params(int t, int k, bool allow_equal) {
  if (k < 0 || (allow_equal ? t < k : t <= k) || (t + k) % 2 != 0)
    throw std::invalid_argument("G_{t,k}: need t " + std::string(allow_equal ? ">=" : ">") +
                                " k >= 0 with t+k even");
}

inline std::vector<Edge> attach_bridge(std::vector<Edge> edges, const GtkLayout& idx) {
  for (int i = 1; i <= idx.k; ++i) edges.emplace_back(idx.f(i), idx.f(i + 1));
  edges.emplace_back(idx.u(), idx.f(1));
  edges.emplace_back(idx.v2(), idx.f(idx.k + 1));
  return edges;
}

// The section-V graphs reuse this family with t = k allowed.
inline SwitchedFamily gtk_family(int t, int k) {
  const GtkLayout idx(t, k);
  Graph g(idx.node_count(), attach_bridge(gt_base_edges(idx), idx));
  SwitchingPartition p = gt_partition(g, idx);
  return SwitchedFamily{g, bipartition(g), std::move(p)};
}

inline Graph gtk_prime(int t, int k) {
  const GtkLayout idx(t, k);
  Graph direct(idx.node_count(), attach_bridge(gt_prime_edges(idx), idx));
  SwitchedFamily base = gtk_family(t, k);
  return checked_prime(base.graph, base.partition, direct, "Gtk");
}

}  // namespace detail

inline SwitchedFamily build_Gtk(int t, int k) {
  detail::require_gtk_params(t, k, /*allow_equal=*/false);
  return detail::gtk_family(t, k);
}

inline Graph build_Gtk_prime(int t, int k) {
  detail::require_gtk_params(t, k, /*allow_equal=*/false);
  return detail::gtk_prime(t, k);
}

// ---------------------------------------------------------------------------
// D_i: disjoint union of G_{2,0}, G_{3,1}, ..., G_{i+2,i} (and the primes).
// ---------------------------------------------------------------------------
inline Graph build_Di(int i) {
  if (i < 0) throw std::invalid_argument("D_i: need i >= 0");
  Graph acc = detail::gtk_family(2, 0).graph;
  for (int j = 1; j <= i; ++j) acc = disjoint_union(acc, detail::gtk_family(j + 2, j).graph);
  return acc;
}

inline Graph build_Di_prime(int i) {
  if (i < 0) throw std::invalid_argument("D_i: need i >= 0");
  Graph acc = detail::gtk_prime(2, 0);
  for (int j = 1; j <= i; ++j) acc = disjoint_union(acc, detail::gtk_prime(j + 2, j));
  return acc;
}

// ---------------------------------------------------------------------------
// Union pairs that are cospectral by the path/cycle closed forms.
// ---------------------------------------------------------------------------

/// 2C_6 ∪ 2P_6 versus C_6 ∪ C_14 ∪ 2P_2: same spectrum and degree sequences,
/// two six-cycles versus one.
inline std::pair<Graph, Graph> build_pair_6cycle() {
  Graph g1 = disjoint_union(disjoint_union(cycle_graph(6), cycle_graph(6)),
                            disjoint_union(path_graph(6), path_graph(6)));
  Graph g2 = disjoint_union(disjoint_union(cycle_graph(6), cycle_graph(14)),
                            disjoint_union(path_graph(2), path_graph(2)));
  return {std::move(g1), std::move(g2)};
}

/// Half-regular pair with girth 6+2t for odd t: 2C_{6+2t} ∪ 2P_{t+6} versus
/// C_{6+2t} ∪ C_{14+2t} ∪ 2P_{t+2}. Even t would break half-regularity.
inline std::pair<Graph, Graph> build_halfreg_gcycle_pair(int t) {
  if (t < 1 || t % 2 == 0)
    throw std::invalid_argument("halfreg pair: need odd t >= 1");
  Graph g1 = disjoint_union(disjoint_union(cycle_graph(6 + 2 * t), cycle_graph(6 + 2 * t)),
                            disjoint_union(path_graph(t + 6), path_graph(t + 6)));
  Graph g2 = disjoint_union(disjoint_union(cycle_graph(6 + 2 * t), cycle_graph(14 + 2 * t)),
                            disjoint_union(path_graph(t + 2), path_graph(t + 2)));
  return {std::move(g1), std::move(g2)};
}

// ---------------------------------------------------------------------------
// calG_{t,k}: G_{t,k} (t, k even, t >= k >= 0, t > 0) with a pendant neighbor
// on every even-index path node and on v_1, making the U side 3-regular.
//
// Pendants are appended after the G_{t,k} block in the frozen order
// a'_2 b'_2 c'_2 d'_2, a'_4 ... d'_t, f'_2 ... f'_k, v_1'.
// Cells: the t+1 cells of G_t followed by one cell {a'_j,b'_j,c'_j,d'_j} per
// even j, giving l = 3t/2 + 1.
// ---------------------------------------------------------------------------
struct CalGtkLayout : GtkLayout {
  CalGtkLayout(int t_in, int k_in) : GtkLayout(t_in, k_in) {}

  int base_nodes() const { return GtkLayout::node_count(); }
  int a_pend(int j) const { return base_nodes() + 4 * (j / 2 - 1); }
  int b_pend(int j) const { return a_pend(j) + 1; }
  int c_pend(int j) const { return a_pend(j) + 2; }
  int d_pend(int j) const { return a_pend(j) + 3; }
  int f_pend(int j) const { return base_nodes() + 2 * t + (j / 2 - 1); }
  int v1_pend() const { return base_nodes() + 2 * t + k / 2; }
  int node_count() const { return base_nodes() + 2 * t + k / 2 + 1; }
};

namespace detail {

inline void require_calgtk_params(int t, int k) {
  if (t <= 0 || k < 0 || t < k || t % 2 != 0 || k % 2 != 0)
    throw std::invalid_argument("calG_{t,k}: need even t >= k >= 0 with t > 0");
}

inline std::vector<Edge> attach_pendants(std::vector<Edge> edges, const CalGtkLayout& idx) {
  for (int j = 2; j <= idx.t; j += 2) {
    edges.emplace_back(idx.a(j), idx.a_pend(j));
    edges.emplace_back(idx.b(j), idx.b_pend(j));
    edges.emplace_back(idx.c(j), idx.c_pend(j));
    edges.emplace_back(idx.d(j), idx.d_pend(j));
  }
  for (int j = 2; j <= idx.k; j += 2) edges.emplace_back(idx.f(j), idx.f_pend(j));
  edges.emplace_back(idx.v1(), idx.v1_pend());
  return edges;
}

inline SwitchingPartition calgtk_partition(const Graph& g, const CalGtkLayout& idx) {
  std::vector<std::vector<int>> cells;
  for (int i = 1; i <= idx.t + 1; ++i)
    cells.push_back({idx.a(i), idx.b(i), idx.c(i), idx.d(i)});
  for (int j = 2; j <= idx.t; j += 2)
    cells.push_back({idx.a_pend(j), idx.b_pend(j), idx.c_pend(j), idx.d_pend(j)});
  return make_partition(g, std::move(cells));
}

}  // namespace detail

inline SwitchedFamily build_calGtk(int t, int k) {
  detail::require_calgtk_params(t, k);
  const CalGtkLayout idx(t, k);
  Graph g(idx.node_count(),
          detail::attach_pendants(detail::attach_bridge(detail::gt_base_edges(idx), idx), idx));
  SwitchingPartition p = detail::calgtk_partition(g, idx);
  return SwitchedFamily{g, bipartition(g), std::move(p)};
}

inline Graph build_calGtk_prime(int t, int k) {
  detail::require_calgtk_params(t, k);
  const CalGtkLayout idx(t, k);
  Graph direct(idx.node_count(),
               detail::attach_pendants(detail::attach_bridge(detail::gt_prime_edges(idx), idx), idx));
  SwitchedFamily base = build_calGtk(t, k);
  return detail::checked_prime(base.graph, base.partition, direct, "calGtk");
}

// ---------------------------------------------------------------------------
// F_{j,k}: disjoint union of calG_{2k,2k-2}, ..., calG_{2j,2j-2}.
// ---------------------------------------------------------------------------
inline Graph build_Fjk(int j, int k) {
  if (k < 1 || j < k) throw std::invalid_argument("F_{j,k}: need j >= k >= 1");
  Graph acc = build_calGtk(2 * k, 2 * k - 2).graph;
  for (int m = k + 1; m <= j; ++m) acc = disjoint_union(acc, build_calGtk(2 * m, 2 * m - 2).graph);
  return acc;
}

inline Graph build_Fjk_prime(int j, int k) {
  if (k < 1 || j < k) throw std::invalid_argument("F_{j,k}: need j >= k >= 1");
  Graph acc = build_calGtk_prime(2 * k, 2 * k - 2);
  for (int m = k + 1; m <= j; ++m) acc = disjoint_union(acc, build_calGtk_prime(2 * m, 2 * m - 2));
  return acc;
}

// ---------------------------------------------------------------------------
// The girth-4(k+1) pair: C_{4(k+1)} ∪ 2P_{k'} versus C_{2(k'+1)} ∪ 2P_{2k+1},
// with k' odd and k' > 2k+1. The equal-girth variant appends one extra
// C_{4(k+1)} to both sides.
// ---------------------------------------------------------------------------
namespace detail {

inline void require_g4k_params(int k, int k_prime) {
  if (k < 1 || k_prime % 2 == 0 || k_prime <= 2 * k + 1)
    throw std::invalid_argument("g4k pair: need k >= 1 and odd k' > 2k+1");
}

}  // namespace detail

inline std::pair<Graph, Graph> build_g4k_pair(int k, int k_prime) {
  detail::require_g4k_params(k, k_prime);
  Graph g1 = disjoint_union(cycle_graph(4 * (k + 1)),
                            disjoint_union(path_graph(k_prime), path_graph(k_prime)));
  Graph g2 = disjoint_union(cycle_graph(2 * (k_prime + 1)),
                            disjoint_union(path_graph(2 * k + 1), path_graph(2 * k + 1)));
  return {std::move(g1), std::move(g2)};
}

inline std::pair<Graph, Graph> build_g4k_pair_equal_girth(int k, int k_prime) {
  auto [g1, g2] = build_g4k_pair(k, k_prime);
  return {disjoint_union(g1, cycle_graph(4 * (k + 1))),
          disjoint_union(g2, cycle_graph(4 * (k + 1)))};
}

// ---------------------------------------------------------------------------
// Recipes: expected facts attached to a built instance, checked wholesale.
// ---------------------------------------------------------------------------

struct CycleFact {
  int length;
  long long count;
};

struct ConstructionRecipe {
  std::string name;
  Graph graph;
  std::optional<Graph> partner;  // expected-cospectral counterpart

  std::optional<int> expected_nodes;
  std::optional<int> expected_edges;
  bool girth_checked = false;
  std::optional<int> expected_girth;  // nullopt with girth_checked = expect acyclic

  /// When census_cap > 0, expected_cycles is the complete inventory up to the
  /// cap: listed lengths must match and unlisted lengths must be zero.
  int census_cap = 0;
  std::vector<CycleFact> expected_cycles;

  bool check_cospectral = false;
  bool check_degree_sequences = false;
  int census_threads = 1;
};

struct RecipeCheck {
  std::string description;
  bool pass;
  std::string detail;
};

/// Degree sequences compared as an unordered pair of per-side multisets, so
/// the verdict does not depend on which side the canonical coloring calls U.
inline bool degree_sequences_match(const DegreeSequences& a, const DegreeSequences& b) {
  return (a.u_side == b.u_side && a.w_side == b.w_side) ||
         (a.u_side == b.w_side && a.w_side == b.u_side);
}

inline std::vector<RecipeCheck> recipe_assertions(const ConstructionRecipe& recipe) {
  std::vector<RecipeCheck> checks;
  auto add = [&checks](std::string what, bool pass, std::string detail = "") {
    checks.push_back({std::move(what), pass, std::move(detail)});
  };

  if (recipe.expected_nodes) {
    int got = recipe.graph.node_count();
    add("node count = " + std::to_string(*recipe.expected_nodes), got == *recipe.expected_nodes,
        "got " + std::to_string(got));
  }
  if (recipe.expected_edges) {
    int got = recipe.graph.edge_count();
    add("edge count = " + std::to_string(*recipe.expected_edges), got == *recipe.expected_edges,
        "got " + std::to_string(got));
  }

  bool is_bipartite = true;
  try {
    bipartition(recipe.graph);
  } catch (const OddCycleError&) {
    is_bipartite = false;
  }
  add("bipartite", is_bipartite);

  if (recipe.girth_checked) {
    std::optional<int> got = girth(recipe.graph);
    std::string want = recipe.expected_girth ? std::to_string(*recipe.expected_girth) : "infinite";
    std::string have = got ? std::to_string(*got) : "infinite";
    add("girth = " + want, got == recipe.expected_girth, "got " + have);
  }

  if (recipe.census_cap > 0) {
    CycleCensus census =
        count_cycles(recipe.graph, CensusOptions{recipe.census_cap, recipe.census_threads, 0});
    std::map<int, long long> expected;
    for (const auto& fact : recipe.expected_cycles) expected[fact.length] = fact.count;
    for (const auto& fact : recipe.expected_cycles) {
      long long got = census.count_at(fact.length);
      add("cycles of length " + std::to_string(fact.length) + " = " + std::to_string(fact.count),
          got == fact.count, "got " + std::to_string(got));
    }
    bool spurious = false;
    std::string where;
    for (const auto& [len, count] : census.counts) {
      if (!expected.count(len) && count != 0) {
        spurious = true;
        where = "length " + std::to_string(len) + " count " + std::to_string(count);
        break;
      }
    }
    add("no unexpected cycle lengths <= " + std::to_string(recipe.census_cap), !spurious, where);
  }

  if (recipe.partner) {
    if (recipe.check_cospectral)
      add("cospectral with partner", cospectral(recipe.graph, *recipe.partner));
    if (recipe.check_degree_sequences) {
      bool ok = false;
      try {
        DegreeSequences a = degree_sequences(recipe.graph, bipartition(recipe.graph));
        DegreeSequences b = degree_sequences(*recipe.partner, bipartition(*recipe.partner));
        ok = degree_sequences_match(a, b);
      } catch (const OddCycleError&) {
        ok = false;
      }
      add("degree sequences match partner", ok);
    }
  }

  return checks;
}

// ---------------------------------------------------------------------------
// Published cycle tables, embedded as ground truth.
// ---------------------------------------------------------------------------

inline const std::vector<CycleFact>& table2_row_G() {
  static const std::vector<CycleFact> row{{6, 51},    {8, 54},    {10, 186},
                                          {12, 212},  {14, 460},  {16, 659},
                                          {18, 1609}, {20, 4038}, {22, 11132}};
  return row;
}

inline const std::vector<CycleFact>& table2_row_Gprime() {
  static const std::vector<CycleFact> row{{6, 51},    {8, 54},    {10, 186},
                                          {12, 213},  {14, 458},  {16, 669},
                                          {18, 1576}, {20, 4090}, {22, 10977}};
  return row;
}

inline const std::vector<CycleFact>& table3_row_calG() {
  static const std::vector<CycleFact> row{{4, 60},     {6, 248},    {8, 1300},   {10, 4056},
                                          {12, 11992}, {14, 29780}, {16, 43040}, {18, 32640}};
  return row;
}

inline const std::vector<CycleFact>& table3_row_calGprime() {
  static const std::vector<CycleFact> row{{4, 60},     {6, 250},    {8, 1294},   {10, 4026},
                                          {12, 11706}, {14, 28440}, {16, 41656}, {18, 32096}};
  return row;
}

inline const std::vector<CycleFact>& table5_row_D3() {
  static const std::vector<CycleFact> row{{6, 1}, {8, 2}, {10, 3}, {12, 3}, {14, 2}, {16, 1}};
  return row;
}

inline const std::vector<CycleFact>& table5_row_D3prime() {
  static const std::vector<CycleFact> row{{6, 1}, {8, 1}, {10, 1}, {12, 1}, {14, 0}, {16, 0}};
  return row;
}

/// The 6x6 cell-degree matrix of the heawood54 switching partition: circulant
/// with ones at offsets ±1 mod 6.
inline std::vector<std::vector<int>> heawood54_cell_degree_matrix() {
  std::vector<std::vector<int>> m(6, std::vector<int>(6, 0));
  for (int i = 0; i < 6; ++i) {
    m[static_cast<size_t>(i)][static_cast<size_t>((i + 1) % 6)] = 1;
    m[static_cast<size_t>(i)][static_cast<size_t>((i + 5) % 6)] = 1;
  }
  return m;
}

/// Recipes for the table-backed instances, ready for recipe_assertions.
inline std::vector<ConstructionRecipe> standard_recipes(int census_threads = 1) {
  std::vector<ConstructionRecipe> recipes;

  {
    SwitchedFamily fam = build_heawood54();
    Graph prime = build_heawood54_prime();
    ConstructionRecipe r;
    r.name = "heawood54";
    r.graph = fam.graph;
    r.partner = prime;
    r.expected_nodes = 54;
    r.expected_edges = 81;
    r.girth_checked = true;
    r.expected_girth = 6;
    r.census_cap = 22;
    r.expected_cycles = table2_row_G();
    r.check_cospectral = true;
    r.check_degree_sequences = true;
    r.census_threads = census_threads;
    recipes.push_back(std::move(r));

    ConstructionRecipe rp;
    rp.name = "heawood54prime";
    rp.graph = prime;
    rp.partner = fam.graph;
    rp.expected_nodes = 54;
    rp.expected_edges = 81;
    rp.girth_checked = true;
    rp.expected_girth = 6;
    rp.census_cap = 22;
    rp.expected_cycles = table2_row_Gprime();
    rp.check_cospectral = true;
    rp.check_degree_sequences = true;
    rp.census_threads = census_threads;
    recipes.push_back(std::move(rp));
  }

  {
    SwitchedFamily fam = build_calG();
    Graph prime = build_calGprime();
    ConstructionRecipe r;
    r.name = "calG";
    r.graph = fam.graph;
    r.partner = prime;
    r.expected_nodes = 21;
    r.expected_edges = 44;
    r.girth_checked = true;
    r.expected_girth = 4;
    r.census_cap = 18;
    r.expected_cycles = table3_row_calG();
    r.check_cospectral = true;
    r.check_degree_sequences = true;
    r.census_threads = census_threads;
    recipes.push_back(std::move(r));

    ConstructionRecipe rp;
    rp.name = "calGprime";
    rp.graph = prime;
    rp.partner = fam.graph;
    rp.expected_nodes = 21;
    rp.expected_edges = 44;
    rp.girth_checked = true;
    rp.expected_girth = 4;
    rp.census_cap = 18;
    rp.expected_cycles = table3_row_calGprime();
    rp.check_cospectral = true;
    rp.check_degree_sequences = true;
    rp.census_threads = census_threads;
    recipes.push_back(std::move(rp));
  }

  {
    Graph d3 = build_Di(3);
    Graph d3p = build_Di_prime(3);
    ConstructionRecipe r;
    r.name = "D3";
    r.graph = d3;
    r.partner = d3p;
    r.girth_checked = true;
    r.expected_girth = 6;
    r.census_cap = 16;
    r.expected_cycles = table5_row_D3();
    r.check_cospectral = true;
    r.check_degree_sequences = true;
    recipes.push_back(std::move(r));

    ConstructionRecipe rp;
    rp.name = "D3prime";
    rp.graph = d3p;
    rp.partner = d3;
    rp.girth_checked = true;
    rp.expected_girth = 6;
    rp.census_cap = 16;
    rp.expected_cycles = table5_row_D3prime();
    rp.check_cospectral = true;
    rp.check_degree_sequences = true;
    recipes.push_back(std::move(rp));
  }

  {
    SwitchedFamily fam = build_Gt(4);
    ConstructionRecipe r;
    r.name = "Gt:t=4";
    r.graph = fam.graph;
    r.partner = build_Gt_prime(4);
    r.expected_nodes = 23;
    r.expected_edges = 22;
    r.girth_checked = true;
    r.expected_girth = 14;
    r.census_cap = 16;
    r.expected_cycles = {{14, 1}};
    r.check_cospectral = true;
    r.check_degree_sequences = true;
    recipes.push_back(std::move(r));
  }

  return recipes;
}

// ---------------------------------------------------------------------------
// family:params specs, shared by the command line and the tests.
// ---------------------------------------------------------------------------

/// A built family instance: the graph plus whatever side data the family
/// defines (canonical bipartition; switching partition when the family has
/// one).
struct BuiltFamily {
  Graph graph;
  std::optional<Bipartition> bip;
  std::optional<SwitchingPartition> partition;
};

namespace detail {

inline std::map<std::string, int> parse_family_params(const std::string& text) {
  std::map<std::string, int> params;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= item.size())
      throw std::invalid_argument("family spec: bad parameter '" + item + "'");
    std::string key = item.substr(0, eq);
    int value = 0;
    try {
      size_t pos = 0;
      value = std::stoi(item.substr(eq + 1), &pos);
      if (pos != item.size() - eq - 1) throw std::invalid_argument("");
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("family spec: bad value in '" + item + "'");
    }
    if (!params.emplace(key, value).second)
      throw std::invalid_argument("family spec: duplicate parameter '" + key + "'");
  }
  return params;
}

inline int take_param(std::map<std::string, int>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("family spec: missing parameter '" + key + "'");
  int value = it->second;
  params.erase(it);
  return value;
}

inline int take_param_or(std::map<std::string, int>& params, const std::string& key, int fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  int value = it->second;
  params.erase(it);
  return value;
}

inline BuiltFamily from_switched(SwitchedFamily fam) {
  return BuiltFamily{std::move(fam.graph), std::move(fam.bip), std::move(fam.partition)};
}

inline BuiltFamily from_graph(Graph g) {
  BuiltFamily out{std::move(g), std::nullopt, std::nullopt};
  try {
    out.bip = bipartition(out.graph);
  } catch (const OddCycleError&) {
    // non-bipartite stock graphs (odd cycles) simply carry no bipartition
  }
  return out;
}

inline Graph pick(std::pair<Graph, Graph> pair, int which) {
  if (which == 1) return std::move(pair.first);
  if (which == 2) return std::move(pair.second);
  throw std::invalid_argument("family spec: 'which' must be 1 or 2");
}

}  // namespace detail

/// Builds an instance from a spec like "Gt:t=4", "Gtk:t=4,k=2", "Di:i=3",
/// "Fjk:j=2,k=1", "heawood", "pair6:which=1". Unknown families or leftover
/// parameters are errors.
inline BuiltFamily build_family(const std::string& spec) {
  std::string family = spec;
  std::map<std::string, int> params;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    family = spec.substr(0, colon);
    params = detail::parse_family_params(spec.substr(colon + 1));
  }
  auto take = [&params](const std::string& key) { return detail::take_param(params, key); };

  BuiltFamily built = [&]() -> BuiltFamily {
    if (family == "path") return detail::from_graph(path_graph(take("n")));
    if (family == "cycle") return detail::from_graph(cycle_graph(take("n")));
    if (family == "kab") return detail::from_graph(complete_bipartite(take("a"), take("b")));
    if (family == "heawood") return detail::from_graph(heawood());
    if (family == "heawood54") return detail::from_switched(build_heawood54());
    if (family == "heawood54prime") return detail::from_graph(build_heawood54_prime());
    if (family == "calG") return detail::from_switched(build_calG());
    if (family == "calGprime") return detail::from_graph(build_calGprime());
    if (family == "Gt") return detail::from_switched(build_Gt(take("t")));
    if (family == "Gtprime") return detail::from_graph(build_Gt_prime(take("t")));
    if (family == "Gtk") return detail::from_switched(build_Gtk(take("t"), take("k")));
    if (family == "Gtkprime") return detail::from_graph(build_Gtk_prime(take("t"), take("k")));
    if (family == "Di") return detail::from_graph(build_Di(take("i")));
    if (family == "Diprime") return detail::from_graph(build_Di_prime(take("i")));
    if (family == "calGtk") return detail::from_switched(build_calGtk(take("t"), take("k")));
    if (family == "calGtkprime")
      return detail::from_graph(build_calGtk_prime(take("t"), take("k")));
    if (family == "Fjk") return detail::from_graph(build_Fjk(take("j"), take("k")));
    if (family == "Fjkprime") return detail::from_graph(build_Fjk_prime(take("j"), take("k")));
    if (family == "pair6") return detail::from_graph(detail::pick(build_pair_6cycle(), take("which")));
    if (family == "halfreg")
      return detail::from_graph(detail::pick(build_halfreg_gcycle_pair(take("t")), take("which")));
    if (family == "g4k") {
      int k = take("k");
      int kp = take("kprime");
      int which = take("which");
      bool equal_girth = detail::take_param_or(params, "equalgirth", 0) != 0;
      return detail::from_graph(detail::pick(
          equal_girth ? build_g4k_pair_equal_girth(k, kp) : build_g4k_pair(k, kp), which));
    }
    throw std::invalid_argument("family spec: unknown family '" + family + "'");
  }();

  if (!params.empty())
    throw std::invalid_argument("family spec: unused parameter '" + params.begin()->first + "'");
  return built;
}

}  // namespace cospec
