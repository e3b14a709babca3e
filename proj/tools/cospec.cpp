// Command-line front end: build the named graph families, run censuses,
// switching and exact cospectrality checks, verify the built-in cycle tables,
// and ingest alist Tanner graphs.
//
// Exit codes: 0 all checks pass, 1 verification mismatch (including invalid
// switching partitions and non-cospectral pairs), 2 usage or parse error,
// 3 step budget exceeded.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cospec/census.hpp"
#include "cospec/charpoly.hpp"
#include "cospec/constructions.hpp"
#include "cospec/graph.hpp"
#include "cospec/io.hpp"
#include "cospec/report.hpp"
#include "cospec/switching.hpp"

namespace {

using namespace cospec;

struct GlobalOptions {
  int threads = 1;
  long long budget = 0;
  std::string format = "text";
};

void emit(const Report& report, const GlobalOptions& options) {
  std::cout << (options.format == "structured" ? report.to_json() : report.to_text());
}

std::string hex64(std::uint64_t value) {
  std::ostringstream out;
  out << std::hex << value;
  return out.str();
}

std::string side_line(const Bipartition& b) {
  std::ostringstream out;
  for (size_t v = 0; v < b.side_of.size(); ++v)
    out << v << ' ' << side_label(b.side_of[v]) << '\n';
  return out.str();
}

std::string join_ints(const std::vector<int>& values) {
  std::ostringstream out;
  for (size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
  return out.str();
}

void add_graph_fingerprint(Report& report, const Graph& g, const std::string& prefix = "") {
  report.add(prefix + "nodes", g.node_count());
  report.add(prefix + "edges", g.edge_count());
  report.add(prefix + "charpoly_hash", hex64(fnv1a(char_poly(g).to_string())));
}

int cmd_construct(const std::string& family, const std::string& out_path,
                  const GlobalOptions& options) {
  Report report;
  report.command = "construct " + family + " " + out_path;
  BuiltFamily built = build_family(family);
  write_file(out_path, write_edge_list(built.graph));
  report.add("family", family);
  report.add("out", out_path);
  add_graph_fingerprint(report, built.graph);
  if (built.bip) {
    write_file(out_path + ".bip", side_line(*built.bip));
    report.add("bipartition", out_path + ".bip");
  }
  if (built.partition) {
    write_file(out_path + ".cells", write_partition(*built.partition));
    report.add("partition", out_path + ".cells");
  }
  emit(report, options);
  return 0;
}

int cmd_census(const std::string& in_path, int max_len, const GlobalOptions& options) {
  Report report;
  report.command = "census " + in_path;
  Graph g = read_edge_list(read_file(in_path));
  report.add("input", in_path);
  add_graph_fingerprint(report, g);
  std::optional<int> g_girth = girth(g);
  report.add("girth", g_girth ? std::to_string(*g_girth) : "infinite");
  report.add("max_len", max_len);
  report.census_girth = g_girth;
  int exit_code = 0;
  try {
    report.census = count_cycles(g, CensusOptions{max_len, options.threads, options.budget});
  } catch (const BudgetExceededError& e) {
    report.census = e.partial;
    report.status = "budget-exceeded";
    exit_code = 3;
  }
  emit(report, options);
  return exit_code;
}

int cmd_cospectral(const std::string& path1, const std::string& path2,
                   const GlobalOptions& options) {
  Report report;
  report.command = "cospectral " + path1 + " " + path2;
  Graph g1 = read_edge_list(read_file(path1));
  Graph g2 = read_edge_list(read_file(path2));
  CharPoly p1 = char_poly(g1);
  CharPoly p2 = char_poly(g2);
  bool verdict = g1.node_count() == g2.node_count() && p1 == p2;
  report.add("input1", path1);
  report.add("input2", path2);
  report.add("nodes1", g1.node_count());
  report.add("nodes2", g2.node_count());
  report.add("charpoly1", p1.to_string());
  report.add("charpoly2", p2.to_string());
  report.add("cospectral", verdict ? "true" : "false");
  emit(report, options);
  return verdict ? 0 : 1;
}

int cmd_switch(const std::string& graph_path, const std::string& partition_path,
               const std::string& out_path, const GlobalOptions& options) {
  Report report;
  report.command = "switch " + graph_path + " " + partition_path + " " + out_path;
  Graph g = read_edge_list(read_file(graph_path));
  SwitchingPartition p = read_partition(read_file(partition_path), g);
  add_graph_fingerprint(report, g);
  report.add("cells", p.cell_count());
  ValidationReport validation = validate_partition(g, p);
  report.add("partition_valid", validation.valid ? "true" : "false");
  if (validation.y_empty) report.add("y_empty", "true");
  if (!validation.valid) {
    for (const Violation& v : validation.violations) report.add("violation", v.message);
    report.status = "invalid-partition";
    emit(report, options);
    return 1;
  }
  for (size_t i = 0; i < validation.cell_degree_matrix.size(); ++i)
    report.add("cell_degrees_" + std::to_string(i + 1),
               join_ints(validation.cell_degree_matrix[i]));
  Graph switched = apply_switching(g, p);
  write_file(out_path, write_edge_list(switched));
  report.add("out", out_path);
  add_graph_fingerprint(report, switched, "switched_");
  emit(report, options);
  return 0;
}

// One expected-value table: rows of (graph name, census cap, facts).
struct TableSpec {
  std::string name;
  struct Row {
    std::string graph_name;
    Graph graph;
    int cap;
    std::vector<CycleFact> facts;
  };
  std::vector<Row> rows;
};

TableSpec table_two() {
  return {"II",
          {{"G", build_heawood54().graph, 22, table2_row_G()},
           {"G'", build_heawood54_prime(), 22, table2_row_Gprime()}}};
}

TableSpec table_three() {
  return {"III",
          {{"calG", build_calG().graph, 18, table3_row_calG()},
           {"calG'", build_calGprime(), 18, table3_row_calGprime()}}};
}

TableSpec table_five() {
  return {"V",
          {{"D3", build_Di(3), 16, table5_row_D3()},
           {"D3'", build_Di_prime(3), 16, table5_row_D3prime()}}};
}

int verify_cycle_table(const TableSpec& table, Report& report, const GlobalOptions& options,
                       int& cells_checked, int& mismatches) {
  for (const auto& row : table.rows) {
    CycleCensus census =
        count_cycles(row.graph, CensusOptions{row.cap, options.threads, options.budget});
    for (const CycleFact& fact : row.facts) {
      ++cells_checked;
      long long got = census.count_at(fact.length);
      if (got != fact.count) {
        ++mismatches;
        std::ostringstream msg;
        msg << "table " << table.name << " row " << row.graph_name << " length " << fact.length
            << " expected " << fact.count << " got " << got;
        report.add("mismatch", msg.str());
      }
    }
  }
  return 0;
}

void verify_table_one(Report& report, int& cells_checked, int& mismatches) {
  SwitchedFamily fam = build_heawood54();
  ValidationReport validation = validate_partition(fam.graph, fam.partition);
  std::vector<std::vector<int>> expected = heawood54_cell_degree_matrix();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      ++cells_checked;
      int got = validation.valid
                    ? validation.cell_degree_matrix[static_cast<size_t>(i)][static_cast<size_t>(j)]
                    : -1;
      if (got != expected[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
        ++mismatches;
        std::ostringstream msg;
        msg << "table I cell (" << i + 1 << "," << j + 1 << ") expected "
            << expected[static_cast<size_t>(i)][static_cast<size_t>(j)] << " got " << got;
        report.add("mismatch", msg.str());
      }
    }
}

int cmd_verify_tables(const std::string& which, const GlobalOptions& options) {
  Report report;
  report.command = "verify-tables " + which;
  int cells_checked = 0;
  int mismatches = 0;
  try {
    if (which == "I" || which == "all") verify_table_one(report, cells_checked, mismatches);
    if (which == "II" || which == "all")
      verify_cycle_table(table_two(), report, options, cells_checked, mismatches);
    if (which == "III" || which == "all")
      verify_cycle_table(table_three(), report, options, cells_checked, mismatches);
    if (which == "V" || which == "all")
      verify_cycle_table(table_five(), report, options, cells_checked, mismatches);
  } catch (const BudgetExceededError&) {
    report.status = "budget-exceeded";
    emit(report, options);
    return 3;
  }
  report.add("cells_checked", cells_checked);
  report.add("mismatches", mismatches);
  report.add("verdict", mismatches == 0 ? "PASS" : "FAIL");
  if (mismatches != 0) report.status = "mismatch";
  emit(report, options);
  return mismatches == 0 ? 0 : 1;
}

int cmd_import_alist(const std::string& in_path, const std::string& out_path,
                     const GlobalOptions& options) {
  Report report;
  report.command = "import-alist " + in_path;
  auto [g, b] = import_alist(read_file(in_path));
  report.add("input", in_path);
  add_graph_fingerprint(report, g);
  DegreeSequences ds = degree_sequences(g, b);
  report.add("variable_degrees", join_ints(ds.u_side));
  report.add("check_degrees", join_ints(ds.w_side));
  std::optional<int> g_girth = girth(g);
  report.add("girth", g_girth ? std::to_string(*g_girth) : "infinite");
  if (!out_path.empty()) {
    write_file(out_path, write_edge_list(g));
    write_file(out_path + ".bip", side_line(b));
    report.add("out", out_path);
  }
  emit(report, options);
  return 0;
}

int cmd_spectrum(const std::string& in_path, const GlobalOptions& options) {
  Report report;
  report.command = "spectrum " + in_path;
  Graph g = read_edge_list(read_file(in_path));
  report.add("input", in_path);
  add_graph_fingerprint(report, g);
  report.spectrum = float_spectrum(g);
  emit(report, options);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for bipartite graphs: constructions, Godsil-McKay switching, "
               "cycle censuses, cospectrality"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions options;
  app.add_option("--threads", options.threads, "census worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", options.budget, "census step budget (0 = unlimited)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", options.format, "report format")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string family, in_path, in_path2, out_path, which;
  int max_len = 0;

  CLI::App* construct = app.add_subcommand("construct", "build a family instance, write edge list");
  construct->add_option("family", family, "family spec, e.g. Gt:t=4 or heawood")->required();
  construct->add_option("out", out_path, "output edge-list path")->required();

  CLI::App* census = app.add_subcommand("census", "count simple cycles up to a cap");
  census->add_option("input", in_path, "edge-list path")->required();
  census->add_option("--max-len", max_len, "largest cycle length to count")->required();

  CLI::App* cosp = app.add_subcommand("cospectral", "exact cospectrality verdict");
  cosp->add_option("input1", in_path, "edge-list path")->required();
  cosp->add_option("input2", in_path2, "edge-list path")->required();

  CLI::App* sw = app.add_subcommand("switch", "validate a partition and apply the switch");
  sw->add_option("graph", in_path, "edge-list path")->required();
  sw->add_option("partition", in_path2, "partition path")->required();
  sw->add_option("out", out_path, "output edge-list path")->required();

  CLI::App* verify = app.add_subcommand("verify-tables", "recompute the built-in cycle tables");
  verify->add_option("which", which, "I, II, III, V or all")
      ->required()
      ->check(CLI::IsMember({"I", "II", "III", "V", "all"}));

  CLI::App* alist = app.add_subcommand("import-alist", "read a Tanner graph in alist format");
  alist->add_option("input", in_path, "alist path")->required();
  alist->add_option("--out", out_path, "also write the edge list here");

  CLI::App* spectrum = app.add_subcommand("spectrum", "floating-point eigenvalue display");
  spectrum->add_option("input", in_path, "edge-list path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) return cmd_construct(family, out_path, options);
    if (census->parsed()) return cmd_census(in_path, max_len, options);
    if (cosp->parsed()) return cmd_cospectral(in_path, in_path2, options);
    if (sw->parsed()) return cmd_switch(in_path, in_path2, out_path, options);
    if (verify->parsed()) return cmd_verify_tables(which, options);
    if (alist->parsed()) return cmd_import_alist(in_path, out_path, options);
    if (spectrum->parsed()) return cmd_spectrum(in_path, options);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
