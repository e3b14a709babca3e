// End-to-end checks of the cospec binary: exit codes, report lines, and the
// bit-exact file contracts.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

#include "cospec/constructions.hpp"
#include "cospec/graph.hpp"
#include "cospec/io.hpp"

namespace cospec {
namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(COSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(output)};
}

std::string tmp_path(const std::string& name) { return ::testing::TempDir() + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliConstruct, WritesGraphAndSidecars) {
  std::string out = tmp_path("gt4.el");
  RunResult r = run("construct Gt:t=4 " + out);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "nodes 23"));
  Graph g = read_edge_list(read_file(out));
  EXPECT_TRUE(g == build_Gt(4).graph);  // construct -> write -> read round trip
  EXPECT_FALSE(read_file(out + ".bip").empty());
  SwitchingPartition p = read_partition(read_file(out + ".cells"), g);
  EXPECT_EQ(p.cell_count(), 5);
}

TEST(CliConstruct, HeawoodAndUsageErrors) {
  std::string out = tmp_path("heawood.el");
  RunResult r = run("construct heawood " + out);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "nodes 14"));
  EXPECT_TRUE(contains(r.output, "edges 21"));

  EXPECT_EQ(run("construct Gt:t=0 " + tmp_path("x.el")).exit_code, 2);
  EXPECT_EQ(run("construct nonsense " + tmp_path("x.el")).exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
}

TEST(CliCensus, ForestGivesEmptyCensus) {
  std::string out = tmp_path("p8.el");
  ASSERT_EQ(run("construct path:n=8 " + out).exit_code, 0);
  RunResult r = run("census " + out + " --max-len 12");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "girth infinite"));
  EXPECT_TRUE(contains(r.output, "census_begin\ncensus_end"));
}

TEST(CliCensus, BudgetExceededExitsThree) {
  std::string out = tmp_path("h54.el");
  ASSERT_EQ(run("construct heawood54 " + out).exit_code, 0);
  RunResult r = run("census " + out + " --max-len 22 --budget 10");
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_TRUE(contains(r.output, "status budget-exceeded"));
}

TEST(CliCensus, ParseErrorExitsTwo) {
  std::string bad = tmp_path("bad.el");
  write_file(bad, "n 2 1\n1 0\n");
  EXPECT_EQ(run("census " + bad + " --max-len 6").exit_code, 2);
  EXPECT_EQ(run("census " + tmp_path("missing.el") + " --max-len 6").exit_code, 2);
}

TEST(CliCospectral, VerdictsAndExitCodes) {
  std::string g_path = tmp_path("G.el"), gp_path = tmp_path("Gp.el");
  ASSERT_EQ(run("construct heawood54 " + g_path).exit_code, 0);
  ASSERT_EQ(run("construct heawood54prime " + gp_path).exit_code, 0);
  RunResult same = run("cospectral " + g_path + " " + gp_path);
  EXPECT_EQ(same.exit_code, 0);
  EXPECT_TRUE(contains(same.output, "cospectral true"));
  EXPECT_TRUE(contains(same.output, "charpoly1 "));

  std::string c6 = tmp_path("c6.el"), p6 = tmp_path("p6.el");
  ASSERT_EQ(run("construct cycle:n=6 " + c6).exit_code, 0);
  ASSERT_EQ(run("construct path:n=6 " + p6).exit_code, 0);
  RunResult diff = run("cospectral " + c6 + " " + p6);
  EXPECT_EQ(diff.exit_code, 1);
  EXPECT_TRUE(contains(diff.output, "cospectral false"));
}

TEST(CliSwitch, ReproducesDirectPrimeBitExactly) {
  std::string g_path = tmp_path("G2.el");
  ASSERT_EQ(run("construct heawood54 " + g_path).exit_code, 0);
  std::string switched = tmp_path("G2_switched.el");
  RunResult r = run("switch " + g_path + " " + g_path + ".cells " + switched);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "partition_valid true"));
  EXPECT_TRUE(contains(r.output, "cell_degrees_1 0 1 0 0 0 1"));

  std::string gp_path = tmp_path("Gp2.el");
  ASSERT_EQ(run("construct heawood54prime " + gp_path).exit_code, 0);
  EXPECT_EQ(read_file(switched), read_file(gp_path));
}

TEST(CliSwitch, NoHalfPartitionCopiesInput) {
  std::string star = tmp_path("star.el");
  ASSERT_EQ(run("construct kab:a=1,b=4 " + star).exit_code, 0);
  std::string cells = tmp_path("star.cells");
  write_file(cells, "cells 1\n1 2 3 4\n");
  std::string out = tmp_path("star_switched.el");
  ASSERT_EQ(run("switch " + star + " " + cells + " " + out).exit_code, 0);
  EXPECT_EQ(read_file(out), read_file(star));
}

TEST(CliSwitch, InvalidPartitionListsViolationsAndExitsOne) {
  std::string c6 = tmp_path("c6b.el");
  ASSERT_EQ(run("construct cycle:n=6 " + c6).exit_code, 0);
  std::string cells = tmp_path("c6b.cells");
  write_file(cells, "cells 1\n0 1 2\n");
  RunResult r = run("switch " + c6 + " " + cells + " " + tmp_path("c6b_out.el"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(contains(r.output, "partition_valid false"));
  EXPECT_TRUE(contains(r.output, "violation "));
  EXPECT_TRUE(contains(r.output, "status invalid-partition"));
}

TEST(CliVerifyTables, TablesOneThreeFivePass) {
  RunResult one = run("verify-tables I");
  EXPECT_EQ(one.exit_code, 0);
  EXPECT_TRUE(contains(one.output, "cells_checked 36"));
  EXPECT_TRUE(contains(one.output, "verdict PASS"));

  RunResult five = run("verify-tables V");
  EXPECT_EQ(five.exit_code, 0);
  EXPECT_TRUE(contains(five.output, "cells_checked 12"));

  RunResult three = run("--threads 2 verify-tables III");
  EXPECT_EQ(three.exit_code, 0);
  EXPECT_TRUE(contains(three.output, "cells_checked 16"));
}

TEST(CliVerifyTables, TableTwoReportsTheKnownDiscrepantCell) {
  // The published table II disagrees with the recomputed census in exactly
  // one cell; the tool's job is to say so and exit nonzero.
  RunResult two = run("--threads 2 verify-tables II");
  EXPECT_EQ(two.exit_code, 1);
  EXPECT_TRUE(contains(two.output, "cells_checked 18"));
  EXPECT_TRUE(contains(two.output, "mismatches 1"));
  EXPECT_TRUE(contains(two.output,
                       "mismatch table II row G length 18 expected 1609 got 1606"));

  RunResult all = run("--threads 2 verify-tables all");
  EXPECT_EQ(all.exit_code, 1);
  EXPECT_TRUE(contains(all.output, "cells_checked 82"));
  EXPECT_TRUE(contains(all.output, "mismatches 1"));
}

TEST(CliImportAlist, DegreesAndRoundTrip) {
  std::string alist = tmp_path("k43.alist");
  write_file(alist,
             "4 3\n3 4\n3 3 3 3\n4 4 4\n"
             "1 2 3\n1 2 3\n1 2 3\n1 2 3\n"
             "1 2 3 4\n1 2 3 4\n1 2 3 4\n");
  std::string out = tmp_path("k43.el");
  RunResult r = run("import-alist " + alist + " --out " + out);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "variable_degrees 3 3 3 3"));
  EXPECT_TRUE(contains(r.output, "check_degrees 4 4 4"));
  EXPECT_TRUE(read_edge_list(read_file(out)) == complete_bipartite(4, 3));

  std::string bad = tmp_path("bad.alist");
  write_file(bad, "2 2\n2 2\n2 1\n1 2\n1 2\n1\n1\n2 1\n");
  EXPECT_EQ(run("import-alist " + bad).exit_code, 2);
}

TEST(CliSpectrum, PrintsSortedEigenvalues) {
  std::string star = tmp_path("k14.el");
  ASSERT_EQ(run("construct kab:a=1,b=4 " + star).exit_code, 0);
  RunResult r = run("spectrum " + star);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.output, "spectrum_begin\n2.000000000\n0.000000000"));
  EXPECT_TRUE(contains(r.output, "-2.000000000\nspectrum_end"));
}

TEST(CliStructuredFormat, EmitsParseableJson) {
  std::string out = tmp_path("c8.el");
  ASSERT_EQ(run("construct cycle:n=8 " + out).exit_code, 0);
  RunResult r = run("--format structured census " + out + " --max-len 10");
  EXPECT_EQ(r.exit_code, 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["census"]["8"], 1);
  EXPECT_EQ(j["fields"]["girth"], "8");
}

}  // namespace
}  // namespace cospec
