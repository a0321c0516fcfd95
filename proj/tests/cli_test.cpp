#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hgs_cli.hpp"

using namespace hgs;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + "hgs_cli_test_" + name; }

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST(CliBuild, Cycle) {
  auto r = run({"build", "cycle:g=3,k=3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "{\"n\": 6, \"edges\": [[0, 1, 2], [2, 3, 4], [0, 4, 5]]}\n");
}

TEST(CliBuild, SecondMinimizer) {
  auto r = run({"build", "lop:g=2,k=3,s=1,v=2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(hypergraph_from_json(r.out), lollipop(2, 3, 1, 2));
}

TEST(CliBuild, Errors) {
  auto bad = run({"build", "cycle:g=1,k=3"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("BadParams"), std::string::npos);
  EXPECT_EQ(run({"build", "cycle:g=3,k=3,z=1"}).code, 2);
  EXPECT_EQ(run({"build"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliBuild, RoundTripThroughFile) {
  for (const char* spec : {"cycle:g=4,k=4", "lop:g=3,k=3,s=2,v=1", "ustar:n=8,k=3,g=2", "path:q=3,k=5"}) {
    const auto path = temp_path("roundtrip.json");
    auto r = run({"--out", path, "build", spec});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(read_hypergraph_file(path), build_family(spec));
    std::remove(path.c_str());
  }
}

TEST(CliBuild, PowerFromFile) {
  const auto base = write_file("c4.json", hypergraph_to_json(ordinary_cycle(4)));
  auto r = run({"build", "power:k=3,base=" + base});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(are_isomorphic(hypergraph_from_json(r.out), hypercycle(4, 3).graph));
}

TEST(CliSpectrum, CycleCsv) {
  auto r = run({"spectrum", "cycle:g=4,k=3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "rho,residual,iterations,converged,connected");
  EXPECT_NEAR(std::stod(rows[1].substr(0, rows[1].find(','))), 1.6180340, 1e-7);
  EXPECT_NE(rows[1].find(",true,true"), std::string::npos);
}

TEST(CliSpectrum, SingleEdgeFile) {
  const auto path = write_file("edge.json", R"({"n": 3, "edges": [[0, 1, 2]]})");
  auto r = run({"--format", "json", "spectrum", path});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["rho"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(doc["eigenvector"].size(), 3u);
  EXPECT_TRUE(doc["converged"].get<bool>());
  EXPECT_TRUE(doc["connected"].get<bool>());
}

TEST(CliSpectrum, Oracle) {
  auto r = run({"spectrum", "lop:g=3,k=3,s=1,v=1", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = lines(r.out);
  EXPECT_EQ(rows[0], "rho,residual,iterations,converged,connected,oracle_rho,discrepancy");
  auto json = run({"--format", "json", "spectrum", "lop:g=3,k=3,s=1,v=1", "--oracle"});
  auto doc = nlohmann::json::parse(json.out);
  EXPECT_LE(doc["discrepancy"].get<double>(), 1e-8);
  EXPECT_NEAR(doc["oracle_rho"].get<double>(), 1.732531359198170, 1e-8);
}

TEST(CliSpectrum, Eigenvector) {
  auto r = run({"spectrum", "cycle:g=3,k=3", "--eigenvector"});
  ASSERT_EQ(r.code, 0);
  auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2u + 1u + 1u + 6u);
  EXPECT_EQ(rows[3], "vertex,entry");
  EXPECT_EQ(rows[4].rfind("0,", 0), 0u);
}

TEST(CliSpectrum, NotConvergedExitsOne) {
  auto r = run({"--max-iter", "2", "spectrum", "lop:g=4,k=3,s=2,v=1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("NotConverged"), std::string::npos);
}

TEST(CliSpectrum, DisconnectedWarns) {
  const auto path = write_file("two.json", R"({"n": 6, "edges": [[0, 1, 2], [3, 4, 5]]})");
  auto r = run({"spectrum", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("disconnected"), std::string::npos);
}

TEST(CliSpectrum, InputErrors) {
  EXPECT_EQ(run({"spectrum", "/nonexistent/file.json"}).code, 2);
  const auto bad = write_file("bad.json", "{\"n\": 3, \"edges\": [[0, 1, 2], [0, 1, 2]]}");
  auto dup = run({"spectrum", bad});
  EXPECT_EQ(dup.code, 2);
  EXPECT_NE(dup.err.find("DuplicateEdge"), std::string::npos);
  EXPECT_EQ(run({"--tol", "-1", "spectrum", "cycle:g=3,k=3"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "spectrum", "cycle:g=3,k=3"}).code, 2);
}

TEST(CliFormula, Values) {
  auto power = run({"formula", "power", "k=3", "d=3"});
  EXPECT_EQ(power.code, 0);
  EXPECT_EQ(power.out.substr(0, 12), "2.1861406616");
  auto cycle = run({"formula", "cycle", "k=3"});
  EXPECT_EQ(cycle.out.substr(0, 12), "1.6180339887");
  EXPECT_EQ(run({"formula", "power", "k=2", "d=3"}).code, 2);
  EXPECT_EQ(run({"formula", "power", "k=3"}).code, 2);
  EXPECT_EQ(run({"formula", "cycle", "k=3", "x=1"}).code, 2);
  EXPECT_EQ(run({"formula", "star", "k=3"}).code, 2);
}

TEST(CliEnumerate, SixThree) {
  auto r = run({"enumerate", "n=6", "k=3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "key,rho,girth");
  EXPECT_EQ(rows[1].substr(0, rows[1].find(',')), canonical_form(hypercycle(3, 3).graph).to_string());
  EXPECT_EQ(rows[2].substr(0, rows[2].find(',')), canonical_form(lollipop(2, 3, 1, 2)).to_string());
  EXPECT_EQ(rows[1].substr(rows[1].rfind(',') + 1), "3");
}

TEST(CliEnumerate, LabeledAndJson) {
  auto labeled = run({"enumerate", "n=6", "k=3", "--labeled"});
  ASSERT_EQ(labeled.code, 0);
  std::size_t count = 0;
  for_each_unicyclic(6, 3, [&](const Hypergraph&) { ++count; });
  EXPECT_EQ(lines(labeled.out).size(), count + 1);
  auto json = run({"--format", "json", "enumerate", "n=6", "k=3"});
  auto doc = nlohmann::json::parse(json.out);
  ASSERT_EQ(doc.size(), 3u);
  EXPECT_LE(doc[0]["rho"].get<double>(), doc[1]["rho"].get<double>());
}

TEST(CliEnumerate, Errors) {
  auto r = run({"enumerate", "n=5", "k=3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("SizeNotRepresentable"), std::string::npos);
  EXPECT_EQ(run({"enumerate", "n=8", "k=3", "--max-subsets", "10"}).code, 3);
  EXPECT_EQ(run({"enumerate", "n=6"}).code, 2);
}

TEST(CliVerify, SubsetGrid) {
  auto r = run({"verify", "--grid", "k=3", "g=2..4", "s=1..2", "--no-timings"});
  EXPECT_NE(r.err.find("cases "), std::string::npos);
  auto rows = lines(r.out);
  ASSERT_GT(rows.size(), 1u);
  EXPECT_EQ(rows[0], "property,params,value_a,value_b,margin,verdict,runtime_ms");
  bool tail_case = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].substr(rows[i].rfind(',') + 1), "0");
    if (rows[i].rfind("lollipop_tail_growth,", 0) == 0) tail_case = true;
  }
  // the literal tail-growth inequality fails, so the run reports failure
  EXPECT_TRUE(tail_case);
  EXPECT_EQ(r.code, 1);
}

TEST(CliVerify, DeterministicBody) {
  const std::vector<std::string> args{"verify", "--grid", "k=3", "g=3", "s=0", "--no-timings"};
  auto a = run(args);
  auto b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
  auto ja = run({"--format", "json", "verify", "--grid", "k=3", "g=3", "s=0", "--no-timings"});
  auto jb = run({"--format", "json", "verify", "--grid", "k=3", "g=3", "s=0", "--no-timings"});
  EXPECT_EQ(ja.out, jb.out);
  auto doc = nlohmann::json::parse(ja.out);
  EXPECT_TRUE(doc.contains("summary"));
  EXPECT_TRUE(doc.contains("coverage"));
  EXPECT_EQ(doc["cases"].size(), doc["summary"]["total"].get<std::size_t>());
}

TEST(CliVerify, GridWithoutTailsPasses) {
  auto r = run({"verify", "--grid", "k=3", "g=3", "s=0", "--no-timings"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(CliVerify, BadGrid) {
  EXPECT_EQ(run({"verify", "--grid", "q=3"}).code, 2);
  EXPECT_EQ(run({"verify", "--grid", "g=4..2"}).code, 2);
  EXPECT_EQ(run({"verify", "--margin", "0"}).code, 2);
}
