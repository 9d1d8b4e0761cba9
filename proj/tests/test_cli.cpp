// Copyright 2026 The georoute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "georoute/graph_io.hpp"
#include "georoute_cli/cli.hpp"
#include "georoute_cli/svg.hpp"

namespace {

namespace fs = std::filesystem;
using georoute::cli::run;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(GEOROUTE_TEST_TMP) /
           ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  static std::size_t count(const std::string& text, const std::string& what) {
    std::size_t n = 0;
    for (auto pos = text.find(what); pos != std::string::npos; pos = text.find(what, pos + 1)) ++n;
    return n;
  }

  fs::path dir_;
};

TEST_F(Cli, TrapSolveIsExact) {
  ASSERT_EQ(call({"gen", "trap", "--k", "10", "--paths", "4", "-o", path("g.txt")}).code, 0);
  const auto r = call({"solve", path("g.txt"), "--strategy", "random-compass", "--from", "s"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "2047\n");
}

TEST_F(Cli, SolveFromTargetIsZero) {
  ASSERT_EQ(call({"gen", "trap", "--k", "3", "-o", path("g.txt")}).code, 0);
  EXPECT_EQ(call({"solve", path("g.txt"), "--from", "t"}).out, "0\n");
  EXPECT_EQ(call({"solve", path("g.txt"), "--from", "0"}).out, "0\n");
}

TEST_F(Cli, SolveDecimalAndInfinity) {
  ASSERT_EQ(call({"gen", "two-red", "--k", "6", "-o", path("g.txt")}).code, 0);
  EXPECT_EQ(call({"solve", path("g.txt"), "--strategy", "greedy"}).out, "inf\n");
  ASSERT_EQ(call({"gen", "chain", "--k", "6", "-o", path("c.txt")}).code, 0);
  // Exact value and its decimal rendering agree.
  const auto exact = call({"solve", path("c.txt"), "--strategy", "random-walk", "--from", "mid",
                           "--to", "0"});
  const auto approx = call({"solve", path("c.txt"), "--strategy", "random-walk", "--from", "mid",
                            "--to", "0", "--decimal"});
  EXPECT_EQ(exact.code, 0);
  EXPECT_EQ(std::stod(approx.out), std::stod(exact.out));
  EXPECT_NE(approx.out.find('.'), std::string::npos);
}

TEST_F(Cli, AdversaryWritesGraphAndCertificate) {
  const auto r = call({"adversary", "--strategy", "random-walk", "--k", "12", "-o", path("out")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(path("out/graph.txt")));
  const std::string cert = slurp(path("out/certificate.txt"));
  EXPECT_EQ(cert, r.out);
  std::smatch m;
  ASSERT_TRUE(std::regex_search(cert, m, std::regex("expectation=([0-9]+)(/([0-9]+))?\n")));
  const double num = std::stod(m[1]);
  const double den = m[3].matched ? std::stod(m[3]) : 1.0;
  EXPECT_GE(num / den, 24.0);
  // The written graph solves to the certified value.
  const auto solved =
      call({"solve", path("out/graph.txt"), "--strategy", "random-walk", "--from", "s"});
  EXPECT_EQ("expectation=" + solved.out, m[0].str());
}

TEST_F(Cli, ValidateVerdictsAndExitCodes) {
  ASSERT_EQ(call({"gen", "three-blue", "--k", "6", "--variant", "ABA", "-o", path("g.txt")}).code,
            0);
  auto ok = call({"validate", path("g.txt")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out.rfind("ok:", 0), 0u);
  auto tri = call({"validate", path("g.txt"), "--triangulation"});
  EXPECT_EQ(tri.code, 1);
  EXPECT_EQ(tri.out.rfind("fail:", 0), 0u);
  ASSERT_EQ(call({"gen", "trap", "--k", "4", "-o", path("t.txt")}).code, 0);
  EXPECT_EQ(call({"validate", path("t.txt"), "--triangulation", "--trap"}).code, 0);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"gen", "trap", "--k", "3", "--bogus"}).code, 2);
  EXPECT_EQ(call({"gen", "hexagon"}).code, 2);
  EXPECT_EQ(call({"gen", "trap"}).code, 2);  // --k missing
  EXPECT_EQ(call({"gen", "trap", "--k", "3", "--paths", "5"}).code, 2);
  EXPECT_EQ(call({"classify", "--k", "7"}).code, 2);
  EXPECT_EQ(call({"classify", "--k", "8", "--strategy", "teleport"}).code, 2);
  ASSERT_EQ(call({"gen", "trap", "--k", "3", "-o", path("g.txt")}).code, 0);
  EXPECT_EQ(call({"solve", path("g.txt"), "--from", "banana"}).code, 2);
  EXPECT_EQ(call({"solve", path("g.txt"), "--from", "999"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST_F(Cli, IoAndParseErrorsExitOne) {
  auto r = call({"solve", path("missing.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  std::ofstream(path("bad.txt")) << "geomgraph 1\nV 1\n0 zero 0\n";
  r = call({"validate", path("bad.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(Cli, ClassifyPrintsColor) {
  const auto blue = call({"classify", "--strategy", "random-compass", "--k", "12"});
  EXPECT_EQ(blue.code, 0);
  EXPECT_NE(blue.out.find("color=Blue\n"), std::string::npos);
  EXPECT_NE(blue.out.find("threshold=24\n"), std::string::npos);
  const auto red = call({"classify", "--strategy", "greedy", "--k", "12", "--variant", "B",
                         "--alpha", "120"});
  EXPECT_NE(red.out.find("chain=B(120)\n"), std::string::npos);
  EXPECT_NE(red.out.find("color=Red\n"), std::string::npos);
}

TEST_F(Cli, RouteIsReproducibleUnderSeed) {
  ASSERT_EQ(call({"gen", "trap", "--k", "5", "-o", path("g.txt")}).code, 0);
  const std::vector<std::string> once{"route", path("g.txt"), "--seed", "17"};
  const auto a = call(once), b = call(once);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, call({"route", path("g.txt"), "--seed", "18"}).out);
  const std::vector<std::string> many{"route", path("g.txt"), "--seed", "3", "--trials", "500"};
  EXPECT_EQ(call(many).out, call(many).out);
  EXPECT_NE(call(many).out.find("mean "), std::string::npos);
}

TEST_F(Cli, EveryCommandIsByteIdenticalOnRepeat) {
  ASSERT_EQ(call({"gen", "delaunay", "--n", "15", "--seed", "4", "-o", path("d.txt")}).code, 0);
  const std::vector<std::vector<std::string>> commands{
      {"gen", "trap", "--k", "6", "--paths", "3"},
      {"gen", "chain", "--k", "8", "--variant", "B", "--alpha", "240"},
      {"gen", "delaunay", "--n", "15", "--seed", "4"},
      {"gen", "two-blue", "--k", "6", "--alpha", "60"},
      {"validate", path("d.txt"), "--triangulation"},
      {"solve", path("d.txt"), "--strategy", "random-walk", "--from", "5"},
      {"route", path("d.txt"), "--strategy", "random-compass", "--from", "5", "--seed", "9"},
      {"classify", "--strategy", "random-walk", "--k", "8"},
      {"adversary", "--strategy", "random-compass", "--k", "8"},
      {"render", path("d.txt")},
  };
  for (const auto& c : commands) {
    const auto a = call(c), b = call(c);
    EXPECT_EQ(a.code, 0) << c[0] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << c[0];
    EXPECT_FALSE(a.out.empty()) << c[0];
  }
}

TEST_F(Cli, GeneratedFilesRoundTrip) {
  for (const auto& kind : {"trap", "chain", "two-blue", "two-red", "three-blue"}) {
    const std::string p = path(std::string(kind) + ".txt");
    ASSERT_EQ(call({"gen", kind, "--k", "6", "-o", p}).code, 0) << kind;
    const auto g = georoute::read_graph_file(p);
    EXPECT_EQ(georoute::write_graph(g), slurp(p)) << kind;
  }
}

TEST_F(Cli, RenderTriangle) {
  std::ofstream(path("tri.txt")) << "geomgraph 1\nV 3\n0 0 0\n1 1 0\n2 0 1\nE 3\n0 1\n1 2\n0 2\nT 2\n";
  const auto r = call({"render", path("tri.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count(r.out, "<circle "), 3u);
  EXPECT_EQ(count(r.out, "<line "), 3u);
  EXPECT_EQ(count(r.out, "<polyline "), 0u);
  EXPECT_EQ(r.out.rfind("<?xml", 0), 0u);
  EXPECT_NE(r.out.find("version=\"1.1\""), std::string::npos);
  EXPECT_NE(r.out.find("#d62728"), std::string::npos);  // target highlighted
}

TEST_F(Cli, RenderTrapHasFourSpokes) {
  ASSERT_EQ(call({"gen", "trap", "--k", "4", "--paths", "4", "-o", path("g.txt")}).code, 0);
  const auto g = georoute::read_graph_file(path("g.txt"));
  EXPECT_EQ(g.degree(*g.target()), 4u);
  const auto svg = call({"render", path("g.txt")}).out;
  EXPECT_EQ(count(svg, "<circle "), g.vertex_count());
  EXPECT_EQ(count(svg, "<line "), g.edge_count());
}

TEST_F(Cli, RenderTraceHasOneSegmentPerStep) {
  ASSERT_EQ(call({"gen", "trap", "--k", "3", "-o", path("g.txt")}).code, 0);
  // Find a seed whose walk takes exactly 15 steps.
  std::string trace;
  for (int seed = 0; seed < 5000 && trace.empty(); ++seed) {
    const auto r = call({"route", path("g.txt"), "--seed", std::to_string(seed), "-o",
                         path("trace.txt")});
    if (r.out.rfind("steps 15\n", 0) == 0) trace = path("trace.txt");
  }
  ASSERT_FALSE(trace.empty());
  const auto svg = call({"render", path("g.txt"), "--trace", trace, "-o", path("g.svg")});
  ASSERT_EQ(svg.code, 0) << svg.err;
  const std::string doc = slurp(path("g.svg"));
  std::smatch m;
  ASSERT_TRUE(std::regex_search(doc, m, std::regex("points=\"([^\"]*)\"")));
  const std::string pts = m[1];
  EXPECT_EQ(count(pts, " ") + 1, 16u);  // 16 points, 15 segments
  EXPECT_NE(doc.find("steps: 15"), std::string::npos);
}

TEST(Svg, DeterministicAndRejectsBadTrace) {
  georoute::EmbeddedGraph g;
  g.add_vertex({0, 0});
  g.add_vertex({3, 1});
  g.add_edge(0, 1);
  EXPECT_EQ(georoute::cli::render_svg(g), georoute::cli::render_svg(g));
  EXPECT_THROW(georoute::cli::render_svg(g, std::vector<georoute::VertexId>{0, 5}),
               std::out_of_range);
}

}  // namespace
