/*
   Copyright 2026 The grembed Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

#include "grembed/grembed.hpp"

namespace grembed {
namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + GREMBED_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

Json point_json(const Ring& ring, const std::vector<std::vector<long long>>& rows) {
  return to_json(GrassmannPoint(Matrix::from_ints(ring, rows)));
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("grembed_cli_" + std::to_string(::getpid()) + "_" + name);
}

TEST(Cli, WedgeOfCoordinatePlaneIsFirstPlueckerVector) {
  Ring f2 = Ring::prime_field(2);
  auto p = point_json(f2, {{1, 0}, {0, 1}, {0, 0}, {0, 0}});
  CliResult r = run("--format json embed --kind wedge --r 2 --point " + quote(p.dump()));
  ASSERT_EQ(r.code, 0);
  Json out = Json::parse(r.out);
  GrassmannPoint image = point_from_json(out["point"]);
  EXPECT_EQ(image.ambient_dim(), 6u);
  EXPECT_EQ(image.basis(), Matrix::from_ints(f2, {{1}, {0}, {0}, {0}, {0}, {0}}));
  EXPECT_EQ(out["labels"], Json::parse("[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]"));
}

TEST(Cli, SymCollisionOverDualNumbers) {
  Ring d = Ring::dual_numbers(2);
  Matrix a(d, 2, 1, {d.one(), d.zero()});
  Matrix b(d, 2, 1, {d.one(), d.epsilon()});
  auto ja = to_json(GrassmannPoint(a)).dump();
  auto jb = to_json(GrassmannPoint(b)).dump();
  CliResult ra = run("--format json embed --kind sym --r 2 --point " + quote(ja));
  CliResult rb = run("--format json embed --kind sym --r 2 --point " + quote(jb));
  ASSERT_EQ(ra.code, 0);
  ASSERT_EQ(rb.code, 0);
  EXPECT_NE(ja, jb);
  EXPECT_EQ(Json::parse(ra.out)["point"], Json::parse(rb.out)["point"]);
}

TEST(Cli, TensorOfTwoLines) {
  Ring f2 = Ring::prime_field(2);
  auto a = point_json(f2, {{1}, {1}});
  auto b = point_json(f2, {{0}, {1}});
  CliResult r = run("--format json embed --kind tensor --point " + quote(a.dump()) + " --point " + quote(b.dump()));
  ASSERT_EQ(r.code, 0);
  GrassmannPoint image = point_from_json(Json::parse(r.out)["point"]);
  EXPECT_EQ(image.ambient_dim(), 4u);
  EXPECT_EQ(image.rank(), 1u);
  EXPECT_EQ(image.basis(), Matrix::from_ints(f2, {{0}, {1}, {0}, {1}}));
}

TEST(Cli, InputFromFileAndStdin) {
  Ring f3 = Ring::prime_field(3);
  auto p = point_json(f3, {{2}, {1}, {0}});
  auto path = temp_file("point.json");
  std::ofstream(path) << p.dump();
  CliResult from_file = run("--format json embed --kind tensor-power --r 2 --input " + path.string());
  CliResult from_stdin = run("--format json embed --kind tensor-power --r 2 --input - < " + path.string());
  std::filesystem::remove(path);
  ASSERT_EQ(from_file.code, 0);
  EXPECT_EQ(from_file.out, from_stdin.out);
  EXPECT_EQ(point_from_json(Json::parse(from_file.out)["point"]).ambient_dim(), 9u);
}

TEST(Cli, PlueckerCoordinates) {
  Ring f2 = Ring::prime_field(2);
  auto p = point_json(f2, {{1, 0}, {0, 1}, {1, 1}});
  CliResult r = run("--format json pluecker --point " + quote(p.dump()));
  ASSERT_EQ(r.code, 0);
  Json out = Json::parse(r.out);
  ASSERT_EQ(out["coordinates"].size(), 3u);
  // Minors of [[1,0],[0,1],[1,1]] on rows {0,1}, {0,2}, {1,2}.
  EXPECT_EQ(out["coordinates"][0]["value"], 1);
  EXPECT_EQ(out["coordinates"][1]["value"], 1);
  EXPECT_EQ(out["coordinates"][2]["value"], 1);
}

TEST(Cli, EnumerateCounts) {
  EXPECT_EQ(lines(run("--format json enumerate --ring fp --p 2 --n 2 --m 1").out).size(), 3u);
  EXPECT_EQ(lines(run("--format json enumerate --q 2 --n 4 --m 2").out).size(), 35u);
  EXPECT_EQ(lines(run("--format json enumerate --ring dual --p 2 --n 2 --m 1").out).size(), 6u);
  CliResult text = run("enumerate --q 3 --n 2 --m 1");
  ASSERT_EQ(text.code, 0);
  EXPECT_EQ(lines(text.out).back(), "# 4 points");
}

TEST(Cli, EmittedPointsRoundTrip) {
  CliResult r = run("--format json enumerate --ring dual --p 3 --n 2 --m 1");
  ASSERT_EQ(r.code, 0);
  std::vector<GrassmannPoint> seen;
  for (const auto& line : lines(r.out)) {
    GrassmannPoint p = point_from_json(Json::parse(line));
    EXPECT_EQ(to_json(p).dump(), line);
    for (const auto& q : seen) EXPECT_FALSE(q == p);
    seen.push_back(p);
  }
  EXPECT_EQ(seen.size(), 12u);
}

TEST(Cli, VerifyWedgeLemma) {
  CliResult r = run("verify wedge-lemma --q 2 --n 4 --m 2 --r 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cases=1225"), std::string::npos);
  EXPECT_NE(r.out.find("verdict=pass"), std::string::npos);
}

TEST(Cli, VerifyDetIdentities) {
  CliResult r = run("--format json verify det-identities --trials 100");
  ASSERT_EQ(r.code, 0);
  Json rep = Json::parse(r.out);
  EXPECT_EQ(rep["verdict"], "pass");
  EXPECT_GE(rep["cases_checked"].get<long long>(), 100);
}

TEST(Cli, Counterexample) {
  CliResult r = run("counterexample --p 2 --r 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict=expected-failure-observed"), std::string::npos);
  EXPECT_EQ(run("counterexample --p 2 --r 3").code, 2);
}

TEST(Cli, ReportFileMatchesStdout) {
  auto path = temp_file("report.json");
  CliResult r = run("--format json verify sym-lemma --ring dual --p 2 --n 2 --m 1 --r 2 --expect-failure --output " +
              path.string());
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  Json file = Json::parse(in);
  std::filesystem::remove(path);
  EXPECT_EQ(file, Json::parse(r.out));
  EXPECT_EQ(file["verdict"], "expected-failure-observed");
  ASSERT_FALSE(file["failures"].empty());
  EXPECT_TRUE(witness_reproduces(file["failures"][0]));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("--help").code, 0);
  // Unexpected collision without --expect-failure is a verification failure.
  EXPECT_EQ(run("verify sym-lemma --ring dual --p 2 --n 2 --m 1 --r 2").code, 1);
  EXPECT_EQ(run("verify injectivity --which S_r --ring dual --p 2 --n 2 --m 1 --r 2").code, 1);
  EXPECT_EQ(run("verify no-such-suite").code, 2);
  EXPECT_EQ(run("enumerate --ring fp --p 4 --n 2 --m 1").code, 2);
  EXPECT_EQ(run("enumerate --ring fp --n 2 --m 1").code, 2);
  EXPECT_EQ(run("enumerate --ring int --n 2 --m 1").code, 2);
  EXPECT_EQ(run("enumerate --q 5 --n 4 --m 2").code, 2);
  EXPECT_EQ(run("enumerate --q 2 --n 2 --m 1 --bogus").code, 2);
  EXPECT_EQ(run("embed --kind wedge --r 2 --point '{not json'").code, 2);
  EXPECT_EQ(run("embed --kind wedge --r 2 --input /nonexistent/file.json").code, 2);
  EXPECT_EQ(run("embed --kind wedge --point '{}'").code, 2);
  EXPECT_EQ(run("det-identity --kind sym").code, 2);
}

TEST(Cli, ResultsIndependentOfThreadCount) {
  const std::string args = "--format json verify injectivity --which T_r --ring dual --p 2 --n 2 --m 1 --r 2";
  CliResult one = run(args, "GREMBED_THREADS=1");
  CliResult many = run(args, "GREMBED_THREADS=4");
  ASSERT_EQ(one.code, many.code);
  Json a = Json::parse(one.out), b = Json::parse(many.out);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace grembed
