// Copyright 2026 The Homotopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / "homotopt_cli_tests" / name;
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

CliRun run(const std::string& args) {
  const fs::path err = fs::temp_directory_path() / "homotopt_cli_stderr.txt";
  const std::string cmd = std::string(HOMOTOPT_CLI) + " " + args + " 2>" + err.string();
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

std::string data(const std::string& f) { return std::string(HOMOTOPT_TEST_DATA) + "/" + f; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double dot(const json& a, const std::vector<double>& w) {
  double s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += a[i].get<double>() * w[i];
  return s;
}

}  // namespace

TEST(CliSolve, UnitBallConvergesToNormalizedWeight) {
  const CliRun r = run("solve " + data("unit_ball.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["status"], "Converged");
  const std::vector<double> w{1, -2, 2};
  EXPECT_NEAR(j["final_value"].get<double>(), 3.0, 1e-9);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(j["final_point"][i].get<double>(), w[i] / 3.0, 1e-9);
  EXPECT_NEAR(j["final_value"].get<double>(), dot(j["final_point"], w), 1e-12);
}

TEST(CliSolve, PnormMatchesHolderValue) {
  const CliRun r = run("solve " + data("pnorm8.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  const std::vector<double> w{0.3, -1.2, 0.7};
  const double q = 8.0 / 7.0;
  double s = 0;
  for (double wi : w) s += std::pow(std::abs(wi), q);
  EXPECT_NEAR(j["final_value"].get<double>(), std::pow(s, 1 / q), 1e-5);
  EXPECT_NEAR(j["final_value"].get<double>(), dot(j["final_point"], w), 1e-12);
  EXPECT_EQ(j["problem"], "pnorm(p=8,n=3)");
  EXPECT_TRUE(j["options"].contains("rk_tolerance"));
}

TEST(CliSolve, FailingPencilExitsWithDivergence) {
  const CliRun r = run("solve " + data("failing_pencil.json"));
  EXPECT_EQ(r.code, 2);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["status"], "PathDiverged");
  EXPECT_NEAR(j["final_t"].get<double>(), 0.5, 1e-3);
}

TEST(CliSolve, MalformedInputNamesField) {
  CliRun r = run("solve " + data("bad_field.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("'r'"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());

  r = run("solve " + data("bad_syntax.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("not valid JSON"), std::string::npos) << r.err;

  r = run("solve " + data("does_not_exist.json"));
  EXPECT_EQ(r.code, 1);
}

TEST(CliSolve, PathCsvAndTolerance) {
  const fs::path dir = scratch("path_csv");
  const fs::path csv = dir / "path.csv";
  const CliRun r = run("solve " + data("ellipse.json") + " --tol 1e-8 --path-csv " + csv.string());
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["options"]["rk_tolerance"].get<double>(), 1e-8);
  EXPECT_DOUBLE_EQ(j["options"]["corrector_tolerance"].get<double>(), 1e-11);
  const auto ls = lines(slurp(csv));
  ASSERT_GE(ls.size(), 3u);
  EXPECT_EQ(ls.front(), "t,x_1,x_2");
  EXPECT_EQ(split(ls[1], ',')[0], "0");
  double prev = -1;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = split(ls[i], ',');
    ASSERT_EQ(f.size(), 3u);
    const double t = std::stod(f[0]);
    EXPECT_GT(t, prev);
    prev = t;
  }
  EXPECT_DOUBLE_EQ(prev, 1.0);
  EXPECT_NEAR(j["final_value"].get<double>(), dot(j["final_point"], {0.4, 0.9}), 1e-12);
}

TEST(CliBench, DeterministicApartFromTiming) {
  const fs::path dir = scratch("bench");
  const std::string common = "bench pnorm --n 2..3 --p 8 --samples 3 --seed 17 --out ";
  const CliRun a = run(common + (dir / "a.csv").string());
  const CliRun b = run(common + (dir / "b.csv").string() + " --jobs 2");
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0) << b.err;
  const auto la = lines(slurp(dir / "a.csv")), lb = lines(slurp(dir / "b.csv"));
  ASSERT_EQ(la.size(), 7u);
  ASSERT_EQ(la.size(), lb.size());
  const auto header = split(la[0], ',');
  const std::vector<std::string> expected{"suite", "n", "k_or_p", "sample_index", "seed", "status",
                                          "final_value", "kkt_residual", "oracle_gap", "steps", "wall_ms"};
  EXPECT_EQ(header, expected);
  for (std::size_t i = 1; i < la.size(); ++i) {
    auto fa = split(la[i], ','), fb = split(lb[i], ',');
    ASSERT_EQ(fa.size(), expected.size());
    fa.pop_back();
    fb.pop_back();
    EXPECT_EQ(fa, fb);
    EXPECT_EQ(fa[5], "Converged");
    EXPECT_LE(std::stod(fa[8]), 1e-5);
  }
}

TEST(CliBench, SymmetricAcceptsNamedK) {
  const fs::path dir = scratch("bench_sym");
  const CliRun r = run("bench symmetric --n 3..4 --k n-1,half --samples 1 --seed 3 --out " + (dir / "s.csv").string());
  ASSERT_NE(r.code, 1) << r.err;
  // n = 3 has n-1 == half == 2, which appears once
  const auto ls = lines(slurp(dir / "s.csv"));
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(split(ls[1], ',')[1] + "," + split(ls[1], ',')[2], "3,2");
  EXPECT_EQ(split(ls[2], ',')[1] + "," + split(ls[2], ',')[2], "4,2");
  EXPECT_EQ(split(ls[3], ',')[1] + "," + split(ls[3], ',')[2], "4,3");
}

TEST(CliBench, UnknownSuiteIsInputError) {
  const fs::path dir = scratch("bench_bad");
  CliRun r = run("bench spheres --n 2 --samples 1 --seed 1 --out " + (dir / "x.csv").string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("spheres"), std::string::npos) << r.err;
  r = run("bench pnorm --n 4..2 --samples 1 --seed 1 --out " + (dir / "x.csv").string());
  EXPECT_EQ(r.code, 1);
}

TEST(CliDemo, ExampleStartsAtNormalizedDirection) {
  const fs::path dir = scratch("demo_example");
  const CliRun r = run("demo example-3-11 --out-dir " + dir.string());
  ASSERT_EQ(r.code, 0) << r.err;
  const json ann = json::parse(slurp(dir / "example-3-11_annotation.json"));
  EXPECT_EQ(ann["status"], "Converged");
  EXPECT_NEAR(ann["start_point"][0].get<double>(), 2 / std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(ann["start_point"][1].get<double>(), 1 / std::sqrt(5.0), 1e-12);
  const auto path = lines(slurp(dir / "example-3-11_path.csv"));
  ASSERT_GE(path.size(), 2u);
  const auto first = split(path[1], ',');
  EXPECT_NEAR(std::stod(first[1]), 2 / std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(std::stod(first[2]), 1 / std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(ann["final_value"].get<double>(), dot(ann["final_point"], {1.0, 0.5}), 1e-12);
  for (const char* t : {"0", "0.7", "0.9", "1"}) {
    const auto b = lines(slurp(dir / ("example-3-11_boundary_t" + std::string(t) + ".csv")));
    ASSERT_EQ(b.size(), 721u) << t;
    EXPECT_EQ(b[0], "angle,x_1,x_2,bounded");
  }
}

TEST(CliDemo, ThreeEllipseEndsFeasible) {
  const fs::path dir = scratch("demo_ellipse");
  const CliRun r = run("demo three-ellipse --out-dir " + dir.string());
  ASSERT_EQ(r.code, 0) << r.err;
  const json ann = json::parse(slurp(dir / "three-ellipse_annotation.json"));
  EXPECT_EQ(ann["status"], "Converged");
  EXPECT_LE(std::abs(ann["final_feasibility"].get<double>()), 1e-8);
  EXPECT_NEAR(ann["final_value"].get<double>(), dot(ann["final_point"], {1.0, 1.0}), 1e-12);
}

TEST(CliDemo, DistanceDemoConverges) {
  const fs::path dir = scratch("demo_distance");
  const CliRun r = run("demo distance-B3 --out-dir " + dir.string());
  ASSERT_EQ(r.code, 0) << r.err;
  const json ann = json::parse(slurp(dir / "distance-B3_annotation.json"));
  EXPECT_EQ(ann["status"], "Converged");
  EXPECT_LE(std::abs(ann["final_feasibility"].get<double>()), 1e-8);
  const double dx = ann["final_point"][0].get<double>() + 6, dy = ann["final_point"][1].get<double>() - 2.5;
  EXPECT_NEAR(ann["final_value"].get<double>(), -std::hypot(dx, dy), 1e-12);
}

TEST(CliDemo, FailingPencilRecordsDivergenceTime) {
  const fs::path dir = scratch("demo_pencil");
  const CliRun r = run("demo failing-pencil --out-dir " + dir.string());
  ASSERT_EQ(r.code, 0) << r.err;
  const json ann = json::parse(slurp(dir / "failing-pencil_annotation.json"));
  EXPECT_EQ(ann["status"], "PathDiverged");
  ASSERT_TRUE(ann["divergence_t"].is_number());
  EXPECT_GT(ann["divergence_t"].get<double>(), 0.0);
  EXPECT_LT(ann["divergence_t"].get<double>(), 1.0);
}

TEST(CliDemo, UnknownNameIsInputError) {
  const fs::path dir = scratch("demo_bad");
  const CliRun r = run("demo example-9-9 --out-dir " + dir.string());
  EXPECT_EQ(r.code, 1);
}
