/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int cli(const std::string &args) {
  const std::string cmd = std::string(DYNADAPT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string &name) {
  const auto dir = fs::temp_directory_path() / ("dynadapt_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

} // namespace

TEST(Cli, RunIsDeterministic) {
  const auto a = scratch("det");
  const std::string args =
      "run --algo dynamic --n 6 --instances 2 --P 12 --seed 7 --out " + a.string();
  ASSERT_EQ(cli(args + " --jobs 1"), 0);
  const auto csv = slurp(a / "run_dynamic.csv");
  const auto rec = slurp(a / "records" / "dynamic_0001.json");
  EXPECT_FALSE(csv.empty());
  EXPECT_TRUE(fs::exists(a / "instances" / "instance_0000.json"));
  EXPECT_NE(csv.find("# seed=7"), std::string::npos);
  ASSERT_EQ(cli(args + " --jobs 2"), 0);
  EXPECT_EQ(csv, slurp(a / "run_dynamic.csv"));
  EXPECT_EQ(rec, slurp(a / "records" / "dynamic_0001.json"));
  fs::remove_all(a);
}

TEST(Cli, GwRun) {
  const auto d = scratch("gw");
  ASSERT_EQ(cli("run --algo gw --n 6 --instances 5 --rounds 200 --out " + d.string()), 0);
  std::istringstream csv(slurp(d / "run_gw.csv"));
  std::string line;
  std::size_t rows = 0;
  bool header = false;
  while (std::getline(csv, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    if (!header) {
      header = true;
      continue;
    }
    ++rows;
    std::stringstream ls(line);
    std::string field;
    for (int k = 0; k < 5; ++k)
      std::getline(ls, field, ',');
    const double alpha = std::stod(field);
    EXPECT_GT(alpha, 0.0);
    EXPECT_LE(alpha, 1.0);
  }
  EXPECT_EQ(rows, 5u);
  fs::remove_all(d);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("run --n 1 --out " + scratch("n1").string()), 2);
  EXPECT_EQ(cli("run --algo nonsense"), 2);
  EXPECT_EQ(cli("bench histogram --records /nonexistent/dynadapt_records"), 3);
  EXPECT_EQ(cli("--version"), 0);
}

TEST(Cli, BenchFromStoredRecords) {
  const auto d = scratch("bench");
  ASSERT_EQ(cli("run --algo dynamic --n 5 --instances 3 --P 6 --seed 3 --out " + d.string()),
            0);
  const std::string recs = " --records " + (d / "records").string() + " --out " + d.string();
  ASSERT_EQ(cli("bench critical --grid-points 5 --rounds 100" + recs), 0);
  const auto crit = slurp(d / "critical_dynamic.csv");
  const auto pos = crit.find("n,algorithm,p_star,stderr\n");
  ASSERT_NE(pos, std::string::npos);
  std::stringstream row(crit.substr(pos + 26));
  std::string n, algo, p_star, se;
  std::getline(row, n, ',');
  std::getline(row, algo, ',');
  std::getline(row, p_star, ',');
  std::getline(row, se);
  EXPECT_EQ(n, "5");
  EXPECT_EQ(algo, "dynamic");
  EXPECT_GT(std::stod(p_star), 0.0);
  EXPECT_GE(std::stod(se), 0.0);

  ASSERT_EQ(cli("bench histogram" + recs), 0);
  const auto hist = slurp(d / "histogram_dynamic.csv");
  EXPECT_NE(hist.find("bin_left,count"), std::string::npos);
  EXPECT_NE(hist.find("# near_zero_fraction="), std::string::npos);
  fs::remove_all(d);
}
