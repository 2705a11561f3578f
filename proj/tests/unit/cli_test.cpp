// Copyright 2026 The zne-mixed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "zne/dataset_io.hpp"
#include "zne/experiment.hpp"
#include "zne/rng.hpp"

namespace zne::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("zne_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& contents) const {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << contents;
    return p;
  }

  fs::path dir_;
};

TEST_F(CliTest, TablesPrintAndWriteFiles) {
  const auto out_dir = dir_ / "tables";
  const auto r = run_cli({"tables", "--output", out_dir.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("5184"), std::string::npos);
  EXPECT_TRUE(fs::exists(out_dir / "tables.txt"));
  const auto csv = read_file(out_dir / "tau_ratio.csv");
  EXPECT_EQ(csv.rfind("gamma,order,value\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 21);
  EXPECT_EQ(read_file(out_dir / "mixed_variance.csv").rfind("gamma,order,value\n", 0), 0u);
}

TEST_F(CliTest, TablesSingleCell) {
  const auto out_dir = dir_ / "cell";
  ASSERT_EQ(run_cli({"tables", "--gammas", "0.5", "--orders", "3", "--output", out_dir.string()}).code,
            kOk);
  const auto tau = read_file(out_dir / "tau_ratio.csv");
  const auto var = read_file(out_dir / "mixed_variance.csv");
  const double t = std::stod(tau.substr(tau.rfind(',') + 1));
  const double v = std::stod(var.substr(var.rfind(',') + 1));
  EXPECT_NEAR(t, 27.0, 0.5);
  EXPECT_NEAR(v, 10.09, 0.01);
}

TEST_F(CliTest, TablesUnwritableOutputIsIoError) {
  write("blocker", "not a directory");
  const auto r = run_cli({"tables", "--output", (dir_ / "blocker" / "sub").string()});
  EXPECT_EQ(r.code, kIoError);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, TablesRejectOutOfRangeGamma) {
  EXPECT_EQ(run_cli({"tables", "--gammas", "1.5"}).code, kNumericalError);
}

TEST_F(CliTest, PrefactorReportsBothPrefactorsAndRatios) {
  auto r = run_cli({"prefactor", "--gamma", "0.1", "--order", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("#1 (all logical)           5\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("#2 (mixed)                 1.11"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("tau1/tau2 (idealized)      9.0"), std::string::npos) << r.out;

  r = run_cli({"prefactor", "--gamma", "0.9", "--order", "5"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("tau1/tau2 (idealized)      8.3"), std::string::npos) << r.out;

  r = run_cli({"prefactor", "--order", "0"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("#1 (all logical)           1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("#2 (mixed)                 1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("tau1/tau2 (idealized)      1\n"), std::string::npos) << r.out;

  EXPECT_EQ(run_cli({"prefactor", "--order", "2", "--multipliers", "1,2"}).code, kConfigError);
}

TEST_F(CliTest, SimulateSmokeRunIsDeterministic) {
  const auto cfg = write("smoke.json", R"({"states": [0], "n_shots": 10})");
  const auto a = dir_ / "a.csv";
  const auto b = dir_ / "b.csv";
  ASSERT_EQ(run_cli({"simulate", "--config", cfg.string(), "--output", a.string()}).code, kOk);
  ASSERT_EQ(run_cli({"--config", cfg.string(), "--output", b.string(), "simulate"}).code, kOk);
  const auto records = io::load_dataset(a);
  EXPECT_EQ(records.size(), 6u);
  EXPECT_EQ(read_file(a), read_file(b));
}

TEST_F(CliTest, FlagsOverrideConfigOverrideDefaults) {
  const auto cfg = write("cfg.json", R"({"states": [3], "n_shots": 4, "n_trotter": 2, "seed": 5,
                                         "output": ")" + (dir_ / "from_config.csv").string() + R"("})");
  ASSERT_EQ(run_cli({"simulate", "--config", cfg.string()}).code, kOk);
  auto records = io::load_dataset(dir_ / "from_config.csv");
  ASSERT_EQ(records.size(), 6u);
  EXPECT_EQ(records[0].seed, derive_seed(5, 3, 1));
  EXPECT_EQ(records[0].shots, 4u);

  const auto flagged = dir_ / "from_flag.csv";
  ASSERT_EQ(run_cli({"simulate", "--config", cfg.string(), "--seed", "6", "--output",
                     flagged.string()})
                .code,
            kOk);
  records = io::load_dataset(flagged);
  EXPECT_EQ(records[0].seed, derive_seed(6, 3, 1));
  EXPECT_EQ(records[0].shots, 4u);
}

TEST_F(CliTest, SimulateBadConfigAndUnwritableOutput) {
  const auto bad = write("bad.json", R"({"n_shot": 10})");
  EXPECT_EQ(run_cli({"simulate", "--config", bad.string()}).code, kConfigError);
  EXPECT_EQ(run_cli({"simulate", "--config", (dir_ / "missing.json").string()}).code, kIoError);
  const auto cfg = write("ok.json", R"({"states": [0], "n_shots": 2, "n_trotter": 1})");
  EXPECT_EQ(run_cli({"simulate", "--config", cfg.string(), "--output",
                     (dir_ / "nope" / "d.csv").string()})
                .code,
            kIoError);
}

TEST_F(CliTest, AnalyzeQuadraticDatasetGivesZeroErrors) {
  experiment::RunConfig run;
  run.states = {0, 5, 42};
  const auto reference = experiment::noiseless_reference(run);
  const double lambdas[] = {0.216, 0.648, 1.08, 2.16, 6.48, 10.8};
  std::vector<experiment::EstimateRecord> records;
  for (const auto& [state, value] : reference) {
    for (int r = 1; r <= 6; ++r) {
      const double l = lambdas[r - 1];
      records.push_back({state, r, l, value + 0.01 * l - 0.003 * l * l, 1e-5, 10000, 1});
    }
  }
  const auto dataset = dir_ / "quadratic.csv";
  io::save_dataset(dataset, records);
  const auto out_dir = dir_ / "analysis";
  const auto r = run_cli({"analyze", dataset.string(), "--output", out_dir.string()});
  ASSERT_EQ(r.code, kOk) << r.err;

  std::ifstream in(out_dir / "reports.json");
  const auto doc = nlohmann::json::parse(in);
  ASSERT_EQ(doc.at("subsets").size(), 3u);
  for (const auto& subset : doc.at("subsets")) {
    EXPECT_EQ(subset.at("reports").size(), 3u);
    for (const auto& report : subset.at("reports")) {
      EXPECT_NEAR(report.at("error").get<double>(), 0.0, 1e-12);
    }
  }
  const auto hist = read_file(out_dir / "error_histogram.csv");
  EXPECT_EQ(hist.rfind("subset,bin_lo,bin_hi,count\n", 0), 0u);
  EXPECT_NE(hist.find("\n1-4-5,"), std::string::npos);
  EXPECT_TRUE(fs::exists(out_dir / "variance_histogram.csv"));
}

TEST_F(CliTest, AnalyzeMalformedDatasetNamesLine) {
  const auto dataset = write("bad.csv",
                             "# zne-dataset format_version=1\n"
                             "state,regime,lambda,mean,variance,shots,seed\n"
                             "0,1,0.216,0.1,0.0,10,1\n"
                             "0,2,0.648,oops,0.0,10,1\n");
  const auto r = run_cli({"analyze", "--dataset", dataset.string(), "--output",
                          (dir_ / "out").string()});
  EXPECT_EQ(r.code, kDataError);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
}

TEST_F(CliTest, AnalyzeIncompleteDatasetAndBadSubsets) {
  const auto dataset = write("partial.csv",
                             "state,regime,lambda,mean,variance,shots,seed\n"
                             "0,1,0.216,0.1,0.0,10,1\n");
  EXPECT_EQ(run_cli({"analyze", dataset.string(), "--output", (dir_ / "o").string()}).code,
            kDataError);
  EXPECT_EQ(run_cli({"analyze", dataset.string(), "--subsets", "1,x"}).code, kConfigError);
  EXPECT_EQ(run_cli({"analyze"}).code, kConfigError);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kConfigError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kConfigError);
  EXPECT_EQ(run_cli({"tables", "--orders", "x"}).code, kConfigError);
  const auto help = run_cli({"--help"});
  EXPECT_EQ(help.code, kOk);
  EXPECT_NE(help.out.find("simulate"), std::string::npos);
}

}  // namespace
}  // namespace zne::cli
