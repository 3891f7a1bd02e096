// Copyright 2026 The QCrank Authors
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

#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qcrank/io.h"

namespace fs = std::filesystem;
using nlohmann::json;
using qcrank::read_file;
using qcrank::write_file;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qcrank");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = qcrank::cli::run((int)argv.size(), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qcrank_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    json load(const std::string &name) const {
        return json::parse(read_file(dir_ / name));
    }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, EncodeQbartFromFile) {
    write_file(path("seq.json"), "{\"bit_depth\": 4, \"values\": [3, 0, 15, 9]}");
    auto r = run_cli({"encode", "--mode", "qbart", "--na", "2", "--nd", "4", "--in", path("seq.json"), "--out", path("o")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto meta = load("o/encode.json");
    EXPECT_EQ(meta["circuit"]["num_qubits"], 6);
    EXPECT_EQ(meta["length"], 4);
    auto c = qcrank::Circuit::from_text(read_file(dir_ / "o" / "circuit.txt"));
    EXPECT_EQ(c.width(), 6u);
    EXPECT_TRUE(read_file(dir_ / "o" / "circuit.qasm").starts_with("OPENQASM 2.0;"));
}

TEST_F(Cli, EncodeQcrankDefaultShape) {
    auto r = run_cli({"encode", "--out", path("o")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto meta = load("o/encode.json");
    EXPECT_EQ(meta["circuit"]["num_qubits"], 12);
    EXPECT_EQ(meta["circuit"]["cx_depth"], 32);
    EXPECT_EQ(meta["length"], 128);
}

TEST_F(Cli, EncodeRejectsOversizedInput) {
    write_file(path("seq.json"), "{\"bit_depth\": 4, \"values\": [1, 2, 3, 4, 5]}");
    auto r = run_cli({"encode", "--mode", "qbart", "--na", "2", "--nd", "4", "--in", path("seq.json"), "--out", path("o")});
    EXPECT_NE(r.code, 0);
    EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST_F(Cli, RunIdealQbartIsExact) {
    auto r = run_cli({"run", "--mode", "qbart", "--na", "3", "--nd", "5", "--shots", "400", "--out", path("o")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto report = load("o/report.json");
    EXPECT_EQ(report["rvf"], 1.0);
    EXPECT_EQ(report["rsf"], 1.0);
    auto h = qcrank::histogram_from_json(read_file(dir_ / "o" / "histogram.json"));
    EXPECT_EQ(h.total(), 400u);
}

TEST_F(Cli, RunIsByteIdenticalAcrossRepeatsAndThreads) {
    std::vector<std::string> base{"run", "--na", "3", "--nd", "3", "--k", "4", "--noise", "H1-proxy", "--shots", "500", "--seed", "7"};
    auto a = base, b = base, c = base;
    a.insert(a.end(), {"--out", path("a"), "--threads", "1"});
    b.insert(b.end(), {"--out", path("b"), "--threads", "1"});
    c.insert(c.end(), {"--out", path("c"), "--threads", "3"});
    ASSERT_EQ(run_cli(a).code, 0);
    ASSERT_EQ(run_cli(b).code, 0);
    ASSERT_EQ(run_cli(c).code, 0);
    for (const char *file : {"report.json", "histogram.json"}) {
        std::string ra = read_file(dir_ / "a" / file);
        EXPECT_EQ(ra, read_file(dir_ / "b" / file)) << file;
        EXPECT_EQ(ra, read_file(dir_ / "c" / file)) << file;
    }
}

TEST_F(Cli, UnknownNoiseListsBuiltins) {
    auto r = run_cli({"run", "--noise", "falcon", "--out", path("o")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("H1-proxy"), std::string::npos);
    EXPECT_NE(r.err.find("IBMQ-proxy"), std::string::npos);
}

TEST_F(Cli, NoiseModelFromFile) {
    write_file(path("noise.json"), "{\"name\": \"flaky\", \"spam_error\": 0.5}");
    auto r = run_cli({"run", "--mode", "qbart", "--na", "2", "--nd", "2", "--shots", "50", "--noise", path("noise.json"),
                      "--out", path("o")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(load("o/report.json")["noise"]["name"], "flaky");
}

TEST_F(Cli, FittedCalibrationIsWrittenAndReusable) {
    auto r = run_cli({"run", "--na", "2", "--nd", "2", "--k", "4", "--noise", "minimal", "--shots", "300", "--fit-calib",
                      "2", "--out", path("o")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto table = qcrank::calibration_from_json(read_file(dir_ / "o" / "calibration.json"));
    EXPECT_EQ(table.k, 4u);
    auto again = run_cli({"run", "--na", "2", "--nd", "2", "--k", "4", "--shots", "300", "--calib",
                          path("o/calibration.json"), "--out", path("p")});
    ASSERT_EQ(again.code, 0) << again.err;
    auto mismatch = run_cli({"run", "--k", "8", "--calib", path("o/calibration.json"), "--out", path("q")});
    EXPECT_EQ(mismatch.code, 1);
}

TEST_F(Cli, SweepWritesCsv) {
    auto r = run_cli({"run", "--mode", "qbart", "--na", "2", "--nd", "3", "--sweep", "shots=10..40", "--trials", "2",
                      "--out", path("o")});
    ASSERT_EQ(r.code, 0) << r.err;
    std::string csv = read_file(dir_ / "o" / "sweep.csv");
    EXPECT_TRUE(csv.starts_with("shots,trials,rvf,rsf,dynamic_range\n10,2,"));
    EXPECT_NE(csv.find("\n20,2,"), std::string::npos);
    EXPECT_NE(csv.find("\n40,2,"), std::string::npos);
    EXPECT_EQ(run_cli({"run", "--sweep", "shots=50..10", "--out", path("x")}).code, 1);
}

TEST_F(Cli, PlanMatchesPublishedBudgets) {
    ASSERT_EQ(run_cli({"plan", "-L", "32", "--mmin", "1", "--fcirc", "1e-3", "--out", path("a")}).code, 0);
    ASSERT_EQ(run_cli({"plan", "-L", "32", "--mmin", "8", "--out", path("b")}).code, 0);
    double one = load("a/plan.json")["total_shots"];
    double eight = load("b/plan.json")["total_shots"];
    EXPECT_NEAR(one, 350, 0.15 * 350);
    EXPECT_NEAR(eight, 800, 0.15 * 800);
    EXPECT_EQ(run_cli({"plan", "-L", "0", "--out", path("c")}).code, 1);
}

TEST_F(Cli, OutputDirectoryFromEnvironment) {
    ::setenv(qcrank::cli::kOutDirEnv, path("env").c_str(), 1);
    auto r = run_cli({"plan"});
    ::unsetenv(qcrank::cli::kOutDirEnv);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(fs::exists(dir_ / "env" / "plan.json"));
}

TEST_F(Cli, ConfigFileFillsUnsetFlags) {
    write_file(path("cfg.json"), "{\"mode\": \"qbart\", \"na\": 2, \"nd\": 3, \"shots\": 64, \"seed\": 5}");
    auto r = run_cli({"run", "--config", path("cfg.json"), "--shots", "128", "--out", path("o")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto report = load("o/report.json");
    EXPECT_EQ(report["shots"], 128);
    EXPECT_EQ(report["seed"], 5);
    EXPECT_EQ(report["mode"], "qbart");
    write_file(path("bad.json"), "{\"shotz\": 1}");
    auto bad = run_cli({"run", "--config", path("bad.json"), "--out", path("p")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("shotz"), std::string::npos);
}

TEST_F(Cli, DnaAppIsExactWithoutNoise) {
    auto r = run_cli({"app", "dna", "--out", path("o")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto report = load("o/dna_report.json");
    EXPECT_EQ(report["all_correct"], true);
    EXPECT_EQ(report["pairs"].size(), 16u);
    EXPECT_EQ(report["circuit"]["num_qubits"], 16);
}

TEST_F(Cli, DnaAppReadsFixture) {
    auto r = run_cli({"app", "dna", "--in", std::string(QCRANK_DATA_DIR) + "/dna_pairs.json", "--out", path("o")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(load("o/dna_report.json")["all_correct"], true);
}

TEST_F(Cli, HammingAndConjugateApps) {
    ASSERT_EQ(run_cli({"app", "hamming", "--out", path("o")}).code, 0);
    EXPECT_EQ(load("o/hamming_report.json")["all_correct"], true);
    ASSERT_EQ(run_cli({"app", "hamming", "--in", std::string(QCRANK_DATA_DIR) + "/hamming_values.json", "--out",
                       path("p")})
                  .code,
              0);
    EXPECT_EQ(load("p/hamming_report.json")["all_correct"], true);
    ASSERT_EQ(run_cli({"app", "conjugate", "--in", std::string(QCRANK_DATA_DIR) + "/complex_series.json", "--out",
                       path("o")})
                  .code,
              0);
    EXPECT_EQ(load("o/conjugate_report.json")["all_correct"], true);
}

TEST_F(Cli, ImageAppWritesBitmaps) {
    auto r = run_cli({"app", "image", "--in", std::string(QCRANK_DATA_DIR) + "/demo.pbm", "--shots", "7000", "--out",
                      path("o")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(load("o/image_report.json")["pixel_accuracy"], 1.0);
    EXPECT_EQ(qcrank::read_pbm(read_file(dir_ / "o" / "recovered.pbm")),
              qcrank::read_pbm(read_file(dir_ / "o" / "input.pbm")));
}

TEST_F(Cli, EcgAppRecoversWaveform) {
    auto r = run_cli({"app", "ecg", "--noise", "minimal", "--out", path("o")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_GE(load("o/ecg_report.json")["correct"].get<int>(), 60);
}

TEST_F(Cli, EcgAppUnderH1ProxyWithLargerBudget) {
    auto r = run_cli({"app", "ecg", "--noise", "H1-proxy", "--shots", "8000", "--out", path("o")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_GE(load("o/ecg_report.json")["correct"].get<int>(), 60);
}

TEST_F(Cli, ParseErrors) {
    EXPECT_NE(run_cli({}).code, 0);
    EXPECT_NE(run_cli({"app", "chess"}).code, 0);
    EXPECT_NE(run_cli({"run", "--shots", "many"}).code, 0);
    EXPECT_EQ(run_cli({"run", "--mode", "frqi", "--out", path("o")}).code, 1);
}
