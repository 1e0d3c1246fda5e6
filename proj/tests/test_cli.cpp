// Copyright 2026 The qcx Authors
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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "qcx/bounds.hpp"
#include "qcx/circuit.hpp"
#include "qcx/cli/cli.hpp"

namespace qcx {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out, err;
};

Result qcx(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QCX_TEST_DATA) + "/" + name; }

double field(const std::string& text, const std::string& key) {
  const std::regex re(key + "=([-+0-9.eE]+)");
  std::smatch m;
  if (!std::regex_search(text, m, re)) throw std::runtime_error("no field " + key);
  return std::stod(m[1]);
}

// Strips '#' lines, leaving the circuit text.
std::string body(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') out += line + '\n';
  }
  return out;
}

class Scratch : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qcx_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST(Cli, BoundsTable) {
  Result r = qcx({"bounds", "general", "2", "0.25"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "kind,params,bits\ngeneral,2 0.25,32\n");
  EXPECT_NE(qcx({"bounds", "graph_exact", "5"}).out.find("graph_exact,5,15\n"), std::string::npos);
  r = qcx({"bounds", "copies", "1", "2", "0.1"});
  EXPECT_NEAR(std::stod(r.out.substr(r.out.rfind(',') + 1)), 8.64, 0.01);
  r = qcx({"bounds", "per_copy", "2", "8", "0.25"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# log_m=3"), std::string::npos);
  r = qcx({"bounds", "list"});
  for (const auto& k : formula_kinds()) EXPECT_NE(r.out.find(k + "\n"), std::string::npos);
  EXPECT_NE(qcx({"bounds", "census", "8"}).out.find("8,255,36,14,255,yes"), std::string::npos);
}

TEST(Cli, BoundsErrors) {
  Result r = qcx({"bounds", "nope", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: lookup:", 0), 0u);
  r = qcx({"bounds", "general", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("usage: bounds general N eps"), std::string::npos);
  r = qcx({"bounds", "general", "2", "1.5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: domain:", 0), 0u);
  r = qcx({"bounds", "general", "two", "0.1"});
  EXPECT_EQ(r.err.rfind("error: parse:", 0), 0u);
}

TEST(Cli, UsageErrorsAndHelp) {
  EXPECT_EQ(qcx({}).code, 2);
  EXPECT_EQ(qcx({"--bogus"}).code, 2);
  EXPECT_EQ(qcx({"frobnicate"}).code, 2);
  const Result help = qcx({"--help"});
  EXPECT_EQ(help.code, 0);
  for (const char* cmd : {"compile", "estimate", "bounds", "source-exp", "embed", "report"}) {
    EXPECT_NE(help.out.find(cmd), std::string::npos) << cmd;
  }
  EXPECT_EQ(qcx({"--epsilon", "2", "bounds", "list"}).code, 1);
  EXPECT_EQ(qcx({"--basis", "weird", "compile", "bell"}).code, 1);
}

TEST(Cli, CompileBellFile) {
  const Result r = qcx({"compile", data("bell.state"), "--epsilon", "1e-3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GE(field(r.out, "fidelity"), 0.999);
  const Circuit c = parse_circuit(body(r.out));
  EXPECT_EQ(static_cast<double>(c.size()), field(r.out, "gates"));
  const auto bell = StateVector::from_amplitudes({std::sqrt(0.5), 0.0, 0.0, std::sqrt(0.5)});
  EXPECT_GE(fidelity(run(c), bell), 0.999);
}

TEST(Cli, CompileTriangle) {
  Result r = qcx({"compile", data("triangle.g")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(field(r.out, "coarse_gates"), 6.0);
  EXPECT_EQ(parse_circuit(body(r.out)).size(), 12u);  // 3 H + 3 x (H CNOT H)
  r = qcx({"--basis", "graph", "compile", data("triangle.g")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_circuit(body(r.out)).size(), 6u);
}

TEST(Cli, CompileClassical) {
  Result r = qcx({"--basis", "classical", "compile", "classical:10110100"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# string N L I L N L N L I L N L I L I L\n"), std::string::npos);
  const Circuit c = parse_circuit(body(r.out));
  EXPECT_EQ(c.basis()->id(), "classical");
  EXPECT_EQ(c.size(), 8u);
  EXPECT_EQ(run(c).amplitudes()[180], Complex(1.0, 0.0));
}

TEST(Cli, CompileReportsParseErrorsWithLines) {
  const fs::path bad = fs::temp_directory_path() / "qcx_cli_bad.state";
  std::ofstream(bad) << "qubits 1\n0 1 0\n1 x 0\n";
  const Result r = qcx({"compile", bad.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  fs::remove(bad);
  EXPECT_EQ(qcx({"compile", "/nonexistent/x.state"}).code, 1);
  EXPECT_EQ(qcx({"compile", "nosuchfamily:3"}).code, 1);
}

TEST(Cli, CompileWeightedGraphMeetsBudget) {
  const Result r = qcx({"compile", data("ring4_weighted.g"), "--epsilon", "0.05"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GE(field(r.out, "fidelity"), 0.95);
}

TEST_F(Scratch, CompileWritesCircuitFile) {
  const Result r = qcx({"--out", dir_.string(), "compile", "ghz:3"});
  ASSERT_EQ(r.code, 0) << r.err;
  ASSERT_TRUE(fs::exists(dir_ / "ghz:3.circuit") || fs::exists(dir_ / "ghz_3.circuit")) << r.out;
}

TEST_F(Scratch, EstimateZeroStateAndCsv) {
  const Result r = qcx({"--out", dir_.string(), "estimate", "zero:4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::size_t header = header_constant_bits();
  EXPECT_NE(r.out.find("zero:4,4,0.01,min_over_candidates,"), std::string::npos);
  EXPECT_LE(field(r.out, "header_bits"), static_cast<double>(header));
  std::ifstream csv(dir_ / "estimates.csv");
  std::string first, second;
  std::getline(csv, first);
  std::getline(csv, second);
  EXPECT_EQ(first, "state_id,N,epsilon,method,bits,basis,code,candidate_count,compressor_id");
  EXPECT_EQ(second.rfind("zero:4,4,", 0), 0u);
  // Winning string is the 3-symbol header: a handful of bits over the compressor constant.
  const double bits = std::stod(second.substr(second.find("min_over_candidates,") + 20));
  EXPECT_LE(bits, static_cast<double>(header) + 16);
  // A second run appends without repeating the header.
  ASSERT_EQ(qcx({"--out", dir_.string(), "estimate", "plus:2"}).code, 0);
  std::ifstream again(dir_ / "estimates.csv");
  int lines = 0;
  for (std::string l; std::getline(again, l);) ++lines;
  EXPECT_EQ(lines, 3);
  const Result rep = qcx({"--out", dir_.string(), "report"});
  EXPECT_EQ(rep.code, 0) << rep.err;
  EXPECT_TRUE(fs::exists(dir_ / "report.txt"));
}

TEST(Cli, EstimateGhzBelowGeneral) {
  const Result r = qcx({"estimate", "ghz:3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("below_general"), std::string::npos);
  EXPECT_LT(std::stod(r.out.substr(r.out.find("min_over_candidates,") + 20)), general_bound(3, 0.01));
}

TEST(Cli, EstimateWithUnknownOrFailingGenerators) {
  EXPECT_EQ(qcx({"estimate", "ghz:3", "--generators", "magic"}).code, 1);
  const Result r = qcx({"estimate", "plus:2", "--generators", "trivial"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: empty-candidates:", 0), 0u) << r.err;
}

TEST(Cli, Embed) {
  const Result r = qcx({"embed", "10110100"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# string N L I L N L N L I L N L I L I L"), std::string::npos);
  EXPECT_NE(r.out.find("# reproduces=yes"), std::string::npos);
  EXPECT_EQ(field(r.out, "raw_bits"), 32.0);
  EXPECT_EQ(qcx({"embed", "10a"}).code, 1);
}

TEST_F(Scratch, SourceExperimentBernoulli) {
  const Result r = qcx({"--out", dir_.string(), "source-exp", "bernoulli:0.5", "--m", "100000", "--trials", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(field(r.out, "mean_bits_per_emission"), 1.0, 0.05);
  EXPECT_TRUE(fs::exists(dir_ / "experiment.csv")) << r.out;
  const Result again = qcx({"--out", dir_.string(), "source-exp", "bernoulli:0.5", "--m", "100000", "--trials", "2"});
  EXPECT_EQ(again.out, r.out);  // same seed, same table
}

TEST(Cli, SourceExperimentFiles) {
  Result r = qcx({"source-exp", data("bytes.src"), "--m", "100,1000", "--trials", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(field(r.out, "H"), 0.469, 1e-3);
  r = qcx({"source-exp", data("qubit_pair.src"), "--m", "100", "--trials", "1", "--epsilon", "0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# stateword"), std::string::npos);
  EXPECT_EQ(qcx({"source-exp", "bernoulli:1.5"}).code, 1);
  EXPECT_EQ(qcx({"source-exp", "bernoulli:0.5", "--m", "100,10"}).code, 1);
}

TEST(Cli, ConfigFileAndOverrides) {
  const fs::path cfg = fs::temp_directory_path() / "qcx_cli.cfg";
  std::ofstream(cfg) << "epsilon=0.2\nbasis=graph\n";
  Result r = qcx({"--config", cfg.string(), "compile", data("triangle.g")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_circuit(body(r.out)).size(), 6u);
  r = qcx({"--config", cfg.string(), "--basis", "standard", "compile", data("triangle.g")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_circuit(body(r.out)).size(), 12u);
  fs::remove(cfg);
}

TEST_F(Scratch, DumpState) {
  const fs::path dump = dir_ / "bell.amps";
  fs::create_directories(dir_);
  const Result r = qcx({"--dump-state", dump.string(), "compile", "bell"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(dump);
  std::stringstream ss;
  ss << in.rdbuf();
  const StateVector s = cli::read_state(ss);
  EXPECT_NEAR(std::norm(s.amplitudes()[0]), 0.5, 1e-12);
  EXPECT_NEAR(std::norm(s.amplitudes()[3]), 0.5, 1e-12);
}

TEST(CliInputs, NamedFamilies) {
  const auto ghz = cli::target_state(cli::load_target("ghz:3"));
  EXPECT_NEAR(std::norm(ghz.amplitudes()[0]), 0.5, 1e-12);
  EXPECT_NEAR(std::norm(ghz.amplitudes()[7]), 0.5, 1e-12);
  const auto w = cli::target_state(cli::load_target("w:3"));
  for (std::size_t k : {1u, 2u, 4u}) EXPECT_NEAR(std::norm(w.amplitudes()[k]), 1.0 / 3, 1e-12);
  const auto r1 = cli::target_state(cli::load_target("random:3:7"));
  const auto r2 = cli::target_state(cli::load_target("random:3:7"));
  EXPECT_NEAR(fidelity(r1, r2), 1.0, 1e-15);
  EXPECT_EQ(cli::target_state(cli::load_target("classical:101")).amplitudes()[5], Complex(1.0, 0.0));
  const auto tri = cli::target_state(cli::load_target(data("triangle.g")));
  EXPECT_NEAR(tri.amplitudes()[7].real(), -1.0 / std::sqrt(8.0), 1e-12);
  EXPECT_THROW(cli::load_target("ghz:0"), Error);
  EXPECT_THROW(cli::load_target("random:3"), Error);
}

TEST(CliInputs, StateRoundTrip) {
  const auto w = cli::target_state(cli::load_target("w:4"));
  std::stringstream ss;
  cli::write_state(ss, w);
  EXPECT_NEAR(fidelity(cli::read_state(ss), w), 1.0, 1e-15);
  std::stringstream dup("qubits 1\n0 1 0\n0 1 0\n");
  EXPECT_THROW(cli::read_state(dup), ParseError);
}

}  // namespace
}  // namespace qcx
