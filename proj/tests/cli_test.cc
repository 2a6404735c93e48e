// Copyright 2026 The ontokit Authors
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

#include "ontokit/cli.h"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "ontokit/json_io.h"

namespace ontokit::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string &name, const std::string &text) {
    const std::string path = ::testing::TempDir() + "ontokit_cli_" + name;
    std::ofstream(path) << text;
    return path;
}

io::Json json_of(const Result &r) { return io::parse(r.out); }

// Runs the installed binary through the shell and captures stdout.
Result run_binary(const std::string &args) {
    const std::string cmd = std::string(ONTOKIT_BINARY) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, {}, {}};
    std::string out;
    std::array<char, 4096> buf;
    while (const std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, {}};
}

const std::string kZero = R"({"amplitudes": [[1, 0], [0, 0]]})";
const std::string kPlus = R"({"amplitudes": [[0.7071067811865476, 0], [0.7071067811865476, 0]]})";
const std::string kOne = R"({"amplitudes": [[0, 0], [1, 0]]})";

TEST(Cli, PbrDemoReportsFourZeros) {
    const auto psi = write_temp("zero.json", kZero), phi = write_temp("plus.json", kPlus);
    const Result r = run_cli({"pbr-demo", "--psi", psi, "--phi", phi});
    ASSERT_EQ(r.code, kExitPass) << r.err;
    const io::Json j = json_of(r);
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_EQ(j["copies"], 1);
    EXPECT_EQ(j["convention"], "tan(arcsin(overlap))");
    for (const auto &a : j["assigned"]) EXPECT_NEAR(a.get<double>(), 0.0, 1e-9);
    EXPECT_NEAR(j["table"][1][2].get<double>(), 0.5, 1e-12);
}

TEST(Cli, PbrDemoCsvAndOrthogonalPair) {
    const auto psi = write_temp("zero.json", kZero), phi = write_temp("plus.json", kPlus);
    const Result csv = run_cli({"pbr-demo", "--psi", psi, "--phi", phi, "--csv"});
    EXPECT_EQ(csv.code, kExitPass);
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "state,chi1,chi2,chi3,chi4");
    const auto one = write_temp("one.json", kOne);
    const Result bad = run_cli({"pbr-demo", "--psi", psi, "--phi", one});
    EXPECT_EQ(bad.code, kExitError);
    EXPECT_NE(bad.err.find("BadOverlap"), std::string::npos);
}

TEST(Cli, WignerFrameEvenDimensionIsError) {
    const Result r = run_cli({"wigner", "frame", "4"});
    EXPECT_EQ(r.code, kExitError);
    EXPECT_NE(r.err.find("EvenDimension"), std::string::npos);
    const Result ok = run_cli({"wigner", "frame", "3"});
    EXPECT_EQ(ok.code, kExitPass);
    EXPECT_EQ(json_of(ok)["labels"].size(), 9u);
}

TEST(Cli, WignerStateShowsNegativity) {
    const auto path = write_temp("sup.json", R"({"amplitudes": [[0.7071067811865476, 0], [0.7071067811865476, 0], [0, 0]]})");
    const Result r = run_cli({"wigner", "state", path});
    ASSERT_EQ(r.code, kExitPass) << r.err;
    const io::Json j = json_of(r);
    EXPECT_TRUE(j["negative"].get<bool>());
    EXPECT_NEAR(j["min_weight"].get<double>(), -1.0 / 6.0, 1e-12);
    const Result padded = run_cli({"wigner", "state", write_temp("plus.json", kPlus)});
    EXPECT_TRUE(json_of(padded)["padded"].get<bool>());
    EXPECT_EQ(run_cli({"wigner", "state", path, "--dim", "5"}).code, kExitError);
}

TEST(Cli, WignerFunctorCheckPasses) {
    const Result r = run_cli({"wigner", "functor-check", "--trials", "20"});
    ASSERT_EQ(r.code, kExitPass) << r.out;
    EXPECT_EQ(json_of(r)["evaluations"], 400);
}

TEST(Cli, WignerEpistemicPair) {
    const auto a = write_temp("q0.json", R"({"amplitudes": [[1, 0], [0, 0], [0, 0]]})");
    const auto b = write_temp("q01.json", R"({"amplitudes": [[0.7071067811865476, 0], [0.7071067811865476, 0], [0, 0]]})");
    const Result r = run_cli({"wigner", "epistemic", "--psi", a, "--phi", b});
    ASSERT_EQ(r.code, kExitPass) << r.err;
    const io::Json j = json_of(r);
    EXPECT_TRUE(j["epistemic_witness"].get<bool>());
    EXPECT_EQ(j["target_psi"]["decision"], "refuted");
}

TEST(Cli, AntidistJsonAndCsv) {
    const auto path = write_temp("ens.json", R"({"points": ["a", "b", "c"], "ensemble": [[1, 0, 0], [0, 0, 1]]})");
    const Result r = run_cli({"antidist", path, "--target", "0"});
    ASSERT_EQ(r.code, kExitPass) << r.err;
    EXPECT_EQ(json_of(r)["decision"], "certified");
    const auto over = write_temp("ens2.json", R"({"points": ["a", "b", "c"], "ensemble": [[0.5, 0.5, 0], [0, 0.5, 0.5]]})");
    const Result refuted = run_cli({"antidist", over, "--target", "0"});
    EXPECT_EQ(refuted.code, kExitPass);
    EXPECT_EQ(json_of(refuted)["decision"], "refuted");
    const Result csv = run_cli({"antidist", path, "--target", "1", "--csv"});
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "point,response");
    EXPECT_EQ(run_cli({"antidist", path, "--target", "7"}).code, kExitError);
}

TEST(Cli, ValidateModelExitCodesAndTolerance) {
    const auto m = ontomodel::dirac_restriction_model({{"0", quantum::ket_zero()}, {"+", quantum::ket_plus()}},
                                                      {quantum::ProjectiveMeasurement::computational(2)});
    const auto good = write_temp("model.json", io::dump(io::model_to_json(m)));
    const Result r = run_cli({"validate-model", good});
    ASSERT_EQ(r.code, kExitPass) << r.err;
    EXPECT_EQ(json_of(r)["classification"]["kind"], "ontic");

    auto perturbed = m;
    perturbed.distributions.at("0") = kernels::Distribution(m.ontic, {1 - 1e-3, 1e-3});
    const auto bad = write_temp("model_bad.json", io::dump(io::model_to_json(perturbed)));
    EXPECT_EQ(run_cli({"validate-model", bad}).code, kExitCheckFailed);
    EXPECT_EQ(run_cli({"validate-model", bad, "--tol", "1e-2"}).code, kExitPass);
    EXPECT_EQ(run_cli({"validate-model", bad, "--tol", "-1"}).code, kExitError);
    EXPECT_EQ(run_cli({"validate-model", "/nonexistent.json"}).code, kExitError);
}

TEST(Cli, EnvironmentToleranceIsOverriddenByFlag) {
    auto m = ontomodel::dirac_restriction_model({{"0", quantum::ket_zero()}}, {quantum::ProjectiveMeasurement::computational(2)});
    m.distributions.at("0") = kernels::Distribution(m.ontic, {1.0});
    m.measurements[0].responses[0] = kernels::ResponseFunction(m.ontic, {1 - 1e-4});
    m.measurements[0].responses[1] = kernels::ResponseFunction(m.ontic, {1e-4});
    const auto path = write_temp("model_env.json", io::dump(io::model_to_json(m)));
    ::setenv("ONTOKIT_TOL", "1e-3", 1);
    const Result loose = run_cli({"validate-model", path});
    const Result strict = run_cli({"validate-model", path, "--tol", "1e-7"});
    ::setenv("ONTOKIT_TOL", "garbage", 1);
    const Result garbage = run_cli({"validate-model", path});
    ::unsetenv("ONTOKIT_TOL");
    EXPECT_EQ(loose.code, kExitPass);
    EXPECT_EQ(strict.code, kExitCheckFailed);
    EXPECT_EQ(garbage.code, kExitError);
    EXPECT_EQ(run_cli({"validate-model", path}).code, kExitCheckFailed);
}

TEST(Cli, QMeasureValidate) {
    const auto good = write_temp("qm.json", R"({"points": ["a", "b"],
        "decoherence": [[[0.75, 0], [-0.25, 0]], [[-0.25, 0], [0.75, 0]]]})");
    const Result r = run_cli({"qmeasure", "validate", good});
    ASSERT_EQ(r.code, kExitPass) << r.err;
    EXPECT_EQ(json_of(r)["measure"]["kolmogorov_violations"].size(), 1u);
    const auto bad = write_temp("qm_bad.json", R"({"points": ["a", "b"],
        "decoherence": [[[0.5, 0], [-0.25, 0]], [[-0.25, 0], [0.5, 0]]]})");
    EXPECT_EQ(run_cli({"qmeasure", "validate", bad}).code, kExitCheckFailed);
    const auto schema = write_temp("qm_schema.json", R"({"points": ["a"], "measure": {"1": "x"}})");
    const Result s = run_cli({"qmeasure", "validate", schema});
    EXPECT_EQ(s.code, kExitError);
    EXPECT_NE(s.err.find("measure.1"), std::string::npos);
}

TEST(Cli, LemmasAreDeterministic) {
    const Result a = run_cli({"lemmas", "--trials", "100", "--seed", "5"});
    const Result b = run_cli({"lemmas", "--trials", "100", "--seed", "5"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(json_of(a)["checks"].size(), 6u);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, kExitError);
    EXPECT_EQ(run_cli({"frobnicate"}).code, kExitError);
    EXPECT_EQ(run_cli({"antidist"}).code, kExitError);
    const Result help = run_cli({"--help"});
    EXPECT_EQ(help.code, kExitPass);
    EXPECT_NE(help.out.find("pbr-demo"), std::string::npos);
}

TEST(CliBinary, LemmasByteIdenticalAcrossProcesses) {
    const Result a = run_binary("lemmas --trials 200 --seed 42");
    const Result b = run_binary("lemmas --trials 200 --seed 42");
    ASSERT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, run_cli({"lemmas", "--trials", "200", "--seed", "42"}).out);
}

TEST(CliBinary, ExitCodes) {
    EXPECT_EQ(run_binary("wigner frame 4").code, kExitError);
    EXPECT_EQ(run_binary("wigner frame 5").code, kExitPass);
    EXPECT_EQ(run_binary("--help").code, kExitPass);
}

}  // namespace
}  // namespace ontokit::cli
