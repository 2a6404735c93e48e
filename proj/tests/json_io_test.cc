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

#include "ontokit/json_io.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>

#include "ontokit/random.h"
#include "test_util.h"

namespace ontokit::io {
namespace {

using kernels::Distribution;
using kernels::FiniteSpace;

std::string schema_message(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Schema) << e.what();
        return e.what();
    }
    ADD_FAILURE() << "no error thrown";
    return {};
}

TEST(Dump, FloatsRoundTripBitExactly) {
    Rng rng(123);
    for (int i = 0; i < 200; ++i) {
        const double x = rng.normal() * std::pow(10.0, rng.uniform(-30, 30));
        const Json back = parse(dump(Json(x)));
        EXPECT_EQ(back.get<double>(), x);
    }
    EXPECT_EQ(parse(dump(Json(0.1))).get<double>(), 0.1);
}

TEST(Dump, NonFiniteBecomesNull) {
    Json j = Json::array({std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::infinity(), 1.5});
    EXPECT_EQ(dump(j, 2), "[null, null, 1.5]\n");
}

TEST(Dump, KeepsKeyOrderAndInlinesScalarArrays) {
    Json j;
    j["zeta"] = 1;
    j["alpha"] = Json::array({Json::array({1, 2}), Json::array({3, 4})});
    const std::string s = dump(j);
    EXPECT_LT(s.find("zeta"), s.find("alpha"));
    EXPECT_NE(s.find("[[1, 2], [3, 4]]"), std::string::npos);
}

TEST(Parse, MalformedJsonIsSchemaError) {
    EXPECT_ONTOKIT_ERROR(parse("{\"a\": ", "x"), ErrorCode::Schema);
    EXPECT_ONTOKIT_ERROR(read_file("/nonexistent/file.json"), ErrorCode::Schema);
}

TEST(Ket, RoundTripIsExact) {
    Rng rng(4);
    const Ket k = quantum::random_ket(4, rng);
    const Ket back = ket_from_json(parse(dump(to_json(k))));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(back[i], k[i]);
}

TEST(Ket, SchemaErrorsNameTheField) {
    EXPECT_NE(schema_message([] { ket_from_json(parse(R"({"amps": []})")); }).find("'ket.amplitudes'"),
              std::string::npos);
    EXPECT_NE(schema_message([] { ket_from_json(parse(R"({"amplitudes": [[1, 0], "x"]})")); })
                  .find("'ket.amplitudes[1]'"),
              std::string::npos);
    EXPECT_NE(schema_message([] { ket_from_json(parse(R"({"amplitudes": [[1, 0], [1, 0]]})")); })
                  .find("'ket.amplitudes'"),
              std::string::npos);
    EXPECT_NE(schema_message([] { ket_from_json(parse(R"({"dim": 3, "amplitudes": [[1, 0]]})")); }).find("'ket.dim'"),
              std::string::npos);
}

TEST(Channel, RoundTripIsExact) {
    Rng rng(5);
    const quantum::Channel c = quantum::random_channel(2, 3, 2, rng);
    const quantum::Channel back = channel_from_json(parse(dump(to_json(c))));
    ASSERT_EQ(back.kraus().size(), c.kraus().size());
    for (std::size_t i = 0; i < c.kraus().size(); ++i) EXPECT_EQ(max_abs_diff(back.kraus()[i], c.kraus()[i]), 0.0);
    EXPECT_TRUE(back.trace_preserving());
}

TEST(Kernel, RoundTripAndConvention) {
    const kernels::SignedKernel k(FiniteSpace::two(), FiniteSpace({"a", "b", "c"}),
                                  RealMatrix{{0.1, 1.5}, {0.2, -0.5}, {0.7, 0.0}});
    const Json j = to_json(k);
    EXPECT_EQ(j["convention"], "column-stochastic");
    const kernels::SignedKernel back = kernel_from_json(parse(dump(j)));
    EXPECT_EQ(max_abs_diff(back.matrix(), k.matrix()), 0.0);
    EXPECT_EQ(back.to(), k.to());
    Json bad = j;
    bad["convention"] = "row-stochastic";
    EXPECT_NE(schema_message([&] { kernel_from_json(bad); }).find("'kernel.convention'"), std::string::npos);
    bad = j;
    bad["matrix"][0][0] = 0.5;
    EXPECT_ONTOKIT_ERROR(kernel_from_json(bad), ErrorCode::Schema);
}

TEST(Ensemble, RoundTripAndErrors) {
    const FiniteSpace s = FiniteSpace::indexed(3);
    const std::vector<Distribution> e = {Distribution(s, {0.1, 0.2, 0.7}), Distribution(s, {1.0 / 3, 1.0 / 3, 1.0 / 3})};
    const auto back = ensemble_from_json(parse(dump(ensemble_to_json(e))));
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[1].weights(), e[1].weights());
    EXPECT_NE(schema_message([] { ensemble_from_json(parse(R"({"points": ["a"]})")); }).find("'ensemble file.ensemble'"),
              std::string::npos);
    EXPECT_NE(schema_message([] { ensemble_from_json(parse(R"({"points": ["a", "b"], "ensemble": [[0.5, 0.6]]})")); })
                  .find("'ensemble[0]'"),
              std::string::npos);
}

TEST(Model, RoundTripPreservesValidation) {
    const auto m = ontomodel::dirac_restriction_model(
        {{"0", quantum::ket_zero()}, {"+", quantum::ket_plus()}},
        {quantum::ProjectiveMeasurement::computational(2)});
    const auto back = model_from_json(parse(dump(model_to_json(m))));
    EXPECT_EQ(back.ontic, m.ontic);
    EXPECT_EQ(back.distribution("+").weights(), m.distribution("+").weights());
    EXPECT_EQ(back.measurements[0].responses[1].values(), m.measurements[0].responses[1].values());
    EXPECT_TRUE(ontomodel::validate_model(back, 1e-10).ok());
}

TEST(Model, SchemaErrorsNameTheField) {
    const std::string bad_dist = R"({"ontic": ["a", "b"], "states": [], "distributions": {"x": [0.5, 0.4]},
                                     "measurements": []})";
    EXPECT_NE(schema_message([&] { model_from_json(parse(bad_dist)); }).find("'distributions.x'"), std::string::npos);
    const std::string bad_resp = R"({"ontic": ["a"], "states": [], "distributions": {},
        "measurements": [{"basis": [{"amplitudes": [[1, 0]]}], "responses": [[2.0]]}]})";
    EXPECT_NE(schema_message([&] { model_from_json(parse(bad_resp)); }).find("'measurements[0].responses[0]'"),
              std::string::npos);
}

TEST(QMeasure, BothFormsParse) {
    const auto d = qmeasure_from_json(parse(R"({"points": ["a", "b"],
        "decoherence": [[[0.75, 0], [-0.25, 0]], [[-0.25, 0], [0.75, 0]]]})"));
    ASSERT_TRUE(d.decoherence.has_value());
    EXPECT_FALSE(d.measure.has_value());
    EXPECT_EQ((*d.decoherence)(0b11, 0b11), Complex(1.0));
    const auto m = qmeasure_from_json(parse(R"({"points": ["a", "b"], "measure": {"1": 0.25, "2": 0.25, "3": 1}})"));
    ASSERT_TRUE(m.measure.has_value());
    EXPECT_EQ((*m.measure)(0), 0.0);
    EXPECT_EQ((*m.measure)(3), 1.0);
}

TEST(QMeasure, SchemaErrors) {
    EXPECT_NE(schema_message([] { qmeasure_from_json(parse(R"({"points": ["a"], "measure": {"1": 1, "x": 0}})")); })
                  .find("'measure.x'"),
              std::string::npos);
    EXPECT_NE(schema_message([] { qmeasure_from_json(parse(R"({"points": ["a", "b"], "measure": {"1": 1}})")); })
                  .find("'measure.2'"),
              std::string::npos);
    EXPECT_ONTOKIT_ERROR(qmeasure_from_json(parse(R"({"points": ["a"]})")), ErrorCode::Schema);
}

TEST(ReadFile, ReadsWrittenFile) {
    const std::string path = ::testing::TempDir() + "ontokit_json_io_test.json";
    {
        std::ofstream out(path);
        out << dump(to_json(quantum::ket_plus()));
    }
    const Ket k = ket_from_json(read_file(path));
    EXPECT_EQ(k[1], quantum::ket_plus()[1]);
    std::remove(path.c_str());
}

}  // namespace
}  // namespace ontokit::io
