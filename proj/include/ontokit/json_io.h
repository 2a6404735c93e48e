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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ontokit/kernels.h"
#include "ontokit/linalg.h"
#include "ontokit/ontomodel.h"
#include "ontokit/qmeasure.h"
#include "ontokit/quantum.h"

namespace ontokit::io {

using Json = nlohmann::ordered_json;

/// Serializes with every floating-point number printed to 17 significant
/// digits so that parsing the output recovers the exact doubles. Non-finite
/// numbers become null. Object keys keep insertion order.
std::string dump(const Json &j, int indent = 2);

/// Parses text; throws Schema on malformed JSON.
Json parse(const std::string &text, const std::string &what = "input");
/// Reads and parses a file; throws Schema when it cannot be opened.
Json read_file(const std::string &path);

// Complex numbers are [re, im] pairs; matrices are arrays of rows.
Json to_json(Complex z);
Json to_json(const ComplexMatrix &m);
Json to_json(const RealMatrix &m);
Json to_json(const Ket &k);                     // {"dim", "amplitudes"}
Json to_json(const quantum::Channel &c);        // {"in_dim", "out_dim", "kraus", "trace_preserving"}
Json to_json(const kernels::SignedKernel &k);   // {"from", "to", "matrix", "convention"}
Json to_json(const kernels::Distribution &mu);  // {"points", "weights"}

// Parsers name the offending field in the Schema error, prefixed by `where`.
Complex complex_from_json(const Json &j, const std::string &where);
ComplexMatrix matrix_from_json(const Json &j, const std::string &where);
Ket ket_from_json(const Json &j, const std::string &where = "ket");
quantum::Channel channel_from_json(const Json &j, const std::string &where = "channel");
kernels::SignedKernel kernel_from_json(const Json &j, const std::string &where = "kernel");

/// {"points": [labels], "ensemble": [[weights], ...]}.
std::vector<kernels::Distribution> ensemble_from_json(const Json &j);
Json ensemble_to_json(const std::vector<kernels::Distribution> &ensemble);

/// {"ontic": [labels], "states": [{"label", "ket"}], "distributions":
/// {label: [weights]}, "measurements": [{"basis": [kets], "responses": [[...]]}]}.
ontomodel::OntModel model_from_json(const Json &j);
Json model_to_json(const ontomodel::OntModel &m);

/// Either {"points", "decoherence": [[[re, im]]]} or {"points", "measure":
/// {"<bitmask>": value}}; the bitmask is a decimal integer with bit x set for
/// point x. Exactly one of the two forms is returned.
struct QMeasureInput {
    std::optional<qmeasure::DecoherenceFunctional> decoherence;
    std::optional<qmeasure::QuantumMeasure> measure;
};
QMeasureInput qmeasure_from_json(const Json &j);

}  // namespace ontokit::io
