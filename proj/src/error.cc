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

#include "ontokit/error.h"

namespace ontokit {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::SpaceMismatch: return "SpaceMismatch";
        case ErrorCode::WrongSpace: return "WrongSpace";
        case ErrorCode::SignedUnsupported: return "SignedUnsupported";
        case ErrorCode::BadOverlap: return "BadOverlap";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::EvenDimension: return "EvenDimension";
        case ErrorCode::UnrepresentableAlgebra: return "UnrepresentableAlgebra";
        case ErrorCode::NotTracePreserving: return "NotTracePreserving";
        case ErrorCode::MissingMorphism: return "MissingMorphism";
        case ErrorCode::MissingAction: return "MissingAction";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::InvalidFunctional: return "InvalidFunctional";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Schema: return "Schema";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

}  // namespace ontokit
