// Copyright 2026 The ctq Authors
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

#include "ctq/error.hpp"

namespace ctq {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyKeepSet: return "EmptyKeepSet";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotADensityMatrix: return "NotADensityMatrix";
    case ErrorCode::FidelityOutOfRange: return "FidelityOutOfRange";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::NotADistribution: return "NotADistribution";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::WrongDimensions: return "WrongDimensions";
    case ErrorCode::ExponentOutsideTheoremRange: return "ExponentOutsideTheoremRange";
    case ErrorCode::UnequalLocalDims: return "UnequalLocalDims";
    case ErrorCode::ExponentOrderViolated: return "ExponentOrderViolated";
    case ErrorCode::RootNotBracketed: return "RootNotBracketed";
    case ErrorCode::FidelityBelowSeparableBoundary: return "FidelityBelowSeparableBoundary";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::InfeasibleConstraint: return "InfeasibleConstraint";
    case ErrorCode::NotAllQubits: return "NotAllQubits";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedState: return "UnsupportedState";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ctq
