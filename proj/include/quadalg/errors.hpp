/*
   Copyright 2026 The quadalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace quadalg {

enum class ErrorCode {
  DivisionByZero,
  ZeroInput,
  PoleAtPoint,
  DimensionMismatch,
  ZeroSlot,
  IsotropicVector,
  DegenerateForm,
  SquareA,
  ProductConstraintViolated,
  NotAnisotropic,
  AlgebraMismatch,
  NormZero,
  IsotropicSkew,
  ResultNotSkew,
  CtxMismatch,
  NotIdempotent,
  AxiomFailed,
  DecompositionFailed,
  NotConnecting,
  Hypothesis1Failed,
  Hypothesis2Witness,
  NotQuadraticPair,
  AnisotropyWitness,
  MismatchAgainstExample,
  IdentityFailed,
  NotDivisible,
  ParseError,
  ConfigParseError,
  ConstructionError,
  VerificationFailure,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroSlot: return "ZeroSlot";
    case ErrorCode::IsotropicVector: return "IsotropicVector";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::SquareA: return "SquareA";
    case ErrorCode::ProductConstraintViolated: return "ProductConstraintViolated";
    case ErrorCode::NotAnisotropic: return "NotAnisotropic";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NormZero: return "NormZero";
    case ErrorCode::IsotropicSkew: return "IsotropicSkew";
    case ErrorCode::ResultNotSkew: return "ResultNotSkew";
    case ErrorCode::CtxMismatch: return "CtxMismatch";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::AxiomFailed: return "AxiomFailed";
    case ErrorCode::DecompositionFailed: return "DecompositionFailed";
    case ErrorCode::NotConnecting: return "NotConnecting";
    case ErrorCode::Hypothesis1Failed: return "Hypothesis1Failed";
    case ErrorCode::Hypothesis2Witness: return "Hypothesis2Witness";
    case ErrorCode::NotQuadraticPair: return "NotQuadraticPair";
    case ErrorCode::AnisotropyWitness: return "AnisotropyWitness";
    case ErrorCode::MismatchAgainstExample: return "MismatchAgainstExample";
    case ErrorCode::IdentityFailed: return "IdentityFailed";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigParseError: return "ConfigParseError";
    case ErrorCode::ConstructionError: return "ConstructionError";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
  }
  return "Unknown";
}

// Every failure in the library surfaces as this one exception type; callers
// switch on code() when they need to tell failures apart.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace quadalg
