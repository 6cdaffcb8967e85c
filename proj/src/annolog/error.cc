// Copyright 2026 The Annolog Authors.
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

#include "annolog/error.h"

namespace annolog {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kUnknownType: return "UnknownType";
    case ErrorCode::kUnknownFeature: return "UnknownFeature";
    case ErrorCode::kInvalidSpan: return "InvalidSpan";
    case ErrorCode::kUnknownPredicate: return "UnknownPredicate";
    case ErrorCode::kResourceExhausted: return "ResourceExhausted";
    case ErrorCode::kInstantiationError: return "InstantiationError";
    case ErrorCode::kUngroundOutput: return "UngroundOutput";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kUnknownLemma: return "UnknownLemma";
    case ErrorCode::kUnknownTable: return "UnknownTable";
    case ErrorCode::kIdMismatch: return "IdMismatch";
    case ErrorCode::kEmptyGold: return "EmptyGold";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Error";
}

ErrorClass ClassOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoError:
      return ErrorClass::kUsage;
    case ErrorCode::kSchemaError:
    case ErrorCode::kSchemaViolation:
    case ErrorCode::kConfigError:
    case ErrorCode::kUnknownType:
    case ErrorCode::kUnknownFeature:
    case ErrorCode::kInvalidSpan:
    case ErrorCode::kIdMismatch:
    case ErrorCode::kEmptyGold:
      return ErrorClass::kSchema;
    case ErrorCode::kParseError:
      return ErrorClass::kRuleLoad;
    case ErrorCode::kUnknownPredicate:
    case ErrorCode::kResourceExhausted:
    case ErrorCode::kInstantiationError:
    case ErrorCode::kUngroundOutput:
    case ErrorCode::kUnknownNode:
    case ErrorCode::kUnknownLemma:
    case ErrorCode::kUnknownTable:
      return ErrorClass::kRuntime;
  }
  return ErrorClass::kRuntime;
}

}  // namespace annolog
