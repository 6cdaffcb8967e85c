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

#ifndef ANNOLOG_ERROR_H_
#define ANNOLOG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace annolog {

// Every failure raised by the library carries one of these codes. Failure to
// unify or to find a proof is never an error; it is an ordinary result.
enum class ErrorCode {
  kParseError,
  kSchemaError,
  kSchemaViolation,
  kConfigError,
  kUnknownType,
  kUnknownFeature,
  kInvalidSpan,
  kUnknownPredicate,
  kResourceExhausted,
  kInstantiationError,
  kUngroundOutput,
  kUnknownNode,
  kUnknownLemma,
  kUnknownTable,
  kIdMismatch,
  kEmptyGold,
  kIoError,
};

// Coarse classes used for process exit codes and the C API status values.
enum class ErrorClass {
  kUsage = 1,
  kSchema = 2,
  kRuleLoad = 3,
  kRuntime = 4,
};

std::string_view ErrorCodeName(ErrorCode code);
ErrorClass ClassOf(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const { return code_; }
  ErrorClass error_class() const { return ClassOf(code_); }
  // The message without the error name prefix.
  const std::string &message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

// Parse errors report a 1-based line and column plus what was expected.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string &expected,
             const std::string &found, const std::string &source = {})
      : Error(ErrorCode::kParseError,
              (source.empty() ? "" : source + ":") + std::to_string(line) +
                  ":" + std::to_string(column) + ": expected " + expected +
                  ", found " + found),
        line_(line),
        column_(column),
        expected_(expected),
        found_(found) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string &expected() const { return expected_; }
  const std::string &found() const { return found_; }

 private:
  int line_;
  int column_;
  std::string expected_;
  std::string found_;
};

}  // namespace annolog

#endif  // ANNOLOG_ERROR_H_
