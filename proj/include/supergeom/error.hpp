// Copyright 2026 The Supergeom Authors
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

#ifndef SUPERGEOM_ERROR_HPP_
#define SUPERGEOM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace supergeom {

enum class ErrorKind {
  kUnknownVariable,
  kMixedTables,
  kDimensionMismatch,
  kIndexOutOfRange,
  kTooManyOddVariables,
  kDuplicateVariable,
  kPointNotOnVariety,
  kOrderTooSmall,
  kNotInvertible,
  kUndecidableUnits,
  kBadDims,
  kBadForm,
  kBadAction,
  kParseError,
  kMixedParityGenerator,
};

inline std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnknownVariable: return "UnknownVariable";
    case ErrorKind::kMixedTables: return "MixedTables";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kTooManyOddVariables: return "TooManyOddVariables";
    case ErrorKind::kDuplicateVariable: return "DuplicateVariable";
    case ErrorKind::kPointNotOnVariety: return "PointNotOnVariety";
    case ErrorKind::kOrderTooSmall: return "OrderTooSmall";
    case ErrorKind::kNotInvertible: return "NotInvertible";
    case ErrorKind::kUndecidableUnits: return "UndecidableUnits";
    case ErrorKind::kBadDims: return "BadDims";
    case ErrorKind::kBadForm: return "BadForm";
    case ErrorKind::kBadAction: return "BadAction";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kMixedParityGenerator: return "MixedParityGenerator";
  }
  return "Unknown";
}

// All library failures are reported through this one exception type; the
// kind is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, int line, int column, const std::string& message)
      : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " +
                        message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace supergeom

#endif  // SUPERGEOM_ERROR_HPP_
