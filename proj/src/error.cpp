// Copyright 2026 The Authors.
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


#include "mvs/error.hpp"

namespace mvs {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kZeroInverse: return "ZeroInverse";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kAmbientMismatch: return "AmbientMismatch";
    case ErrorKind::kPolicyMismatch: return "PolicyMismatch";
    case ErrorKind::kEmptyChain: return "EmptyChain";
    case ErrorKind::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::kSearchTooLarge: return "SearchTooLarge";
    case ErrorKind::kTooManyComponents: return "TooManyComponents";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kSemantic: return "SemanticError";
  }
  return "Unknown";
}

bool is_cap_error(ErrorKind kind) {
  return kind == ErrorKind::kEnumerationTooLarge ||
         kind == ErrorKind::kSearchTooLarge ||
         kind == ErrorKind::kTooManyComponents;
}

namespace {

std::string format_input_error(ErrorKind kind, std::size_t line, std::size_t column,
                               const std::string& message) {
  std::string out = to_string(kind);
  out += ": line " + std::to_string(line);
  if (column != 0) out += ", column " + std::to_string(column);
  out += ": " + message;
  return out;
}

}  // namespace

InputError::InputError(ErrorKind kind, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(kind, format_input_error(kind, line, column, message)),
      line_(line),
      column_(column),
      message_(message) {}

}  // namespace mvs
