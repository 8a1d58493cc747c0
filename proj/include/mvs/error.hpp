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

#ifndef MVS_ERROR_HPP
#define MVS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvs {

enum class ErrorKind {
  kInvalidArgument,
  kZeroInverse,
  kDimensionMismatch,
  kAmbientMismatch,
  kPolicyMismatch,
  kEmptyChain,
  kEnumerationTooLarge,
  kSearchTooLarge,
  kTooManyComponents,
  kParse,
  kSemantic,
};

const char* to_string(ErrorKind kind);

/// True for the kinds raised when a configured size cap would be exceeded.
bool is_cap_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Failure while reading an instance document. Line and column are 1-based;
/// column is 0 when only the line is known.
class InputError : public Error {
 public:
  InputError(ErrorKind kind, std::size_t line, std::size_t column,
             const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace mvs

#endif  // MVS_ERROR_HPP
