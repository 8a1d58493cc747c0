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


// Line-oriented instance documents:
//
//   # comment
//   policy TOTAL|CLOSED
//   ambient <label> p=<prime> n=<dim>
//   space <name> in <label> gen <v1>; <v2>; ...
//
// Vectors are comma-separated residues already reduced mod p. An empty
// generator list denotes the zero subspace. Sections appear in the order
// shown; LF and CRLF line endings are accepted.

#ifndef MVS_INSTANCE_IO_HPP
#define MVS_INSTANCE_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mvs/multispace.hpp"

namespace mvs {

struct ParsedInstance {
  MultiVectorSpace space;
  std::vector<std::string> component_names;
  /// Declared ambients in file order, including unused ones.
  std::vector<AmbientId> ambients;
};

/// Throws InputError (kParse or kSemantic) carrying the 1-based line.
ParsedInstance parse_instance(std::string_view text);

/// Inverse of parse_instance; components are named V1..Vk unless `names`
/// supplies one per component.
std::string format_instance(const MultiVectorSpace& m,
                            const std::vector<std::string>& names = {});

}  // namespace mvs

#endif  // MVS_INSTANCE_IO_HPP
