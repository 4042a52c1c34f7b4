// Copyright 2026 The geninv Authors.
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

// JSON matrix files:
//
//   {"rows": 2, "cols": 2, "data": [[[1, 0], [0, -1]], [[0.5, 0], [0, 0]]]}
//
// Every entry is an explicit [re, im] pair. Doubles are written in shortest
// round-trip form, so write-then-read reproduces the matrix bit for bit.
// Empty blocks (a zero row or column count) are allowed.

#ifndef GENINV_MATRIX_IO_HPP_
#define GENINV_MATRIX_IO_HPP_

#include <string>
#include <string_view>

#include "geninv/numkernel.hpp"

namespace geninv {

/// Throws PreconditionViolated for non-finite entries.
std::string matrix_to_json(const CMatrix& m, bool pretty = false);
/// Throws ParseError on malformed text, shape mismatches or non-finite values.
CMatrix matrix_from_json(std::string_view text);

CMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const CMatrix& m, bool pretty = false);

}  // namespace geninv

#endif  // GENINV_MATRIX_IO_HPP_
