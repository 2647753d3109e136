// Copyright 2026 The opabs Authors
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

#ifndef OPABS_MATRIX_JSON_HPP_
#define OPABS_MATRIX_JSON_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "opabs/matrix.hpp"

namespace opabs {

// Matrix literal: {"dim": n, "entries": [[re, im], ...]} with n*n entries in
// row-major order.

/// Throws std::invalid_argument on malformed text or an entry count that
/// does not match dim.
ComplexMatrix parse_matrix_json(std::string_view text);
ComplexMatrix load_matrix_file(const std::filesystem::path& path);
std::string to_matrix_json(const ComplexMatrix& m);

}  // namespace opabs

#endif  // OPABS_MATRIX_JSON_HPP_
