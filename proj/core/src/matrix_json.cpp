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

#include "opabs/matrix_json.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace opabs {

ComplexMatrix parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("matrix literal: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries")) {
    throw std::invalid_argument(
        "matrix literal: expected object with \"dim\" and \"entries\"");
  }
  const auto& dim_node = doc.at("dim");
  if (!dim_node.is_number_integer() || dim_node.get<long long>() < 1) {
    throw std::invalid_argument("matrix literal: \"dim\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(dim_node.get<long long>());
  const auto& entries = doc.at("entries");
  if (!entries.is_array() || entries.size() != n * n) {
    throw std::invalid_argument("matrix literal: \"entries\" must hold dim^2 = " +
                                std::to_string(n * n) + " pairs");
  }
  std::vector<Complex> values;
  values.reserve(n * n);
  for (const auto& pair : entries) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
      throw std::invalid_argument("matrix literal: each entry must be [re, im]");
    }
    values.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return ComplexMatrix(n, std::move(values));
}

ComplexMatrix load_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open matrix file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str());
}

std::string to_matrix_json(const ComplexMatrix& m) {
  nlohmann::ordered_json doc;
  doc["dim"] = m.dim();
  auto entries = nlohmann::ordered_json::array();
  for (const Complex& z : m.entries()) entries.push_back({z.real(), z.imag()});
  doc["entries"] = std::move(entries);
  return doc.dump();
}

}  // namespace opabs
