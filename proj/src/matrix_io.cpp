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

#include "geninv/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace geninv {
namespace {

using nlohmann::json;

Eigen::Index dimension(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end() || !it->is_number_integer()) {
    throw ParseError(std::string("matrix file: '") + key + "' must be an integer");
  }
  const auto v = it->get<long long>();
  if (v < 0) throw ParseError(std::string("matrix file: '") + key + "' must be >= 0");
  return static_cast<Eigen::Index>(v);
}

double finite_number(const json& v, Eigen::Index i, Eigen::Index j) {
  if (!v.is_number()) {
    throw ParseError("matrix file: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") is not a number pair");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError("matrix file: non-finite entry");
  return x;
}

}  // namespace

std::string matrix_to_json(const CMatrix& m, bool pretty) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw PreconditionViolated("cannot write a non-finite entry");
      }
      row.push_back(json::array({z.real(), z.imag()}));
    }
    data.push_back(std::move(row));
  }
  json doc = {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
  return doc.dump(pretty ? 2 : -1);
}

CMatrix matrix_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("matrix file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("matrix file: top level must be an object");
  const Eigen::Index rows = dimension(doc, "rows");
  const Eigen::Index cols = dimension(doc, "cols");
  const auto data = doc.find("data");
  if (data == doc.end() || !data->is_array() || static_cast<Eigen::Index>(data->size()) != rows) {
    throw ParseError("matrix file: 'data' must be an array of " + std::to_string(rows) + " rows");
  }
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = (*data)[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ParseError("matrix file: row " + std::to_string(i) + " must hold " +
                       std::to_string(cols) + " entries");
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      const json& pair = row[static_cast<std::size_t>(j)];
      if (!pair.is_array() || pair.size() != 2) {
        throw ParseError("matrix file: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") must be a [re, im] pair");
      }
      m(i, j) = Complex(finite_number(pair[0], i, j), finite_number(pair[1], i, j));
    }
  }
  return m;
}

CMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return matrix_from_json(buf.str());
}

void write_matrix_file(const std::string& path, const CMatrix& m, bool pretty) {
  const std::string text = matrix_to_json(m, pretty);
  std::ofstream out(path);
  if (!out) throw PreconditionViolated("cannot write matrix file: " + path);
  out << text << '\n';
}

}  // namespace geninv
