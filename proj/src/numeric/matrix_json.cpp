// Copyright 2026 The qudsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "numeric/matrix_json.hpp"

#include <cmath>

#include <json.hpp>

#include "common/error.hpp"

namespace qs::num {

using nlohmann::json;

std::string matrix_to_json(const ComplexMatrix& m, int indent) {
    json data = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        data.push_back(std::move(row));
    }
    json doc = {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
    return doc.dump(indent);
}

ComplexMatrix matrix_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::Parse, std::string("matrix JSON: ") + e.what());
    }
    require(doc.is_object() && doc.contains("rows") && doc.contains("cols") && doc.contains("data"),
            ErrorCode::Parse, "matrix JSON: expected object with rows, cols and data");
    require(doc["rows"].is_number_integer() && doc["cols"].is_number_integer(), ErrorCode::Parse,
            "matrix JSON: rows and cols must be integers");
    const long rows = doc["rows"].get<long>();
    const long cols = doc["cols"].get<long>();
    require(rows > 0 && rows == cols, ErrorCode::Parse, "matrix JSON: matrix must be square and non-empty");
    const json& data = doc["data"];
    require(data.is_array() && static_cast<long>(data.size()) == rows, ErrorCode::Parse,
            "matrix JSON: data must hold one array per row");

    ComplexMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        const json& row = data[i];
        require(row.is_array() && static_cast<long>(row.size()) == cols, ErrorCode::Parse,
                "matrix JSON: row " + std::to_string(i) + " has the wrong length");
        for (long j = 0; j < cols; ++j) {
            const json& z = row[j];
            require(z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number(), ErrorCode::Parse,
                    "matrix JSON: entry must be [re, im]");
            const double re = z[0].get<double>();
            const double im = z[1].get<double>();
            require(std::isfinite(re) && std::isfinite(im), ErrorCode::Parse, "matrix JSON: non-finite entry");
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

}  // namespace qs::num
