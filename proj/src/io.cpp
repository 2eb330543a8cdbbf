// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#include "reidlab/io.hpp"

#include <cmath>
#include <fstream>

#include "reidlab/errors.hpp"

namespace reidlab {

namespace {

double finite_number(const Json& j, const char* what) {
  if (!j.is_number()) {
    throw ParseError(std::string("expected a number for ") + what);
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw ParseError(std::string("non-finite value for ") + what);
  }
  return v;
}

Complex parse_entry(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError("matrix entry must be a [re, im] pair");
  }
  return {finite_number(j[0], "entry real part"),
          finite_number(j[1], "entry imaginary part")};
}

std::size_t positive_size(const Json& j, const char* what) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() == 0) {
    throw ParseError(std::string(what) + " must be a positive integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json data = Json::array();
  for (const Complex& z : m.entries()) {
    data.push_back(Json::array({z.real(), z.imag()}));
  }
  j["data"] = std::move(data);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data")) {
    throw ParseError("matrix object needs rows, cols and data");
  }
  const std::size_t rows = positive_size(j["rows"], "rows");
  const std::size_t cols = positive_size(j["cols"], "cols");
  const Json& data = j["data"];
  if (!data.is_array() || data.size() != rows * cols) {
    throw ParseError("matrix data length must equal rows * cols");
  }
  ComplexMatrix m(rows, cols);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t jcol = 0; jcol < cols; ++jcol) {
      m(i, jcol) = parse_entry(data[idx++]);
    }
  }
  return m;
}

Json vector_to_json(const ComplexVector& v) {
  Json j;
  j["dim"] = v.dim();
  Json data = Json::array();
  for (const Complex& z : v.entries()) {
    data.push_back(Json::array({z.real(), z.imag()}));
  }
  j["data"] = std::move(data);
  return j;
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("data")) {
    throw ParseError("vector object needs dim and data");
  }
  const std::size_t dim = positive_size(j["dim"], "dim");
  const Json& data = j["data"];
  if (!data.is_array() || data.size() != dim) {
    throw ParseError("vector data length must equal dim");
  }
  ComplexVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = parse_entry(data[i]);
  return v;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return matrix_from_json(j);
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write file: " + path);
  }
  out << matrix_to_json(m).dump(2) << "\n";
}

Json certificate_to_json(const GapCertificate& cert) {
  Json j;
  j["status"] = to_string(cert.status);
  j["gap_upper"] = cert.gap_upper;
  j["gap_lower"] = cert.gap_lower;
  j["theta_star"] = cert.theta_star;
  j["witness"] = vector_to_json(cert.witness);
  j["grid_points"] = cert.grid_points;
  j["lipschitz_bound"] = cert.lipschitz_bound;
  return j;
}

}  // namespace reidlab
