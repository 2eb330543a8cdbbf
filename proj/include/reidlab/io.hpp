// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "json.hpp"
#include "reidlab/certifier.hpp"
#include "reidlab/matrix.hpp"

namespace reidlab {

/// JSON with insertion-ordered keys so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Matrix wire format:
///   {"rows": r, "cols": c, "data": [[re, im], ...]}   (row-major)
/// Vector wire format:
///   {"dim": n, "data": [[re, im], ...]}
/// Readers throw ParseError on malformed input or non-finite entries.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);
Json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const Json& j);

ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

Json certificate_to_json(const GapCertificate& cert);

}  // namespace reidlab
