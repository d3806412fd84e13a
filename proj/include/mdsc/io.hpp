// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mdsc/census.hpp"
#include "mdsc/matrix.hpp"
#include "mdsc/predicates.hpp"
#include "mdsc/structure.hpp"

namespace mdsc {

using Json = nlohmann::ordered_json;

/// Field parameters that apply when the document does not name them.
struct FieldDefaults {
    std::optional<unsigned> r;
    std::optional<std::uint32_t> poly;
};

struct MatrixDocument {
    FieldPtr field;
    Matrix matrix;
    /// Set for the structured shorthand.
    std::optional<StructuredSpec> spec;
};

/// Entries and a/poly may be integers or "0x.." strings. Accepts
/// {"r", "poly", "rows": [[...]]} or {"r", "poly", "kind", "a", "row",
/// "domain"}. A value in the document that contradicts `defaults` is an
/// error (Errc::field_mismatch). Parse failures throw Errc::parse_error.
MatrixDocument parse_matrix_document(const Json& doc, const FieldDefaults& defaults = {});
MatrixDocument parse_matrix_text(const std::string& text, const FieldDefaults& defaults = {});
MatrixDocument load_matrix_file(const std::string& path, const FieldDefaults& defaults = {});

/// "0x1B", 27 or "27".
std::uint32_t parse_hex_or_int(const Json& v);
std::uint32_t parse_hex_or_int(const std::string& s);

Json to_json(const Matrix& m);
Json to_json(const PredicateReport& r);
Json to_json(const CensusResult& r);
Json to_json(const VerificationReport& r);
Json to_json(const TSetAudit& a);

} // namespace mdsc
