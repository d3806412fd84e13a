// SPDX-License-Identifier: Apache-2.0
#include "mdsc/io.hpp"

#include <fstream>
#include <sstream>

namespace mdsc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::parse_error, what); }

std::vector<Elem> parse_row(const Json& row) {
    if (!row.is_array())
        bad("matrix row must be an array");
    std::vector<Elem> out;
    out.reserve(row.size());
    for (const auto& v : row)
        out.push_back(parse_hex_or_int(v));
    return out;
}

Json hex_row(std::span<const Elem> row) {
    Json out = Json::array();
    for (Elem x : row)
        out.push_back(to_hex(x));
    return out;
}

} // namespace

std::uint32_t parse_hex_or_int(const std::string& s) {
    std::string body = s;
    int base = 10;
    if (body.size() > 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) {
        body = body.substr(2);
        base = 16;
    }
    if (body.empty())
        bad("empty number '" + s + "'");
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(body, &used, base);
    } catch (const std::exception&) {
        bad("not a number: '" + s + "'");
    }
    if (used != body.size() || v > 0xFFFFFFFFull)
        bad("not a 32-bit number: '" + s + "'");
    return static_cast<std::uint32_t>(v);
}

std::uint32_t parse_hex_or_int(const Json& v) {
    if (v.is_string())
        return parse_hex_or_int(v.get<std::string>());
    if (v.is_number_unsigned())
        return parse_hex_or_int(std::to_string(v.get<std::uint64_t>()));
    if (v.is_number_integer()) {
        if (v.get<std::int64_t>() < 0)
            bad("negative number " + v.dump());
        return parse_hex_or_int(std::to_string(v.get<std::int64_t>()));
    }
    bad("expected an integer or hex string, got " + v.dump());
}

MatrixDocument parse_matrix_document(const Json& doc, const FieldDefaults& defaults) {
    if (!doc.is_object())
        bad("matrix document must be a JSON object");

    std::optional<unsigned> r = defaults.r;
    if (doc.contains("r")) {
        const unsigned file_r = parse_hex_or_int(doc["r"]);
        if (r && *r != file_r)
            throw Error(Errc::field_mismatch, "document degree " + std::to_string(file_r) +
                                                  " differs from requested degree " + std::to_string(*r));
        r = file_r;
    }
    if (!r)
        bad("no field degree: add \"r\" to the document or pass --r");
    std::optional<std::uint32_t> poly = defaults.poly;
    if (doc.contains("poly")) {
        const std::uint32_t file_poly = parse_hex_or_int(doc["poly"]);
        if (poly && *poly != file_poly)
            throw Error(Errc::field_mismatch, "document polynomial " + to_hex(file_poly) +
                                                  " differs from requested polynomial " + to_hex(*poly));
        poly = file_poly;
    }
    FieldPtr field = make_field(*r, poly);

    if (doc.contains("rows")) {
        const Json& rows = doc["rows"];
        if (!rows.is_array() || rows.empty())
            bad("\"rows\" must be a nonempty array");
        std::vector<std::vector<Elem>> data;
        for (const auto& row : rows)
            data.push_back(parse_row(row));
        for (const auto& row : data)
            if (row.size() != data.front().size())
                throw Error(Errc::dimension_mismatch, "matrix rows have different lengths");
        Matrix m = Matrix::from_rows(field, data);
        return {field, std::move(m), std::nullopt};
    }
    if (!doc.contains("kind"))
        bad("matrix document needs \"rows\" or \"kind\"");
    StructuredSpec spec;
    try {
        spec.kind = parse_structure_kind(doc["kind"].get<std::string>());
    } catch (const nlohmann::json::exception&) {
        bad("\"kind\" must be a string");
    }
    if (spec.kind == StructureKind::generic)
        bad("structured kind must be hadamard, circulant, type1, type2 or diagonal");
    if (!doc.contains("row"))
        bad("structured matrix needs \"row\"");
    spec.row = parse_row(doc["row"]);
    if (doc.contains("a"))
        spec.a = parse_hex_or_int(doc["a"]);
    else if (spec.kind == StructureKind::type1)
        bad("type1 matrix needs \"a\"");
    if (doc.contains("domain")) {
        const std::string d = doc["domain"].is_string() ? doc["domain"].get<std::string>() : "";
        if (d == "strict")
            spec.domain = Type1Domain::strict;
        else if (d == "relaxed")
            spec.domain = Type1Domain::relaxed;
        else
            bad("\"domain\" must be \"strict\" or \"relaxed\"");
    }
    Matrix m = build(field, spec);
    return {field, std::move(m), spec};
}

MatrixDocument parse_matrix_text(const std::string& text, const FieldDefaults& defaults) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    return parse_matrix_document(doc, defaults);
}

MatrixDocument load_matrix_file(const std::string& path, const FieldDefaults& defaults) {
    std::ifstream in(path);
    if (!in)
        bad("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix_text(ss.str(), defaults);
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(hex_row(m.row(i)));
    return {{"r", m.field().degree()}, {"poly", to_hex(m.field().poly())}, {"rows", rows}};
}

Json to_json(const PredicateReport& r) {
    Json out = {{"property", property_name(r.property)}, {"holds", r.holds}};
    if (r.witness) {
        Json w = {{"rows", r.witness->rows}, {"cols", r.witness->cols}};
        if (!r.witness->reason.empty())
            w["reason"] = r.witness->reason;
        out["witness"] = w;
    }
    return out;
}

Json to_json(const CensusResult& r) {
    Json out = {{"class_id", class_id_name(r.class_id)},
                {"r", r.r},
                {"poly", to_hex(r.poly)},
                {"method", method_name(r.method)},
                {"count", r.count},
                {"elapsed_ms", r.elapsed_ms},
                {"partitions", r.partitions}};
    if (r.candidates)
        out["candidates"] = *r.candidates;
    return out;
}

Json to_json(const VerificationReport& r) {
    Json out = {{"claim", r.claim},
                {"field", {{"r", r.r}, {"poly", to_hex(r.poly)}}},
                {"scanned", r.scanned},
                {"counterexamples", r.counterexamples},
                {"mode", scan_mode_name(r.scope.mode)}};
    if (r.scope.mode == ScanMode::sampled) {
        out["samples"] = r.scope.samples;
        out["seed"] = r.scope.seed;
    }
    out["scope"] = r.scope_note;
    Json stats = Json::object();
    for (const auto& [k, v] : r.stats)
        stats[k] = v;
    out["stats"] = stats;
    out["notes"] = r.notes;
    out["passed"] = r.passed();
    return out;
}

Json to_json(const TSetAudit& a) {
    Json entries = Json::array();
    for (const auto& e : a.entries)
        entries.push_back({{"c", e.c},
                           {"t_set", e.t_set},
                           {"t_cardinality", e.t_cardinality},
                           {"branch", t_branch_name(e.branch)}});
    return {{"a", a.a},
            {"b", a.b},
            {"omega_b", a.omega_b},
            {"special_c_set", a.entries.empty() ? std::vector<Elem>{} : a.entries.front().special_c_set},
            {"admissible_d", a.admissible_d},
            {"expected_admissible_d", a.expected_admissible_d},
            {"violations", a.violations},
            {"entries", entries}};
}

} // namespace mdsc
