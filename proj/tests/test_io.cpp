// SPDX-License-Identifier: Apache-2.0
#include "mdsc/io.hpp"
#include "test_util.hpp"

using namespace mdsc;

TEST_CASE("number parsing") {
    CHECK(parse_hex_or_int(std::string("0x1B")) == 27);
    CHECK(parse_hex_or_int(std::string("0X1b")) == 27);
    CHECK(parse_hex_or_int(std::string("27")) == 27);
    CHECK(parse_hex_or_int(Json(27)) == 27);
    CHECK(parse_hex_or_int(Json("0x11B")) == 0x11B);
    CHECK_ERRC(parse_hex_or_int(std::string("0x")), Errc::parse_error);
    CHECK_ERRC(parse_hex_or_int(std::string("12z")), Errc::parse_error);
    CHECK_ERRC(parse_hex_or_int(Json(-1)), Errc::parse_error);
    CHECK_ERRC(parse_hex_or_int(Json(1.5)), Errc::parse_error);
    CHECK_ERRC(parse_hex_or_int(Json::array()), Errc::parse_error);
}

TEST_CASE("explicit matrix documents") {
    const auto doc = parse_matrix_text(R"({"r": 8, "poly": "0x11B",
        "rows": [["0x02","0x03","0x01","0x01"],[1,2,3,1],[1,1,2,3],[3,1,1,2]]})");
    CHECK(doc.field->poly() == 0x11B);
    CHECK(doc.matrix == circulant(doc.field, std::vector<Elem>{2, 3, 1, 1}));
    CHECK_FALSE(doc.spec);

    // Poly defaults to the table entry.
    CHECK(parse_matrix_text(R"({"r": 4, "rows": [[1]]})").field->poly() == 0x13);
}

TEST_CASE("structured shorthand") {
    const auto had = parse_matrix_text(R"({"r": 4, "kind": "hadamard", "row": ["0x1", "0x1", "0x3", "0x4"]})");
    REQUIRE(had.spec);
    CHECK(had.spec->kind == StructureKind::hadamard);
    CHECK(had.matrix == hadamard(had.field, std::vector<Elem>{1, 1, 3, 4}));

    const auto t1 = parse_matrix_text(R"({"r": 3, "kind": "type1", "a": "0x0", "row": [1, 0, 1], "domain": "relaxed"})");
    CHECK(t1.matrix(0, 0) == 0);
    CHECK_ERRC(parse_matrix_text(R"({"r": 3, "kind": "type1", "a": 0, "row": [1, 0, 1]})"), Errc::parameter_domain);
    CHECK_ERRC(parse_matrix_text(R"({"r": 3, "kind": "type1", "row": [1, 2, 3]})"), Errc::parse_error);

    const auto t2 = parse_matrix_text(R"({"r": 4, "kind": "type2", "row": [1, 2, 2]})");
    CHECK(t2.matrix.rows() == 6);
}

TEST_CASE("field defaults and conflicts") {
    FieldDefaults d;
    d.r = 4;
    CHECK(parse_matrix_text(R"({"rows": [[1, 2], [3, 4]]})", d).field->degree() == 4);
    CHECK_ERRC(parse_matrix_text(R"({"r": 3, "rows": [[1]]})", d), Errc::field_mismatch);
    d.poly = 0x19;
    CHECK_ERRC(parse_matrix_text(R"({"r": 4, "poly": "0x13", "rows": [[1]]})", d), Errc::field_mismatch);
    CHECK_ERRC(parse_matrix_text(R"({"rows": [[1]]})"), Errc::parse_error);
}

TEST_CASE("malformed documents") {
    CHECK_ERRC(parse_matrix_text("{"), Errc::parse_error);
    CHECK_ERRC(parse_matrix_text("[]"), Errc::parse_error);
    CHECK_ERRC(parse_matrix_text(R"({"r": 3})"), Errc::parse_error);
    CHECK_ERRC(parse_matrix_text(R"({"r": 3, "rows": []})"), Errc::parse_error);
    CHECK_ERRC(parse_matrix_text(R"({"r": 3, "rows": [[1, 2], [3]]})"), Errc::dimension_mismatch);
    CHECK_ERRC(parse_matrix_text(R"({"r": 3, "rows": [[1, 9]]})"), Errc::invalid_argument);
    CHECK_ERRC(parse_matrix_text(R"({"r": 3, "kind": "toeplitz", "row": [1]})"), Errc::parse_error);
    CHECK_ERRC(parse_matrix_text(R"({"r": 3, "kind": "hadamard", "row": [1, 2, 3]})"), Errc::not_power_of_two);
    CHECK_ERRC(parse_matrix_text(R"({"r": 4, "poly": "0x18", "rows": [[1]]})"), Errc::reducible_polynomial);
    CHECK_ERRC(load_matrix_file("/nonexistent/m.json"), Errc::parse_error);
}

TEST_CASE("matrix JSON round trip") {
    oracle::Rng rng(51);
    const auto f = make_field(9, 0x211);
    const Matrix m = random_matrix(f, 3, 5, rng);
    const auto back = parse_matrix_document(Json::parse(to_json(m).dump()));
    CHECK(back.matrix == m);
    CHECK(back.field->same_as(*f));
}

TEST_CASE("predicate report JSON") {
    const auto f = make_field(4);
    const auto rep = is_mds(hadamard(f, std::vector<Elem>{1, 1, 3, 4}));
    const Json j = to_json(rep);
    CHECK(j["property"] == "mds");
    CHECK(j["holds"] == false);
    CHECK(j["witness"]["rows"].size() == 2);
    CHECK_FALSE(j["witness"].contains("reason"));
    CHECK(to_json(is_mds(circulant(f, std::vector<Elem>{0, 1, 1, 1}))).dump().find("witness") != std::string::npos);
    CHECK(to_json(is_nmds(circulant(f, std::vector<Elem>{0, 1, 1, 1}))).dump() == R"({"property":"nmds","holds":true})");
}

TEST_CASE("census result JSON") {
    const auto res = run_census(ClassId::inv_mds_4x4, make_field(3), Method::brute);
    const Json j = Json::parse(to_json(res).dump());
    CHECK(j["class_id"] == "inv_mds_4x4");
    CHECK(j["r"] == 3);
    CHECK(j["poly"] == "0xB");
    CHECK(j["method"] == "brute");
    CHECK(j["count"] == 16464);
    CHECK(j["candidates"] == 1975680);
    CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("verification report JSON") {
    const auto rep = verify_type2_even_not_nmds(make_field(4), 4, ScanScope::sampled(100, 3));
    const Json j = to_json(rep);
    CHECK(j["claim"] == "type2_even_not_nmds");
    CHECK(j["field"]["r"] == 4);
    CHECK(j["field"]["poly"] == "0x13");
    CHECK(j["scanned"] == 100);
    CHECK(j["counterexamples"] == Json::array());
    CHECK(j["mode"] == "sampled");
    CHECK(j["seed"] == 3);
    CHECK(j["stats"]["nmds_found"] == 0);
    CHECK(j["passed"] == true);
    // Same inputs give the same bytes.
    CHECK(to_json(verify_type2_even_not_nmds(make_field(4), 4, ScanScope::sampled(100, 3))).dump() == j.dump());
}

TEST_CASE("exclusion-set audit JSON") {
    const auto f = make_field(3);
    const Json j = to_json(t_set_audit(*f, 1, 2));
    CHECK(j["entries"].size() == 5);
    CHECK(j["special_c_set"].size() == 4);
    CHECK(j["violations"].empty());
}
