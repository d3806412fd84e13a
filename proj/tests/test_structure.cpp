// SPDX-License-Identifier: Apache-2.0
#include <set>

#include "mdsc/predicates.hpp"
#include "mdsc/structure.hpp"
#include "test_util.hpp"

using namespace mdsc;

TEST_CASE("2x2 involutory decomposition") {
    const auto f = make_field(4);
    for (Elem a = 2; a < 16; ++a)
        for (Elem c = 1; c < 16; ++c) {
            const Elem b = f->div(1 ^ f->square(a), c);
            const Matrix m = Matrix::from_rows(f, {{a, b}, {c, a}});
            REQUIRE(is_involutory(m));
            const auto dec = decompose_involutory_mds(m);
            CHECK(dec.reconstruct() == m);
            CHECK(dec.hadamard_core == hadamard(f, std::vector<Elem>{a, 1 ^ a}));
            CHECK(dec.diag_block(0, 0) == 1);
            CHECK(dec.diag_block(1, 1) == f->div(c, 1 ^ a));
        }
}

TEST_CASE("decomposition errors") {
    const auto f = make_field(3);
    CHECK_ERRC(decompose_involutory_mds(Matrix::identity(f, 3)), Errc::odd_order);
    CHECK_ERRC(decompose_involutory_mds(Matrix(f, 2, 4)), Errc::non_square);
    CHECK_ERRC(decompose_involutory_mds(circulant(f, std::vector<Elem>{2, 3, 1, 1})), Errc::not_involutory);
    // Involutory but with a zero lower-left block.
    CHECK_ERRC(decompose_involutory_mds(Matrix::identity(f, 4)), Errc::singular_block);
}

TEST_CASE("decomposition round trip over all 4x4 involutory MDS matrices at r = 3") {
    const auto rep = verify_decomposition_roundtrip(make_field(3));
    CHECK(rep.passed());
    CHECK(rep.stat("matrices") == 16464);
    CHECK(rep.scanned == 16464);
}

TEST_CASE("adjugate satisfies M adj(M) = det(M) I") {
    oracle::Rng rng(41);
    for (unsigned r : {2u, 4u, 7u}) {
        const auto f = make_field(r);
        const auto o = oracle_of(*f);
        for (std::size_t n = 1; n <= 5; ++n)
            for (int t = 0; t < 40; ++t) {
                const Matrix m = random_matrix(f, n, n, rng);
                const Matrix adj = adjugate(m);
                const Matrix scaled = Matrix::identity(f, n).scaled(det(m));
                CHECK(m * adj == scaled);
                CHECK(adj * m == scaled);
                if (n >= 2)
                    CHECK(adj(0, 1) == oracle::laplace_det(o, to_oracle(minor_matrix(m, 1, 0))));
            }
    }
}

TEST_CASE("Hadamard adjugate identity") {
    oracle::Rng rng(42);
    const auto f = make_field(5);
    for (std::size_t n : {2u, 4u, 8u})
        for (int t = 0; t < 50; ++t) {
            std::vector<Elem> row(n);
            for (auto& x : row)
                x = rng.below(f->size());
            if (t % 3 == 0) {
                // Zero row sum.
                Elem s = 0;
                for (std::size_t k = 0; k + 1 < n; ++k)
                    s ^= row[k];
                row[n - 1] = s;
            }
            CHECK(hadamard_adjugate_check(hadamard(f, row)));
        }
    CHECK_ERRC(hadamard_adjugate_check(circulant(f, std::vector<Elem>{1, 2, 3, 4})), Errc::not_hadamard);
    CHECK_ERRC(hadamard_adjugate_check(Matrix::identity(f, 3)), Errc::not_hadamard);
    CHECK_ERRC(hadamard_adjugate_check(hadamard(f, std::vector<Elem>(16, 1))), Errc::not_hadamard);
}

TEST_CASE("adjugate identity scans") {
    for (unsigned r = 2; r <= 4; ++r) {
        const auto f = make_field(r);
        const auto rep = verify_adjugate_identity(f, 4, ScanScope::exhaustive());
        CHECK(rep.passed());
        CHECK(rep.scanned == std::uint64_t{1} << (4 * r));
    }
    CHECK(verify_adjugate_identity(make_field(6), 8, ScanScope::sampled(300, 9)).passed());
    CHECK_ERRC(verify_adjugate_identity(make_field(5), 4, ScanScope::exhaustive()), Errc::budget_exceeded);
    CHECK_ERRC(verify_adjugate_identity(make_field(5), 3, ScanScope::exhaustive()), Errc::invalid_argument);
}

TEST_CASE("singular Hadamard matrices are never NMDS") {
    for (unsigned r = 2; r <= 5; ++r) {
        const auto rep = verify_singular_hadamard_not_nmds(make_field(r), 4, ScanScope::exhaustive());
        CAPTURE(r);
        CHECK(rep.passed());
        CHECK(rep.scanned == std::uint64_t{1} << (3 * r));
    }
    const auto sampled = verify_singular_hadamard_not_nmds(make_field(4), 8, ScanScope::sampled(2000, 5));
    CHECK(sampled.passed());
    CHECK(sampled.scanned == 2000);
    CHECK_ERRC(verify_singular_hadamard_not_nmds(make_field(4), 8, ScanScope::exhaustive()), Errc::budget_exceeded);
    CHECK_ERRC(verify_singular_hadamard_not_nmds(make_field(6), 4, ScanScope::exhaustive()), Errc::budget_exceeded);
    CHECK_ERRC(verify_singular_hadamard_not_nmds(make_field(4), 2, ScanScope::exhaustive()), Errc::invalid_argument);

    // Nonsingular Hadamard NMDS matrices do exist, so the scan is not vacuous.
    const auto f = make_field(4);
    CHECK(is_nmds(hadamard(f, std::vector<Elem>{0, 1, 2, 4})).holds);
}

TEST_CASE("Type-II scans with two-element blocks find NMDS matrices") {
    // The generic argument needs three rows of the lower half, which only exist
    // once the block order is at least 4. With 2x2 blocks NMDS matrices occur,
    // and the oracle confirms each reported generator.
    const auto f = make_field(3);
    const auto o = oracle_of(*f);
    const auto rep = verify_type2_even_not_nmds(f, 2, ScanScope::exhaustive());
    CHECK_FALSE(rep.passed());
    CHECK(rep.stat("mds_found") == 0);
    std::uint64_t oracle_hits = 0;
    for (Elem a = 0; a < 8; ++a)
        for (Elem b = 0; b < 8; ++b) {
            if (a == b)
                continue;
            oracle_hits += oracle::is_nmds(o, to_oracle(type2(f, std::vector<Elem>{a, b})));
        }
    CHECK(rep.counterexamples.size() == oracle_hits);
    CHECK(oracle_hits == 36);
    for (const auto& row : rep.counterexamples)
        CHECK(oracle::is_nmds(o, to_oracle(type2(f, row))));
}

TEST_CASE("Type-II scans with four-element blocks find neither NMDS nor MDS") {
    for (unsigned r : {2u, 3u, 4u}) {
        const auto rep = verify_type2_even_not_nmds(make_field(r), 4, ScanScope::sampled(3000, r));
        CAPTURE(r);
        CHECK(rep.passed());
        CHECK(rep.stat("nmds_found") == 0);
        CHECK(rep.stat("mds_found") == 0);
    }
    const auto full = verify_type2_even_not_nmds(make_field(2), 4, ScanScope::exhaustive());
    CHECK(full.passed());
    CHECK(full.scanned == 256);
}

TEST_CASE("odd Type-II control") {
    const auto f = make_field(4, 0x13);
    const Elem alpha = 2;
    const Matrix m = type2(f, std::vector<Elem>{1, alpha, alpha});
    CHECK(is_nmds(m).holds);
    CHECK(oracle::is_nmds(oracle_of(*f), to_oracle(m)));

    const auto rep = verify_type2_even_not_nmds(f, 3, ScanScope::exhaustive());
    CHECK(rep.passed());
    CHECK(rep.stat("nmds_found") > 0);
    CHECK_ERRC(verify_type2_even_not_nmds(f, 1, ScanScope::exhaustive()), Errc::invalid_argument);
    CHECK_ERRC(verify_type2_even_not_nmds(make_field(6), 3, ScanScope::exhaustive()), Errc::budget_exceeded);
}

TEST_CASE("exactly two orthogonal Type-I NMDS matrices of order 4") {
    for (unsigned r = 2; r <= 8; ++r) {
        const auto f = make_field(r);
        const auto found = find_orthogonal_type1_nmds4(f);
        const auto expected = expected_orthogonal_type1_nmds4(f);
        CAPTURE(r);
        REQUIRE(found.size() == 2);
        CHECK(found[0] == expected[0]);
        CHECK(found[1] == expected[1]);
        for (const auto& m : found) {
            CHECK(is_orthogonal(m));
            CHECK(oracle::is_nmds(oracle_of(*f), to_oracle(m)));
        }
        CHECK(verify_orthogonal_type1_exactly_two(f).passed());
    }
    const auto f = make_field(2);
    CHECK(to_oracle(expected_orthogonal_type1_nmds4(f)[0]) ==
          oracle::Mat{{0, 1, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}, {1, 0, 1, 1}});
    CHECK_ERRC(find_orthogonal_type1_nmds4(make_field(13)), Errc::budget_exceeded);
}

TEST_CASE("orthogonal scan agrees with a brute scan over the oracle") {
    const auto f = make_field(3);
    const auto o = oracle_of(*f);
    std::size_t hits = 0;
    for (Elem a = 0; a < 8; ++a)
        for (Elem a1 = 0; a1 < 8; ++a1)
            for (Elem a2 = 0; a2 < 8; ++a2) {
                const auto m = to_oracle(type1(f, a, std::vector<Elem>{1, a1, a2}, Type1Domain::relaxed));
                oracle::Mat mt(4, std::vector<Elem>(4));
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j)
                        mt[i][j] = m[j][i];
                const auto prod = oracle::matmul(o, m, mt);
                bool orth = true;
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j)
                        orth = orth && prod[i][j] == (i == j ? 1u : 0u);
                hits += orth && oracle::is_nmds(o, m);
            }
    CHECK(hits == 2);
}

TEST_CASE("exclusion-set audit for one pair") {
    const auto f = make_field(4);
    CHECK_ERRC(t_set_audit(*f, 3, 3), Errc::degenerate_input);
    CHECK_ERRC(t_set_audit(*f, 0, 3), Errc::degenerate_input);
    CHECK_ERRC(t_set_audit(*f, 3, 0), Errc::degenerate_input);

    const auto roots = f->cube_roots_of_unity();
    REQUIRE(roots.size() == 3);
    const Elem a = 5, x = roots[1];
    const auto omega = t_set_audit(*f, a, f->mul(a, x));
    CHECK(omega.omega_b);
    CHECK(omega.passed());
    CHECK(omega.entries.size() == 13);
    std::size_t fours = 0;
    for (const auto& e : omega.entries) {
        CHECK(e.special_c_set == std::vector<Elem>{f->mul(a, f->square(x))});
        if (e.t_cardinality == 4) {
            ++fours;
            CHECK(e.c == f->mul(a, f->square(x)));
            CHECK(e.branch == TBranch::omega_b_special_c);
        }
    }
    CHECK(fours == 1);

    Elem b = 1;
    while (b == a || f->pow(f->div(b, a), 3) == 1)
        ++b;
    const auto generic = t_set_audit(*f, a, b);
    CHECK_FALSE(generic.omega_b);
    CHECK(generic.passed());
    std::size_t sevens = 0;
    for (const auto& e : generic.entries)
        sevens += e.t_cardinality == 7;
    CHECK(sevens == 4);
    CHECK(generic.entries.front().special_c_set.size() == 4);
}

TEST_CASE("exclusion-set sizes match a brute count of admissible d") {
    const auto f = make_field(4);
    for (Elem a = 1; a < 16; ++a)
        for (Elem b = 1; b < 16; ++b) {
            if (a == b)
                continue;
            const auto audit = t_set_audit(*f, a, b);
            for (const auto& e : audit.entries) {
                std::uint32_t brute = 0;
                for (Elem d = 0; d < 16; ++d)
                    brute += fast_hadamard4_mds(*f, a, b, e.c, d);
                REQUIRE(brute == 16 - e.t_cardinality);
            }
        }
}

TEST_CASE("whole-field exclusion-set audit") {
    for (unsigned r = 2; r <= 6; ++r) {
        const auto s = audit_all_t_sets(make_field(r));
        CAPTURE(r);
        CHECK(s.passed());
        CHECK(s.total_admissible_d == s.theorem_total);
        CHECK(s.violation_count == 0);
        for (unsigned k = 0; k <= 8; ++k)
            if (k != 4 && k != 7 && k != 8)
                CHECK(s.cardinality_counts[k] == 0);
        const std::uint64_t q = std::uint64_t{1} << r;
        CHECK(s.pairs == (q - 1) * (q - 2));
        // |T| = 4 happens exactly for the collapsed special value of each omega pair.
        const std::uint64_t omega_pairs = r % 2 == 0 ? 2 * (q - 1) : 0;
        CHECK(s.cardinality_counts[4] == omega_pairs);
    }
    CHECK_ERRC(audit_all_t_sets(make_field(9)), Errc::budget_exceeded);
}

TEST_CASE("2x2 formula arbitration report") {
    const auto rep = verify_two_by_two_formula(make_field(3));
    CHECK(rep.passed());
    CHECK(rep.stat("brute_mds") == 2058);
    CHECK(rep.stat("formula_mds_q_minus_3") == 1715);
    CHECK(rep.stat("brute_involutory_mds") == 42);
    REQUIRE(rep.notes.size() == 1);
    CHECK(rep.notes[0].find("1715") != std::string::npos);
}

TEST_CASE("claim registry") {
    for (ClaimId id : all_claims())
        CHECK(parse_claim(claim_name(id)) == id);
    CHECK_ERRC(parse_claim("riemann"), Errc::parse_error);

    const auto f = make_field(3);
    std::set<std::string> failing;
    for (ClaimId id : all_claims())
        for (const auto& rep : run_claim(id, f))
            if (!rep.passed())
                failing.insert(rep.claim + "/" + rep.scope_note);
    CHECK(failing == std::set<std::string>{"type2_even_not_nmds/TypeII(Circ(row)) with 2x2 blocks, exhaustive"});
}

TEST_CASE("sampled scans are reproducible") {
    const auto f = make_field(6);
    const auto a = verify_adjugate_identity(f, 8, ScanScope::sampled(50, 77));
    const auto b = verify_adjugate_identity(f, 8, ScanScope::sampled(50, 77));
    CHECK(a.stat("singular_rows") == b.stat("singular_rows"));
    const auto c = verify_type2_even_not_nmds(f, 3, ScanScope::sampled(500, 3));
    const auto d = verify_type2_even_not_nmds(f, 3, ScanScope::sampled(500, 3));
    CHECK(c.stats == d.stats);
}
