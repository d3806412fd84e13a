// SPDX-License-Identifier: Apache-2.0
#include <set>

#include "mdsc/field.hpp"
#include "test_util.hpp"

using namespace mdsc;

TEST_CASE("default polynomials are the smallest irreducible of each degree") {
    const std::uint32_t expected[] = {0x7,   0xB,   0x13,   0x25,   0x43,   0x83,   0x11B,  0x203,
                                      0x409, 0x805, 0x1009, 0x201B, 0x4021, 0x8003, 0x1002B};
    for (unsigned r = 2; r <= 16; ++r) {
        CAPTURE(r);
        const std::uint32_t p = default_polynomial(r);
        CHECK(p == expected[r - 2]);
        CHECK(oracle::irreducible_by_products(p));
        for (std::uint32_t smaller = 1u << r; smaller < p; ++smaller)
            CHECK_FALSE(oracle::irreducible_by_products(smaller));
    }
}

TEST_CASE("irreducibility test agrees with the product oracle") {
    for (std::uint64_t p = 2; p < (1u << 11); ++p) {
        CAPTURE(p);
        CHECK(gf2poly::is_irreducible(p) == oracle::irreducible_by_products(p));
    }
}

TEST_CASE("multiplication matches carryless multiply plus long division") {
    for (unsigned r = 2; r <= 8; ++r) {
        const auto f = make_field(r);
        const auto o = oracle_of(*f);
        for (Elem x = 0; x < f->size(); ++x)
            for (Elem y = 0; y < f->size(); ++y)
                REQUIRE(f->mul(x, y) == o.mul(x, y));
    }
    oracle::Rng rng(11);
    for (unsigned r = 9; r <= 16; ++r) {
        const auto f = make_field(r);
        const auto o = oracle_of(*f);
        for (int t = 0; t < 20000; ++t) {
            const Elem x = rng.below(f->size()), y = rng.below(f->size());
            REQUIRE(f->mul(x, y) == o.mul(x, y));
        }
    }
}

TEST_CASE("field axioms on random triples") {
    oracle::Rng rng(12);
    for (unsigned r = 2; r <= 16; ++r) {
        const auto f = make_field(r);
        CAPTURE(r);
        for (int t = 0; t < 3000; ++t) {
            const Elem x = rng.below(f->size()), y = rng.below(f->size()), z = rng.below(f->size());
            REQUIRE(f->mul(f->mul(x, y), z) == f->mul(x, f->mul(y, z)));
            REQUIRE(f->mul(x, y) == f->mul(y, x));
            REQUIRE(f->mul(x, y ^ z) == (f->mul(x, y) ^ f->mul(x, z)));
            REQUIRE(f->mul(x, 1) == x);
            REQUIRE(Field::add(x, x) == 0);
            if (x != 0) {
                REQUIRE(f->mul(x, f->inv(x)) == 1);
                REQUIRE(f->div(f->mul(y, x), x) == y);
            }
            // Frobenius is additive and sqrt inverts it.
            REQUIRE(f->square(x ^ y) == (f->square(x) ^ f->square(y)));
            REQUIRE(f->square(f->sqrt(x)) == x);
            REQUIRE(f->sqrt(f->square(x)) == x);
        }
    }
}

TEST_CASE("generator has full multiplicative order") {
    for (unsigned r = 2; r <= 12; ++r) {
        const auto f = make_field(r);
        std::set<Elem> seen;
        Elem x = 1;
        for (std::uint32_t k = 0; k < f->group_order(); ++k) {
            seen.insert(x);
            x = f->mul(x, f->generator());
        }
        CHECK(x == 1);
        CHECK(seen.size() == f->group_order());
    }
}

TEST_CASE("pow") {
    const auto f = make_field(5);
    const auto o = oracle_of(*f);
    CHECK(f->pow(0, 0) == 1);
    CHECK(f->pow(0, 3) == 0);
    for (Elem x = 0; x < f->size(); ++x) {
        for (std::uint64_t e = 0; e < 70; ++e)
            REQUIRE(f->pow(x, e) == o.pow(x, e));
        if (x != 0)
            CHECK(f->pow(x, f->group_order()) == 1);
    }
}

TEST_CASE("cube roots of unity") {
    for (unsigned r = 2; r <= 16; ++r) {
        const auto f = make_field(r);
        const auto roots = f->cube_roots_of_unity();
        CAPTURE(r);
        CHECK(roots.size() == (r % 2 == 0 ? 3u : 1u));
        CHECK(roots.front() == 1);
        for (Elem x : roots)
            CHECK(f->pow(x, 3) == 1);
        if (r <= 10) {
            std::size_t brute = 0;
            for (Elem x = 1; x < f->size(); ++x)
                brute += f->pow(x, 3) == 1;
            CHECK(brute == roots.size());
        }
    }
}

TEST_CASE("AES field") {
    const auto f = make_field(8, 0x11B);
    CHECK(f->mul(0x57, 0x83) == 0xC1);
    CHECK(f->inv(0x53) == 0xCA);
    CHECK(to_hex(f->poly()) == "0x11B");
}

TEST_CASE("field construction errors") {
    CHECK_ERRC(make_field(1), Errc::invalid_degree);
    CHECK_ERRC(make_field(17), Errc::invalid_degree);
    CHECK_ERRC(make_field(4, 0x25), Errc::degree_mismatch);
    CHECK_ERRC(make_field(4, 0x18), Errc::reducible_polynomial);
    try {
        make_field(4, 0x18);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("degree 1") != std::string::npos);
    }
    CHECK_ERRC(make_field(4, 0x15), Errc::reducible_polynomial); // (x^2 + x + 1)^2
    CHECK_ERRC(make_field(4)->inv(0), Errc::zero_inverse);
}

TEST_CASE("non-default polynomial builds a working field") {
    const auto f = make_field(4, 0x19); // x^4 + x^3 + 1
    const auto o = oracle_of(*f);
    for (Elem x = 0; x < 16; ++x)
        for (Elem y = 0; y < 16; ++y)
            REQUIRE(f->mul(x, y) == o.mul(x, y));
}
