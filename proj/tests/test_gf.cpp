#include "doctest.h"
#include "eacode/error.hpp"
#include "eacode/gf.hpp"
#include "oracles.hpp"

using namespace eacode;

TEST_CASE("field construction") {
    auto f7 = Field::make(7);
    CHECK(f7.p() == 7);
    CHECK(f7.m() == 1);

    auto f8 = Field::make(8);
    CHECK(f8.p() == 2);
    CHECK(f8.m() == 3);
    CHECK(f8.modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});

    CHECK_THROWS_AS(Field::make(6), Error);
    try {
        Field::make(6);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPrimePower);
    }
    CHECK_THROWS_AS(Field::make(1), Error);
    CHECK_THROWS_AS(Field::make(0), Error);
}

TEST_CASE("canonical modulus is the first irreducible in lex order") {
    for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 125u}) {
        auto f = Field::make(q);
        auto mod = f.modulus();
        CHECK(oracle::brute_irreducible(mod, f.p()));
        // Nothing earlier in the enumeration order is irreducible.
        for (auto& cand : oracle::monic_polys(f.p(), f.m())) {
            if (cand == mod) break;
            CHECK_FALSE(oracle::brute_irreducible(cand, f.p()));
        }
    }
}

TEST_CASE("small field examples") {
    auto f7 = Field::make(7);
    CHECK(f7.mul(3, 5) == 1);
    CHECK(f7.inv(3) == 5);
    auto f8 = Field::make(8);
    CHECK(f8.inv(0b010) == 0b101);
    CHECK(oracle::brute_inv(f8, 0b010) == 0b101);
    CHECK_THROWS_AS(f7.inv(0), Error);
}

TEST_CASE("field axioms for every q up to 64") {
    for (std::uint32_t q = 2; q <= 64; ++q) {
        auto [p, m] = prime_power_decompose(q);
        if (p == 0) continue;
        auto f = Field::make(q);
        for (Elem a = 0; a < q; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.mul(a, 1) == a);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.inv(a) == oracle::brute_inv(f, a));
            }
            for (Elem b = 0; b < q; ++b) {
                REQUIRE(f.add(a, b) == f.add(b, a));
                REQUIRE(f.mul(a, b) == f.mul(b, a));
                for (Elem c = 0; c < q; c += (q > 16 ? 7 : 1)) {
                    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        // Nonzero elements form a cyclic group of order q - 1.
        Elem g = f.primitive();
        Elem x = 1;
        for (std::uint32_t k = 1; k < q - 1; ++k) {
            x = f.mul(x, g);
            REQUIRE(x != 1);
        }
        CHECK(f.mul(x, g) == 1);
    }
}

TEST_CASE("prime power helpers") {
    CHECK(prime_power_decompose(64) == std::pair<std::uint32_t, std::uint32_t>{2, 6});
    CHECK(prime_power_decompose(12).first == 0);
    CHECK(next_prime_power(14) == 16);
    CHECK(next_prime_power(17) == 17);
    CHECK(next_prime_power(24) == 25);
    CHECK_THROWS_AS(Field::make(1u << 17), Error);
}
