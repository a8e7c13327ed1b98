#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>

#include "oracles.hpp"
#include "syncodes/errors.hpp"
#include "syncodes/field_arith.hpp"

using namespace syncodes;

TEST_CASE("prime_after examples") {
    CHECK(prime_after(1) == 2);
    CHECK(prime_after(8) == 11);
    CHECK(prime_after(2048) == 2053);
    CHECK(prime_after(2) == 3);
}

TEST_CASE("prime_after agrees with trial division and leaves no gap prime") {
    for (std::uint64_t x = 1; x <= 5000; ++x) {
        const auto p = prime_after(x);
        REQUIRE(p == oracle::prime_after(x));
        for (std::uint64_t m = x + 1; m < p; ++m) REQUIRE_FALSE(oracle::is_prime(m));
    }
}

TEST_CASE("is_prime on small and large inputs") {
    for (std::uint64_t x = 0; x <= 20000; ++x) REQUIRE(is_prime(x) == oracle::is_prime(x));
    CHECK(is_prime(2305843009213693951ull));   // 2^61 - 1
    CHECK_FALSE(is_prime(3215031751ull));      // strong pseudoprime to bases 2, 3, 5, 7
    CHECK_FALSE(is_prime(18446744073709551615ull));
}

TEST_CASE("prime field axioms, exhaustive for Q <= 13") {
    for (std::uint64_t Q : {2, 3, 5, 7, 11, 13}) {
        const PrimeField F(Q);
        for (Elem a = 0; a < Q; ++a) {
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (Elem b = 0; b < Q; ++b) {
                REQUIRE(F.mul(a, b) == F.mul(b, a));
                REQUIRE(F.mul(a, b) == (a * b) % Q);
                REQUIRE(F.sub(F.add(a, b), b) == a);
                for (Elem c = 0; c < Q; ++c) REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
    }
    CHECK_THROWS_AS(PrimeField(12), InvalidInput);
}

TEST_CASE("prime field with a 61-bit modulus") {
    const PrimeField F(2305843009213693951ull);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Elem a = rng() % F.modulus();
        if (a == 0) continue;
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.pow(a, F.modulus() - 1) == 1);
    }
}

namespace {

// Carry-less product reduced by long division; independent of the library's shift loop.
Elem slow_mul(Elem a, Elem b, std::uint64_t poly, unsigned l) {
    u128 acc = 0;
    for (unsigned i = 0; i < 64; ++i)
        if ((b >> i) & 1) acc ^= static_cast<u128>(a) << i;
    for (int bit = 127; bit >= static_cast<int>(l); --bit)
        if ((acc >> bit) & 1) acc ^= static_cast<u128>(poly) << (bit - l);
    return static_cast<Elem>(acc);
}

}  // namespace

TEST_CASE("binary field axioms, exhaustive for l <= 4") {
    for (unsigned l = 1; l <= 4; ++l) {
        const BinaryField F(l);
        for (Elem a = 0; a < F.order(); ++a) {
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (Elem b = 0; b < F.order(); ++b) {
                REQUIRE(F.mul(a, b) == F.mul(b, a));
                REQUIRE(F.mul(a, b) == slow_mul(a, b, F.reduction(), l));
                for (Elem c = 0; c < F.order(); ++c) REQUIRE(F.mul(a, b ^ c) == (F.mul(a, b) ^ F.mul(a, c)));
            }
        }
    }
}

TEST_CASE("reduction polynomials are the fixed lowest-weight table") {
    const std::array<std::uint64_t, 32> expected = {
        0x3,       0x7,       0xb,        0x13,       0x25,       0x43,       0x83,        0x11b,
        0x203,     0x409,     0x805,      0x1009,     0x201b,     0x4021,     0x8003,      0x1002b,
        0x20009,   0x40009,   0x80027,    0x100009,   0x200005,   0x400003,   0x800021,    0x100001b,
        0x2000009, 0x400001b, 0x8000027,  0x10000003, 0x20000005, 0x40000003, 0x80000009,  0x10000008d};
    for (unsigned l = 1; l <= 32; ++l) CHECK(reduction_polynomial(l) == expected[l - 1]);
    CHECK_THROWS_AS(reduction_polynomial(0), InvalidInput);
    CHECK_THROWS_AS(reduction_polynomial(33), InvalidInput);
}

TEST_CASE("irreducibility: no nonzero zero divisors for l <= 12") {
    for (unsigned l = 5; l <= 12; ++l) {
        const BinaryField F(l);
        for (Elem a = 1; a < F.order(); ++a) REQUIRE(F.mul(a, F.inv(a)) == 1);
    }
}

TEST_CASE("generator has full multiplicative order") {
    for (unsigned l = 1; l <= 12; ++l) {
        const BinaryField F(l);
        Elem x = 1;
        std::uint64_t order = 0;
        do {
            x = F.mul(x, F.generator());
            ++order;
        } while (x != 1);
        REQUIRE(order == F.order() - 1);
    }
    for (unsigned l : {16u, 24u, 32u}) {
        const BinaryField F(l);
        CHECK(F.pow(F.generator(), F.order() - 1) == 1);
        CHECK(F.pow(F.generator(), (F.order() - 1) / 3) != 1);
        CHECK(F.pow(F.generator(), (F.order() - 1) / 5) != 1);
    }
}

TEST_CASE("binary field at l = 32 matches the slow multiplier") {
    const BinaryField F(32);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const Elem a = rng() & 0xffffffffu, b = rng() & 0xffffffffu;
        REQUIRE(F.mul(a, b) == slow_mul(a, b, F.reduction(), 32));
        if (a != 0) REQUIRE(F.mul(a, F.inv(a)) == 1);
    }
}

TEST_CASE("poly_eval examples") {
    const PrimeField F(5);
    CHECK(poly_eval(F, Poly{{0, 1}}, 2) == 2);
    CHECK(poly_eval(F, Poly{{0, 4, 1}}, 2) == 2);
    for (Elem a = 0; a < 5; ++a) CHECK(poly_eval(F, Poly{{0, 0, 0}}, a) == 0);
}

TEST_CASE("bf_interpolate") {
    const BinaryField F(3);
    SUBCASE("single point gives a constant") {
        const std::array<std::pair<Elem, Elem>, 1> pts{{{0, 5}}};
        CHECK(bf_interpolate(F, pts) == Poly{{5}});
    }
    SUBCASE("evaluate then interpolate recovers a degree-2 polynomial") {
        const Poly p{{3, 6, 1}};
        std::vector<std::pair<Elem, Elem>> pts;
        for (Elem loc : {1, 4, 7}) pts.push_back({loc, poly_eval(F, p, loc)});
        CHECK(bf_interpolate(F, pts) == p);
    }
    SUBCASE("linear interpolant re-evaluates to its inputs") {
        const std::array<std::pair<Elem, Elem>, 2> pts{{{1, 1}, {2, 2}}};
        const Poly p = bf_interpolate(F, pts);
        CHECK(p.coeffs.size() == 2);
        for (auto [loc, val] : pts) CHECK(poly_eval(F, p, loc) == val);
    }
    SUBCASE("duplicate locations are rejected") {
        const std::array<std::pair<Elem, Elem>, 2> pts{{{3, 1}, {3, 2}}};
        CHECK_THROWS_AS(bf_interpolate(F, pts), InvalidInput);
    }
    SUBCASE("random round trips at l = 8") {
        const BinaryField G(8);
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            Poly p;
            for (int j = 0; j < 6; ++j) p.coeffs.push_back(rng() & 0xff);
            std::vector<std::pair<Elem, Elem>> pts;
            for (Elem loc = 10; loc < 16; ++loc) pts.push_back({loc, poly_eval(G, p, loc)});
            REQUIRE(bf_interpolate(G, pts) == p);
        }
    }
}
