#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linfield/numtheory.hpp"

#include <random>

using namespace linfield;

namespace {

// exact binomial coefficient, arbitrary width
bigint exact_binom(u64 n, u64 i) {
    if (i > n)
        return 0;
    bigint r = 1;
    for (u64 t = 0; t < i; ++t) {
        r *= n - t;
        r /= t + 1;
    }
    return r;
}

} // namespace

TEST_CASE("gcd closed form: pinned examples") {
    CHECK(gcd_power_polys({4, -1}, {6, -1}) == GcdResult{false, 2, -1}); // x^2 - 1
    CHECK(gcd_power_polys({4, +1}, {6, +1}) == GcdResult{true, 2, 0});   // 4/2 even -> 1
    CHECK(gcd_power_polys({2, +1}, {6, +1}) == GcdResult{false, 2, +1}); // both odd
    CHECK(gcd_power_polys({4, -1}, {2, +1}) == GcdResult{false, 2, +1}); // x^2+1 | x^4-1
    CHECK(gcd_power_polys({2, -1}, {2, +1}) == GcdResult{true, 2, 0});
    CHECK(gcd_power_polys({12, -1}, {18, -1}) == GcdResult{false, 6, -1});
    CHECK(gcd_power_polys({1, -1}, {1, -1}) == GcdResult{false, 1, -1});
}

TEST_CASE("gcd closed form equals the Euclidean oracle everywhere") {
    for (unsigned k = 1; k <= 64; ++k)
        for (unsigned l = 1; l <= 64; ++l)
            for (int sa : {-1, +1})
                for (int sb : {-1, +1}) {
                    CAPTURE(k);
                    CAPTURE(l);
                    CAPTURE(sa);
                    CAPTURE(sb);
                    CHECK(gcd_power_polys({k, sa}, {l, sb}) ==
                          gcd_power_polys_oracle({k, sa}, {l, sb}));
                }
}

TEST_CASE("gcd input validation and oracle guard") {
    CHECK_THROWS_AS(gcd_power_polys({0, 1}, {2, 1}), out_of_range_error);
    CHECK_THROWS_AS(gcd_power_polys({2, 0}, {2, 1}), out_of_range_error);
    CHECK_THROWS_AS(gcd_power_polys({2, 2}, {2, 1}), out_of_range_error);
    CHECK_THROWS_AS(gcd_power_polys_oracle({513, 1}, {2, 1}), infeasible_sweep_error);
    // 512 itself still runs
    CHECK(gcd_power_polys_oracle({512, -1}, {512, -1}) == GcdResult{false, 512, -1});
}

TEST_CASE("binomials mod p match exact arithmetic") {
    for (u64 p : {2, 3, 5, 7, 11})
        for (u64 n = 0; n <= 60; ++n)
            for (u64 i = 0; i <= n; ++i)
                CHECK(binom_mod(n, i, p) == u64(exact_binom(n, i) % p));
    // rows far beyond anything Pascal-triangle shaped, small i kept exact
    std::mt19937_64 rng(0x81);
    for (int it = 0; it < 200; ++it) {
        u64 n = rng() % 1000000000, i = rng() % 40;
        for (u64 p : {2, 3, 7})
            CHECK(binom_mod(n, i, p) == u64(exact_binom(n, i) % p));
    }
    CHECK_THROWS_AS(binom_mod(10, 2, 4), not_prime_error);
}

TEST_CASE("inner binomials vanish exactly at powers of p") {
    for (u64 p : {2, 3, 5, 7})
        for (u64 n = 1; n <= 200; ++n) {
            CAPTURE(p);
            CAPTURE(n);
            CHECK(all_inner_binoms_zero(n, p) == is_power_of(n, p));
        }
    CHECK_THROWS_AS(all_inner_binoms_zero(0, 2), out_of_range_error);
}

TEST_CASE("is_power_of edges") {
    CHECK(is_power_of(1, 2));  // p^0
    CHECK(is_power_of(1, 7));
    CHECK(is_power_of(8, 2));
    CHECK_FALSE(is_power_of(6, 2));
    CHECK_FALSE(is_power_of(0, 2));
    CHECK_FALSE(is_power_of(8, 1));
    CHECK(is_power_of(49, 7));
}

TEST_CASE("boundary exponents: pinned values") {
    auto [e1a, e2a] = boundary_exponents(2, 3);
    CHECK(e1a == 73); // 1 + 8 + 64
    CHECK(e2a == 20); // 4 + 16
    auto [e1b, e2b] = boundary_exponents(2, 2);
    CHECK(e1b == 5); // 1 + 4
    CHECK(e2b == 2);
    auto [e1c, e2c] = boundary_exponents(3, 2);
    CHECK(e1c == 10); // 1 + 9
    CHECK(e2c == 3);
    CHECK_THROWS_AS(boundary_exponents(1, 3), out_of_range_error);
    CHECK_THROWS_AS(boundary_exponents(2, 1), out_of_range_error);
}

TEST_CASE("boundary divisibility: pinned factorizations") {
    // q=2 d=3: 1 + 2*73*20 = 2921 = 23 * 127, and (2^7-1)/(2-1) = 127
    {
        auto [e1, e2] = boundary_exponents(2, 3);
        bigint v = 1 + bigint(2) * e1 * e2;
        CHECK(v == 2921);
        CHECK(v % 127 == 0);
        CHECK(boundary_exponent_divisibility(2, 3));
    }
    // q=2 d=2: 1 + 2*5*2 = 21 = 3 * 7, and (2^3-1)/(2-1) = 7
    {
        auto [e1, e2] = boundary_exponents(2, 2);
        bigint v = 1 + bigint(2) * e1 * e2;
        CHECK(v == 21);
        CHECK(v % 7 == 0);
        CHECK(boundary_exponent_divisibility(2, 2));
    }
    // q=3 d=2: 1 + 3*10*3 = 91 = 7 * 13, and (3^3-1)/(3-1) = 13
    {
        auto [e1, e2] = boundary_exponents(3, 2);
        bigint v = 1 + bigint(3) * e1 * e2;
        CHECK(v == 91);
        CHECK(v % 13 == 0);
        CHECK(boundary_exponent_divisibility(3, 2));
    }
}

TEST_CASE("exponent coverage is a bijection onto 1..n-1") {
    for (unsigned d = 2; d <= 12; ++d) {
        CAPTURE(d);
        CHECK(exponent_coverage(d));
    }
    CHECK_THROWS_AS(exponent_coverage(1), out_of_range_error);
}

TEST_CASE("full exponent lemma over a q and d grid") {
    for (u64 q : {2, 3, 4, 5})
        for (unsigned d = 2; d <= 4; ++d) {
            CAPTURE(q);
            CAPTURE(d);
            CHECK(exponent_lemma_check(q, d));
        }
}

TEST_CASE("bezout identity") {
    std::mt19937_64 rng(0xB20);
    for (int it = 0; it < 500; ++it) {
        bigint k = 1 + rng() % 1000000, l = 1 + rng() % 1000000;
        Bezout bz = bezout(k, l);
        CHECK(bz.x * k + bz.y * l == bz.g);
        CHECK(bz.g == boost::multiprecision::gcd(k, l));
        CHECK(k % bz.g == 0);
        CHECK(l % bz.g == 0);
    }
    Bezout big = bezout(boost::multiprecision::pow(bigint(2), 200) - 1,
                        boost::multiprecision::pow(bigint(2), 150) - 1);
    CHECK(big.g == boost::multiprecision::pow(bigint(2), 50) - 1); // gcd(2^a-1, 2^b-1) = 2^gcd-1
    CHECK_THROWS_AS(bezout(0, 5), out_of_range_error);
}
