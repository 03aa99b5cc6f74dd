#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linfield/linpoly.hpp"

#include <random>
#include <set>
#include <vector>

using namespace linfield;

namespace {

LinearizedPoly poly_of_codes(const FieldSpec& f, const std::vector<u64>& codes) {
    std::vector<FieldElement> cs;
    for (u64 c : codes)
        cs.push_back(decode(f, c));
    return make_linearized(f, std::move(cs));
}

// trinomial x^(q^d) - b x^q - a x
LinearizedPoly trinomial(const FieldSpec& f, unsigned d, u64 a_code, u64 b_code) {
    std::vector<FieldElement> cs(d + 1, zero(f));
    cs[0] = neg(f, decode(f, a_code));
    cs[1] = neg(f, decode(f, b_code));
    cs[d] = one(f);
    return make_linearized(f, std::move(cs));
}

LinearizedPoly random_poly(const FieldSpec& f, unsigned d, std::mt19937_64& rng) {
    std::vector<FieldElement> cs;
    for (unsigned i = 0; i < d; ++i)
        cs.push_back(decode(f, rng() % f.order));
    cs.push_back(decode(f, 1 + rng() % (f.order - 1)));
    return make_linearized(f, std::move(cs));
}

// root count by evaluating everywhere; only for small fields
u64 count_roots(const LinearizedPoly& L) {
    u64 roots = 0;
    for (const FieldElement& x : elements(L.field))
        if (evaluate(L, x).is_zero())
            ++roots;
    return roots;
}

u64 upow(u64 b, unsigned e) {
    u64 r = 1;
    while (e--)
        r *= b;
    return r;
}

std::vector<FieldElement> base_field_elements(const FieldSpec& f) {
    std::vector<FieldElement> out;
    for (const FieldElement& x : elements(f))
        if (in_base_field(f, x))
            out.push_back(x);
    return out;
}

} // namespace

TEST_CASE("make_linearized validates") {
    FieldSpec f = make_field(2, 1, 3);
    CHECK_THROWS_AS(make_linearized(f, {one(f)}), out_of_range_error); // d = 0
    CHECK_THROWS_AS(make_linearized(f, {one(f), zero(f)}), out_of_range_error);
    FieldSpec f9 = make_field(3, 1, 2);
    CHECK_THROWS_AS(make_linearized(f, {one(f), one(f9)}), field_mismatch_error);
    LinearizedPoly L = poly_of_codes(f, {1, 0, 1});
    CHECK(L.d() == 2);
}

TEST_CASE("monic scaling changes nothing that matters") {
    std::mt19937_64 rng(0x10C);
    FieldSpec f = make_field(3, 1, 3);
    for (int it = 0; it < 100; ++it) {
        LinearizedPoly L = random_poly(f, 1 + rng() % 3, rng);
        LinearizedPoly M = monic(L);
        CHECK(is_monic(M));
        CHECK(nullity_fast(M) == nullity_fast(L));
        CHECK(count_roots(M) == count_roots(L));
        // scaling by any nonzero constant is also invisible to the nullity
        FieldElement c = decode(f, 1 + rng() % (f.order - 1));
        std::vector<FieldElement> scaled;
        for (const auto& a : L.coeffs)
            scaled.push_back(mul(f, c, a));
        CHECK(nullity_fast(make_linearized(f, scaled)) == nullity_fast(L));
    }
}

TEST_CASE("evaluate is GF(q)-linear") {
    std::mt19937_64 rng(0xE7A1);
    FieldSpec f = make_field(2, 2, 3); // q = 4: exercises q != p
    auto base = base_field_elements(f);
    REQUIRE(base.size() == 4);
    for (int it = 0; it < 200; ++it) {
        LinearizedPoly L = random_poly(f, 1 + rng() % 3, rng);
        FieldElement x = decode(f, rng() % f.order), y = decode(f, rng() % f.order);
        CHECK(evaluate(L, add(f, x, y)) == add(f, evaluate(L, x), evaluate(L, y)));
        for (const FieldElement& c : base)
            CHECK(evaluate(L, mul(f, c, x)) == mul(f, c, evaluate(L, x)));
    }
}

TEST_CASE("companion matrix layout") {
    FieldSpec f = make_field(2, 1, 3);
    std::mt19937_64 rng(0xC0);
    for (int it = 0; it < 50; ++it) {
        LinearizedPoly L = random_poly(f, 3, rng);
        LinearizedPoly M = monic(L);
        FieldMatrix C = companion_matrix(L);
        REQUIRE(C.rows == 3);
        REQUIRE(C.cols == 3);
        for (unsigned i = 0; i < 3; ++i)
            CHECK(C.at(i, 2) == neg(f, M.coeffs[i])); // b_i column
        CHECK(C.at(1, 0) == one(f));
        CHECK(C.at(2, 1) == one(f));
        CHECK(C.at(0, 0) == zero(f));
        CHECK(C.at(0, 1) == zero(f));
        CHECK(C.at(1, 1) == zero(f));
        CHECK(C.at(2, 0) == zero(f));
    }
}

TEST_CASE("twisted product composes one frobenius step at a time") {
    FieldSpec f = make_field(3, 1, 3);
    std::mt19937_64 rng(0x77);
    for (int it = 0; it < 30; ++it) {
        LinearizedPoly L = random_poly(f, 2, rng);
        FieldMatrix C = companion_matrix(L);
        CHECK(twisted_companion_product(L, 1) == C);
        FieldMatrix A = C;
        for (unsigned k = 2; k <= 7; ++k) {
            A = mat_mul(A, frobenius_entries(C, k - 1));
            CHECK(twisted_companion_product(L, k) == A);
        }
    }
    CHECK_THROWS_AS(twisted_companion_product(poly_of_codes(f, {1, 1}), 0), out_of_range_error);
}

TEST_CASE("identity criterion matches full nullity") {
    std::mt19937_64 rng(0x1D);
    for (auto [p, s, n] : {std::tuple<u64, unsigned, unsigned>{2, 1, 3}, {3, 1, 2}, {2, 2, 2}}) {
        FieldSpec f = make_field(p, s, n);
        for (int it = 0; it < 150; ++it) {
            LinearizedPoly L = random_poly(f, 1 + rng() % 3, rng);
            bool splits = nullity_fast(L) == L.d();
            CHECK(is_identity(twisted_companion_product(L, f.n)) == splits);
        }
    }
}

TEST_CASE("fast nullity equals brute force on every trinomial of small fields") {
    for (auto [p, s, n, d] : {std::tuple<u64, unsigned, unsigned, unsigned>{2, 1, 3, 2},
                              {2, 1, 4, 2},
                              {3, 1, 2, 2},
                              {2, 1, 4, 3},
                              {2, 2, 2, 2}}) {
        FieldSpec f = make_field(p, s, n);
        for (u64 a = 0; a < f.order; ++a)
            for (u64 b = 0; b < f.order; ++b) {
                LinearizedPoly L = trinomial(f, d, a, b);
                unsigned fast = nullity_fast(L);
                CHECK(fast == nullity_bruteforce(L));
                CHECK(count_roots(L) == upow(f.q, fast));
            }
    }
}

TEST_CASE("fast nullity equals brute force on random general polynomials") {
    std::mt19937_64 rng(0xBEE);
    for (auto [p, s, n] : {std::tuple<u64, unsigned, unsigned>{2, 1, 6},
                           {3, 1, 4},
                           {2, 2, 3},
                           {5, 1, 3},
                           {7, 1, 2}}) {
        FieldSpec f = make_field(p, s, n);
        for (int it = 0; it < 120; ++it) {
            LinearizedPoly L = random_poly(f, 1 + rng() % 4, rng);
            unsigned fast = nullity_fast(L);
            CHECK(fast == nullity_bruteforce(L));
            CHECK(count_roots(L) == upow(f.q, fast));
        }
    }
}

TEST_CASE("x^q - x has the base field as kernel") {
    FieldSpec f = make_field(2, 2, 3);
    LinearizedPoly L = make_linearized(f, {neg(f, one(f)), one(f)});
    CHECK(nullity_fast(L) == 1);
    CHECK(count_roots(L) == f.q);
    auto basis = kernel_basis(L);
    REQUIRE(basis.size() == 1);
    CHECK(in_base_field(f, basis[0]));
    CHECK_FALSE(basis[0].is_zero());
}

TEST_CASE("pinned full-nullity example: x^8 + x^2 + x over GF(2^7)") {
    FieldSpec f = make_field(2, 1, 7);
    LinearizedPoly L = poly_of_codes(f, {1, 1, 0, 1});
    CHECK(nullity_fast(L) == 3);
    CHECK(is_identity(twisted_companion_product(L, 7)));
    CHECK(count_roots(L) == 8);
    CHECK(kernel_basis(L).size() == 3);
}

TEST_CASE("kernel basis spans exactly the root space") {
    std::mt19937_64 rng(0x5BA5);
    for (auto [p, s, n] : {std::tuple<u64, unsigned, unsigned>{2, 1, 4},
                           {3, 1, 3},
                           {2, 2, 2},
                           {2, 1, 6}}) {
        FieldSpec f = make_field(p, s, n);
        auto base = base_field_elements(f);
        REQUIRE(base.size() == f.q);
        for (int it = 0; it < 60; ++it) {
            LinearizedPoly L = random_poly(f, 1 + rng() % 3, rng);
            auto basis = kernel_basis(L);
            unsigned k = nullity_fast(L);
            REQUIRE(basis.size() == k);
            for (const auto& v : basis)
                CHECK(evaluate(L, v).is_zero());
            if (upow(f.q, k) <= 4096) {
                // every GF(q)-combination is a distinct root
                std::set<u64> span;
                for (u64 tick = 0; tick < upow(f.q, k); ++tick) {
                    u64 rest = tick;
                    FieldElement v = zero(f);
                    for (unsigned i = 0; i < k; ++i) {
                        v = add(f, v, mul(f, base[rest % f.q], basis[i]));
                        rest /= f.q;
                    }
                    CHECK(evaluate(L, v).is_zero());
                    span.insert(encode(f, v));
                }
                CHECK(span.size() == upow(f.q, k));
                CHECK(span.size() == count_roots(L));
            }
        }
    }
}

TEST_CASE("recurrence base cases and the trinomial zero window") {
    FieldSpec f = make_field(2, 1, 9);
    std::mt19937_64 rng(0x33);
    unsigned d = 4;
    for (int it = 0; it < 40; ++it) {
        LinearizedPoly L = trinomial(f, d, 1 + rng() % (f.order - 1), rng() % f.order);
        for (unsigned l = 1; l <= d; ++l) {
            long long lo = static_cast<long long>(l) - d;
            for (long long k = lo; k <= 0; ++k) {
                FieldElement v = product_entry_recurrence(L, l, k);
                CHECK(v == (k == lo ? one(f) : zero(f)));
            }
        }
        // M_{1,1} is the monic constant coefficient (= a here)
        FieldElement a = neg(f, L.coeffs[0]);
        CHECK(product_entry_recurrence(L, 1, 1) == a);
        // only two lowered coefficients: nothing can land on 2..d-1
        for (long long k = 2; k < d; ++k)
            CHECK(product_entry_recurrence(L, 1, k) == zero(f));
    }
}

TEST_CASE("recurrence closed form for the pure-power trinomial") {
    FieldSpec f = make_field(2, 1, 9);
    std::mt19937_64 rng(0x44);
    unsigned d = 4;
    for (int it = 0; it < 25; ++it) {
        u64 ac = 1 + rng() % (f.order - 1);
        LinearizedPoly L = trinomial(f, d, ac, 0); // b = 0
        FieldElement a = decode(f, ac);
        bigint E = 1; // grows to 1 + q^d + ... + q^(id)
        for (unsigned i = 1; i <= 3; ++i) {
            E += boost::multiprecision::pow(bigint(f.q), i * d);
            CHECK(product_entry_recurrence(L, 1, static_cast<long long>(i) * d + 1) ==
                  pow(f, a, E));
        }
    }
}

TEST_CASE("recurrence reproduces every twisted product entry") {
    std::mt19937_64 rng(0xCA15);
    for (auto [p, s, n] : {std::tuple<u64, unsigned, unsigned>{2, 1, 5}, {3, 1, 3}, {2, 2, 2}}) {
        FieldSpec f = make_field(p, s, n);
        for (int it = 0; it < 40; ++it) {
            unsigned d = 2 + rng() % 3;
            LinearizedPoly L = rng() % 2 ? trinomial(f, d, rng() % f.order, rng() % f.order)
                                         : random_poly(f, d, rng);
            unsigned k = 1 + rng() % (2 * f.n + 3);
            FieldMatrix A = twisted_companion_product(L, k);
            for (unsigned l = 1; l <= d; ++l)
                for (unsigned j = 1; j <= d; ++j)
                    CHECK(product_entry_via_recurrence(L, l, j, k) == A.at(l - 1, j - 1));
        }
    }
}

TEST_CASE("first-column recurrence detects complete splitting") {
    std::mt19937_64 rng(0xF00);
    FieldSpec f = make_field(2, 1, 6);
    for (int it = 0; it < 120; ++it) {
        unsigned d = 2 + rng() % 2;
        LinearizedPoly L = random_poly(f, d, rng);
        bool identity = true;
        for (unsigned l = 1; l <= d && identity; ++l)
            for (unsigned j = 1; j <= d && identity; ++j) {
                FieldElement want = l == j ? one(f) : zero(f);
                identity = product_entry_via_recurrence(L, l, j, f.n) == want;
            }
        CHECK(identity == (nullity_fast(L) == d));
    }
}

TEST_CASE("recurrence argument validation") {
    FieldSpec f = make_field(2, 1, 3);
    LinearizedPoly L = poly_of_codes(f, {1, 1, 1});
    CHECK_THROWS_AS(product_entry_recurrence(L, 0, 1), out_of_range_error);
    CHECK_THROWS_AS(product_entry_recurrence(L, 3, 1), out_of_range_error);
    CHECK_THROWS_AS(product_entry_recurrence(L, 1, -5), out_of_range_error);
    CHECK_THROWS_AS(product_entry_via_recurrence(L, 1, 1, 0), out_of_range_error);
    CHECK_THROWS_AS(product_entry_via_recurrence(L, 1, 3, 1), out_of_range_error);
}

TEST_CASE("matrix rank on hand-built cases") {
    FieldSpec f = make_field(2, 1, 3);
    FieldMatrix I = identity_matrix(f, 3);
    CHECK(matrix_rank(I) == 3);
    CHECK(is_identity(I));
    FieldMatrix Z = I;
    for (auto& e : Z.a)
        e = zero(f);
    CHECK(matrix_rank(Z) == 0);
    CHECK(matrix_rank(mat_sub(I, I)) == 0);
    // rank-1: every row equal
    FieldMatrix R = Z;
    for (unsigned c = 0; c < 3; ++c)
        for (unsigned r = 0; r < 3; ++r)
            R.at(r, c) = decode(f, c + 1);
    CHECK(matrix_rank(R) == 1);
}
