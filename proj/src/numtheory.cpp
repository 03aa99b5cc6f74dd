#include "linfield/numtheory.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

namespace linfield {

namespace {

void check_power_poly(const SignedPowerPoly& a, const char* who) {
    if (a.k < 1)
        throw out_of_range_error(std::string(who) + ": exponent must be >= 1");
    if (a.sign != 1 && a.sign != -1)
        throw out_of_range_error(std::string(who) + ": sign must be +1 or -1");
}

// --- integer polynomial helpers for the gcd oracle (little-endian) ---

using IPoly = std::vector<long long>;

int ideg(const IPoly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<size_t>(i)])
            return i;
    return -1;
}

// remainder of a by b where b's leading coefficient is +1 or -1
IPoly irem(IPoly a, const IPoly& b) {
    int db = ideg(b);
    long long lead = b[static_cast<size_t>(db)];
    for (int i = ideg(a); i >= db; i = ideg(a)) {
        long long c = a[static_cast<size_t>(i)] * lead; // lead^2 = 1, so this divides
        a[static_cast<size_t>(i)] = 0;
        for (int j = 0; j < db; ++j) {
            a[static_cast<size_t>(i - db + j)] -= c * b[static_cast<size_t>(j)];
            if (std::llabs(a[static_cast<size_t>(i - db + j)]) > (1ll << 40))
                throw invariant_violation_error("gcd oracle: coefficient blow-up");
        }
    }
    return a;
}

} // namespace

GcdResult gcd_power_polys(SignedPowerPoly A, SignedPowerPoly B) {
    check_power_poly(A, "gcd_power_polys");
    check_power_poly(B, "gcd_power_polys");
    unsigned g = std::gcd(A.k, B.k);
    unsigned qa = A.k / g, qb = B.k / g;
    if (A.sign < 0 && B.sign < 0)
        return {false, g, -1};
    if (A.sign > 0 && B.sign > 0)
        return (qa % 2 == 1 && qb % 2 == 1) ? GcdResult{false, g, +1} : GcdResult{true, g, 0};
    // mixed signs: the minus-side quotient must be even, the plus-side odd
    unsigned qminus = A.sign < 0 ? qa : qb;
    unsigned qplus = A.sign < 0 ? qb : qa;
    return (qminus % 2 == 0 && qplus % 2 == 1) ? GcdResult{false, g, +1} : GcdResult{true, g, 0};
}

GcdResult gcd_power_polys_oracle(SignedPowerPoly A, SignedPowerPoly B) {
    check_power_poly(A, "gcd_power_polys_oracle");
    check_power_poly(B, "gcd_power_polys_oracle");
    if (A.k > 512 || B.k > 512)
        throw infeasible_sweep_error("gcd_power_polys_oracle: exponents limited to 512");

    auto build = [](const SignedPowerPoly& s) {
        IPoly f(s.k + 1, 0);
        f[0] = s.sign;
        f[s.k] = 1;
        return f;
    };
    IPoly a = build(A), b = build(B);
    while (ideg(b) >= 0) {
        if (ideg(b) == 0) {
            // nonzero constant: the gcd over Q is 1
            return {true, std::gcd(A.k, B.k), 0};
        }
        IPoly r = irem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    // normalize monic
    int da = ideg(a);
    if (da < 1)
        throw invariant_violation_error("gcd oracle: degenerate gcd");
    if (a[static_cast<size_t>(da)] < 0)
        for (auto& c : a)
            c = -c;
    // the gcd of two such binomials must again be x^g + c, c in {-1, +1}
    long long c0 = a[0];
    bool sparse = (a[static_cast<size_t>(da)] == 1) && (c0 == 1 || c0 == -1);
    for (int i = 1; i < da && sparse; ++i)
        sparse = a[static_cast<size_t>(i)] == 0;
    if (!sparse)
        throw invariant_violation_error("gcd oracle: gcd is not of the form x^g +/- 1");
    return {false, static_cast<unsigned>(da), static_cast<int>(c0)};
}

u64 binom_mod(u64 n, u64 i, u64 p) {
    if (!is_prime_u64(p))
        throw not_prime_error("binom_mod: p is not prime");
    u64 result = 1;
    while (n || i) {
        u64 nd = n % p, id = i % p;
        if (id > nd)
            return 0;
        // C(nd, id) mod p on digits < p, multiplicative formula
        u64 c = 1;
        for (u64 t = 0; t < id; ++t) {
            c = mul_mod(c, (nd - t) % p, p);
            c = mul_mod(c, inv_mod((t + 1) % p, p), p);
        }
        result = mul_mod(result, c, p);
        n /= p;
        i /= p;
    }
    return result;
}

bool all_inner_binoms_zero(u64 n, u64 p) {
    if (n < 1)
        throw out_of_range_error("all_inner_binoms_zero: n must be >= 1");
    for (u64 i = 1; i < n; ++i)
        if (binom_mod(n, i, p) != 0)
            return false;
    return true;
}

bool is_power_of(u64 n, u64 p) {
    if (n < 1 || p < 2)
        return false;
    while (n % p == 0)
        n /= p;
    return n == 1;
}

BoundaryExponents boundary_exponents(u64 q, unsigned d) {
    if (q < 2)
        throw out_of_range_error("boundary_exponents: q must be >= 2");
    if (d < 2)
        throw out_of_range_error("boundary_exponents: d must be >= 2");
    bigint Q = q;
    using boost::multiprecision::pow;
    bigint e1 = (pow(Q, d * d) - 1) / (pow(Q, d) - 1);
    bigint e2 = (pow(Q, (d - 1) * d) - pow(Q, d - 1)) / (pow(Q, d - 1) - 1);

    bigint s1 = 0, s2 = 0;
    for (unsigned i = 0; i < d; ++i)
        s1 += pow(Q, i * d);
    for (unsigned i = 1; i < d; ++i)
        s2 += pow(Q, i * (d - 1));
    if (e1 != s1 || e2 != s2)
        throw invariant_violation_error("boundary_exponents: quotient and power-sum forms disagree");
    return {e1, e2};
}

bool boundary_exponent_divisibility(u64 q, unsigned d) {
    auto [e1, e2] = boundary_exponents(q, d);
    unsigned n = d * (d - 1) + 1;
    bigint Q = q;
    bigint N = (boost::multiprecision::pow(Q, n) - 1) / (Q - 1);
    bigint v = 1 + Q * e1 * e2;
    return v % N == 0;
}

bool exponent_coverage(unsigned d) {
    if (d < 2)
        throw out_of_range_error("exponent_coverage: d must be >= 2");
    u64 n = static_cast<u64>(d) * (d - 1) + 1;
    std::vector<bool> seen(n, false);
    for (u64 i = 0; i < d; ++i)
        for (u64 j = 1; j < d; ++j) {
            u64 v = (i * d + j * (d - 1) + 1) % n;
            if (v == 0 || seen[v])
                return false;
            seen[v] = true;
        }
    // d(d-1) = n-1 distinct nonzero residues: all of {1, ..., n-1}
    return true;
}

bool exponent_lemma_check(u64 q, unsigned d) {
    return boundary_exponent_divisibility(q, d) && exponent_coverage(d);
}

Bezout bezout(const bigint& k, const bigint& l) {
    if (k < 1 || l < 1)
        throw out_of_range_error("bezout: arguments must be >= 1");
    bigint old_r = k, r = l;
    bigint old_x = 1, x = 0;
    bigint old_y = 0, y = 1;
    while (r != 0) {
        bigint qt = old_r / r;
        bigint tmp;
        tmp = old_r - qt * r; old_r = r; r = tmp;
        tmp = old_x - qt * x; old_x = x; x = tmp;
        tmp = old_y - qt * y; old_y = y; y = tmp;
    }
    return {old_x, old_y, old_r};
}

} // namespace linfield
