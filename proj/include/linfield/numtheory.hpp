#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "linfield/errors.hpp"
#include "linfield/modarith.hpp"

namespace linfield {

using bigint = boost::multiprecision::cpp_int;

// ---- gcds of x^k +/- 1 over the integers ----

// x^k + sign with sign in {+1, -1} and k >= 1.
struct SignedPowerPoly {
    unsigned k;
    int sign;
};

// gcd over Q[x], which for this family is always monic with integer
// coefficients: either a nonzero constant (is_trivial, gcd = 1) or
// x^g + const_sign.
struct GcdResult {
    bool is_trivial;
    unsigned g;     // gcd of the exponents (always filled in)
    int const_sign; // meaningful only when !is_trivial

    bool operator==(const GcdResult& o) const {
        return is_trivial == o.is_trivial &&
               (is_trivial || (g == o.g && const_sign == o.const_sign));
    }
};

// Closed form.  With g = gcd(k, l):
//   (x^k - 1, x^l - 1) -> x^g - 1 always;
//   (x^k + 1, x^l + 1) -> x^g + 1 iff k/g and l/g are both odd, else 1;
//   (x^k - 1, x^l + 1) -> x^g + 1 iff k/g is even and l/g is odd, else 1.
GcdResult gcd_power_polys(SignedPowerPoly A, SignedPowerPoly B);

// Independent oracle: exact Euclidean polynomial gcd over the integers
// (divisors in this family keep unit leading coefficients, so remainders
// stay integral), normalized monic.  Guarded to k, l <= 512.
GcdResult gcd_power_polys_oracle(SignedPowerPoly A, SignedPowerPoly B);

// ---- binomial coefficients mod a prime ----

// C(n, i) mod p via the base-p digit product (Lucas).  p must be prime.
u64 binom_mod(u64 n, u64 i, u64 p);

// True when C(n, i) = 0 mod p for every 0 < i < n, checked literally
// (the brute side of the power-of-p equivalence; n = 1 holds vacuously).
bool all_inner_binoms_zero(u64 n, u64 p);

// n = p^j for some j >= 0 (so n = 1 qualifies).
bool is_power_of(u64 n, u64 p);

// ---- the exponent pair at the boundary parameter n = d(d-1)+1 ----

struct BoundaryExponents {
    bigint e1; // (q^(d*d) - 1) / (q^d - 1)  = 1 + q^d + ... + q^((d-1)d)
    bigint e2; // (q^((d-1)d) - q^(d-1)) / (q^(d-1) - 1) = sum_{i=1}^{d-1} q^(i(d-1))
};

// Computes both exponents by the closed quotient and cross-checks against
// the plain power sums; a mismatch is an invariant violation.
BoundaryExponents boundary_exponents(u64 q, unsigned d);

// Whether (q^n - 1)/(q - 1) divides 1 + q*e1*e2 at n = d(d-1)+1, together
// with the index-coverage fact below.  All arithmetic arbitrary-width.
bool boundary_exponent_divisibility(u64 q, unsigned d);

// The d(d-1) values (i*d + j*(d-1) + 1) mod n for 0 <= i <= d-1,
// 1 <= j <= d-1 hit {1, ..., n-1} exactly once each (n = d(d-1)+1).
// Depends on d only.
bool exponent_coverage(unsigned d);

// Conjunction of divisibility and coverage; the form the CLI exposes.
bool exponent_lemma_check(u64 q, unsigned d);

// ---- extended Euclid ----

struct Bezout {
    bigint x, y, g; // x*k + y*l = g = gcd(k, l)
};

Bezout bezout(const bigint& k, const bigint& l);

} // namespace linfield
