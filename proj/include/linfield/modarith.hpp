#pragma once

#include <cstdint>

namespace linfield {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Residue arithmetic for moduli up to 2^63 (all field characteristics and
// orders in this library stay below that bound).

inline u64 add_mod(u64 a, u64 b, u64 m) {
    u64 r = a + b; // no overflow: a, b < m <= 2^63
    return r >= m ? r - m : r;
}

inline u64 sub_mod(u64 a, u64 b, u64 m) {
    return a >= b ? a - b : a + (m - b);
}

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Inverse modulo a prime p (Fermat).
inline u64 inv_mod(u64 a, u64 p) {
    return pow_mod(a, p - 2, p);
}

// Deterministic Miller-Rabin; the witness set decides primality for every
// 64-bit integer.
inline bool is_prime_u64(u64 n) {
    if (n < 2)
        return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q)
            return true;
        if (n % q == 0)
            return false;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

} // namespace linfield
