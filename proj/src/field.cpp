#include "linfield/field.hpp"

#include <algorithm>
#include <string>

namespace linfield {

namespace {

// --- dense polynomial arithmetic over GF(p), little-endian coefficients ---

using Poly = std::vector<u64>;

int poly_deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<size_t>(i)])
            return i;
    return -1;
}

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// a mod f, f monic.
Poly poly_mod(Poly a, const Poly& f, u64 p) {
    int df = poly_deg(f);
    for (int i = poly_deg(a); i >= df; --i) {
        u64 c = a[static_cast<size_t>(i)];
        if (c == 0)
            continue;
        a[static_cast<size_t>(i)] = 0;
        for (int j = 0; j < df; ++j)
            a[static_cast<size_t>(i - df + j)] =
                sub_mod(a[static_cast<size_t>(i - df + j)], mul_mod(c, f[static_cast<size_t>(j)], p), p);
    }
    poly_trim(a);
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    if (a.empty() || b.empty())
        return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = add_mod(prod[i + j], mul_mod(a[i], b[j], p), p);
    }
    return poly_mod(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
    Poly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1)
            r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // make b monic so poly_mod applies
        u64 lead = b.back();
        if (lead != 1) {
            u64 il = inv_mod(lead, p);
            for (u64& c : b)
                c = mul_mod(c, il, p);
        }
        Poly r = poly_mod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Iterated-Frobenius irreducibility test for monic f of degree m over GF(p):
// f is irreducible iff x^(p^m) = x (mod f) and gcd(x^(p^(m/r)) - x, f) = 1
// for every prime r dividing m.
bool is_irreducible(const Poly& f, u64 p) {
    int m = poly_deg(f);
    if (m < 1)
        return false;
    std::vector<unsigned> prime_divs;
    {
        unsigned rest = static_cast<unsigned>(m);
        for (unsigned r = 2; r * r <= rest; ++r)
            if (rest % r == 0) {
                prime_divs.push_back(r);
                while (rest % r == 0)
                    rest /= r;
            }
        if (rest > 1)
            prime_divs.push_back(rest);
    }

    Poly x{0, 1};
    Poly h = poly_mod(x, f, p); // x^(p^0)
    for (int k = 1; k <= m; ++k) {
        h = poly_powmod(std::move(h), p, f, p); // now x^(p^k) mod f
        for (unsigned r : prime_divs) {
            if (static_cast<unsigned>(m) % r == 0 && k == m / static_cast<int>(r)) {
                Poly diff = h;
                if (diff.size() < 2)
                    diff.resize(2, 0);
                diff[1] = sub_mod(diff[1], 1, p);
                Poly g = poly_gcd(diff, f, p);
                if (poly_deg(g) != 0)
                    return false;
            }
        }
    }
    Poly xm = poly_mod(x, f, p);
    return h == xm;
}

void check_length(const FieldSpec& f, const FieldElement& x, const char* op) {
    if (x.c.size() != f.degree())
        throw dimension_mismatch_error(std::string(op) + ": element has " +
                                       std::to_string(x.c.size()) + " coefficients, field degree is " +
                                       std::to_string(f.degree()));
}

} // namespace

FieldSpec make_field(u64 p, unsigned s, unsigned n) {
    if (!is_prime_u64(p))
        throw not_prime_error("make_field: p = " + std::to_string(p) + " is not prime");
    if (s < 1 || n < 1)
        throw out_of_range_error("make_field: s and n must be >= 1");

    unsigned m = s * n;
    u128 cap = 1;
    for (unsigned i = 0; i < m; ++i) {
        cap *= p;
        if (cap > (u128(1) << 63))
            throw capacity_error("make_field: p^(s*n) exceeds 2^63");
    }

    FieldSpec f;
    f.p = p;
    f.s = s;
    f.n = n;
    f.order = static_cast<u64>(cap);
    f.q = 1;
    for (unsigned i = 0; i < s; ++i)
        f.q *= p;

    // Deterministic modulus: walk non-leading coefficient vectors in
    // increasing integer-code order and take the first irreducible.
    Poly cand(m + 1, 0);
    cand[m] = 1;
    for (u64 code = 0;; ++code) {
        u64 v = code;
        for (unsigned i = 0; i < m; ++i) {
            cand[i] = v % p;
            v /= p;
        }
        if (m >= 2 && cand[0] == 0)
            continue; // divisible by t
        if (is_irreducible(cand, p))
            break;
        if (code + 1 == f.order)
            throw invariant_violation_error("make_field: no irreducible polynomial found");
    }
    f.modulus = cand;

    // Precompute the matrix of x -> x^q over GF(p): column j holds the
    // coefficients of (t^q)^j mod f.
    auto frob = std::make_shared<std::vector<u64>>(static_cast<size_t>(m) * m, 0);
    Poly tq = poly_powmod(Poly{0, 1}, f.q, f.modulus, p);
    Poly col{1};
    for (unsigned j = 0; j < m; ++j) {
        for (unsigned i = 0; i < m; ++i)
            (*frob)[static_cast<size_t>(i) * m + j] = i < col.size() ? col[i] : 0;
        if (j + 1 < m)
            col = poly_mulmod(col, tq, f.modulus, p);
    }
    f.frob = std::move(frob);
    return f;
}

FieldElement zero(const FieldSpec& f) {
    return FieldElement{std::vector<u64>(f.degree(), 0)};
}

FieldElement one(const FieldSpec& f) {
    return from_constant(f, 1);
}

FieldElement from_constant(const FieldSpec& f, u64 c) {
    FieldElement x{std::vector<u64>(f.degree(), 0)};
    x.c[0] = c % f.p;
    return x;
}

FieldElement decode(const FieldSpec& f, u64 code) {
    if (code >= f.order)
        throw out_of_range_error("decode: code " + std::to_string(code) + " >= field order");
    FieldElement x{std::vector<u64>(f.degree(), 0)};
    for (unsigned i = 0; i < f.degree(); ++i) {
        x.c[i] = code % f.p;
        code /= f.p;
    }
    return x;
}

u64 encode(const FieldSpec& f, const FieldElement& x) {
    check_length(f, x, "encode");
    u64 code = 0;
    for (unsigned i = f.degree(); i-- > 0;)
        code = code * f.p + x.c[i];
    return code;
}

FieldElement add(const FieldSpec& f, const FieldElement& x, const FieldElement& y) {
    check_length(f, x, "add");
    check_length(f, y, "add");
    FieldElement r{std::vector<u64>(f.degree())};
    for (unsigned i = 0; i < f.degree(); ++i)
        r.c[i] = add_mod(x.c[i], y.c[i], f.p);
    return r;
}

FieldElement sub(const FieldSpec& f, const FieldElement& x, const FieldElement& y) {
    check_length(f, x, "sub");
    check_length(f, y, "sub");
    FieldElement r{std::vector<u64>(f.degree())};
    for (unsigned i = 0; i < f.degree(); ++i)
        r.c[i] = sub_mod(x.c[i], y.c[i], f.p);
    return r;
}

FieldElement neg(const FieldSpec& f, const FieldElement& x) {
    check_length(f, x, "neg");
    FieldElement r{std::vector<u64>(f.degree())};
    for (unsigned i = 0; i < f.degree(); ++i)
        r.c[i] = x.c[i] ? f.p - x.c[i] : 0;
    return r;
}

FieldElement mul(const FieldSpec& f, const FieldElement& x, const FieldElement& y) {
    check_length(f, x, "mul");
    check_length(f, y, "mul");
    unsigned m = f.degree();
    u64 p = f.p;
    if (m == 1)
        return FieldElement{{mul_mod(x.c[0], y.c[0], p)}};

    // m >= 2 forces p < 2^32, so coefficient products fit u64 and at most
    // 63 of them fit a u128 accumulator.
    std::vector<u64> prod(2 * m - 1);
    for (unsigned k = 0; k < 2 * m - 1; ++k) {
        u128 acc = 0;
        unsigned lo = k >= m ? k - m + 1 : 0;
        unsigned hi = std::min(k, m - 1);
        for (unsigned i = lo; i <= hi; ++i)
            acc += static_cast<u128>(x.c[i]) * y.c[k - i];
        prod[k] = static_cast<u64>(acc % p);
    }
    const auto& fm = f.modulus;
    for (unsigned i = 2 * m - 2; i >= m; --i) {
        u64 c = prod[i];
        if (c == 0)
            continue;
        for (unsigned j = 0; j < m; ++j)
            prod[i - m + j] = sub_mod(prod[i - m + j], c * fm[j] % p, p);
    }
    prod.resize(m);
    return FieldElement{std::move(prod)};
}

FieldElement inv(const FieldSpec& f, const FieldElement& x) {
    check_length(f, x, "inv");
    if (x.is_zero())
        throw division_by_zero_error("inv: zero element");
    return pow(f, x, bigint(f.order) - 2);
}

FieldElement pow(const FieldSpec& f, const FieldElement& x, const bigint& e) {
    check_length(f, x, "pow");
    if (x.is_zero()) {
        if (e == 0)
            return one(f);
        if (e < 0)
            throw division_by_zero_error("pow: negative exponent of zero");
        return zero(f);
    }
    bigint go = bigint(f.order) - 1;
    bigint er = e % go;
    if (er < 0)
        er += go;
    u64 ex = er.convert_to<u64>();
    FieldElement r = one(f);
    FieldElement b = x;
    while (ex) {
        if (ex & 1)
            r = mul(f, r, b);
        b = mul(f, b, b);
        ex >>= 1;
    }
    return r;
}

FieldElement frobenius_q(const FieldSpec& f, const FieldElement& x, unsigned j) {
    check_length(f, x, "frobenius_q");
    j %= f.n;
    unsigned m = f.degree();
    FieldElement cur = x;
    const auto& F = *f.frob;
    for (unsigned t = 0; t < j; ++t) {
        FieldElement next{std::vector<u64>(m)};
        for (unsigned i = 0; i < m; ++i) {
            u128 acc = 0;
            for (unsigned k = 0; k < m; ++k) {
                u64 a = F[static_cast<size_t>(i) * m + k];
                if (a)
                    acc += static_cast<u128>(a) * cur.c[k];
            }
            next.c[i] = static_cast<u64>(acc % f.p);
        }
        cur = std::move(next);
    }
    return cur;
}

FieldElement norm_rel(const FieldSpec& f, const FieldElement& a) {
    check_length(f, a, "norm_rel");
    bigint qn = boost::multiprecision::pow(bigint(f.q), f.n);
    bigint exp = (qn - 1) / (bigint(f.q) - 1);
    return pow(f, a, exp);
}

FieldElement minus_one_power(const FieldSpec& f, long long k) {
    if (f.p == 2 || k % 2 == 0)
        return one(f);
    return from_constant(f, f.p - 1);
}

bool in_base_field(const FieldSpec& f, const FieldElement& x) {
    return frobenius_q(f, x, 1) == x;
}

} // namespace linfield
