#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linfield/errors.hpp"
#include "linfield/modarith.hpp"

namespace linfield {

using bigint = boost::multiprecision::cpp_int;

// One element of GF(p^(s*n)): the little-endian coefficient vector of its
// representative in GF(p)[t] modulo the field's defining polynomial.  The
// length always equals s*n and every entry lies in [0, p).  Elements do not
// carry a pointer to their field; operations take the FieldSpec explicitly
// and reject mismatched lengths.
struct FieldElement {
    std::vector<u64> c;

    bool operator==(const FieldElement&) const = default;

    bool is_zero() const {
        for (u64 v : c)
            if (v)
                return false;
        return true;
    }
};

// GF(q^n) with q = p^s, realized as the single extension GF(p)[t]/(f) of
// degree s*n.  f is chosen deterministically: the monic irreducible whose
// non-leading coefficient vector (c_0, ..., c_{sn-1}) has the smallest
// little-endian base-p integer code.  Every run therefore encodes elements
// identically.  Copies are cheap; the precomputed q-power table is shared
// and immutable, so a FieldSpec may be used from several threads at once.
struct FieldSpec {
    u64 p = 0;
    unsigned s = 0;
    unsigned n = 0;
    u64 q = 0;     // p^s
    u64 order = 0; // p^(s*n), capped at 2^63
    std::vector<u64> modulus; // monic, little-endian, length s*n + 1

    // degree x degree matrix of the map x -> x^q over GF(p), row-major.
    std::shared_ptr<const std::vector<u64>> frob;

    unsigned degree() const { return s * n; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.p == b.p && a.s == b.s && a.n == b.n;
    }
};

// Constructs GF(p^(s*n)).  Throws not_prime_error if p is composite and
// capacity_error if p^(s*n) > 2^63 (the bound that keeps element codes in
// one machine word).
FieldSpec make_field(u64 p, unsigned s, unsigned n);

FieldElement zero(const FieldSpec& f);
FieldElement one(const FieldSpec& f);

// The constant c mod p as a field element.
FieldElement from_constant(const FieldSpec& f, u64 c);

// Integer-code bijection: code = sum c_i * p^i.  decode throws
// out_of_range_error for code >= order.
FieldElement decode(const FieldSpec& f, u64 code);
u64 encode(const FieldSpec& f, const FieldElement& x);

FieldElement add(const FieldSpec& f, const FieldElement& x, const FieldElement& y);
FieldElement sub(const FieldSpec& f, const FieldElement& x, const FieldElement& y);
FieldElement neg(const FieldSpec& f, const FieldElement& x);
FieldElement mul(const FieldSpec& f, const FieldElement& x, const FieldElement& y);

// Multiplicative inverse; throws division_by_zero_error on 0.
FieldElement inv(const FieldSpec& f, const FieldElement& x);

// x^e for an arbitrary-width (possibly negative) exponent.  Nonzero bases
// reduce e modulo order-1 first, so exponents of any size cost at most 63
// squarings.  Conventions: 0^0 = 1, 0^positive = 0, 0^negative throws
// division_by_zero_error.
FieldElement pow(const FieldSpec& f, const FieldElement& x, const bigint& e);

// x^(q^j).  The q-power map has order n on this field, so j is reduced
// mod n; each application is one matrix-vector product over GF(p).
FieldElement frobenius_q(const FieldSpec& f, const FieldElement& x, unsigned j = 1);

// Norm relative to the base field GF(q): a^((q^n-1)/(q-1)).  The result
// always satisfies x^q = x.
FieldElement norm_rel(const FieldSpec& f, const FieldElement& a);

// (-1)^k as a field element (so the constant 1 in characteristic 2).
FieldElement minus_one_power(const FieldSpec& f, long long k);

// True when x^q = x, i.e. x lies in the base field GF(q).
bool in_base_field(const FieldSpec& f, const FieldElement& x);

// Iterates every field element in increasing code order.  Usable in range
// for-loops; nothing is materialized.
class ElementRange {
public:
    explicit ElementRange(const FieldSpec& f) : f_(&f) {}

    class iterator {
    public:
        iterator(const FieldSpec* f, u64 code) : f_(f), code_(code) {}
        FieldElement operator*() const { return decode(*f_, code_); }
        iterator& operator++() { ++code_; return *this; }
        bool operator!=(const iterator& o) const { return code_ != o.code_; }

    private:
        const FieldSpec* f_;
        u64 code_;
    };

    iterator begin() const { return {f_, 0}; }
    iterator end() const { return {f_, f_->order}; }

private:
    const FieldSpec* f_;
};

inline ElementRange elements(const FieldSpec& f) { return ElementRange(f); }

} // namespace linfield
