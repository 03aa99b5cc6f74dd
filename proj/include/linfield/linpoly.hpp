#pragma once

#include <vector>

#include "linfield/field.hpp"

namespace linfield {

// A q-linearized polynomial L(x) = sum_{i=0}^{d} a_i x^(q^i) with a_d != 0
// and d >= 1.  Its roots inside the field form a GF(q)-vector space; the
// dimension of that space is the nullity computed below.
struct LinearizedPoly {
    FieldSpec field;
    std::vector<FieldElement> coeffs; // a_0 .. a_d, little-endian in q-degree

    unsigned d() const { return static_cast<unsigned>(coeffs.size()) - 1; }
};

// Validates and builds a linearized polynomial: at least q-degree 1, leading
// coefficient nonzero, every coefficient of the right length.
LinearizedPoly make_linearized(FieldSpec field, std::vector<FieldElement> coeffs);

bool is_monic(const LinearizedPoly& L);

// L scaled by the inverse of its leading coefficient.  Scaling by a nonzero
// constant changes neither the root space nor any rank computed here.
LinearizedPoly monic(const LinearizedPoly& L);

// L(x), evaluated with one q-power application per coefficient (never by
// integer powering to q^i).
FieldElement evaluate(const LinearizedPoly& L, const FieldElement& x);

// Dense matrix over one field.  Only what the nullity criterion needs.
struct FieldMatrix {
    FieldSpec field;
    unsigned rows = 0, cols = 0;
    std::vector<FieldElement> a; // row-major

    FieldElement& at(unsigned r, unsigned c) { return a[static_cast<size_t>(r) * cols + c]; }
    const FieldElement& at(unsigned r, unsigned c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const FieldMatrix&) const = default;
};

FieldMatrix identity_matrix(const FieldSpec& f, unsigned dim);
FieldMatrix mat_sub(const FieldMatrix& A, const FieldMatrix& B);
FieldMatrix mat_mul(const FieldMatrix& A, const FieldMatrix& B);

// Entrywise x -> x^(q^j).
FieldMatrix frobenius_entries(const FieldMatrix& A, unsigned j = 1);

// Rank by Gaussian elimination; pivots are chosen deterministically (first
// nonzero entry scanning columns left to right, rows top to bottom).  Exact:
// the coefficient field has no rounding.
unsigned matrix_rank(FieldMatrix A);

bool is_identity(const FieldMatrix& A);

// Companion matrix of the monic representative x^(q^d) - sum b_i x^(q^i):
// ones on the subdiagonal, last column (b_0, ..., b_{d-1})^T.
FieldMatrix companion_matrix(const LinearizedPoly& L);

// C * C^q * C^(q^2) * ... * C^(q^(k-1)) where C is the companion matrix and
// the powers act entrywise.  Requires k >= 1.
FieldMatrix twisted_companion_product(const LinearizedPoly& L, unsigned k);

// Nullity of L over GF(q) via the matrix criterion: d minus the rank of
// (twisted product after n steps) - identity.  L splits completely (q^d
// roots) exactly when that product is the identity.
unsigned nullity_fast(const LinearizedPoly& L);

// Independent oracle: the GF(q)-dimension of ker L computed from the
// (s*n) x (s*n) matrix of L acting on the field as a GF(p)-vector space.
unsigned nullity_bruteforce(const LinearizedPoly& L);

// A GF(q)-basis of the root space of L; length equals the nullity and every
// returned element evaluates to zero under L.
std::vector<FieldElement> kernel_basis(const LinearizedPoly& L);

// Row entry M_{l,k} of the twisted products via the coefficient recurrence
//   M_{l,k} = sum_{i=0}^{d-1} M_{l,k-d+i} * b_i^(q^(k-1)),
// with M_{l,l-d} = 1 and M_{l,k} = 0 for every other k <= 0, where the b_i
// are the lowered coefficients of the monic representative (same sign
// convention as companion_matrix).  Requires 1 <= l <= d and k >= 1-d.
FieldElement product_entry_recurrence(const LinearizedPoly& L, unsigned l, long long k);

// Entry (l, j), 1-based, of twisted_companion_product(L, k) computed by the
// recurrence instead of matrix products: M_{l, k-d+j}.
FieldElement product_entry_via_recurrence(const LinearizedPoly& L, unsigned l, unsigned j, unsigned k);

} // namespace linfield
