#pragma once

// Cost model for index-calculus-style discrete-log attacks whose relation
// search is driven by a completely splitting linearized polynomial of low
// q-degree ("quasi-subfield" kernel).  All costs are tracked as log2 of an
// operation count, so terms are combined with log-sum-exp rather than by
// adding raw doubles.

#include "linfield/linpoly.hpp"

#include <vector>

namespace linfield {

struct QspParams {
    u64 q = 2;          // base field size (prime power)
    unsigned n = 1;     // extension degree: the DLP lives in a group of size ~q^n
    unsigned d = 1;     // q-degree of the splitting polynomial
    u64 deg_lambda = 1; // ordinary degree of the auxiliary map in the descent
    unsigned m = 2;     // number of factor-base blocks in one relation
};

struct ComplexityEstimate {
    double log2_relation_term = 0.0;      // cost of collecting enough relations
    double log2_linear_algebra_term = 0.0; // cost of the sparse linear algebra
    double log2_total = 0.0;               // log2(2^rel + 2^la)
    bool beats_generic = false;            // total < (n/2) log2 q
    bool beats_bruteforce = false;         // total < n log2 q
};

// Evaluates the cost model.  Throws out_of_range_error on q < 2, m < 2,
// d outside [1, n), or deg_lambda < 1.
ComplexityEstimate complexity_log2(const QspParams& p);

// Exact integer form of the degree condition j * n < d^2 that makes the
// auxiliary map's degree small enough for the descent to close.
bool lambda_degree_condition(unsigned j, unsigned d, unsigned n);

// True when L (made monic) splits completely with full nullity d and its
// largest lower q-degree j with a nonzero coefficient satisfies j*n < d^2.
// A pure q^d-power term (no lower coefficients at all) is rejected.
bool is_quasi_subfield(const LinearizedPoly& L);

struct ScanRow {
    unsigned d = 0;
    unsigned m = 0;
    ComplexityEstimate est;
    bool window_ok = false; // n <= 2(m-1)d and 4d <= n
};

// Evaluates the model over a (d, m) grid and returns the rows sorted by
// (log2_total, d, m).  Rows outside the useful window are kept but flagged.
std::vector<ScanRow> scan_parameters(u64 q, unsigned n, unsigned d_lo, unsigned d_hi,
                                     unsigned m_lo, unsigned m_hi, u64 deg_lambda);

} // namespace linfield
