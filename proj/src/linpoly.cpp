#include "linfield/linpoly.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace linfield {

namespace {

// --- linear algebra over GF(p) on plain coefficient rows ---

// Reduces the matrix in place to row echelon form, returns the rank.
unsigned modp_echelon(std::vector<std::vector<u64>>& rows, u64 p, std::vector<int>* pivot_cols = nullptr) {
    if (rows.empty())
        return 0;
    size_t ncols = rows[0].size();
    unsigned rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[rank], rows[piv]);
        u64 il = inv_mod(rows[rank][col], p);
        for (size_t j = col; j < ncols; ++j)
            rows[rank][j] = mul_mod(rows[rank][j], il, p);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0)
                continue;
            u64 f = rows[r][col];
            for (size_t j = col; j < ncols; ++j)
                rows[r][j] = sub_mod(rows[r][j], mul_mod(f, rows[rank][j], p), p);
        }
        if (pivot_cols)
            pivot_cols->push_back(static_cast<int>(col));
        ++rank;
    }
    return rank;
}

// Basis of the right null space of the matrix (columns are unknowns).
std::vector<std::vector<u64>> modp_nullspace(std::vector<std::vector<u64>> rows, u64 p) {
    size_t ncols = rows.empty() ? 0 : rows[0].size();
    std::vector<int> pivots;
    modp_echelon(rows, p, &pivots);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots)
        is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<u64>> basis;
    for (size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<u64> v(ncols, 0);
        v[free_col] = 1;
        // back-substitute: pivot row r has its pivot in pivots[r]
        for (size_t r = 0; r < pivots.size(); ++r) {
            u64 coef = rows[r][free_col];
            if (coef)
                v[static_cast<size_t>(pivots[r])] = p - coef;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// The matrix of L as a GF(p)-linear map on the field, column j = L(t^j).
std::vector<std::vector<u64>> action_matrix(const LinearizedPoly& L) {
    const FieldSpec& f = L.field;
    unsigned m = f.degree();
    std::vector<std::vector<u64>> rows(m, std::vector<u64>(m, 0));
    for (unsigned j = 0; j < m; ++j) {
        FieldElement basis = zero(f);
        basis.c[j] = 1;
        FieldElement v = evaluate(L, basis);
        for (unsigned i = 0; i < m; ++i)
            rows[i][j] = v.c[i];
    }
    return rows;
}

} // namespace

LinearizedPoly make_linearized(FieldSpec field, std::vector<FieldElement> coeffs) {
    if (coeffs.size() < 2)
        throw out_of_range_error("make_linearized: q-degree must be >= 1");
    for (const auto& c : coeffs)
        if (c.c.size() != field.degree())
            throw field_mismatch_error("make_linearized: coefficient length does not match field");
    if (coeffs.back().is_zero())
        throw out_of_range_error("make_linearized: leading coefficient is zero");
    return LinearizedPoly{std::move(field), std::move(coeffs)};
}

bool is_monic(const LinearizedPoly& L) {
    return L.coeffs.back() == one(L.field);
}

LinearizedPoly monic(const LinearizedPoly& L) {
    if (is_monic(L))
        return L;
    FieldElement il = inv(L.field, L.coeffs.back());
    LinearizedPoly M = L;
    for (auto& c : M.coeffs)
        c = mul(L.field, c, il);
    return M;
}

FieldElement evaluate(const LinearizedPoly& L, const FieldElement& x) {
    const FieldSpec& f = L.field;
    if (x.c.size() != f.degree())
        throw field_mismatch_error("evaluate: element length does not match field");
    FieldElement xq = x;
    FieldElement acc = mul(f, L.coeffs[0], x);
    for (unsigned i = 1; i < L.coeffs.size(); ++i) {
        xq = frobenius_q(f, xq, 1);
        if (!L.coeffs[i].is_zero())
            acc = add(f, acc, mul(f, L.coeffs[i], xq));
    }
    return acc;
}

FieldMatrix identity_matrix(const FieldSpec& f, unsigned dim) {
    FieldMatrix M{f, dim, dim, std::vector<FieldElement>(static_cast<size_t>(dim) * dim, zero(f))};
    for (unsigned i = 0; i < dim; ++i)
        M.at(i, i) = one(f);
    return M;
}

FieldMatrix mat_sub(const FieldMatrix& A, const FieldMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols)
        throw dimension_mismatch_error("mat_sub: shape mismatch");
    FieldMatrix R = A;
    for (size_t i = 0; i < R.a.size(); ++i)
        R.a[i] = sub(A.field, A.a[i], B.a[i]);
    return R;
}

FieldMatrix mat_mul(const FieldMatrix& A, const FieldMatrix& B) {
    if (A.cols != B.rows)
        throw dimension_mismatch_error("mat_mul: shape mismatch");
    const FieldSpec& f = A.field;
    FieldMatrix R{f, A.rows, B.cols,
                  std::vector<FieldElement>(static_cast<size_t>(A.rows) * B.cols, zero(f))};
    for (unsigned i = 0; i < A.rows; ++i)
        for (unsigned k = 0; k < A.cols; ++k) {
            const FieldElement& aik = A.at(i, k);
            if (aik.is_zero())
                continue;
            for (unsigned j = 0; j < B.cols; ++j) {
                const FieldElement& bkj = B.at(k, j);
                if (!bkj.is_zero())
                    R.at(i, j) = add(f, R.at(i, j), mul(f, aik, bkj));
            }
        }
    return R;
}

FieldMatrix frobenius_entries(const FieldMatrix& A, unsigned j) {
    FieldMatrix R = A;
    for (auto& e : R.a)
        e = frobenius_q(A.field, e, j);
    return R;
}

unsigned matrix_rank(FieldMatrix A) {
    const FieldSpec& f = A.field;
    unsigned rank = 0;
    for (unsigned col = 0; col < A.cols && rank < A.rows; ++col) {
        unsigned piv = rank;
        while (piv < A.rows && A.at(piv, col).is_zero())
            ++piv;
        if (piv == A.rows)
            continue;
        for (unsigned j = 0; j < A.cols; ++j)
            std::swap(A.at(rank, j), A.at(piv, j));
        FieldElement il = inv(f, A.at(rank, col));
        for (unsigned j = col; j < A.cols; ++j)
            A.at(rank, j) = mul(f, A.at(rank, j), il);
        for (unsigned r = rank + 1; r < A.rows; ++r) {
            FieldElement factor = A.at(r, col);
            if (factor.is_zero())
                continue;
            for (unsigned j = col; j < A.cols; ++j)
                A.at(r, j) = sub(f, A.at(r, j), mul(f, factor, A.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

bool is_identity(const FieldMatrix& A) {
    if (A.rows != A.cols)
        return false;
    FieldElement o = one(A.field);
    for (unsigned i = 0; i < A.rows; ++i)
        for (unsigned j = 0; j < A.cols; ++j) {
            const FieldElement& e = A.at(i, j);
            if (i == j ? !(e == o) : !e.is_zero())
                return false;
        }
    return true;
}

FieldMatrix companion_matrix(const LinearizedPoly& L) {
    LinearizedPoly M = monic(L);
    const FieldSpec& f = M.field;
    unsigned d = M.d();
    FieldMatrix C{f, d, d, std::vector<FieldElement>(static_cast<size_t>(d) * d, zero(f))};
    for (unsigned i = 1; i < d; ++i)
        C.at(i, i - 1) = one(f);
    for (unsigned i = 0; i < d; ++i)
        C.at(i, d - 1) = neg(f, M.coeffs[i]);
    return C;
}

FieldMatrix twisted_companion_product(const LinearizedPoly& L, unsigned k) {
    if (k < 1)
        throw out_of_range_error("twisted_companion_product: k must be >= 1");
    FieldMatrix C = companion_matrix(L);
    FieldMatrix A = C;
    FieldMatrix Ct = C;
    for (unsigned i = 1; i < k; ++i) {
        Ct = frobenius_entries(Ct, 1);
        A = mat_mul(A, Ct);
    }
    return A;
}

unsigned nullity_fast(const LinearizedPoly& L) {
    unsigned d = L.d();
    FieldMatrix A = twisted_companion_product(L, L.field.n);
    FieldMatrix D = mat_sub(A, identity_matrix(L.field, d));
    return d - matrix_rank(std::move(D));
}

unsigned nullity_bruteforce(const LinearizedPoly& L) {
    const FieldSpec& f = L.field;
    auto rows = action_matrix(L);
    unsigned rank = modp_echelon(rows, f.p);
    unsigned null_p = f.degree() - rank;
    if (null_p % f.s != 0)
        throw invariant_violation_error(
            "nullity_bruteforce: GF(p)-nullity not divisible by s; root space is not GF(q)-linear");
    return null_p / f.s;
}

std::vector<FieldElement> kernel_basis(const LinearizedPoly& L) {
    const FieldSpec& f = L.field;
    unsigned m = f.degree();
    u64 p = f.p;

    auto null_p = modp_nullspace(action_matrix(L), p);

    // GF(p)-basis of the base field GF(q) inside this field: the null space
    // of (q-power map) - identity.
    std::vector<std::vector<u64>> fq(m, std::vector<u64>(m, 0));
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j)
            fq[i][j] = (*f.frob)[static_cast<size_t>(i) * m + j];
    for (unsigned i = 0; i < m; ++i)
        fq[i][i] = sub_mod(fq[i][i], 1, p);
    auto subfield = modp_nullspace(std::move(fq), p);
    if (subfield.size() != f.s)
        throw invariant_violation_error("kernel_basis: base field has wrong GF(p)-dimension");

    // Greedy GF(q)-reduction: keep a GF(p)-echelon basis of the GF(q)-span
    // of the vectors chosen so far (rows sorted by pivot, pivot entries 1);
    // a null space vector outside that span starts a new GF(q)-basis element
    // and contributes its whole GF(q)-line to the span.
    std::vector<std::vector<u64>> span;
    std::vector<FieldElement> basis;
    auto reduce = [&](std::vector<u64> v) {
        for (const auto& row : span) {
            size_t piv = 0;
            while (piv < m && row[piv] == 0)
                ++piv;
            if (piv < m && v[piv]) {
                u64 c = v[piv];
                for (size_t j = piv; j < m; ++j)
                    v[j] = sub_mod(v[j], mul_mod(c, row[j], p), p);
            }
        }
        return v;
    };
    auto insert_span = [&](std::vector<u64> v) {
        v = reduce(std::move(v));
        size_t piv = 0;
        while (piv < m && v[piv] == 0)
            ++piv;
        if (piv == m)
            return;
        u64 il = inv_mod(v[piv], p);
        for (size_t j = piv; j < m; ++j)
            v[j] = mul_mod(v[j], il, p);
        // keep rows sorted by pivot for a clean reduce pass
        span.push_back(std::move(v));
        std::sort(span.begin(), span.end(), [&](const auto& x, const auto& y) {
            size_t px = 0, py = 0;
            while (px < m && x[px] == 0) ++px;
            while (py < m && y[py] == 0) ++py;
            return px < py;
        });
    };

    for (const auto& v : null_p) {
        std::vector<u64> r = reduce(v);
        if (std::all_of(r.begin(), r.end(), [](u64 x) { return x == 0; }))
            continue;
        FieldElement elem{v};
        basis.push_back(elem);
        // add every GF(p)-multiple direction: g * elem for each subfield
        // basis vector g spans the GF(q)-line through elem
        for (const auto& g : subfield) {
            FieldElement ge = mul(f, FieldElement{g}, elem);
            insert_span(ge.c);
        }
    }

    for (const auto& b : basis)
        if (!evaluate(L, b).is_zero())
            throw invariant_violation_error("kernel_basis: vector outside the kernel");
    if (basis.size() != nullity_bruteforce(L))
        throw invariant_violation_error("kernel_basis: basis size disagrees with nullity");
    return basis;
}

FieldElement product_entry_recurrence(const LinearizedPoly& L, unsigned l, long long k) {
    LinearizedPoly M = monic(L);
    const FieldSpec& f = M.field;
    unsigned d = M.d();
    if (l < 1 || l > d)
        throw out_of_range_error("product_entry_recurrence: l out of range");
    long long lo = static_cast<long long>(l) - static_cast<long long>(d);
    if (k < 1 - static_cast<long long>(d))
        throw out_of_range_error("product_entry_recurrence: k below base range");
    if (k <= 0)
        return k == lo ? one(f) : zero(f);

    // lowered coefficients of the monic representative, negated
    std::vector<FieldElement> b(d);
    for (unsigned i = 0; i < d; ++i)
        b[i] = neg(f, M.coeffs[i]);

    // values M_{l, j} for j = lo .. k
    std::vector<FieldElement> val(static_cast<size_t>(k - lo) + 1, zero(f));
    val[0] = one(f); // j = lo = l - d
    std::vector<FieldElement> tw = b; // b_i^(q^(j-1)), starts at j = 1
    for (long long j = 1; j <= k; ++j) {
        FieldElement acc = zero(f);
        for (unsigned i = 0; i < d; ++i) {
            long long idx = j - static_cast<long long>(d) + static_cast<long long>(i);
            if (idx < lo)
                continue;
            const FieldElement& prev = val[static_cast<size_t>(idx - lo)];
            if (!prev.is_zero() && !tw[i].is_zero())
                acc = add(f, acc, mul(f, prev, tw[i]));
        }
        val[static_cast<size_t>(j - lo)] = std::move(acc);
        if (j < k)
            for (auto& t : tw)
                t = frobenius_q(f, t, 1);
    }
    return val[static_cast<size_t>(k - lo)];
}

FieldElement product_entry_via_recurrence(const LinearizedPoly& L, unsigned l, unsigned j, unsigned k) {
    unsigned d = L.d();
    if (l < 1 || l > d || j < 1 || j > d)
        throw out_of_range_error("product_entry_via_recurrence: index out of range");
    if (k < 1)
        throw out_of_range_error("product_entry_via_recurrence: k must be >= 1");
    return product_entry_recurrence(L, l, static_cast<long long>(k) - static_cast<long long>(d) + j);
}

} // namespace linfield
