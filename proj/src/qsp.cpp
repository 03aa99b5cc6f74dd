#include "linfield/qsp.hpp"

#include "linfield/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace linfield {

namespace {

// log2(2^a + 2^b) without leaving the log domain.
double log_sum_exp2(double a, double b) {
    double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp2(lo - hi)) / std::numbers::ln2;
}

double log2_factorial(unsigned m) {
    double r = 0.0;
    for (unsigned k = 2; k <= m; ++k)
        r += std::log2(double(k));
    return r;
}

} // namespace

ComplexityEstimate complexity_log2(const QspParams& p) {
    if (p.q < 2)
        throw out_of_range_error("complexity_log2: q must be >= 2");
    if (p.m < 2)
        throw out_of_range_error("complexity_log2: m must be >= 2");
    if (p.d < 1 || p.d >= p.n)
        throw out_of_range_error("complexity_log2: d must satisfy 1 <= d < n");
    if (p.deg_lambda < 1)
        throw out_of_range_error("complexity_log2: deg_lambda must be >= 1");

    double log2q = std::log2(double(p.q));
    double mm1 = double(p.m) * double(p.m - 1);
    double exponent = double(p.n) - double(p.d) * double(p.m - 1);

    ComplexityEstimate est;
    est.log2_relation_term = log2_factorial(p.m) + exponent * log2q +
                             5.188 * std::log2(double(p.m)) + 7.376 * mm1 +
                             4.876 * mm1 * std::log2(double(p.deg_lambda));
    est.log2_linear_algebra_term = std::log2(double(p.m)) + 2.0 * double(p.d) * log2q;
    est.log2_total = log_sum_exp2(est.log2_relation_term, est.log2_linear_algebra_term);
    est.beats_generic = est.log2_total < 0.5 * double(p.n) * log2q;
    est.beats_bruteforce = est.log2_total < double(p.n) * log2q;
    return est;
}

bool lambda_degree_condition(unsigned j, unsigned d, unsigned n) {
    return u64(j) * u64(n) < u64(d) * u64(d);
}

bool is_quasi_subfield(const LinearizedPoly& L) {
    LinearizedPoly M = monic(L);
    unsigned d = M.d();
    unsigned j = 0;
    bool has_lower = false;
    for (unsigned i = 0; i < d; ++i)
        if (!M.coeffs[i].is_zero()) {
            j = i;
            has_lower = true;
        }
    if (!has_lower)
        return false;
    return nullity_fast(M) == d && lambda_degree_condition(j, d, M.field.n);
}

std::vector<ScanRow> scan_parameters(u64 q, unsigned n, unsigned d_lo, unsigned d_hi,
                                     unsigned m_lo, unsigned m_hi, u64 deg_lambda) {
    if (d_lo < 1 || d_lo > d_hi || d_hi >= n)
        throw out_of_range_error("scan_parameters: need 1 <= d_lo <= d_hi < n");
    if (m_lo < 2 || m_lo > m_hi)
        throw out_of_range_error("scan_parameters: need 2 <= m_lo <= m_hi");

    std::vector<ScanRow> rows;
    rows.reserve(size_t(d_hi - d_lo + 1) * (m_hi - m_lo + 1));
    for (unsigned d = d_lo; d <= d_hi; ++d)
        for (unsigned m = m_lo; m <= m_hi; ++m) {
            ScanRow row;
            row.d = d;
            row.m = m;
            row.est = complexity_log2({q, n, d, deg_lambda, m});
            row.window_ok = u64(n) <= u64(2) * (m - 1) * d && u64(4) * d <= u64(n);
            rows.push_back(row);
        }
    std::sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
        return std::tie(a.est.log2_total, a.d, a.m) < std::tie(b.est.log2_total, b.d, b.m);
    });
    return rows;
}

} // namespace linfield
