#include "linfield/trinomial.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <thread>
#include <utility>

namespace linfield {

namespace {

constexpr u64 kExhaustiveGuard = u64(1) << 13; // order bound for full pair sweeps
constexpr u64 kCandidateGuard = u64(1) << 20;  // order bound for per-a candidate scans
constexpr u64 kAutoExhaustive = 1024;          // Auto verify picks exhaustive below this
constexpr size_t kMaxStoredCounterexamples = 16;

SplitCase classify(unsigned n, unsigned d) {
    unsigned boundary = d * (d - 1) + 1;
    if (n == boundary)
        return SplitCase::BoundaryCase;
    if (n > boundary)
        return SplitCase::OutsideTheoremRange;
    if (n % d == 0)
        return SplitCase::DividesCase;
    return SplitCase::NoSplitPossible;
}

// 1 + q^d + ... + q^((i-1)d)
bigint divides_exponent(u64 q, unsigned d, unsigned i) {
    bigint E = 0;
    for (unsigned t = 0; t < i; ++t)
        E += boost::multiprecision::pow(bigint(q), t * d);
    return E;
}

// The only b that completes a splitting pair for this a (by the shape of
// the characterization), ignoring the field-level flag; nullopt when a's
// own conditions already fail.
std::optional<u64> candidate_b_code(const FieldSpec& f, unsigned d, const FieldElement& a) {
    switch (classify(f.n, d)) {
    case SplitCase::BoundaryCase:
        if (!norm_condition_holds(f, d, a))
            return std::nullopt;
        return encode(f, canonical_b(f, d, a));
    case SplitCase::DividesCase: {
        bigint E = divides_exponent(f.q, d, f.n / d);
        if (!(pow(f, a, E) == one(f)))
            return std::nullopt;
        return 0;
    }
    default:
        return std::nullopt;
    }
}

// Field-level part of the prediction, independent of (a, b).
bool field_level_ok(const FieldSpec& f, unsigned d) {
    switch (classify(f.n, d)) {
    case SplitCase::BoundaryCase:
        return is_power_of(d - 1, f.p);
    case SplitCase::DividesCase:
        return true;
    default:
        return false;
    }
}

unsigned pair_nullity(const FieldSpec& f, unsigned d, u64 ca, u64 cb) {
    TrinomialParams t = make_trinomial(f, d, decode(f, ca), decode(f, cb));
    return nullity_fast(to_linearized(t));
}

void require_in_range(const FieldSpec& f, unsigned d, const char* who) {
    if (classify(f.n, d) == SplitCase::OutsideTheoremRange)
        throw outside_theorem_range_error(std::string(who) + ": n = " + std::to_string(f.n) +
                                          " exceeds d(d-1)+1 = " + std::to_string(d * (d - 1) + 1) +
                                          "; no characterization applies");
}

// Runs body(lo, hi, bucket) over a partition of [0, total) on `workers`
// threads and concatenates the buckets in chunk order, so the output is
// independent of the worker count.
template <typename Body>
std::vector<SplitPair> chunked_pairs(u64 total, unsigned workers, Body&& body) {
    if (workers == 0)
        workers = 1;
    std::vector<std::vector<SplitPair>> buckets(workers);
    if (workers == 1) {
        body(u64(0), total, buckets[0]);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(workers);
        u64 step = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            u64 lo = std::min(total, w * step), hi = std::min(total, (w + 1) * step);
            pool.emplace_back([&, w, lo, hi] {
                try {
                    body(lo, hi, buckets[w]);
                } catch (...) {
                    errs[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool)
            t.join();
        for (auto& e : errs)
            if (e)
                std::rethrow_exception(e);
    }
    std::vector<SplitPair> out;
    for (auto& b : buckets)
        out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace

TrinomialParams make_trinomial(FieldSpec field, unsigned d, FieldElement a, FieldElement b) {
    if (d < 2)
        throw out_of_range_error("make_trinomial: d must be >= 2 (d = 1 is a plain binomial)");
    if (a.c.size() != field.degree() || b.c.size() != field.degree())
        throw field_mismatch_error("make_trinomial: coefficient length does not match field");
    return TrinomialParams{std::move(field), d, std::move(a), std::move(b)};
}

LinearizedPoly to_linearized(const TrinomialParams& t) {
    const FieldSpec& f = t.field;
    std::vector<FieldElement> coeffs(t.d + 1, zero(f));
    coeffs[0] = neg(f, t.a);
    coeffs[1] = neg(f, t.b);
    coeffs[t.d] = one(f);
    return make_linearized(f, std::move(coeffs));
}

SplitVerdict predict_split(const TrinomialParams& t) {
    const FieldSpec& f = t.field;
    unsigned d = t.d;
    SplitVerdict v;
    v.case_tag = classify(f.n, d);
    switch (v.case_tag) {
    case SplitCase::OutsideTheoremRange:
        v.predicted = TriState::Unknown;
        break;
    case SplitCase::NoSplitPossible:
        v.predicted = TriState::No;
        break;
    case SplitCase::DividesCase: {
        v.i = f.n / d;
        bigint E = divides_exponent(f.q, d, v.i);
        v.subfield_norm = pow(f, t.a, E);
        bool yes = *v.subfield_norm == one(f) && t.b.is_zero();
        v.predicted = yes ? TriState::Yes : TriState::No;
        break;
    }
    case SplitCase::BoundaryCase: {
        v.norm_value = norm_rel(f, t.a);
        v.char_power_flag = is_power_of(d - 1, f.p);
        auto [e1, e2] = boundary_exponents(f.q, d);
        (void)e2;
        v.required_b = neg(f, pow(f, t.a, bigint(f.q) * e1)); // 0 for a = 0
        bool yes = *v.norm_value == minus_one_power(f, d - 1) && t.b == *v.required_b &&
                   *v.char_power_flag;
        v.predicted = yes ? TriState::Yes : TriState::No;
        break;
    }
    }
    return v;
}

FieldElement canonical_b(const FieldSpec& f, unsigned d, const FieldElement& a) {
    if (a.is_zero())
        throw division_by_zero_error("canonical_b: a must be nonzero");
    auto [e1, e2] = boundary_exponents(f.q, d);
    (void)e2;
    return neg(f, pow(f, a, bigint(f.q) * e1));
}

bool norm_condition_holds(const FieldSpec& f, unsigned d, const FieldElement& a) {
    if (d < 2)
        throw out_of_range_error("norm_condition_holds: d must be >= 2");
    return norm_rel(f, a) == minus_one_power(f, static_cast<long long>(d) - 1);
}

bool secondary_condition_holds(const FieldSpec& f, unsigned d, const FieldElement& a) {
    auto [e1, e2] = boundary_exponents(f.q, d);
    bigint exp = 1 + bigint(f.q) * e1 * e2;
    return pow(f, a, exp) == minus_one_power(f, static_cast<long long>(d) - 1);
}

bool necessary_norm_filter(const TrinomialParams& t) {
    const FieldSpec& f = t.field;
    long long k = static_cast<long long>(f.n) * (t.d - 1);
    return norm_rel(f, t.a) == minus_one_power(f, k);
}

std::vector<SplitPair> enumerate_splitting(const FieldSpec& f, unsigned d, SearchMode mode,
                                           unsigned workers) {
    if (d < 2)
        throw out_of_range_error("enumerate_splitting: d must be >= 2");

    auto theorem_route = [&]() {
        require_in_range(f, d, "enumerate_splitting");
        if (!field_level_ok(f, d))
            return std::vector<SplitPair>{};
        if (f.order > kCandidateGuard)
            throw infeasible_sweep_error("enumerate_splitting: field too large for a candidate scan");
        auto out = chunked_pairs(f.order, workers, [&](u64 lo, u64 hi, std::vector<SplitPair>& b) {
            for (u64 ca = lo; ca < hi; ++ca) {
                auto cb = candidate_b_code(f, d, decode(f, ca));
                if (!cb)
                    continue;
                if (pair_nullity(f, d, ca, *cb) != d)
                    throw invariant_violation_error(
                        "enumerate_splitting: a predicted splitting pair does not split");
                b.push_back({ca, *cb});
            }
        });
        std::sort(out.begin(), out.end());
        return out;
    };

    auto exhaustive_route = [&]() {
        if (f.order > kExhaustiveGuard)
            throw infeasible_sweep_error("enumerate_splitting: order " + std::to_string(f.order) +
                                         " exceeds the exhaustive sweep guard");
        auto out = chunked_pairs(f.order, workers, [&](u64 lo, u64 hi, std::vector<SplitPair>& b) {
            for (u64 ca = lo; ca < hi; ++ca)
                for (u64 cb = 0; cb < f.order; ++cb)
                    if (pair_nullity(f, d, ca, cb) == d)
                        b.push_back({ca, cb});
        });
        std::sort(out.begin(), out.end());
        return out;
    };

    switch (mode) {
    case SearchMode::Theorem:
        return theorem_route();
    case SearchMode::Exhaustive:
        return exhaustive_route();
    case SearchMode::Both: {
        auto a = theorem_route();
        auto b = exhaustive_route();
        if (a != b)
            throw invariant_violation_error(
                "enumerate_splitting: theorem and exhaustive enumerations disagree");
        return a;
    }
    }
    throw out_of_range_error("enumerate_splitting: bad mode");
}

bigint count_splitting(const FieldSpec& f, unsigned d) {
    if (d < 2)
        throw out_of_range_error("count_splitting: d must be >= 2");
    require_in_range(f, d, "count_splitting");
    bigint qn = boost::multiprecision::pow(bigint(f.q), f.n);
    switch (classify(f.n, d)) {
    case SplitCase::BoundaryCase:
        if (!is_power_of(d - 1, f.p))
            return 0;
        return (qn - 1) / (bigint(f.q) - 1);
    case SplitCase::DividesCase:
        return boost::multiprecision::gcd(divides_exponent(f.q, d, f.n / d), qn - 1);
    default:
        return 0;
    }
}

VerifyReport verify_characterization(const FieldSpec& f, unsigned d, int part,
                                     const VerifyOptions& opt) {
    if (d < 2)
        throw out_of_range_error("verify_characterization: d must be >= 2");
    unsigned n = f.n;
    unsigned boundary = d * (d - 1) + 1;
    bool part_ok = false;
    switch (part) {
    case 1: part_ok = n <= d * (d - 1) && n % d != 0; break;
    case 2: part_ok = n % d == 0 && n / d >= 1 && n / d <= d - 1; break;
    case 3: part_ok = n == boundary; break;
    default:
        throw out_of_range_error("verify_characterization: part must be 1, 2 or 3");
    }
    if (!part_ok)
        throw out_of_range_error("verify_characterization: n = " + std::to_string(n) +
                                 " does not belong to part " + std::to_string(part));

    unsigned workers = opt.workers ? opt.workers : 1;
    bool exhaustive;
    switch (opt.mode) {
    case VerifyOptions::Mode::Exhaustive:
        if (f.order > kExhaustiveGuard)
            throw infeasible_sweep_error("verify_characterization: order exceeds the sweep guard");
        exhaustive = true;
        break;
    case VerifyOptions::Mode::Sample:
        exhaustive = false;
        break;
    case VerifyOptions::Mode::Auto:
    default:
        exhaustive = f.order <= kAutoExhaustive;
        break;
    }

    VerifyReport rep;
    rep.q = f.q;
    rep.d = d;
    rep.n = n;
    rep.part = part;
    rep.exhaustive = exhaustive;

    bool field_ok = field_level_ok(f, d);

    struct Chunk {
        std::map<unsigned, u64> census;
        std::vector<SplitPair> cex;
        u64 cex_total = 0;
        u64 splitting = 0;
        u64 pairs = 0;
    };

    // Examines one pair and folds it into a chunk.
    auto check_pair = [&](u64 ca, u64 cb, const std::optional<u64>& want_b, Chunk& c) {
        unsigned nul = pair_nullity(f, d, ca, cb);
        ++c.census[nul];
        ++c.pairs;
        bool actual = nul == d;
        bool predicted = field_ok && want_b && cb == *want_b;
        if (actual)
            ++c.splitting;
        if (actual != predicted) {
            ++c.cex_total;
            if (c.cex.size() < kMaxStoredCounterexamples)
                c.cex.push_back({ca, cb});
        }
    };

    auto merge = [&rep](std::vector<Chunk>& chunks) {
        for (auto& c : chunks) {
            for (auto& [k, v] : c.census)
                rep.census[k] += v;
            rep.splitting_count += c.splitting;
            rep.counterexample_count += c.cex_total;
            for (auto& pr : c.cex)
                if (rep.counterexamples.size() < kMaxStoredCounterexamples)
                    rep.counterexamples.push_back(pr);
            rep.pairs_checked += c.pairs;
        }
    };

    auto run_chunked = [&](u64 total, auto&& body) {
        std::vector<Chunk> chunks(workers);
        if (workers == 1) {
            body(u64(0), total, chunks[0]);
        } else {
            std::vector<std::thread> pool;
            std::vector<std::exception_ptr> errs(workers);
            u64 step = (total + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w) {
                u64 lo = std::min(total, w * step), hi = std::min(total, (w + 1) * step);
                pool.emplace_back([&, w, lo, hi] {
                    try {
                        body(lo, hi, chunks[w]);
                    } catch (...) {
                        errs[w] = std::current_exception();
                    }
                });
            }
            for (auto& t : pool)
                t.join();
            for (auto& e : errs)
                if (e)
                    std::rethrow_exception(e);
        }
        merge(chunks);
    };

    if (exhaustive) {
        run_chunked(f.order, [&](u64 lo, u64 hi, Chunk& c) {
            for (u64 ca = lo; ca < hi; ++ca) {
                auto want_b = candidate_b_code(f, d, decode(f, ca));
                for (u64 cb = 0; cb < f.order; ++cb)
                    check_pair(ca, cb, want_b, c);
            }
        });
        return rep;
    }

    // Sample mode: theorem-filtered candidates first (skipped above the
    // candidate-scan guard), then the seeded uniform sample.
    if (f.order <= kCandidateGuard) {
        std::vector<Chunk> one(1);
        for (u64 ca = 0; ca < f.order; ++ca) {
            auto want_b = candidate_b_code(f, d, decode(f, ca));
            if (!want_b)
                continue;
            check_pair(ca, *want_b, want_b, one[0]);
            ++rep.candidates_checked;
        }
        merge(one);
    }

    std::vector<SplitPair> sample(opt.samples);
    {
        std::mt19937_64 rng(opt.seed);
        for (auto& pr : sample)
            pr = {rng() % f.order, rng() % f.order};
    }
    run_chunked(opt.samples, [&](u64 lo, u64 hi, Chunk& c) {
        for (u64 t = lo; t < hi; ++t) {
            auto [ca, cb] = sample[t];
            auto want_b = candidate_b_code(f, d, decode(f, ca));
            check_pair(ca, cb, want_b, c);
        }
    });
    rep.samples_checked = opt.samples;
    return rep;
}

} // namespace linfield
