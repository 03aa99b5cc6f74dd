#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "linfield/field.hpp"
#include "linfield/linpoly.hpp"
#include "linfield/numtheory.hpp"

namespace linfield {

// The two-parameter family x^(q^d) - b x^q - a x over GF(q^n).  d >= 2;
// the d = 1 binomial case belongs to the general linearized machinery.
struct TrinomialParams {
    FieldSpec field;
    unsigned d;
    FieldElement a, b;
};

TrinomialParams make_trinomial(FieldSpec field, unsigned d, FieldElement a, FieldElement b);

// Monic coefficient vector (-a, -b, 0, ..., 0, 1).
LinearizedPoly to_linearized(const TrinomialParams& t);

// How n relates to d decides which splitting test applies.
enum class SplitCase {
    NoSplitPossible,     // n <= d(d-1), d does not divide n: never splits
    DividesCase,         // n = i*d with 1 <= i <= d-1
    BoundaryCase,        // n = d(d-1) + 1
    OutsideTheoremRange, // n > d(d-1) + 1: no prediction available
};

enum class TriState { No, Yes, Unknown };

struct SplitVerdict {
    SplitCase case_tag;
    TriState predicted; // Unknown exactly when case_tag == OutsideTheoremRange
    unsigned i = 0;     // DividesCase: n = i*d

    // conditions examined, where meaningful for the case:
    std::optional<FieldElement> norm_value;    // norm of a relative to GF(q)
    std::optional<FieldElement> required_b;    // -a^(q*e1) at the boundary
    std::optional<bool> char_power_flag;       // d-1 a power of the characteristic
    std::optional<FieldElement> subfield_norm; // a^(1+q^d+...+q^((i-1)d)) in DividesCase
};

// Splitting prediction:
//  - n = i*d, i <= d-1: splits iff a^(1+q^d+...+q^((i-1)d)) = 1 and b = 0;
//  - n = d(d-1)+1: splits iff norm(a) = (-1)^(d-1), b = -a^(q*e1), and d-1
//    is a power of the characteristic;
//  - other n <= d(d-1): never splits;
//  - n > d(d-1)+1: unknown.
SplitVerdict predict_split(const TrinomialParams& t);

// -a^(q*e1), the only b that can complete a splitting pair with a at the
// boundary parameter.  Throws division_by_zero_error when a = 0.
FieldElement canonical_b(const FieldSpec& f, unsigned d, const FieldElement& a);

// norm(a) = (-1)^(d-1)?
bool norm_condition_holds(const FieldSpec& f, unsigned d, const FieldElement& a);

// a^(1 + q*e1*e2) = (-1)^(d-1)?  Implied by the norm condition.
bool secondary_condition_holds(const FieldSpec& f, unsigned d, const FieldElement& a);

// Necessary for splitting at every n: norm(a) = (-1)^(n(d-1)).
bool necessary_norm_filter(const TrinomialParams& t);

enum class SearchMode { Theorem, Exhaustive, Both };

struct SplitPair {
    u64 a_code, b_code;
    auto operator<=>(const SplitPair&) const = default;
};

// All (a, b) whose trinomial splits completely, as codes, sorted by
// (a_code, b_code).  Theorem mode constructs candidates from the predicted
// characterization and verifies each with nullity_fast (a failure there is
// an invariant violation); it throws outside_theorem_range_error when no
// prediction exists.  Exhaustive mode sweeps all order^2 pairs and is
// guarded to order <= 2^13.  Both runs the two and insists they agree.
// The worker count only partitions the sweep; it never changes the result.
std::vector<SplitPair> enumerate_splitting(const FieldSpec& f, unsigned d, SearchMode mode,
                                           unsigned workers = 1);

// Splitting-pair count in closed form: (q^n-1)/(q-1) at the boundary when
// d-1 is a characteristic power (0 otherwise), gcd(1+q^d+...+q^((i-1)d),
// q^n-1) when n = i*d, 0 for the remaining n <= d(d-1); throws
// outside_theorem_range_error beyond the boundary.
bigint count_splitting(const FieldSpec& f, unsigned d);

struct VerifyOptions {
    enum class Mode { Auto, Exhaustive, Sample };
    Mode mode = Mode::Auto;
    unsigned workers = 1;
    u64 samples = 100000; // Sample mode: number of uniform random pairs
    u64 seed = 0x51B153ED; // deterministic sampling
};

struct VerifyReport {
    u64 q = 0;
    unsigned d = 0, n = 0;
    int part = 0;
    bool exhaustive = false;
    u64 pairs_checked = 0;
    u64 candidates_checked = 0; // theorem-filtered candidates (Sample mode)
    u64 samples_checked = 0;
    u64 splitting_count = 0;             // pairs observed with nullity d
    u64 counterexample_count = 0;        // prediction/reality disagreements
    std::vector<SplitPair> counterexamples; // first few, for reporting
    std::map<unsigned, u64> census;      // nullity value -> pair count
};

// Checks the splitting characterization empirically for one (field, d) and
// the theorem part the given n belongs to (1: non-divisible below the
// boundary, 2: n = i*d, 3: boundary).  Exhaustive mode replays every pair;
// Sample mode checks every theorem-filtered candidate plus a seeded uniform
// sample.  Auto picks Exhaustive when order <= 1024.  The worker count
// never changes the report.
VerifyReport verify_characterization(const FieldSpec& f, unsigned d, int part,
                                     const VerifyOptions& opt = {});

} // namespace linfield
