#pragma once

#include <stdexcept>

namespace linfield {

// Base class for all library errors.  The CLI maps these onto its exit
// contract: invalid or infeasible input -> exit 1, invariant_violation_error
// -> exit 2.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_prime_error : error { using error::error; };
struct capacity_error : error { using error::error; };
struct dimension_mismatch_error : error { using error::error; };
struct field_mismatch_error : error { using error::error; };
struct division_by_zero_error : error { using error::error; };
struct out_of_range_error : error { using error::error; };
struct infeasible_sweep_error : error { using error::error; };
struct outside_theorem_range_error : error { using error::error; };

// A mathematically impossible state was reached: a proven identity failed
// at runtime.  Indicates a bug, never bad input.
struct invariant_violation_error : error { using error::error; };

} // namespace linfield
