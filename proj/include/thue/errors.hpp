#pragma once

#include <stdexcept>
#include <string>

namespace thue {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/* Caller passed something outside an operation's contract (mismatched family
 * parameter, negative exponent where none is allowed, malformed file, ...). */
struct argument_error : error {
    using error::error;
};

/* Form evaluation with a = 0 requested without the explicit degenerate flag. */
struct degenerate_form_error : error {
    using error::error;
};

/* Inversion of an order element whose norm is not +-1. */
struct not_a_unit_error : error {
    using error::error;
};

/* log of an interval containing 0, or division by an interval containing 0. */
struct interval_domain_error : error {
    using error::error;
};

/* A refinement loop hit its precision cap before a comparison was decidable. */
struct precision_exhausted_error : error {
    using error::error;
};

/* gamma triple requested for (x, y) = (0, 0), the only zero of the form. */
struct zero_value_error : error {
    using error::error;
};

/* Unit decomposition could not be normalized within the neighbor radius.
 * Best candidate found is reported in the message by its (A, B). */
struct decomposition_error : error {
    decomposition_error(const std::string& what, long long A, long long B)
        : error(what), best_A(A), best_B(B) {}
    long long best_A;
    long long best_B;
};

/* A mathematically guaranteed invariant failed: this is a bug, not bad input.
 * The CLI maps it to exit code 4. */
struct internal_error : error {
    using error::error;
};

}  // namespace thue
