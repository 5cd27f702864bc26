#ifndef WRZ_ERRORS_HPP
#define WRZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wrz {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Domain errors raised by the algebra kernel.
struct zero_polynomial_error : error {
    zero_polynomial_error() : error("operation requires a nonzero polynomial") {}
    explicit zero_polynomial_error(const std::string& what) : error(what) {}
};

struct both_zero_error : error {
    both_zero_error() : error("gcd of two zero polynomials is undefined") {}
};

// A coefficient breaks the parity the imaginary rotation requires.
struct parity_violation : error {
    using error::error;
};

struct parameter_error : error {
    using error::error;
};

struct duplicate_index_error : error {
    using error::error;
};

struct not_increasing_error : error {
    not_increasing_error() : error("indices must be strictly increasing") {}
    explicit not_increasing_error(const std::string& what) : error(what) {}
};

// A closed-form count evaluated to something other than a nonnegative
// integer; this can only come from a convention mismatch, never from data.
struct non_integer_prediction : error {
    using error::error;
};

struct moments_error : error {
    int failing_order;
    moments_error(const std::string& what, int order)
        : error(what), failing_order(order) {}
};

} // namespace wrz

#endif
