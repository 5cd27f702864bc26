#ifndef WRZ_RATIONAL_HPP
#define WRZ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace wrz {

// Exact arithmetic throughout: GMP rationals are kept canonical
// (reduced, positive denominator) by construction.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& r) { return sgn(r); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer rat_floor(const Rational& r);

// Parses "p/q" or "p" with optional sign; throws parameter_error on junk.
Rational rat_from_string(const std::string& s);

// Canonical wire form: "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rational& r);

} // namespace wrz

#endif
