#ifndef WRZ_INTERVAL_HPP
#define WRZ_INTERVAL_HPP

#include <optional>
#include <string>

#include "wrz/errors.hpp"
#include "wrz/rational.hpp"

namespace wrz {

// Open interval; an absent endpoint means the corresponding infinity.
struct Interval {
    std::optional<Rational> lo; // nullopt = -inf
    std::optional<Rational> hi; // nullopt = +inf

    static Interval whole() { return {}; }

    static Interval greater_than(Rational a) {
        Interval iv;
        iv.lo = std::move(a);
        return iv;
    }

    static Interval less_than(Rational b) {
        Interval iv;
        iv.hi = std::move(b);
        return iv;
    }

    static Interval open(Rational a, Rational b) {
        if (a >= b)
            throw parameter_error("interval endpoints must satisfy lo < hi");
        Interval iv;
        iv.lo = std::move(a);
        iv.hi = std::move(b);
        return iv;
    }

    bool contains(const Rational& x) const {
        if (lo && x <= *lo) return false;
        if (hi && x >= *hi) return false;
        return true;
    }
};

inline std::string to_string(const Interval& iv) {
    std::string s = "(";
    s += iv.lo ? rat_to_string(*iv.lo) : "-inf";
    s += ",";
    s += iv.hi ? rat_to_string(*iv.hi) : "inf";
    s += ")";
    return s;
}

} // namespace wrz

#endif
