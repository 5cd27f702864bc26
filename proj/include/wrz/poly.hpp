#ifndef WRZ_POLY_HPP
#define WRZ_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "wrz/errors.hpp"
#include "wrz/rational.hpp"

namespace wrz {

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs[i] is the coefficient of x^i; the zero polynomial is the empty
/// list and every nonzero polynomial has a nonzero trailing (leading)
/// coefficient.
class RatPoly {
public:
    RatPoly() = default;

    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        trim();
    }

    RatPoly(std::initializer_list<Rational> coeffs)
        : c_(coeffs.begin(), coeffs.end()) {
        trim();
    }

    static RatPoly constant(Rational v) {
        RatPoly p;
        p.c_.push_back(std::move(v));
        p.trim();
        return p;
    }

    static RatPoly monomial(Rational v, int deg) {
        RatPoly p;
        if (sgn(v) != 0) {
            p.c_.assign(static_cast<size_t>(deg) + 1, Rational(0));
            p.c_.back() = std::move(v);
        }
        return p;
    }

    // Convenience for integer coefficient lists (index i = coeff of x^i).
    static RatPoly from_ints(std::initializer_list<long> coeffs) {
        std::vector<Rational> v;
        v.reserve(coeffs.size());
        for (long x : coeffs) v.emplace_back(x);
        return RatPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return c_; }

    // Zero outside the stored range.
    const Rational& coeff(int i) const {
        static const Rational kZero(0);
        if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
        return c_[static_cast<size_t>(i)];
    }

    const Rational& leading() const {
        if (is_zero()) throw zero_polynomial_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    Rational operator()(const Rational& x) const;

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const Rational& s);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
    friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

RatPoly derivative(const RatPoly& p, int order = 1);

struct DivMod {
    RatPoly quot;
    RatPoly rem;
};

// Euclidean division over Q[x]; divisor must be nonzero.
DivMod divmod(const RatPoly& a, const RatPoly& b);

// Division known to be exact; throws error if a remainder appears.
RatPoly divexact(const RatPoly& a, const RatPoly& b);

// Positive rational c such that p/c has coprime integer coefficients;
// zero for the zero polynomial.
Rational content(const RatPoly& p);
RatPoly primitive_part(const RatPoly& p);

RatPoly monic(const RatPoly& p);

// Pseudo-remainder: the remainder of lc(b)^(deg a - deg b + 1) * a by b,
// computed without rational division. Requires deg a >= deg b >= 0.
RatPoly prem(const RatPoly& a, const RatPoly& b);

std::string to_string(const RatPoly& p);

} // namespace wrz

#endif
