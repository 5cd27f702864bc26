#include "wrz/poly.hpp"

#include <algorithm>

namespace wrz {

Rational RatPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

RatPoly RatPoly::operator-() const {
    RatPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(out));
}

RatPoly derivative(const RatPoly& p, int order) {
    if (order < 0) throw parameter_error("derivative order must be nonnegative");
    RatPoly cur = p;
    for (int k = 0; k < order; ++k) {
        if (cur.is_zero()) break;
        std::vector<Rational> out;
        const auto& c = cur.coeffs();
        out.reserve(c.size() > 0 ? c.size() - 1 : 0);
        for (size_t i = 1; i < c.size(); ++i)
            out.push_back(c[i] * Rational(static_cast<long>(i)));
        cur = RatPoly(std::move(out));
    }
    return cur;
}

DivMod divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw zero_polynomial_error("division by the zero polynomial");
    DivMod r;
    r.rem = a;
    if (a.degree() < b.degree()) return r;
    std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& lb = b.leading();
    while (!r.rem.is_zero() && r.rem.degree() >= b.degree()) {
        int shift = r.rem.degree() - b.degree();
        Rational factor = r.rem.leading() / lb;
        q[static_cast<size_t>(shift)] = factor;
        r.rem -= RatPoly::monomial(factor, shift) * b;
    }
    r.quot = RatPoly(std::move(q));
    return r;
}

RatPoly divexact(const RatPoly& a, const RatPoly& b) {
    DivMod d = divmod(a, b);
    if (!d.rem.is_zero())
        throw error("divexact: division left a remainder");
    return d.quot;
}

Rational content(const RatPoly& p) {
    if (p.is_zero()) return Rational(0);
    Integer num_gcd(0);
    Integer den_lcm(1);
    for (const auto& c : p.coeffs()) {
        if (sgn(c) == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return rat(num_gcd, den_lcm);
}

RatPoly primitive_part(const RatPoly& p) {
    if (p.is_zero()) return p;
    Rational c = content(p);
    RatPoly out = p;
    out *= Rational(1) / c;
    return out;
}

RatPoly monic(const RatPoly& p) {
    if (p.is_zero()) throw zero_polynomial_error("cannot normalize the zero polynomial");
    RatPoly out = p;
    out *= Rational(1) / p.leading();
    return out;
}

RatPoly prem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw zero_polynomial_error("pseudo-division by the zero polynomial");
    if (a.degree() < b.degree())
        throw parameter_error("prem requires deg a >= deg b");
    RatPoly r = a;
    const Rational& lb = b.leading();
    int e = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        RatPoly t = RatPoly::monomial(r.leading(), shift) * b;
        r *= lb;
        r -= t;
        --e;
    }
    // Pad so the total scaling is exactly lc(b)^(deg a - deg b + 1).
    for (; e > 0; --e) r *= lb;
    return r;
}

std::string to_string(const RatPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    const auto& c = p.coeffs();
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& v = c[static_cast<size_t>(i)];
        if (sgn(v) == 0) continue;
        if (!s.empty()) s += sgn(v) > 0 ? " + " : " - ";
        else if (sgn(v) < 0) s += "-";
        Rational a = abs(v);
        bool unit = (a == 1);
        if (i == 0) {
            s += rat_to_string(a);
        } else {
            if (!unit) s += rat_to_string(a) + "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace wrz
