#include "wrz/families.hpp"

#include "wrz/errors.hpp"

namespace wrz {

FamilySpec FamilySpec::hermite() {
    FamilySpec f;
    f.kind_ = FamilyKind::Hermite;
    f.interval_ = Interval::whole();
    return f;
}

FamilySpec FamilySpec::laguerre(Rational alpha) {
    if (alpha <= -1)
        throw parameter_error("Laguerre requires alpha > -1");
    FamilySpec f;
    f.kind_ = FamilyKind::Laguerre;
    f.alpha_ = std::move(alpha);
    f.interval_ = Interval::greater_than(Rational(0));
    return f;
}

FamilySpec FamilySpec::jacobi(Rational alpha, Rational beta) {
    if (alpha <= -1 || beta <= -1)
        throw parameter_error("Jacobi requires alpha > -1 and beta > -1");
    FamilySpec f;
    f.kind_ = FamilyKind::Jacobi;
    f.alpha_ = std::move(alpha);
    f.beta_ = std::move(beta);
    f.interval_ = Interval::open(Rational(-1), Rational(1));
    return f;
}

namespace {

// L[p] for the functional with L[x^k] = moments[k].
Rational apply_moment_functional(const std::vector<Rational>& moments, const RatPoly& p) {
    Rational acc(0);
    for (int i = 0; i <= p.degree(); ++i) {
        if (static_cast<size_t>(i) >= moments.size())
            throw moments_error("moment list too short for degree " + std::to_string(i), i);
        acc += p.coeff(i) * moments[static_cast<size_t>(i)];
    }
    return acc;
}

// Monic orthogonal polynomials by Gram-Schmidt against the moment
// functional; norms must stay strictly positive (Hankel positive
// definiteness), otherwise moments_error with the failing order.
std::vector<RatPoly> moment_orthogonal_basis(const std::vector<Rational>& moments, int n) {
    std::vector<RatPoly> basis;
    std::vector<Rational> norms;
    for (int d = 0; d <= n; ++d) {
        RatPoly p = RatPoly::monomial(Rational(1), d);
        for (int j = 0; j < d; ++j) {
            Rational proj =
                apply_moment_functional(moments, p * basis[static_cast<size_t>(j)]) /
                norms[static_cast<size_t>(j)];
            p -= proj * basis[static_cast<size_t>(j)];
        }
        Rational norm = apply_moment_functional(moments, p * p);
        if (sgn(norm) <= 0)
            throw moments_error(
                "Hankel matrix not positive definite at order " + std::to_string(d), d);
        basis.push_back(std::move(p));
        norms.push_back(std::move(norm));
    }
    return basis;
}

} // namespace

FamilySpec FamilySpec::from_moments(std::vector<Rational> moments, Interval support) {
    if (moments.empty())
        throw moments_error("empty moment list", 0);
    FamilySpec f;
    f.kind_ = FamilyKind::FromMoments;
    f.moments_ = std::move(moments);
    f.interval_ = std::move(support);
    // Validate up to the largest degree the list supports.
    int max_n = (static_cast<int>(f.moments_.size()) - 1) / 2;
    moment_orthogonal_basis(f.moments_, max_n);
    return f;
}

bool FamilySpec::symmetric() const {
    if (kind_ == FamilyKind::Hermite) return true;
    if (kind_ == FamilyKind::Jacobi) return alpha_ == beta_;
    return false;
}

int FamilySpec::max_degree() const {
    if (kind_ == FamilyKind::FromMoments)
        return (static_cast<int>(moments_.size()) - 1) / 2;
    return -1;
}

std::string FamilySpec::name() const {
    switch (kind_) {
        case FamilyKind::Hermite:
            return "hermite";
        case FamilyKind::Laguerre:
            return "laguerre(" + rat_to_string(alpha_) + ")";
        case FamilyKind::Jacobi:
            return "jacobi(" + rat_to_string(alpha_) + "," + rat_to_string(beta_) + ")";
        case FamilyKind::FromMoments:
            return "moments";
    }
    return "?";
}

RatPoly classical_poly(const FamilySpec& fam, int n) {
    if (n < 0) throw parameter_error("polynomial degree must be nonnegative");
    const Rational one(1);
    const Rational two(2);
    switch (fam.kind()) {
        case FamilyKind::Hermite: {
            // H_{n+1} = 2x H_n - 2n H_{n-1}
            RatPoly prev = RatPoly::constant(one);
            if (n == 0) return prev;
            RatPoly cur{Rational(0), two}; // 2x
            RatPoly x{Rational(0), one};
            for (int i = 1; i < n; ++i) {
                RatPoly next = two * (x * cur) - Rational(2L * i) * prev;
                prev = std::move(cur);
                cur = std::move(next);
            }
            return cur;
        }
        case FamilyKind::Laguerre: {
            // (n+1) L_{n+1} = (2n+1+alpha-x) L_n - (n+alpha) L_{n-1}
            const Rational& a = fam.alpha();
            RatPoly prev = RatPoly::constant(one);
            if (n == 0) return prev;
            RatPoly cur{one + a, -one};
            for (int i = 1; i < n; ++i) {
                RatPoly mid{Rational(2L * i + 1) + a, -one};
                RatPoly next = mid * cur - (Rational(i) + a) * prev;
                next *= one / Rational(i + 1);
                prev = std::move(cur);
                cur = std::move(next);
            }
            return cur;
        }
        case FamilyKind::Jacobi: {
            const Rational& a = fam.alpha();
            const Rational& b = fam.beta();
            RatPoly prev = RatPoly::constant(one);
            if (n == 0) return prev;
            // P_1 = (alpha+1) + (alpha+beta+2)(x-1)/2
            RatPoly cur{a + one - (a + b + two) / two, (a + b + two) / two};
            for (int i = 2; i <= n; ++i) {
                Rational ni(i);
                Rational s = two * ni + a + b; // 2n+a+b
                Rational c0 = two * ni * (ni + a + b) * (s - two);
                Rational c1 = (s - one) * (a * a - b * b);
                Rational c2 = (s - one) * s * (s - two);
                Rational c3 = two * (ni + a - one) * (ni + b - one) * s;
                RatPoly lin{c1, c2};
                RatPoly next = lin * cur - c3 * prev;
                next *= one / c0;
                prev = std::move(cur);
                cur = std::move(next);
            }
            return cur;
        }
        case FamilyKind::FromMoments:
            throw parameter_error("classical_poly called on a moment-defined family");
    }
    throw parameter_error("unknown family kind");
}

RatPoly from_moments(const std::vector<Rational>& moments, int n) {
    if (n < 0) throw parameter_error("polynomial degree must be nonnegative");
    auto basis = moment_orthogonal_basis(moments, n);
    return basis[static_cast<size_t>(n)];
}

RatPoly family_poly(const FamilySpec& fam, int n) {
    if (fam.kind() == FamilyKind::FromMoments) {
        int max_n = fam.max_degree();
        if (n > max_n)
            throw moments_error("moment list supports degrees up to " +
                                    std::to_string(max_n) + ", asked for " + std::to_string(n),
                                n);
        return from_moments(fam.moments(), n);
    }
    return classical_poly(fam, n);
}

const RatPoly& DerivativeTable::poly(int n) { return deriv(n, 0); }

const RatPoly& DerivativeTable::deriv(int n, int order) {
    if (n < 0 || order < 0) throw parameter_error("negative index in derivative table");
    auto& row = rows_[n];
    if (row.empty()) row.push_back(family_poly(fam_, n));
    while (static_cast<int>(row.size()) <= order)
        row.push_back(derivative(row.back()));
    return row[static_cast<size_t>(order)];
}

} // namespace wrz
