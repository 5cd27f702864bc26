#ifndef WRZ_FAMILIES_HPP
#define WRZ_FAMILIES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wrz/interval.hpp"
#include "wrz/poly.hpp"

namespace wrz {

enum class FamilyKind { Hermite, Laguerre, Jacobi, FromMoments };

/// A classical family (physicists' Hermite, standard Laguerre/Jacobi) or
/// an orthogonal system built from an explicit rational moment sequence.
class FamilySpec {
public:
    static FamilySpec hermite();
    static FamilySpec laguerre(Rational alpha);
    static FamilySpec jacobi(Rational alpha, Rational beta);
    // Hankel positive definiteness is checked up to the largest degree the
    // moment list supports; moments_error carries the failing order.
    static FamilySpec from_moments(std::vector<Rational> moments, Interval support);

    FamilyKind kind() const { return kind_; }
    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    const std::vector<Rational>& moments() const { return moments_; }
    const Interval& interval() const { return interval_; }

    // True exactly for Hermite and Jacobi with alpha == beta: only these
    // have an even weight, so only these get the symmetric predictor.
    bool symmetric() const;

    int max_degree() const; // -1 = unbounded (classical families)

    std::string name() const;

private:
    FamilySpec() = default;
    FamilyKind kind_ = FamilyKind::Hermite;
    Rational alpha_;
    Rational beta_;
    std::vector<Rational> moments_;
    Interval interval_;
};

/// Degree-n member of a classical family in its standard normalization.
RatPoly classical_poly(const FamilySpec& fam, int n);

/// Monic orthogonal polynomial for the moment functional m_k = L[x^k].
RatPoly from_moments(const std::vector<Rational>& moments, int n);

/// Dispatches on the family kind.
RatPoly family_poly(const FamilySpec& fam, int n);

/// Per-worker cache of polynomials and their derivative rows, keyed by
/// (index, order). Not synchronized: confine one instance to one thread.
class DerivativeTable {
public:
    explicit DerivativeTable(FamilySpec fam) : fam_(std::move(fam)) {}

    const FamilySpec& family() const { return fam_; }
    const RatPoly& poly(int n);
    const RatPoly& deriv(int n, int order);

private:
    FamilySpec fam_;
    std::map<int, std::vector<RatPoly>> rows_; // rows_[n][order]
};

} // namespace wrz

#endif
