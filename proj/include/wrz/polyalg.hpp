#ifndef WRZ_POLYALG_HPP
#define WRZ_POLYALG_HPP

#include <optional>
#include <vector>

#include "wrz/interval.hpp"
#include "wrz/poly.hpp"

namespace wrz {

/// Monic gcd over Q[x] via a primitive pseudo-remainder sequence.
/// Throws both_zero_error if both inputs vanish.
RatPoly poly_gcd(const RatPoly& p, const RatPoly& q);

struct SquarefreeFactor {
    RatPoly factor; // monic, squarefree
    int multiplicity;
};

/// Yun decomposition: factors are monic, pairwise coprime and squarefree,
/// and the product of factor^multiplicity equals p up to a nonzero constant.
std::vector<SquarefreeFactor> squarefree_decomposition(const RatPoly& p);

/// p with repeated roots stripped (primitive, integer coefficients).
RatPoly squarefree_part(const RatPoly& p);

/// Multiplicity of x0 as a root of p (0 when p(x0) != 0).
int ord_at(const RatPoly& p, const Rational& x0);

/// Sign-variation machinery for a squarefree polynomial. The chain is the
/// classic remainder sequence, with each element scaled by a positive
/// constant only, so variation counts are unchanged.
class SturmChain {
public:
    explicit SturmChain(RatPoly squarefree);

    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    // Distinct roots of the underlying squarefree polynomial strictly
    // inside iv; open-interval semantics, endpoint roots excluded.
    int count(const Interval& iv) const;

    bool is_root(const Rational& x) const { return sgn(seq_.front()(x)) == 0; }

    const RatPoly& poly() const { return seq_.front(); }

private:
    std::vector<RatPoly> seq_;
};

struct RootCountResult {
    int count = 0;
    bool root_at_lo = false; // finite endpoint hit a root (excluded from count)
    bool root_at_hi = false;
};

/// Number of distinct real roots of p strictly inside the open interval.
RootCountResult sturm_count_full(const RatPoly& p, const Interval& iv);
int sturm_count(const RatPoly& p, const Interval& iv);

struct IsolatedRoot {
    Rational lo;
    Rational hi; // lo == hi marks an exact rational root
    int multiplicity = 1;
    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
};

/// Disjoint isolating intervals, one per distinct real root of p in iv,
/// ordered left to right and tagged with the root's multiplicity.
std::vector<IsolatedRoot> isolate_roots(const RatPoly& p, const Interval& iv);

/// Halves the enclosure until width <= max_width (no-op for exact roots).
void refine_root(const SturmChain& chain, IsolatedRoot& root, const Rational& max_width);

/// B such that all real roots of p lie in (-B, B).
Rational cauchy_root_bound(const RatPoly& p);

/// Resultant via the subresultant remainder sequence; zero exactly when
/// p and q share a complex root.
Rational resultant(const RatPoly& p, const RatPoly& q);

/// (-i)^weight * p(ix) as a real polynomial. Every nonzero coefficient of
/// p must sit in degree k == weight (mod 2); otherwise parity_violation.
RatPoly rotate_imaginary(const RatPoly& p, int weight);

} // namespace wrz

#endif
