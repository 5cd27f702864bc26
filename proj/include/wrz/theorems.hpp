#ifndef WRZ_THEOREMS_HPP
#define WRZ_THEOREMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "wrz/partition.hpp"
#include "wrz/polyalg.hpp"
#include "wrz/wronskian.hpp"

namespace wrz {

/// Alternating sum over the parts: the predicted number of distinct real
/// zeros in the orthogonality interval for a non-symmetric family.
int predicted_count_generic(const Partition& lam);

struct SymmetricPrediction {
    int origin_multiplicity = 0; // d(d+1)/2
    int positive_count = 0;
    int negative_count = 0; // equals positive_count by parity
    int total_distinct = 0; // 2*positive + (origin present ? 1 : 0)
};

/// Predictor for even-weight families (Hermite, Gegenbauer). Throws
/// non_integer_prediction if the closed form does not evaluate to a
/// nonnegative integer, which can only mean a convention mismatch.
SymmetricPrediction predicted_symmetric(const Partition& lam);

/// True iff k splits into an optional run of consecutive integers from 0
/// followed by even-length runs of consecutive integers.
bool adler_admissible(const MultiIndex& k);

/// p(x) = prod (x - k_j) satisfies p(n) >= 0 for every natural n; decided
/// exactly on n = 0 .. max(k)+1.
bool krein_nonnegative(const MultiIndex& k);

struct DegeneracyWitness {
    // probe_m == -1 encodes the base Wronskian f_lambda in the pair.
    int probe_m = -1;
    int probe_n = -1;
    int common_root_count = 0; // inside the family interval, origin excluded
                               // for symmetric families
    RatPoly common_factor;
    std::string describe() const;
};

/// Probes indices m (not in the multi-index), forms the extended
/// Wronskians, and reports any common root of (f_lambda, f_{lambda,m}) or
/// (f_{lambda,m}, f_{lambda,n}) inside the interval. For symmetric
/// families a common root at the origin is allowed (semi-degeneracy) and
/// stripped before counting. Empty result = clean.
std::vector<DegeneracyWitness> degeneracy_scan(DerivativeTable& tab, const Partition& lam,
                                               const std::vector<int>& probes);

/// The `count` smallest nonnegative integers absent from k.
std::vector<int> default_probes(const MultiIndex& k, int count);

struct RootMultiplicity {
    int multiplicity = 0;
    int distinct_roots = 0; // distinct roots in the interval with this multiplicity
};

struct VerificationReport {
    FamilySpec family;
    Partition partition;
    MultiIndex k;
    int d = 0;
    bool symmetric = false;

    int predicted_total = 0;
    std::optional<SymmetricPrediction> predicted_sym;

    int exact_count = 0;
    int exact_origin_mult = 0;
    std::optional<int> exact_positive; // symmetric families only
    std::optional<int> exact_negative;
    std::vector<RootMultiplicity> root_multiplicities;
    bool all_simple_except_origin = true;

    std::vector<DegeneracyWitness> witnesses;
    bool degenerate = false;
    bool endpoint_root_lo = false;
    bool endpoint_root_hi = false;

    bool pass = false;

    VerificationReport(FamilySpec f, Partition p, MultiIndex kk)
        : family(std::move(f)), partition(std::move(p)), k(std::move(kk)) {}
};

/// Full pipeline for one partition: exact Wronskian, Sturm counts, origin
/// multiplicity, per-root multiplicities, degeneracy scan, and the
/// comparison against the closed-form predictor selected by symmetry.
VerificationReport verify_partition(DerivativeTable& tab, const Partition& lam,
                                    int probe_count = 2);
VerificationReport verify_partition(const FamilySpec& fam, const Partition& lam,
                                    int probe_count = 2);

struct DualityResult {
    bool holds = false;
    Rational constant; // H_conj(x) = constant * (-i)^|lam| H_lam(ix)
};

/// Hermite conjugation duality, checked up to a rational constant.
DualityResult duality_check(const Partition& lam);

struct FelderCounts {
    int real_roots = 0;
    int imaginary_roots = 0; // distinct purely imaginary roots, via rotation
};

/// Measured counts for the doubled partition (mu_1^2, ..., mu_n^2) of
/// Hermite polynomials; the expected values are (0, 2 * #odd entries).
FelderCounts felder_counts(const std::vector<int>& mu);

struct KarlinResult {
    int count = 0;
    std::optional<bool> interlaces_with_next; // even l only
};

/// Wronskian of l consecutive members starting at degree n: root count in
/// the interval, plus strict interlacing against the n+1 case when l is
/// even.
KarlinResult karlin_szego_check(const FamilySpec& fam, int n, int ell);

struct SimplicityResult {
    bool all_simple_except_origin = false; // over all complex roots
    int origin_mult = 0;
};

/// Squarefree-decomposition check that every repeated factor of the
/// Wronskian is a power of x; covers complex roots as well.
SimplicityResult simplicity_check(const FamilySpec& fam, const Partition& lam);

} // namespace wrz

#endif
