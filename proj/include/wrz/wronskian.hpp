#ifndef WRZ_WRONSKIAN_HPP
#define WRZ_WRONSKIAN_HPP

#include <utility>
#include <vector>

#include "wrz/families.hpp"
#include "wrz/partition.hpp"
#include "wrz/poly.hpp"

namespace wrz {

struct WronskianResult {
    RatPoly poly;
    FamilySpec family;
    Partition partition; // sorted (nondecreasing) form
};

/// Determinant of a square polynomial matrix: fraction-free Bareiss
/// elimination with exact division, cofactor expansion for n <= 3.
RatPoly poly_matrix_det(std::vector<std::vector<RatPoly>> m);

/// Wronskian with columns in the listed index order (no sorting, so the
/// sign convention is exactly the column order given).
RatPoly wronskian_of(DerivativeTable& tab, const std::vector<int>& indices);

/// Wr of the family members selected by lam; degree always equals the
/// partition weight, which is asserted.
WronskianResult wronskian_det(DerivativeTable& tab, const Partition& lam);
WronskianResult wronskian_det(const FamilySpec& fam, const Partition& lam);

/// Wr[f_{k_1},...,f_{k_l},f_m] with f_m as the last column; m must not
/// already be selected (duplicate_index_error).
WronskianResult append_index(DerivativeTable& tab, const Partition& lam, int m);

/// The Darboux-Crum correction -2 (log W)'' = -2 (W''W - W'^2) / W^2 as a
/// coprime numerator/denominator pair; (0, 1) for constant W.
std::pair<RatPoly, RatPoly> crum_term(const WronskianResult& w);
std::pair<RatPoly, RatPoly> crum_term(const RatPoly& w);

} // namespace wrz

#endif
