#include "wrz/wronskian.hpp"

#include <algorithm>

#include "wrz/polyalg.hpp"

namespace wrz {

namespace {

RatPoly det2(const std::vector<std::vector<RatPoly>>& m) {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

RatPoly det3(const std::vector<std::vector<RatPoly>>& m) {
    RatPoly out = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    out -= m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
    out += m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return out;
}

RatPoly bareiss_det(std::vector<std::vector<RatPoly>>& m) {
    const size_t n = m.size();
    int sign = 1;
    RatPoly prev_pivot = RatPoly::constant(Rational(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return RatPoly(); // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                RatPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = divexact(num, prev_pivot);
            }
            m[i][k] = RatPoly();
        }
        prev_pivot = m[k][k];
    }
    RatPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

} // namespace

RatPoly poly_matrix_det(std::vector<std::vector<RatPoly>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw parameter_error("determinant of a non-square matrix");
    if (n == 0) return RatPoly::constant(Rational(1));
    if (n == 1) return m[0][0];
    if (n == 2) return det2(m);
    if (n == 3) return det3(m);
    return bareiss_det(m);
}

RatPoly wronskian_of(DerivativeTable& tab, const std::vector<int>& indices) {
    const size_t l = indices.size();
    if (l == 0) throw parameter_error("empty index sequence");
    std::vector<std::vector<RatPoly>> m(l, std::vector<RatPoly>(l));
    for (size_t r = 0; r < l; ++r)
        for (size_t c = 0; c < l; ++c)
            m[r][c] = tab.deriv(indices[c], static_cast<int>(r));
    return poly_matrix_det(std::move(m));
}

namespace {

WronskianResult make_result(DerivativeTable& tab, const std::vector<int>& column_order) {
    std::vector<int> sorted = column_order;
    std::sort(sorted.begin(), sorted.end());
    Partition lam = partition_from_multiindex(MultiIndex(sorted));

    WronskianResult out{wronskian_of(tab, column_order), tab.family(), lam};
    if (out.poly.is_zero() || out.poly.degree() != lam.weight())
        throw error("Wronskian degree " +
                    std::to_string(out.poly.degree()) + " != partition weight " +
                    std::to_string(lam.weight()) + " for (" + to_string(lam) + ")");
    return out;
}

} // namespace

WronskianResult wronskian_det(DerivativeTable& tab, const Partition& lam) {
    return make_result(tab, multiindex_from_partition(lam).indices());
}

WronskianResult wronskian_det(const FamilySpec& fam, const Partition& lam) {
    DerivativeTable tab(fam);
    return wronskian_det(tab, lam);
}

WronskianResult append_index(DerivativeTable& tab, const Partition& lam, int m) {
    MultiIndex k = multiindex_from_partition(lam);
    if (k.contains(m))
        throw duplicate_index_error("index " + std::to_string(m) +
                                    " is already in the sequence k=(" + to_string(k) + ")");
    std::vector<int> cols = k.indices();
    cols.push_back(m);
    return make_result(tab, cols);
}

std::pair<RatPoly, RatPoly> crum_term(const RatPoly& w) {
    if (w.is_zero()) throw zero_polynomial_error();
    RatPoly dw = derivative(w);
    RatPoly num = Rational(-2) * (derivative(dw) * w - dw * dw);
    RatPoly den = w * w;
    if (num.is_zero()) return {RatPoly(), RatPoly::constant(Rational(1))};
    RatPoly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = divexact(num, g);
        den = divexact(den, g);
    }
    return {num, den};
}

std::pair<RatPoly, RatPoly> crum_term(const WronskianResult& w) {
    return crum_term(w.poly);
}

} // namespace wrz
