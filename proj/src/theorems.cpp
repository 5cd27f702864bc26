#include "wrz/theorems.hpp"

#include <algorithm>
#include <cstdlib>

namespace wrz {

int predicted_count_generic(const Partition& lam) {
    const auto& p = lam.parts();
    int ell = lam.length();
    int sum = 0;
    for (int j = 1; j <= ell; ++j) {
        int term = p[static_cast<size_t>(j - 1)];
        sum += ((ell - j) % 2 == 0) ? term : -term;
    }
    if (sum < 0)
        throw error("alternating sum came out negative for (" + to_string(lam) +
                    "); partition convention bug");
    return sum;
}

SymmetricPrediction predicted_symmetric(const Partition& lam) {
    int d = d_lambda(lam);
    int ell = lam.length();
    int alt = predicted_count_generic(lam);

    int inner = std::abs(d + ell % 2);
    if (inner % 2 != 0)
        throw non_integer_prediction("odd |d + (l mod 2)| for (" + to_string(lam) + ")");
    int twice_positive = alt - inner / 2;
    if (twice_positive < 0 || twice_positive % 2 != 0)
        throw non_integer_prediction("positive-count formula gave " +
                                     std::to_string(twice_positive) + "/2 for (" +
                                     to_string(lam) + ")");

    SymmetricPrediction out;
    out.origin_multiplicity = d * (d + 1) / 2;
    out.positive_count = twice_positive / 2;
    out.negative_count = out.positive_count;
    out.total_distinct = 2 * out.positive_count + (out.origin_multiplicity > 0 ? 1 : 0);
    return out;
}

bool adler_admissible(const MultiIndex& k) {
    const auto& idx = k.indices();
    size_t i = 0;
    bool first_run = true;
    while (i < idx.size()) {
        size_t j = i + 1;
        while (j < idx.size() && idx[j] == idx[j - 1] + 1) ++j;
        size_t run_len = j - i;
        bool starts_at_zero = first_run && idx[i] == 0;
        if (!starts_at_zero && run_len % 2 != 0) return false;
        first_run = false;
        i = j;
    }
    return true;
}

bool krein_nonnegative(const MultiIndex& k) {
    const auto& idx = k.indices();
    int top = idx.back() + 1;
    for (int n = 0; n <= top; ++n) {
        Integer prod(1);
        for (int kj : idx) prod *= Integer(n - kj);
        if (prod < 0) return false;
    }
    return true;
}

std::string DegeneracyWitness::describe() const {
    std::string lhs = probe_m < 0 ? "f_lambda" : "f_{lambda," + std::to_string(probe_m) + "}";
    std::string rhs = "f_{lambda," + std::to_string(probe_n) + "}";
    return lhs + " and " + rhs + " share " + std::to_string(common_root_count) +
           " root(s) in the interval";
}

std::vector<int> default_probes(const MultiIndex& k, int count) {
    std::vector<int> probes;
    for (int m = 0; static_cast<int>(probes.size()) < count; ++m)
        if (!k.contains(m)) probes.push_back(m);
    return probes;
}

namespace {

// Common-root check for one pair; origin roots are stripped first for
// symmetric families (semi-degeneracy allows them).
std::optional<DegeneracyWitness> check_pair(const FamilySpec& fam, int id_a, const RatPoly& a,
                                            int id_b, const RatPoly& b) {
    RatPoly g = poly_gcd(a, b);
    if (fam.symmetric()) {
        int t = ord_at(g, Rational(0));
        if (t > 0) g = divexact(g, RatPoly::monomial(Rational(1), t));
    }
    if (g.degree() == 0) return std::nullopt;
    int roots = sturm_count(g, fam.interval());
    if (roots == 0) return std::nullopt;
    DegeneracyWitness w;
    w.probe_m = id_a;
    w.probe_n = id_b;
    w.common_root_count = roots;
    w.common_factor = g;
    return w;
}

} // namespace

std::vector<DegeneracyWitness> degeneracy_scan(DerivativeTable& tab, const Partition& lam,
                                               const std::vector<int>& probes) {
    MultiIndex k = multiindex_from_partition(lam);
    for (int m : probes)
        if (k.contains(m))
            throw duplicate_index_error("probe " + std::to_string(m) +
                                        " is part of the multi-index");

    RatPoly base = wronskian_det(tab, lam).poly;
    std::vector<std::pair<int, RatPoly>> extended;
    extended.reserve(probes.size());
    for (int m : probes)
        extended.emplace_back(m, append_index(tab, lam, m).poly);

    std::vector<DegeneracyWitness> witnesses;
    for (const auto& [m, fm] : extended)
        if (auto w = check_pair(tab.family(), -1, base, m, fm)) witnesses.push_back(*w);
    for (size_t i = 0; i < extended.size(); ++i)
        for (size_t j = i + 1; j < extended.size(); ++j)
            if (auto w = check_pair(tab.family(), extended[i].first, extended[i].second,
                                    extended[j].first, extended[j].second))
                witnesses.push_back(*w);
    return witnesses;
}

VerificationReport verify_partition(DerivativeTable& tab, const Partition& lam,
                                    int probe_count) {
    const FamilySpec& fam = tab.family();
    VerificationReport rep(fam, lam, multiindex_from_partition(lam));
    rep.d = d_lambda(lam);
    rep.symmetric = fam.symmetric();

    WronskianResult w = wronskian_det(tab, lam);
    const Interval& iv = fam.interval();

    RootCountResult rc = sturm_count_full(w.poly, iv);
    rep.exact_count = rc.count;
    rep.endpoint_root_lo = rc.root_at_lo;
    rep.endpoint_root_hi = rc.root_at_hi;
    rep.exact_origin_mult = ord_at(w.poly, Rational(0));

    if (rep.symmetric) {
        Interval positive = iv.hi ? Interval::open(Rational(0), *iv.hi)
                                  : Interval::greater_than(Rational(0));
        Interval negative = iv.lo ? Interval::open(*iv.lo, Rational(0))
                                  : Interval::less_than(Rational(0));
        rep.exact_positive = sturm_count(w.poly, positive);
        rep.exact_negative = sturm_count(w.poly, negative);
    }

    // Multiplicity structure of the roots that fall inside the interval.
    bool origin_inside = iv.contains(Rational(0));
    for (const auto& f : squarefree_decomposition(w.poly)) {
        int in_iv = sturm_count(f.factor, iv);
        if (in_iv > 0)
            rep.root_multiplicities.push_back({f.multiplicity, in_iv});
        if (f.multiplicity < 2) continue;
        int non_origin = in_iv;
        if (origin_inside && sgn(f.factor.coeff(0)) == 0) --non_origin;
        if (non_origin > 0) rep.all_simple_except_origin = false;
    }

    bool match;
    bool simple_ok;
    if (rep.symmetric) {
        SymmetricPrediction pred = predicted_symmetric(lam);
        rep.predicted_sym = pred;
        rep.predicted_total = pred.total_distinct;
        match = rep.exact_count == pred.total_distinct &&
                rep.exact_origin_mult == pred.origin_multiplicity &&
                *rep.exact_positive == pred.positive_count &&
                *rep.exact_negative == pred.negative_count;
        simple_ok = rep.all_simple_except_origin;
    } else {
        rep.predicted_total = predicted_count_generic(lam);
        match = rep.exact_count == rep.predicted_total;
        // No origin exception outside the symmetric case: every root in
        // the interval must be simple.
        simple_ok = true;
        for (const auto& rm : rep.root_multiplicities)
            if (rm.multiplicity >= 2) simple_ok = false;
    }

    rep.witnesses = degeneracy_scan(tab, lam, default_probes(rep.k, probe_count));
    rep.degenerate = !rep.witnesses.empty();
    rep.pass = match && simple_ok;
    return rep;
}

VerificationReport verify_partition(const FamilySpec& fam, const Partition& lam,
                                    int probe_count) {
    DerivativeTable tab(fam);
    return verify_partition(tab, lam, probe_count);
}

DualityResult duality_check(const Partition& lam) {
    DerivativeTable tab(FamilySpec::hermite());
    RatPoly w = wronskian_det(tab, lam).poly;
    RatPoly rotated = rotate_imaginary(w, lam.weight());
    RatPoly wc = wronskian_det(tab, conjugate(lam)).poly;

    DualityResult out;
    if (rotated.is_zero() || wc.is_zero() || rotated.degree() != wc.degree()) return out;
    out.constant = wc.leading() / rotated.leading();
    out.holds = (wc == out.constant * rotated);
    return out;
}

FelderCounts felder_counts(const std::vector<int>& mu) {
    Partition lam = doubled_partition(mu);
    DerivativeTable tab(FamilySpec::hermite());
    RatPoly w = wronskian_det(tab, lam).poly;
    FelderCounts out;
    out.real_roots = sturm_count(w, Interval::whole());
    out.imaginary_roots = sturm_count(rotate_imaginary(w, lam.weight()), Interval::whole());
    return out;
}

namespace {

// Strict interlacing via exact isolation: refine until no enclosure of one
// polynomial overlaps an enclosure of the other, then check alternation.
bool strictly_interlace(const RatPoly& a, const RatPoly& b, const Interval& iv) {
    RatPoly g = poly_gcd(a, b);
    if (g.degree() > 0 && sturm_count(g, iv) > 0) return false; // shared root

    SturmChain chain_a(squarefree_part(a));
    SturmChain chain_b(squarefree_part(b));
    auto roots_a = isolate_roots(a, iv);
    auto roots_b = isolate_roots(b, iv);

    if (roots_a.size() + 1 != roots_b.size() && roots_b.size() + 1 != roots_a.size())
        return false;

    auto overlaps = [](const IsolatedRoot& x, const IsolatedRoot& y) {
        return x.lo < y.hi && y.lo < x.hi;
    };
    Rational width(1);
    for (;;) {
        bool any = false;
        for (const auto& ra : roots_a)
            for (const auto& rb : roots_b)
                if (overlaps(ra, rb)) any = true;
        if (!any) break;
        width /= 2;
        for (auto& r : roots_a) refine_root(chain_a, r, width);
        for (auto& r : roots_b) refine_root(chain_b, r, width);
    }

    struct Tagged {
        Rational pos;
        bool from_a;
    };
    std::vector<Tagged> merged;
    for (const auto& r : roots_a) merged.push_back({r.lo + r.hi, true});
    for (const auto& r : roots_b) merged.push_back({r.lo + r.hi, false});
    std::sort(merged.begin(), merged.end(),
              [](const Tagged& x, const Tagged& y) { return x.pos < y.pos; });

    bool longer_is_a = roots_a.size() > roots_b.size();
    for (size_t i = 0; i < merged.size(); ++i) {
        bool expect_a = (i % 2 == 0) ? longer_is_a : !longer_is_a;
        if (merged[i].from_a != expect_a) return false;
    }
    return true;
}

} // namespace

KarlinResult karlin_szego_check(const FamilySpec& fam, int n, int ell) {
    if (n < 0 || ell < 1) throw parameter_error("karlin check needs n >= 0, l >= 1");
    DerivativeTable tab(fam);
    Partition lam(std::vector<int>(static_cast<size_t>(ell), n));
    RatPoly w = wronskian_det(tab, lam).poly;

    KarlinResult out;
    out.count = sturm_count(w, fam.interval());
    // Even-length consecutive blocks are sign-definite, so only the odd
    // case has roots to interlace with the n+1 block.
    if (ell % 2 == 1) {
        Partition next(std::vector<int>(static_cast<size_t>(ell), n + 1));
        RatPoly w_next = wronskian_det(tab, next).poly;
        out.interlaces_with_next = strictly_interlace(w, w_next, fam.interval());
    }
    return out;
}

SimplicityResult simplicity_check(const FamilySpec& fam, const Partition& lam) {
    RatPoly w = wronskian_det(fam, lam).poly;
    SimplicityResult out;
    out.origin_mult = ord_at(w, Rational(0));
    out.all_simple_except_origin = true;
    for (const auto& f : squarefree_decomposition(w)) {
        if (f.multiplicity < 2) continue;
        // Squarefree repeated factor must be exactly x.
        bool is_x = f.factor.degree() == 1 && sgn(f.factor.coeff(0)) == 0;
        if (!is_x) out.all_simple_except_origin = false;
    }
    return out;
}

} // namespace wrz
