#include "wrz/polyalg.hpp"

#include <algorithm>
#include <utility>

namespace wrz {

namespace {

// Divides by the (positive) content; flips nothing, so the sign pattern
// of values is preserved everywhere.
RatPoly make_primitive(const RatPoly& p) {
    return p.is_zero() ? p : primitive_part(p);
}

Rational rational_pow(const Rational& base, int e) {
    Rational out(1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

} // namespace

RatPoly poly_gcd(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() && q.is_zero()) throw both_zero_error();
    if (p.is_zero()) return monic(q);
    if (q.is_zero()) return monic(p);

    RatPoly a = make_primitive(p);
    RatPoly b = make_primitive(q);
    if (a.degree() < b.degree()) std::swap(a, b);

    while (!b.is_zero() && b.degree() > 0) {
        RatPoly r = prem(a, b);
        a = std::move(b);
        b = make_primitive(r);
    }
    if (!b.is_zero()) return RatPoly::constant(Rational(1)); // coprime
    if (a.degree() == 0) return RatPoly::constant(Rational(1));
    return monic(a);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const RatPoly& p) {
    if (p.is_zero()) throw zero_polynomial_error();
    std::vector<SquarefreeFactor> out;
    if (p.degree() == 0) return out;

    // Yun's algorithm on the monic normalization.
    RatPoly a = monic(p);
    RatPoly da = derivative(a);
    RatPoly g = poly_gcd(a, da);
    if (g.degree() == 0) {
        out.push_back({a, 1});
        return out;
    }
    RatPoly w = divexact(a, g);
    RatPoly y = divexact(da, g);
    RatPoly z = y - derivative(w);
    int i = 1;
    while (w.degree() > 0) {
        RatPoly f = poly_gcd(w, z);
        if (f.degree() > 0) out.push_back({f, i});
        w = divexact(w, f);
        y = divexact(z, f);
        z = y - derivative(w);
        ++i;
    }
    return out;
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.is_zero()) throw zero_polynomial_error();
    if (p.degree() == 0) return RatPoly::constant(Rational(1));
    RatPoly g = poly_gcd(p, derivative(p));
    return make_primitive(divexact(p, g));
}

int ord_at(const RatPoly& p, const Rational& x0) {
    if (p.is_zero()) throw zero_polynomial_error();
    if (sgn(x0) == 0) {
        int i = 0;
        while (sgn(p.coeff(i)) == 0) ++i;
        return i;
    }
    int count = 0;
    RatPoly q = p;
    RatPoly lin{-x0, Rational(1)};
    while (sgn(q(x0)) == 0) {
        q = divmod(q, lin).quot;
        ++count;
    }
    return count;
}

SturmChain::SturmChain(RatPoly squarefree) {
    if (squarefree.is_zero()) throw zero_polynomial_error();
    seq_.push_back(std::move(squarefree));
    if (seq_.front().degree() == 0) return;
    seq_.push_back(derivative(seq_.front()));
    while (seq_.back().degree() > 0) {
        const RatPoly& a = seq_[seq_.size() - 2];
        const RatPoly& b = seq_.back();
        int delta = a.degree() - b.degree();
        RatPoly r = prem(a, b);
        if (r.is_zero()) break;
        // prem scales by lc(b)^(delta+1); undo a negative scale so the
        // element keeps the sign of the true remainder, then negate.
        if (sgn(b.leading()) < 0 && (delta + 1) % 2 == 1) r = -r;
        seq_.push_back(-make_primitive(r));
    }
}

namespace {

int count_sign_changes(const std::vector<int>& signs) {
    int changes = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& f : seq_) signs.push_back(sgn(f(x)));
    return count_sign_changes(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& f : seq_) signs.push_back(sgn(f.leading()));
    return count_sign_changes(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& f : seq_) {
        int s = sgn(f.leading());
        if (f.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return count_sign_changes(signs);
}

int SturmChain::count(const Interval& iv) const {
    if (iv.lo && iv.hi && *iv.lo >= *iv.hi)
        throw parameter_error("interval endpoints must satisfy lo < hi");
    int vlo = iv.lo ? variations_at(*iv.lo) : variations_at_neg_inf();
    int vhi = iv.hi ? variations_at(*iv.hi) : variations_at_pos_inf();
    int n = vlo - vhi;
    // With zeros skipped, V(x) equals the right limit, so a root at the
    // lower endpoint is already excluded while one at the upper endpoint
    // is still included and must be removed by hand.
    if (iv.hi && is_root(*iv.hi)) --n;
    return n;
}

RootCountResult sturm_count_full(const RatPoly& p, const Interval& iv) {
    if (p.is_zero()) throw zero_polynomial_error();
    RootCountResult res;
    if (p.degree() == 0) return res;
    SturmChain chain(squarefree_part(p));
    res.count = chain.count(iv);
    if (iv.lo) res.root_at_lo = chain.is_root(*iv.lo);
    if (iv.hi) res.root_at_hi = chain.is_root(*iv.hi);
    return res;
}

int sturm_count(const RatPoly& p, const Interval& iv) {
    return sturm_count_full(p, iv).count;
}

Rational cauchy_root_bound(const RatPoly& p) {
    if (p.is_zero()) throw zero_polynomial_error();
    if (p.degree() == 0) return Rational(1);
    Rational best(0);
    const Rational lead = abs(p.leading());
    for (int i = 0; i < p.degree(); ++i) {
        Rational v = abs(p.coeff(i)) / lead;
        if (v > best) best = v;
    }
    return best + 1;
}

namespace {

struct Isolation {
    const SturmChain& chain;
    std::vector<std::pair<Rational, Rational>> open_intervals; // lo < hi
    std::vector<Rational> exact_roots;

    void emit_exact(const Rational& x) { exact_roots.push_back(x); }

    void split(const Rational& lo, const Rational& hi, int n) {
        if (n == 0) return;
        Rational mid = (lo + hi) / 2;
        if (chain.is_root(mid)) {
            int nl = chain.count(Interval::open(lo, mid));
            int nr = chain.count(Interval::open(mid, hi));
            split(lo, mid, nl);
            emit_exact(mid);
            split(mid, hi, nr);
            return;
        }
        if (n == 1) {
            open_intervals.emplace_back(lo, hi);
            return;
        }
        int nl = chain.count(Interval::open(lo, mid));
        split(lo, mid, nl);
        split(mid, hi, n - nl);
    }
};

} // namespace

std::vector<IsolatedRoot> isolate_roots(const RatPoly& p, const Interval& iv) {
    if (p.is_zero()) throw zero_polynomial_error();
    std::vector<IsolatedRoot> out;
    if (p.degree() == 0) return out;

    auto factors = squarefree_decomposition(p);
    RatPoly s = RatPoly::constant(Rational(1));
    for (const auto& f : factors) s = s * f.factor;
    s = make_primitive(s);
    SturmChain chain(s);

    Rational bound = cauchy_root_bound(s);
    Rational neg_bound = -bound;
    Rational lo = iv.lo ? std::max(*iv.lo, neg_bound) : neg_bound;
    Rational hi = iv.hi ? std::min(*iv.hi, bound) : bound;
    if (lo >= hi) return out;

    int total = chain.count(Interval::open(lo, hi));
    if (total == 0) return out;

    Isolation iso{chain, {}, {}};
    iso.split(lo, hi, total);

    // Interleave exact roots with open isolators in left-to-right order;
    // (lo, hi) ordering puts an exact root [v,v] before a neighbor (v, h).
    std::vector<IsolatedRoot> items;
    for (const auto& [l, h] : iso.open_intervals) items.push_back({l, h, 1});
    for (const auto& x : iso.exact_roots) items.push_back({x, x, 1});
    std::sort(items.begin(), items.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });

    // Attach multiplicities: each isolator holds the single root of
    // exactly one squarefree factor.
    std::vector<SturmChain> factor_chains;
    factor_chains.reserve(factors.size());
    for (const auto& f : factors) factor_chains.emplace_back(make_primitive(f.factor));

    for (auto& r : items) {
        for (size_t i = 0; i < factors.size(); ++i) {
            bool hit = r.exact()
                           ? factor_chains[i].is_root(r.lo)
                           : factor_chains[i].count(Interval::open(r.lo, r.hi)) == 1;
            if (hit) {
                r.multiplicity = factors[i].multiplicity;
                break;
            }
        }
        out.push_back(r);
    }
    return out;
}

void refine_root(const SturmChain& chain, IsolatedRoot& root, const Rational& max_width) {
    while (!root.exact() && root.width() > max_width) {
        Rational mid = (root.lo + root.hi) / 2;
        if (chain.is_root(mid)) {
            root.lo = mid;
            root.hi = mid;
            return;
        }
        if (chain.count(Interval::open(root.lo, mid)) == 1)
            root.hi = mid;
        else
            root.lo = mid;
    }
}

Rational resultant(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero()) throw zero_polynomial_error();
    if (p.degree() == 0 && q.degree() == 0) return Rational(1);

    RatPoly a = p;
    RatPoly b = q;
    Rational s(1);
    if (a.degree() < b.degree()) {
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
        std::swap(a, b);
    }

    Rational ca = content(a);
    Rational cb = content(b);
    a *= Rational(1) / ca;
    b *= Rational(1) / cb;
    Rational scale = rational_pow(ca, b.degree()) * rational_pow(cb, a.degree());

    Rational g(1), h(1);
    while (b.degree() > 0) {
        int delta = a.degree() - b.degree();
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
        RatPoly r = prem(a, b);
        if (r.is_zero()) return Rational(0); // positive-degree common factor
        a = std::move(b);
        Rational div = g * rational_pow(h, delta);
        r *= Rational(1) / div;
        b = std::move(r);
        g = a.leading();
        if (delta > 0) h = rational_pow(g, delta) / rational_pow(h, delta - 1);
    }
    // b is now a nonzero constant: res = s * lc(b)^deg(a) * h^(1-deg(a)).
    Rational hfinal = rational_pow(b.leading(), a.degree());
    if (a.degree() > 1) hfinal /= rational_pow(h, a.degree() - 1);
    return s * scale * hfinal;
}

RatPoly rotate_imaginary(const RatPoly& p, int weight) {
    if (weight < 0) throw parameter_error("rotation weight must be nonnegative");
    std::vector<Rational> out(p.coeffs().size(), Rational(0));
    for (int k = 0; k <= p.degree(); ++k) {
        const Rational& c = p.coeff(k);
        if (sgn(c) == 0) continue;
        if ((k - weight) % 2 != 0)
            throw parity_violation(
                "coefficient of x^" + std::to_string(k) +
                " breaks the parity required by weight " + std::to_string(weight));
        int e = (k - weight) / 2;
        out[static_cast<size_t>(k)] = (e % 2 == 0) ? c : -c;
    }
    return RatPoly(std::move(out));
}

} // namespace wrz
