#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wrz/polyalg.hpp"

using namespace wrz;

namespace {
const RatPoly kWr13 = RatPoly::from_ints({0, 0, 0, 32});        // Wr[H1,H3]
const RatPoly kWr12 = RatPoly::from_ints({4, 0, 8});            // Wr[H1,H2]
const RatPoly kWr14 = RatPoly::from_ints({-24, 0, -96, 0, 96}); // Wr[H1,H4]
} // namespace

TEST_CASE("gcd basics") {
    CHECK(poly_gcd(RatPoly::from_ints({-1, 0, 1}), RatPoly::from_ints({-1, 1})) ==
          RatPoly::from_ints({-1, 1}));
    CHECK(poly_gcd(RatPoly::from_ints({0, 0, 0, 32}), RatPoly::from_ints({0, 0, 96})) ==
          RatPoly::from_ints({0, 0, 1}));
    // gcd of Wr[H1,H3] with its own derivative
    CHECK(poly_gcd(kWr13, derivative(kWr13)) == RatPoly::from_ints({0, 0, 1}));
    CHECK_THROWS_AS(poly_gcd(RatPoly(), RatPoly()), both_zero_error);
    CHECK(poly_gcd(RatPoly(), RatPoly::from_ints({0, 3})) == RatPoly::from_ints({0, 1}));
}

TEST_CASE("gcd divides both inputs exactly") {
    std::mt19937 rng(7001);
    for (int trial = 0; trial < 60; ++trial) {
        RatPoly a = wrz_test::random_nonzero_poly(rng, 6, 5);
        RatPoly b = wrz_test::random_nonzero_poly(rng, 6, 5);
        RatPoly common = wrz_test::random_nonzero_poly(rng, 3, 4);
        RatPoly g = poly_gcd(a * common, b * common);
        CHECK(divmod(a * common, g).rem.is_zero());
        CHECK(divmod(b * common, g).rem.is_zero());
        if (common.degree() > 0) CHECK(divmod(g, monic(common)).rem.is_zero());
    }
}

TEST_CASE("squarefree decomposition") {
    auto cube = squarefree_decomposition(RatPoly::from_ints({0, 0, 0, 1}));
    REQUIRE(cube.size() == 1);
    CHECK(cube[0].factor == RatPoly::from_ints({0, 1}));
    CHECK(cube[0].multiplicity == 3);

    auto sf = squarefree_decomposition(kWr12); // squarefree already
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].multiplicity == 1);
    CHECK(sf[0].factor == monic(kWr12));

    // (x-1)^2 (x+2)
    RatPoly p = RatPoly::from_ints({-1, 1}) * RatPoly::from_ints({-1, 1}) *
                RatPoly::from_ints({2, 1});
    auto d = squarefree_decomposition(p);
    REQUIRE(d.size() == 2);
    CHECK(d[0].factor == RatPoly::from_ints({2, 1}));
    CHECK(d[0].multiplicity == 1);
    CHECK(d[1].factor == RatPoly::from_ints({-1, 1}));
    CHECK(d[1].multiplicity == 2);

    CHECK_THROWS_AS(squarefree_decomposition(RatPoly()), zero_polynomial_error);
}

TEST_CASE("squarefree reconstruction and degree bookkeeping") {
    std::mt19937 rng(7002);
    for (int trial = 0; trial < 40; ++trial) {
        RatPoly p = wrz_test::random_nonzero_poly(rng, 4, 4);
        RatPoly q = wrz_test::random_nonzero_poly(rng, 3, 4);
        RatPoly prod = p * q * q; // force a repeated part
        if (prod.degree() == 0) continue;
        auto fact = squarefree_decomposition(prod);
        int degree_sum = 0;
        RatPoly rebuilt = RatPoly::constant(Rational(1));
        for (const auto& f : fact) {
            degree_sum += f.factor.degree() * f.multiplicity;
            for (int i = 0; i < f.multiplicity; ++i) rebuilt = rebuilt * f.factor;
        }
        CHECK(degree_sum == prod.degree());
        CHECK(monic(rebuilt) == monic(prod));
        // factors pairwise coprime
        for (size_t i = 0; i < fact.size(); ++i)
            for (size_t j = i + 1; j < fact.size(); ++j)
                CHECK(poly_gcd(fact[i].factor, fact[j].factor).degree() == 0);
    }
}

TEST_CASE("sturm counting matches hand computations") {
    CHECK(sturm_count(kWr14, Interval::whole()) == 2);
    CHECK(sturm_count(kWr13, Interval::whole()) == 1); // distinct roots only
    CHECK(sturm_count(kWr12, Interval::whole()) == 0);
    CHECK_THROWS_AS(sturm_count(RatPoly(), Interval::whole()), zero_polynomial_error);
}

TEST_CASE("sturm endpoint roots are excluded and flagged") {
    // x(x-1)(x+1)
    RatPoly p = RatPoly::from_ints({0, 1}) * RatPoly::from_ints({-1, 1}) *
                RatPoly::from_ints({1, 1});
    auto inside = sturm_count_full(p, Interval::open(rat(-1), rat(1)));
    CHECK(inside.count == 1); // only x = 0
    CHECK(inside.root_at_lo);
    CHECK(inside.root_at_hi);
    auto right = sturm_count_full(p, Interval::open(rat(0), rat(1)));
    CHECK(right.count == 0);
    CHECK(right.root_at_lo);
    CHECK(right.root_at_hi);
    auto tail = sturm_count_full(p, Interval::greater_than(rat(1)));
    CHECK(tail.count == 0);
    CHECK(tail.root_at_lo);
}

TEST_CASE("three routes to the real root count agree") {
    std::mt19937 rng(7003);
    int interesting = 0;
    for (int trial = 0; trial < 120; ++trial) {
        RatPoly p = wrz_test::random_nonzero_poly(rng, 12, 9);
        if (trial % 3 == 0) {
            // exercise repeated roots too
            RatPoly lin = RatPoly::from_ints({-(trial % 4), 1});
            p = p * lin * lin;
        }
        if (p.degree() < 1) continue;
        Rational bound = cauchy_root_bound(p);
        Interval box = Interval::open(-bound, bound);

        int by_sturm = sturm_count(p, box);
        auto roots = isolate_roots(p, Interval::whole());
        int by_isolation = static_cast<int>(roots.size());
        int by_mesh = wrz_test::mesh_sign_change_count(p, roots, -bound, bound);

        CHECK(by_sturm == by_isolation);
        CHECK(by_sturm == by_mesh);
        CHECK(by_sturm == sturm_count(p, Interval::whole()));
        if (by_sturm > 0) ++interesting;
    }
    CHECK(interesting > 40); // the generator must not degenerate
}

TEST_CASE("root isolation basics") {
    auto triple = isolate_roots(kWr13, Interval::whole());
    REQUIRE(triple.size() == 1);
    CHECK(triple[0].exact());
    CHECK(triple[0].lo == rat(0));
    CHECK(triple[0].multiplicity == 3);

    auto pair = isolate_roots(RatPoly::from_ints({-2, 0, 1}), Interval::whole());
    REQUIRE(pair.size() == 2);
    CHECK(pair[0].hi <= pair[1].lo);
    for (auto& r : pair) {
        CHECK(r.multiplicity == 1);
        CHECK_FALSE(r.exact()); // sqrt(2) is irrational
    }
    // refine and bracket sqrt(2) tightly
    SturmChain chain(squarefree_part(RatPoly::from_ints({-2, 0, 1})));
    refine_root(chain, pair[1], rat(1, 1000));
    CHECK(pair[1].width() <= rat(1, 1000));
    CHECK(pair[1].lo < rat(14143, 10000));
    CHECK(pair[1].hi > rat(14142, 10000));

    CHECK(isolate_roots(kWr12, Interval::whole()).empty());
}

TEST_CASE("isolation respects the requested interval") {
    // roots at 1, 2, 3
    RatPoly p = RatPoly::from_ints({-1, 1}) * RatPoly::from_ints({-2, 1}) *
                RatPoly::from_ints({-3, 1});
    auto inside = isolate_roots(p, Interval::open(rat(3, 2), rat(7, 2)));
    CHECK(inside.size() == 2);
    auto none = isolate_roots(p, Interval::less_than(rat(0)));
    CHECK(none.empty());
    // open interval: the root at the endpoint is excluded
    auto half = isolate_roots(p, Interval::open(rat(1), rat(5, 2)));
    CHECK(half.size() == 1);
}

TEST_CASE("resultant examples") {
    CHECK(resultant(RatPoly::from_ints({-1, 1}), RatPoly::from_ints({1, 1})) == rat(2));
    CHECK(resultant(RatPoly::from_ints({0, 0, 1}), RatPoly::from_ints({0, 1})) == rat(0));
    RatPoly h2 = RatPoly::from_ints({-2, 0, 4});
    RatPoly h3 = RatPoly::from_ints({0, -12, 0, 8});
    Rational want = wrz_test::sylvester_resultant(h2, h3);
    CHECK(want != 0);
    CHECK(resultant(h2, h3) == want);
    CHECK_THROWS_AS(resultant(RatPoly(), h2), zero_polynomial_error);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
    std::mt19937 rng(7004);
    for (int trial = 0; trial < 80; ++trial) {
        RatPoly a = wrz_test::random_nonzero_poly(rng, 6, 6);
        RatPoly b = wrz_test::random_nonzero_poly(rng, 6, 6);
        if (trial % 4 == 0) {
            RatPoly common = wrz_test::random_nonzero_poly(rng, 2, 3);
            a = a * common;
            b = b * common;
        }
        CAPTURE(to_string(a));
        CAPTURE(to_string(b));
        CHECK(resultant(a, b) == wrz_test::sylvester_resultant(a, b));
    }
}

TEST_CASE("resultant vanishes exactly on common factors") {
    std::mt19937 rng(7005);
    for (int trial = 0; trial < 60; ++trial) {
        RatPoly a = wrz_test::random_nonzero_poly(rng, 5, 5);
        RatPoly b = wrz_test::random_nonzero_poly(rng, 5, 5);
        if (a.degree() == 0 && b.degree() == 0) continue;
        bool share = poly_gcd(a, b).degree() >= 1;
        CHECK((resultant(a, b) == 0) == share);
    }
}

TEST_CASE("ord_at") {
    CHECK(ord_at(kWr13, rat(0)) == 3);
    CHECK(ord_at(kWr12, rat(0)) == 0);
    CHECK(ord_at(RatPoly::from_ints({1, -2, 1}), rat(1)) == 2);
    CHECK_THROWS_AS(ord_at(RatPoly(), rat(0)), zero_polynomial_error);
}

TEST_CASE("ord_at agrees with squarefree multiplicities") {
    std::mt19937 rng(7006);
    std::uniform_int_distribution<int> mult_dist(1, 4);
    std::uniform_int_distribution<int> root_dist(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        int m = mult_dist(rng);
        Rational root(root_dist(rng));
        RatPoly lin{-root, rat(1)};
        RatPoly p = RatPoly::constant(rat(1));
        for (int i = 0; i < m; ++i) p = p * lin;
        RatPoly rest = wrz_test::random_nonzero_poly(rng, 3, 4);
        if (sgn(rest(root)) == 0) continue; // keep the multiplicity clean
        p = p * rest;
        CHECK(ord_at(p, root) == m);
        int from_decomp = 0;
        for (const auto& f : squarefree_decomposition(p))
            if (sgn(f.factor(root)) == 0) from_decomp = f.multiplicity;
        CHECK(from_decomp == m);
    }
}

TEST_CASE("imaginary rotation") {
    CHECK(rotate_imaginary(kWr12, 2) == RatPoly::from_ints({-4, 0, 8}));
    CHECK(rotate_imaginary(RatPoly::from_ints({0, 1}), 1) == RatPoly::from_ints({0, 1}));
    CHECK(rotate_imaginary(kWr14, 4) == RatPoly::from_ints({-24, 0, 96, 0, 96}));
    CHECK_THROWS_AS(rotate_imaginary(RatPoly::from_ints({0, 1, 1}), 1), parity_violation);
}

TEST_CASE("rotation round-trips") {
    std::mt19937 rng(7007);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> halfdeg(0, 5);
    for (int trial = 0; trial < 50; ++trial) {
        int parity = trial % 2;
        int top = 2 * halfdeg(rng) + parity;
        std::vector<Rational> c(static_cast<size_t>(top) + 1, rat(0));
        for (int k = parity; k <= top; k += 2) c[static_cast<size_t>(k)] = rat(coeff(rng));
        RatPoly p(std::move(c));
        if (p.is_zero()) continue;
        int weight = 2 * halfdeg(rng) + parity; // any weight of matching parity
        CHECK(rotate_imaginary(rotate_imaginary(p, weight), weight) == p);
    }
}

TEST_CASE("cauchy bound encloses every real root") {
    std::mt19937 rng(7008);
    for (int trial = 0; trial < 40; ++trial) {
        RatPoly p = wrz_test::random_nonzero_poly(rng, 9, 12);
        if (p.degree() < 1) continue;
        Rational b = cauchy_root_bound(p);
        CHECK(sturm_count(p, Interval::open(-b, b)) == sturm_count(p, Interval::whole()));
    }
}
