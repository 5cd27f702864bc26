#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrz/poly.hpp"
#include "wrz/rational.hpp"

using namespace wrz;

TEST_CASE("rationals are canonical") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-2, -4) == rat(1, 2));
    CHECK(rat(3, -6).get_den() == 2);
    CHECK(rat(3, -6).get_num() == -1);
    CHECK(rat(0, 7) == rat(0, 1));
}

TEST_CASE("rational string round-trip") {
    CHECK(rat_from_string("5/10") == rat(1, 2));
    CHECK(rat_from_string("-3") == rat(-3));
    CHECK(rat_from_string(" 7/2 ") == rat(7, 2));
    CHECK(rat_to_string(rat(1, 3)) == "1/3");
    CHECK(rat_to_string(rat(-4, 2)) == "-2");
    CHECK_THROWS_AS(rat_from_string("1.5"), parameter_error);
    CHECK_THROWS_AS(rat_from_string("1/0"), parameter_error);
    CHECK_THROWS_AS(rat_from_string(""), parameter_error);
}

TEST_CASE("construction trims leading zeros") {
    RatPoly p({rat(1), rat(0), rat(0)});
    CHECK(p.degree() == 0);
    RatPoly z({rat(0), rat(0)});
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
}

TEST_CASE("arithmetic basics") {
    RatPoly p = RatPoly::from_ints({-2, 0, 4});      // 4x^2 - 2
    RatPoly q = RatPoly::from_ints({0, -12, 0, 8});  // 8x^3 - 12x
    CHECK((p + q) == RatPoly::from_ints({-2, -12, 4, 8}));
    CHECK((p - p).is_zero());
    CHECK((p * q) == RatPoly::from_ints({0, 24, 0, -64, 0, 32}));
    CHECK(p(rat(2)) == rat(14));
    CHECK(q(rat(1, 2)) == rat(-5));
}

TEST_CASE("derivative matches the power rule") {
    // (4x^2 - 2)' = 8x
    CHECK(derivative(RatPoly::from_ints({-2, 0, 4}), 1) == RatPoly::from_ints({0, 8}));
    // order 0 is the identity
    RatPoly q = RatPoly::from_ints({3, 1, 7});
    CHECK(derivative(q, 0) == q);
    // (8x^3 - 12x)'' = 48x
    CHECK(derivative(RatPoly::from_ints({0, -12, 0, 8}), 2) == RatPoly::from_ints({0, 48}));
    // differentiating past the degree gives zero
    CHECK(derivative(q, 5).is_zero());
}

TEST_CASE("divmod recovers dividend") {
    RatPoly a = RatPoly::from_ints({1, -3, 0, 2, 5});
    RatPoly b = RatPoly::from_ints({-1, 0, 3});
    DivMod d = divmod(a, b);
    CHECK(d.quot * b + d.rem == a);
    CHECK(d.rem.degree() < b.degree());
    CHECK_THROWS_AS(divmod(a, RatPoly()), zero_polynomial_error);
}

TEST_CASE("divexact rejects inexact division") {
    RatPoly a = RatPoly::from_ints({-1, 0, 1}); // (x-1)(x+1)
    RatPoly b = RatPoly::from_ints({-1, 1});
    CHECK(divexact(a, b) == RatPoly::from_ints({1, 1}));
    CHECK_THROWS_AS(divexact(a, RatPoly::from_ints({1, 1, 1})), error);
}

TEST_CASE("content and primitive part") {
    RatPoly p({rat(4, 3), rat(2), rat(8, 3)});
    Rational c = content(p);
    CHECK(c == rat(2, 3));
    RatPoly prim = primitive_part(p);
    CHECK(prim == RatPoly::from_ints({2, 3, 4}));
    CHECK(content(prim) == rat(1));
    // content keeps the leading sign in the primitive part
    CHECK(primitive_part(RatPoly::from_ints({-2, -4})) == RatPoly::from_ints({-1, -2}));
}

TEST_CASE("prem is the scaled remainder") {
    RatPoly a = RatPoly::from_ints({2, 0, 0, 3, 7});
    RatPoly b = RatPoly::from_ints({-5, 0, 2});
    // prem(a,b) = lc(b)^(da-db+1) * (a mod b)
    RatPoly expected = divmod(a, b).rem;
    Rational scale = rat(2) * rat(2) * rat(2); // lc(b)^3
    CHECK(prem(a, b) == scale * expected);
}
