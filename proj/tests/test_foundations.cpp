#include <doctest.h>

#include "pcbf/exact_roots.hpp"
#include "pcbf/linalg.hpp"
#include "pcbf/polynomial.hpp"
#include "pcbf/rational.hpp"

using namespace pcbf;

TEST_SUITE_BEGIN("foundations");

TEST_CASE("rational parsing round-trips") {
    CHECK(parse_rational("0.015625") == rat_frac(1, 64));
    CHECK(parse_rational("1/64") == rat_frac(1, 64));
    CHECK(parse_rational("-0.25") == rat_frac(-1, 4));
    CHECK(parse_rational("2.5e-3") == rat_frac(1, 400));
    CHECK(parse_rational("1e3") == Rat(1000));
    CHECK(parse_rational("  7 ") == Rat(7));
    CHECK(rat_to_string(rat_frac(1, 64)) == "0.015625");
    CHECK(rat_to_string(rat_frac(1, 3)) == "1/3");
    CHECK(rat_to_string(Rat(-12)) == "-12");
    CHECK(parse_rational(rat_to_string(rat_frac(-7, 320))) == rat_frac(-7, 320));
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("doubles convert exactly") {
    CHECK(rat_from_double(0.5) == rat_frac(1, 2));
    CHECK(rat_from_double(-0.375) == rat_frac(-3, 8));
    CHECK(rat_to_double(rat_frac(3, 4)) == doctest::Approx(0.75));
}

TEST_CASE("rational matrices multiply exactly") {
    RatMat a(2, 2);
    a(0, 0) = rat_frac(1, 3);
    a(0, 1) = 2;
    a(1, 0) = -1;
    RatMat b = a * a;
    CHECK(b(0, 0) == rat_frac(1, 9) - 2);
    CHECK(b(0, 1) == rat_frac(2, 3));
    CHECK(b(1, 0) == rat_frac(-1, 3));
    CHECK(b(1, 1) == -2);
    CHECK((a * RatMat::identity(2)) == a);
}

TEST_CASE("polynomial arithmetic and composition") {
    // p = x^2 + 2xy
    Poly p(2);
    p.add_term({2, 0}, 1);
    p.add_term({1, 1}, 2);
    RatVec at{rat_frac(1, 2), Rat(3)};
    CHECK(p.evaluate(at) == rat_frac(1, 4) + 3);

    Poly x_plus_y(2);
    x_plus_y.add_term({1, 0}, 1);
    x_plus_y.add_term({0, 1}, 1);
    Poly y(2);
    y.add_term({0, 1}, 1);
    // substitute x := x+y, y := y
    Poly q = p.compose({x_plus_y, y});
    // (x+y)^2 + 2(x+y)y = x^2 + 4xy + 3y^2
    CHECK(q.coefficient({2, 0}) == 1);
    CHECK(q.coefficient({1, 1}) == 4);
    CHECK(q.coefficient({0, 2}) == 3);
    CHECK(q.degree() == 2);

    Poly zero = p - p;
    CHECK(zero.is_zero());
}

TEST_CASE("characteristic polynomial of a known matrix") {
    // [[2, 1], [1, 2]] has eigenvalues 1 and 3.
    RatMat m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 2;
    auto p = characteristic_polynomial(m);  // l^2 - 4l + 3
    REQUIRE(p.size() == 3);
    CHECK(p[2] == 1);
    CHECK(p[1] == -4);
    CHECK(p[0] == 3);

    CHECK(count_real_roots_geq(p, Rat(0)) == 2);
    CHECK(count_real_roots_geq(p, Rat(2)) == 1);
    CHECK(count_real_roots_geq(p, Rat(3)) == 1);  // boundary root counts
    CHECK(count_real_roots_geq(p, Rat(4)) == 0);
    CHECK(max_eigenvalue_geq(m, Rat(3)));
    CHECK_FALSE(max_eigenvalue_geq(m, rat_frac(301, 100)));
}

TEST_CASE("exact singular value comparison on scaled shifts") {
    // A = 8 * e4 e1^T has sigma_max = 8 exactly.
    RatMat a(4, 4);
    a(3, 0) = 8;
    CHECK(max_squared_singular_value_geq(a, Rat(64)));
    CHECK_FALSE(max_squared_singular_value_geq(a, Rat(64) + rat_frac(1, 1000000)));
}

TEST_SUITE_END();
