#include <doctest.h>

#include "oracles.hpp"
#include "subdiv/parse.hpp"
#include "subdiv/poly.hpp"
#include "subdiv/random.hpp"

using namespace subdiv;

namespace {

XMonomial mono(const char* text, int n) { return parse_monomial(text, n); }
XPoly poly(const char* text, int n) { return parse_poly(text, n); }

}  // namespace

TEST_CASE("pair slots are row-major") {
    CHECK(pair_count(4) == 6);
    CHECK(pair_slot(4, 1, 2) == 0);
    CHECK(pair_slot(4, 1, 4) == 2);
    CHECK(pair_slot(4, 3, 4) == 5);
    for (std::size_t s = 0; s < pair_count(6); ++s) {
        const PairIndex p = pair_at(6, s);
        CHECK(pair_slot(6, p.i, p.j) == s);
    }
    CHECK_THROWS(pair_slot(4, 2, 2));
    CHECK_THROWS(pair_slot(4, 3, 5));
}

TEST_CASE("polynomial arithmetic") {
    const XPoly x12 = XPoly::variable(3, 1, 2);
    const XPoly x23 = XPoly::variable(3, 2, 3);
    const XPoly prod = x12 * x23;
    CHECK(prod.size() == 1);
    CHECK(prod.coeff(mono("x[1,2]*x[2,3]", 3)) == ParamCoeff(1));
    const XPoly p = poly("x[1,2]*x[2,3] - b*x[1,3] - a", 3);
    CHECK((p + ParamCoeff(-1) * p).is_zero());
    const XPoly b3(3, ParamCoeff::beta());
    CHECK((x12 + b3) * (x12 - b3) == poly("x[1,2]^2 - b^2", 3));
    CHECK_THROWS_AS(x12 + XPoly::variable(4, 1, 2), std::invalid_argument);
}

TEST_CASE("pathless predicate") {
    CHECK_FALSE(is_pathless(mono("x[1,2]*x[2,3]", 3)));
    CHECK(is_pathless(mono("x[1,3]*x[2,3]", 3)));
    CHECK_FALSE(is_pathless(mono("x[1,2]*x[1,3]*x[2,4]", 4)));
    CHECK(is_pathless(XMonomial(1)));
}

TEST_CASE("forkless predicate") {
    CHECK(is_forkless(mono("x[1,2]^2", 3)));
    CHECK_FALSE(is_forkless(mono("x[1,2]*x[1,3]", 3)));
    CHECK(is_forkless(mono("x[1,2]*x[2,3]", 3)));
}

TEST_CASE("weights") {
    CHECK(weight_pathless(XMonomial(4)) == 0);
    CHECK(weight_pathless(mono("x[1,2]*x[2,3]*x[3,4]", 4)) == 9);
    CHECK(weight_pathless(mono("x[1,4]", 4)) == 1);
    CHECK(weight_alt(XMonomial(4)) == 0);
    CHECK(weight_alt(mono("x[1,4]", 4)) == 3);
    CHECK(weight_alt(mono("x[1,2]*x[2,3]", 3)) == 2);
}

TEST_CASE("weights are additive") {
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const XMonomial u = random_monomial(rng, 5, 4);
        const XMonomial v = random_monomial(rng, 5, 4);
        REQUIRE(weight_pathless(u * v) == weight_pathless(u) + weight_pathless(v));
        REQUIRE(weight_alt(u * v) == weight_alt(u) + weight_alt(v));
    }
}

TEST_CASE("term order examples") {
    CHECK(order_cmp(mono("x[1,2]", 3), mono("x[2,3]", 3)) == std::strong_ordering::greater);
    const XMonomial m = mono("x[1,3]*x[2,4]^2", 4);
    CHECK(order_cmp(m, m) == std::strong_ordering::equal);
    CHECK(order_cmp(XMonomial(4), mono("x[3,4]", 4)) == std::strong_ordering::less);
    CHECK(order_cmp(mono("x[1,3]*x[1,2]", 3), mono("x[1,2]*x[2,3]", 3)) == std::strong_ordering::greater);
    CHECK_THROWS_AS(order_cmp(XMonomial(3), XMonomial(4)), std::invalid_argument);
}

TEST_CASE("term order is a multiplicative total order") {
    Rng rng(1234);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = uniform_int(rng, 2, 5);
        const XMonomial u = random_monomial(rng, n, 4);
        const XMonomial v = random_monomial(rng, n, 4);
        const XMonomial w = random_monomial(rng, n, 4);
        const auto uv = order_cmp(u, v);
        const auto vu = order_cmp(v, u);
        REQUIRE((uv == 0) == (u == v));
        REQUIRE(uv == 0 ? vu == 0 : (uv < 0) == (vu > 0));
        if (uv <= 0 && order_cmp(v, w) <= 0) {
            REQUIRE(order_cmp(u, w) <= 0);
        }
        if (uv <= 0) {
            REQUIRE(order_cmp(w * u, w * v) <= 0);
        }
        REQUIRE(order_cmp(XMonomial(n), u) <= 0);
    }
}

TEST_CASE("forkless predicate matches the row-map characterization") {
    for (int n = 1; n <= 4; ++n) {
        for (int d = 0; d <= 4; ++d) {
            for (const auto& m : oracle::monomials_of_degree(n, d)) {
                REQUIRE(is_forkless(m) == oracle::forkless_by_fg(m));
                REQUIRE(is_forkless(m) == oracle::forkless_by_scan(m));
            }
        }
    }
}

TEST_CASE("all_monomials agrees with the odometer enumeration") {
    for (int n = 1; n <= 4; ++n) {
        for (int d = 0; d <= 3; ++d) {
            auto expect = oracle::monomials_of_degree(n, d);
            std::sort(expect.begin(), expect.end(), std::greater<>());
            CHECK(all_monomials(n, d) == expect);
        }
    }
}

TEST_CASE("D image") {
    CHECK(d_image(poly("x[1,2]*x[2,3]*x[3,4]", 4)) == parse_tpoly("t[1]*t[2]*t[3]", 4));
    CHECK(d_image(poly("1", 4)) == parse_tpoly("1", 4));
    const XPoly eq1 = poly(
        "x[1,2]*x[1,3]*x[1,4] + x[1,2]*x[1,4] + x[1,2]*x[1,4]*x[3,4] + x[1,3]*x[1,4] + x[1,3]*x[1,4]*x[2,4]"
        " + x[1,3]*x[2,3]*x[2,4] + x[1,3]*x[2,4] + x[1,4] + x[1,4]*x[2,4] + x[1,4]*x[2,4]*x[3,4] + x[1,4]*x[3,4]",
        4);
    const TPoly t1 = TPoly::variable(4, 1);
    const TPoly t2 = TPoly::variable(4, 2);
    const TPoly t3 = TPoly::variable(4, 3);
    const TPoly two(4, ParamCoeff(2));
    const TPoly one(4, ParamCoeff(1));
    const TPoly rhs = t1 * (two * t1 + two * t2 + t3 + t1 * t1 + t2 * t2 + t1 * t2 + t1 * t3 + t2 * t3 + one);
    CHECK(d_image(eq1) == rhs);
}

TEST_CASE("D is a ring homomorphism") {
    Rng rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const XPoly p = random_poly(rng, 4, 3, 4);
        const XPoly q = random_poly(rng, 4, 3, 4);
        REQUIRE(d_image(p * q) == d_image(p) * d_image(q));
        REQUIRE(d_image(p + q) == d_image(p) + d_image(q));
    }
}

TEST_CASE("parsing") {
    const XPoly p = poly("x[1,2]*x[2,3] - b*x[1,3] - a", 3);
    CHECK(p.size() == 3);
    CHECK(p.str() == "x[1,2]*x[2,3] - b*x[1,3] - a");
    CHECK(poly("0", 3).is_zero());
    CHECK(poly("  x[1,3] * x[1,2] ", 3).str() == "x[1,2]*x[1,3]");
    CHECK(poly("2/4*b^2*x[1,2]^3", 3).str() == "1/2*b^2*x[1,2]^3");
    CHECK(poly("-x[1,2] + x[1,2]", 3).is_zero());
    CHECK_THROWS_AS(poly("x[2,2]", 3), ParseError);
    CHECK_THROWS_AS(poly("x[1,4]", 3), ParseError);
    CHECK_THROWS_AS(poly("t[1]", 3), ParseError);
    CHECK_THROWS_AS(poly("x[1,2] +", 3), ParseError);
    CHECK_THROWS_AS(poly("x[1,2]^", 3), ParseError);
    CHECK_THROWS_AS(poly("3/0", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("2*x[1,2]", 3), ParseError);
    CHECK_THROWS_AS(parse_tpoly("x[1,2]", 3), ParseError);
    CHECK(parse_tpoly("t[1]^2 - a*t[3]", 3).str() == "t[1]^2 - a*t[3]");
    try {
        (void)poly("x[1,2] $ 3", 3);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
}

TEST_CASE("format and parse round trip") {
    Rng rng(4242);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = uniform_int(rng, 1, 5);
        const XPoly p = random_poly(rng, n, 4, 5);
        REQUIRE(parse_poly(format_poly(p), n) == p);
    }
}

TEST_CASE("n = 1 has only constants") {
    const XPoly c = poly("b + 2", 1);
    CHECK(c.degree() == 0);
    CHECK(is_pathless(c));
    CHECK(is_forkless(c));
    CHECK(all_monomials(1, 0).size() == 1);
    CHECK(all_monomials(1, 2).empty());
}
