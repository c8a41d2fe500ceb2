#include <doctest.h>

#include "oracles.hpp"
#include "subdiv/groebner.hpp"
#include "subdiv/parse.hpp"

using namespace subdiv;

namespace {

XPoly poly(const char* text, int n) { return parse_poly(text, n); }
XMonomial mono(const char* text, int n) { return parse_monomial(text, n); }

}  // namespace

TEST_CASE("basis shape") {
    const GBasis g3 = generate_basis(3);
    REQUIRE(g3.elements().size() == 1);
    CHECK(g3.elements()[0].head == mono("x[1,3]*x[1,2]", 3));
    CHECK(g3.elements()[0].poly == poly("x[1,3]*x[1,2] - x[1,2]*x[2,3] + x[1,3]*x[2,3] + b*x[1,3] + a", 3));
    CHECK(generate_basis(2).elements().empty());
    CHECK(generate_basis(1).elements().empty());
    const GBasis g5 = generate_basis(5);
    CHECK(g5.elements().size() == 10);
    for (std::size_t s = 0; s + 1 < g5.elements().size(); ++s) {
        CHECK(g5.elements()[s].triple < g5.elements()[s + 1].triple);
    }
    for (const auto& e : g5.elements()) {
        CHECK(e.poly == -j_relation(5, e.triple));
        CHECK(head_coeff(e.poly) == ParamCoeff(1));
        CHECK(head_term(e.poly) == e.head);
    }
}

TEST_CASE("head term and coefficient") {
    const XPoly g = generate_basis(4).elements()[0].poly;
    CHECK(head_term(g) == mono("x[1,2]*x[1,3]", 4));
    CHECK(head_coeff(g) == ParamCoeff(1));
    CHECK(head_term(poly("5", 3)).is_one());
    CHECK(head_coeff(poly("5", 3)) == ParamCoeff(5));
    CHECK(head_term(poly("b*x[2,3]", 3)) == mono("x[2,3]", 3));
    CHECK(head_coeff(poly("b*x[2,3]", 3)) == ParamCoeff::beta());
    CHECK_THROWS_AS(head_term(XPoly(3)), std::invalid_argument);
}

TEST_CASE("single reduction steps") {
    const GBasis g = generate_basis(3);
    const auto r = reduce_step_G(poly("x[1,3]*x[1,2]", 3), g);
    REQUIRE(r.has_value());
    CHECK(*r == poly("x[1,2]*x[2,3] - x[1,3]*x[2,3] - b*x[1,3] - a", 3));
    CHECK_FALSE(reduce_step_G(poly("x[1,2]*x[2,3] + x[1,3]^2", 3), g).has_value());
    const auto r2 = reduce_step_G(poly("x[1,3]^2*x[1,2]", 3), g);
    REQUIRE(r2.has_value());
    CHECK(*r2 == XPoly::variable(3, 1, 3) * poly("x[1,2]*x[2,3] - x[1,3]*x[2,3] - b*x[1,3] - a", 3));
}

TEST_CASE("basis elements rejected when not monic") {
    GBasisElement e = generate_basis(3).elements()[0];
    e.poly = ParamCoeff(2) * e.poly;
    CHECK_THROWS_AS(GBasis(3, {e}), std::invalid_argument);
}

TEST_CASE("normal forms") {
    const GBasis g4 = generate_basis(4);
    const XPoly forkless = poly("x[1,2]*x[2,3]*x[3,4] + b*x[1,4]^2 - 3", 4);
    CHECK(normal_form(forkless, g4) == forkless);
    for (const auto& e : g4.elements()) {
        CHECK(normal_form(e.poly, g4).is_zero());
        CHECK(normal_form(j_relation(4, e.triple), g4).is_zero());
    }
    const XPoly p = poly("x[1,2]*x[1,3]*x[1,4]*x[2,4]", 4);
    const XPoly nf = normal_form(p, g4);
    CHECK(is_forkless(nf));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        CHECK(oracle::random_normal_form(p, g4, seed) == nf);
    }
    CHECK(normal_form(poly("x[1,2]*x[2,3]*x[3,4]", 4), g4) == poly("x[1,2]*x[2,3]*x[3,4]", 4));
}

TEST_CASE("head descent of G-reduction") {
    Rng rng(17);
    const GBasis g = generate_basis(5);
    for (int trial = 0; trial < 50; ++trial) {
        XPoly p = random_poly(rng, 5, 4, 4);
        auto largest_reducible = [&](const XPoly& q) -> std::optional<XMonomial> {
            for (const auto& [m, c] : q.terms()) {
                for (const auto& e : g.elements()) {
                    if (e.head.divides(m)) {
                        return m;
                    }
                }
            }
            return std::nullopt;
        };
        while (auto next = reduce_step_G(p, g)) {
            const XMonomial before = *largest_reducible(p);
            const auto after = largest_reducible(*next);
            if (after) {
                REQUIRE(order_cmp(*after, before) < 0);
            }
            p = *next;
        }
        REQUIRE(is_forkless(p));
    }
}

TEST_CASE("S-polynomials") {
    const GBasis g = generate_basis(6);
    const auto& e = g.elements();
    CHECK(spol(e[0], e[0]).is_zero());

    const auto find = [&](Triple t) -> const GBasisElement& {
        for (const auto& x : e) {
            if (x.triple == t) {
                return x;
            }
        }
        throw std::logic_error("missing triple");
    };
    const auto& g123 = find({1, 2, 3});
    const auto& g456 = find({4, 5, 6});
    CHECK(spol(g123, g456) == g456.head * g123.poly - g123.head * g456.poly);

    // u1 = g(1,2,3), u2 = g(1,2,4): spol(u1, u2) = x[1,4]*u1 - x[1,3]*u2
    const auto& u1 = find({1, 2, 3});
    const auto& u2 = find({1, 2, 4});
    CHECK(spol(u1, u2) == XMonomial::variable(6, 1, 4) * u1.poly - XMonomial::variable(6, 1, 3) * u2.poly);
}

TEST_CASE("u family") {
    const auto u = u_family(5, 1, 2, 4, 5);
    const GBasis g = generate_basis(5);
    auto elem = [&](Triple t) {
        for (const auto& x : g.elements()) {
            if (x.triple == t) {
                return x.poly;
            }
        }
        throw std::logic_error("missing triple");
    };
    CHECK(u[0] == elem({1, 2, 4}));
    CHECK(u[1] == elem({1, 2, 5}));
    CHECK(u[2] == elem({1, 4, 5}));
    CHECK(u[3] == elem({2, 4, 5}));
}

TEST_CASE("syzygy identities") {
    for (int n = 4; n <= 6; ++n) {
        const SpolIdentityReport r = verify_spol_identities(n);
        CHECK(r.passed());
        CHECK(r.quadruples == static_cast<std::size_t>(n * (n - 1) * (n - 2) * (n - 3) / 24));
    }
}

TEST_CASE("Buchberger criterion") {
    CHECK(buchberger_check(generate_basis(3)));
    for (int n = 4; n <= 6; ++n) {
        CHECK(buchberger_check(generate_basis(n)));
    }
    std::vector<GBasisElement> bad = generate_basis(4).elements();
    bad[0].poly -= XPoly(4, ParamCoeff::alpha());
    const BuchbergerReport r = buchberger_report(GBasis(4, bad));
    CHECK_FALSE(r.passed());
}

TEST_CASE("ideal membership") {
    CHECK(ideal_member(poly("x[1,2]*x[2,3] - x[1,3]*x[1,2] - x[1,3]*x[2,3] - b*x[1,3] - a", 3)));
    CHECK_FALSE(ideal_member(poly("x[1,2]", 3)));
    CHECK(ideal_member(XPoly(4)));
}

TEST_CASE("confluence against randomized reducers") {
    Rng rng(555);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = uniform_int(rng, 3, 5);
        const GBasis g = generate_basis(n);
        const XPoly p = random_poly(rng, n, 4, 5);
        const XPoly nf = normal_form(p, g);
        for (int k = 0; k < 3; ++k) {
            REQUIRE(oracle::random_normal_form(p, g, rng()) == nf);
        }
    }
}

TEST_CASE("normal forms do not raise degree") {
    Rng rng(808);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = uniform_int(rng, 3, 5);
        const XPoly p = random_poly(rng, n, 4, 4);
        const XPoly nf = normal_form(p, generate_basis(n));
        REQUIRE(nf.degree() <= p.degree());
    }
}

TEST_CASE("basis property at low degree") {
    for (int n = 2; n <= 4; ++n) {
        const GBasis g = generate_basis(n);
        for (int d = 0; d <= 3; ++d) {
            for (const auto& m : oracle::monomials_of_degree(n, d)) {
                const XPoly nf = normal_form(XPoly(m), g);
                REQUIRE(is_forkless(nf));
                REQUIRE(nf.degree() <= 3);
                if (is_forkless(m)) {
                    REQUIRE(nf == XPoly(m));
                }
            }
        }
    }
}

TEST_CASE("specialized relations") {
    const Deformation d = Deformation::specialized(1, 0);
    const GBasis g = generate_basis(3, d);
    CHECK(g.elements()[0].poly == poly("x[1,3]*x[1,2] - x[1,2]*x[2,3] + x[1,3]*x[2,3] + x[1,3]", 3));
    CHECK(ideal_member(poly("x[1,2]*x[2,3] - x[1,3]*x[1,2] - x[1,3]*x[2,3] - x[1,3]", 3), d));
    CHECK_FALSE(ideal_member(poly("x[1,2]*x[2,3] - x[1,3]*x[1,2] - x[1,3]*x[2,3] - x[1,3]", 3)));
}
