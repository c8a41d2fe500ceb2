#include <doctest.h>

#include "oracles.hpp"
#include "subdiv/algebra.hpp"
#include "subdiv/groebner.hpp"
#include "subdiv/parse.hpp"

using namespace subdiv;

namespace {

XPoly poly(const char* text, int n) { return parse_poly(text, n); }

}  // namespace

TEST_CASE("permutations") {
    CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1, 2}), std::invalid_argument);
    const Permutation s({2, 3, 1});
    const Permutation t = Permutation::transposition(3, 1, 2);
    CHECK((s * t).images() == std::vector<int>{3, 2, 1});
    CHECK(s * Permutation::identity(3) == s);
}

TEST_CASE("reversed variables") {
    CHECK(x_general(1, 2, 3) == XPoly::variable(3, 1, 2));
    CHECK(x_general(2, 1, 3) == poly("-b - x[1,2]", 3));
    CHECK(x_general(3, 1, 3) == poly("-b - x[1,3]", 3));
    CHECK_THROWS_AS(x_general(2, 2, 3), std::invalid_argument);
}

TEST_CASE("symmetric generators") {
    CHECK(j_generator(1, 2, 3, 3) == poly("x[1,2]*x[2,3] - x[1,3]*x[1,2] - x[1,3]*x[2,3] - b*x[1,3] - a", 3));
    CHECK(j_generator(1, 2, 3, 3) == j_generator(2, 1, 3, 3));
    CHECK(j_generator(1, 2, 3, 3).specialize(0, 0) == poly("x[1,2]*x[2,3] - x[1,3]*x[1,2] - x[1,3]*x[2,3]", 3));
    CHECK_THROWS_AS(j_generator(1, 1, 3, 3), std::invalid_argument);
}

TEST_CASE("permutation action") {
    const Permutation s = Permutation::transposition(3, 1, 2);
    CHECK(apply_perm(s, XPoly::variable(3, 1, 3)) == XPoly::variable(3, 2, 3));
    CHECK(apply_perm(s, XPoly::variable(3, 1, 2)) == poly("-b - x[1,2]", 3));
    const XPoly p = poly("x[1,2]*x[2,3]^2 - a*x[1,3] + 7", 3);
    CHECK(apply_perm(Permutation::identity(3), p) == p);
}

TEST_CASE("the action is a group action") {
    Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = uniform_int(rng, 2, 5);
        const Permutation s(random_permutation(rng, n));
        const Permutation t(random_permutation(rng, n));
        const XPoly p = random_poly(rng, n, 3, 4);
        REQUIRE(apply_perm(s * t, p) == apply_perm(s, apply_perm(t, p)));
    }
}

TEST_CASE("symmetry checks") {
    CHECK(verify_symmetry(3).passed());
    CHECK(verify_symmetry(4, Deformation::generic(), 3).passed());
    const SymmetryReport r5 = verify_symmetry(5, Deformation::generic(), 9, 10);
    CHECK(r5.passed());
    CHECK(r5.permutations_sampled == 10);
    CHECK(verify_symmetry(4, Deformation::specialized(1, 0), 2).passed());
}

TEST_CASE("symmetry checks on a perturbed family") {
    const JGenerator broken = [](int i, int j, int k, int n, const Deformation& d) {
        return j_generator(i, j, k, n, d) - XPoly(n, d.beta * d.beta);
    };
    const SymmetryReport r = verify_symmetry(4, Deformation::generic(), 1, 3, broken);
    CHECK_FALSE(r.passed_i());
    CHECK(r.passed_ii());
}

TEST_CASE("forkless enumeration") {
    const auto m3 = enumerate_forkless(3, 2);
    REQUIRE(m3.size() == 5);
    std::vector<std::string> names;
    for (const auto& m : m3) {
        names.push_back(m.str());
    }
    CHECK(names == std::vector<std::string>{"x[1,2]^2", "x[1,2]*x[2,3]", "x[1,3]^2", "x[1,3]*x[2,3]",
                                            "x[2,3]^2"});
    for (int k = 0; k <= 5; ++k) {
        const auto m2 = enumerate_forkless(2, k);
        REQUIRE(m2.size() == 1);
        CHECK(m2[0] == XMonomial::variable(2, 1, 2, static_cast<std::uint32_t>(k)));
    }
    CHECK(enumerate_forkless(4, 0) == std::vector<XMonomial>{XMonomial(4)});
}

TEST_CASE("forkless enumeration matches brute force") {
    for (int n = 1; n <= 4; ++n) {
        for (int d = 0; d <= 4; ++d) {
            auto expect = oracle::forkless_by_filter(n, d);
            std::sort(expect.begin(), expect.end(), [](const XMonomial& u, const XMonomial& v) {
                return order_cmp(u, v) > 0;
            });
            REQUIRE(enumerate_forkless(n, d) == expect);
        }
    }
}

TEST_CASE("counts and the generating function") {
    CHECK(count_forkless(3, 3).degrees == std::vector<std::uint64_t>{1, 3, 5, 7});
    CHECK(count_forkless(4, 3).degrees == std::vector<std::uint64_t>{1, 6, 17, 34});
    CHECK(count_forkless(2, 5).degrees == std::vector<std::uint64_t>(6, 1));
    for (int n = 1; n <= 6; ++n) {
        const CountTable t = count_forkless(n, 6);
        REQUIRE(t == gf_coeffs(n, 6));
        REQUIRE(t.degrees == oracle::counts_by_rows(n, 6));
        REQUIRE(t.degrees[0] == 1);
    }
    CHECK(gf_coeffs(8, 10).degrees == oracle::counts_by_rows(8, 10));
    CHECK(count_forkless(3, 2).csv() == "degree,count\n0,1\n1,3\n2,5\n");
}
