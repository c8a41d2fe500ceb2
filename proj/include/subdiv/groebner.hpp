#pragma once

// The explicit Groebner basis
//
//   g_{i,j,k} = x[i,k]*x[i,j] - x[i,j]*x[j,k] + x[i,k]*x[j,k] + b*x[i,k] + a,
//
// i < j < k, of the ideal J under the inverse lexicographic order with
// x[1,2] > x[1,3] > ... > x[n-1,n]. Its head terms are x[i,k]*x[i,j], so the
// reduced monomials are exactly the forkless ones.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "subdiv/poly.hpp"
#include "subdiv/ring.hpp"

namespace subdiv {

struct GBasisElement {
    Triple triple;
    XPoly poly;
    XMonomial head;
};

class GBasis {
public:
    /// Throws std::invalid_argument unless every element is monic, nonzero and
    /// of ambient size n, and its cached head matches head_term(poly).
    GBasis(int n, std::vector<GBasisElement> elements);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const std::vector<GBasisElement>& elements() const { return elements_; }
    [[nodiscard]] std::size_t size() const { return elements_.size(); }

private:
    int n_;
    std::vector<GBasisElement> elements_;
};

/// The J-generator x[i,j]*x[j,k] - x[i,k]*(x[i,j] + x[j,k] + b) - a.
XPoly j_relation(int n, const Triple& t, const Deformation& d = Deformation::generic());

/// All C(n,3) basis elements in lexicographic triple order.
GBasis generate_basis(int n, const Deformation& d = Deformation::generic());

/// Largest monomial under order_cmp. Throws std::invalid_argument on zero.
XMonomial head_term(const XPoly& p);
ParamCoeff head_coeff(const XPoly& p);

/// One reduction: largest reducible monomial, then the basis element with the
/// smallest triple. Returns nullopt when p is G-reduced.
std::optional<XPoly> reduce_step_G(const XPoly& p, const GBasis& g);

/// Fixed point of reduce_step_G. The step count is bounded; exceeding the
/// bound throws std::logic_error.
XPoly normal_form(const XPoly& p, const GBasis& g);

/// s1*g1 - s2*g2 cancelling the heads at their lcm.
XPoly spol(const GBasisElement& g1, const GBasisElement& g2);

struct BuchbergerPair {
    Triple first;
    Triple second;
    XPoly remainder;
};

struct BuchbergerReport {
    std::size_t pairs_checked = 0;
    std::vector<BuchbergerPair> failures;
    [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// Reduces the S-polynomial of every unordered pair (equal indices included)
/// with non-disjoint heads.
BuchbergerReport buchberger_report(const GBasis& g);
bool buchberger_check(const GBasis& g);

/// p lies in J (for the given deformation) iff its normal form vanishes.
bool ideal_member(const XPoly& p, const Deformation& d = Deformation::generic());

/// The four basis elements attached to a < b < c < d:
/// u1 = g(a,b,c), u2 = g(a,b,d), u3 = g(a,c,d), u4 = g(b,c,d).
std::array<XPoly, 4> u_family(int n, int a, int b, int c, int d_, const Deformation& d = Deformation::generic());

struct SpolIdentityReport {
    std::size_t quadruples = 0;
    std::vector<std::string> failures;
    [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// For every a < b < c < d <= n checks the three syzygy identities that
/// certify spol(u1,u2), spol(u1,u3), spol(u2,u3) reduce to 0, and that the
/// shifted head terms on each right-hand side are pairwise distinct.
SpolIdentityReport verify_spol_identities(int n, const Deformation& d = Deformation::generic());

}  // namespace subdiv
