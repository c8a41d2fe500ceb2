#pragma once

// Sparse polynomials in the pair variables x[i,j] (1 <= i < j <= n) and in
// t[1..n], with the predicates, weights and term order used by the
// reduction procedures.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "subdiv/ring.hpp"

namespace subdiv {

struct PairIndex {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

/// An (i, j, k) with i < j < k.
struct Triple {
    int i = 0;
    int j = 0;
    int k = 0;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

std::ostream& operator<<(std::ostream& os, const Triple& t);

/// Number of pair variables for ambient size n.
std::size_t pair_count(int n);
/// Row-major position of x[i,j]: x[1,2], x[1,3], ..., x[1,n], x[2,3], ...
std::size_t pair_slot(int n, int i, int j);
/// Inverse of pair_slot.
PairIndex pair_at(int n, std::size_t slot);

/// Monomial in the x[i,j]. Exponents are stored densely in row-major
/// variable order, which is also the precedence order of the term order.
class XMonomial {
public:
    using Exponents = std::vector<std::uint32_t>;

    XMonomial() = default;
    /// The monomial 1.
    explicit XMonomial(int n);
    XMonomial(int n, Exponents exps);
    static XMonomial variable(int n, int i, int j, std::uint32_t power = 1);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const Exponents& exponents() const { return exps_; }
    [[nodiscard]] std::uint32_t exponent(int i, int j) const;
    [[nodiscard]] std::uint32_t degree() const;
    [[nodiscard]] bool is_one() const;

    /// Nonzero entries as (pair, exponent), row-major.
    [[nodiscard]] std::vector<std::pair<PairIndex, std::uint32_t>> support() const;

    [[nodiscard]] bool divides(const XMonomial& other) const;
    /// this / d; d must divide this.
    [[nodiscard]] XMonomial quotient(const XMonomial& d) const;
    [[nodiscard]] XMonomial lcm(const XMonomial& other) const;
    [[nodiscard]] bool disjoint(const XMonomial& other) const;

    friend XMonomial operator*(const XMonomial& a, const XMonomial& b);

    /// Structural order; agrees with order_cmp for equal n.
    friend std::strong_ordering operator<=>(const XMonomial& a, const XMonomial& b);
    friend bool operator==(const XMonomial& a, const XMonomial& b) = default;

    /// "x[1,2]^2*x[3,4]" or "1".
    [[nodiscard]] std::string str() const;

private:
    int n_ = 1;
    Exponents exps_;
};

std::ostream& operator<<(std::ostream& os, const XMonomial& m);

/// No x[i,j]*x[j,k] with i < j < k divides m.
bool is_pathless(const XMonomial& m);
/// No x[i,j]*x[i,k] with i < j < k divides m.
bool is_forkless(const XMonomial& m);
/// Sum of a_{i,j} * (n - j + i); strictly decreases under the pathless rewrite.
std::uint64_t weight_pathless(const XMonomial& m);
/// Sum of a_{i,j} * (j - i).
std::uint64_t weight_alt(const XMonomial& m);

/// Inverse lexicographic order for x[1,2] > x[1,3] > ... > x[n-1,n]:
/// decided at the largest variable whose exponents differ.
/// Throws std::invalid_argument on ambient-size mismatch.
std::strong_ordering order_cmp(const XMonomial& a, const XMonomial& b);

struct TermOrder {
    int n = 1;
    [[nodiscard]] std::strong_ordering compare(const XMonomial& a, const XMonomial& b) const {
        return order_cmp(a, b);
    }
};

/// Polynomial over Q[b, a] in the x[i,j]. Terms are kept in descending term
/// order with no zero coefficients.
class XPoly {
public:
    using Terms = std::map<XMonomial, ParamCoeff, std::greater<>>;

    XPoly() = default;
    explicit XPoly(int n) : n_(n) {}
    XPoly(int n, const ParamCoeff& c);
    XPoly(const XMonomial& m, const ParamCoeff& c = ParamCoeff(1));

    static XPoly variable(int n, int i, int j);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] ParamCoeff coeff(const XMonomial& m) const;
    [[nodiscard]] std::uint32_t degree() const;

    void add_term(const XMonomial& m, const ParamCoeff& c);

    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    XPoly& operator*=(const XPoly& o);

    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator-(const XPoly& a);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const ParamCoeff& c, const XPoly& p);
    friend XPoly operator*(const XMonomial& m, const XPoly& p);
    friend bool operator==(const XPoly& a, const XPoly& b) = default;

    [[nodiscard]] XPoly pow(unsigned e) const;

    /// Evaluates every coefficient at b = beta0, a = alpha0.
    [[nodiscard]] XPoly specialize(const Rational& beta0, const Rational& alpha0) const;

    /// Canonical text, parseable by parse_poly.
    [[nodiscard]] std::string str() const;

private:
    void check_same_n(const XPoly& o) const;

    int n_ = 1;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const XPoly& p);

bool is_pathless(const XPoly& p);
bool is_forkless(const XPoly& p);

/// Every monomial of exactly the given degree, descending.
std::vector<XMonomial> all_monomials(int n, int degree);

/// Monomial in t[1..n]; exponent vector of length n.
class TMonomial {
public:
    using Exponents = std::vector<std::uint32_t>;

    TMonomial() = default;
    explicit TMonomial(int n) : exps_(static_cast<std::size_t>(n), 0) {}
    explicit TMonomial(Exponents exps) : exps_(std::move(exps)) {}

    [[nodiscard]] int n() const { return static_cast<int>(exps_.size()); }
    [[nodiscard]] const Exponents& exponents() const { return exps_; }
    [[nodiscard]] std::uint32_t exponent(int i) const { return exps_.at(static_cast<std::size_t>(i - 1)); }
    [[nodiscard]] std::uint32_t degree() const;
    [[nodiscard]] bool is_one() const;

    friend TMonomial operator*(const TMonomial& a, const TMonomial& b);
    friend auto operator<=>(const TMonomial&, const TMonomial&) = default;

    [[nodiscard]] std::string str() const;

private:
    Exponents exps_;
};

/// Polynomial over Q[b, a] in t[1..n].
class TPoly {
public:
    using Terms = std::map<TMonomial, ParamCoeff, std::greater<>>;

    TPoly() = default;
    explicit TPoly(int n) : n_(n) {}
    TPoly(int n, const ParamCoeff& c);
    TPoly(const TMonomial& m, const ParamCoeff& c = ParamCoeff(1));

    static TPoly variable(int n, int i);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] ParamCoeff coeff(const TMonomial& m) const;

    void add_term(const TMonomial& m, const ParamCoeff& c);

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);

    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator-(const TPoly& a);
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const ParamCoeff& c, const TPoly& p);
    friend bool operator==(const TPoly& a, const TPoly& b) = default;

    [[nodiscard]] TPoly pow(unsigned e) const;

    /// Ring homomorphism sending t[i] to images[i-1].
    [[nodiscard]] TPoly substitute(const std::vector<TPoly>& images) const;

    [[nodiscard]] std::string str() const;

private:
    void check_same_n(const TPoly& o) const;

    int n_ = 1;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const TPoly& p);

/// The substitution homomorphism x[i,j] -> t[i].
TPoly d_image(const XPoly& p);

namespace detail {
/// Joins the rendered terms of a sum: first term keeps a leading "-", later
/// terms are separated by " + " / " - ".
void append_signed_term(std::string& out, bool first, const Rational& c, ParamExp e,
                        const std::string& var_factors);
}  // namespace detail

}  // namespace subdiv
