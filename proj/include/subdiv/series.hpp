#pragma once

// The maps A, B and E.
//
//   A(x[i,j]) = -(q_i*q_j + b*q_j + a) / (q_j - q_i)     (exact, as a fraction)
//   B(q^a)    = prod_{a_i > 0} t_i^{a_i} * w^{sum_{a_i < 0} -a_i}
//   E(t_i)    = -(t_i + b + a*w) / (1 - t_i*w)             (truncated in w)
//
// A is handled exactly through rational functions in q_1..q_n. B is applied
// only to truncated expansions of A on S-friendly monomials, where the
// geometric series in q_i/q_j has S-adequate support.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "subdiv/poly.hpp"
#include "subdiv/ring.hpp"

namespace subdiv {

/// Exponent vector of q_1^{a_1} ... q_n^{a_n}; entries may be negative.
using QExponent = std::vector<std::int32_t>;

/// Sum of -a_i over negative entries.
std::uint64_t negative_mass(const QExponent& a);

/// r-coordinates of q^a: b_k = a_1 + ... + a_k.
QExponent q_to_r_exponent(const QExponent& a);
/// Inverse of q_to_r_exponent: a_1 = b_1, a_k = b_k - b_{k-1}.
QExponent r_to_q_exponent(const QExponent& b);

/// Finite Laurent polynomial in q_1..q_n over Q[b, a].
class QLaurentPoly {
public:
    using Terms = std::map<QExponent, ParamCoeff, std::greater<>>;

    QLaurentPoly() = default;
    explicit QLaurentPoly(int n) : n_(n) {}
    QLaurentPoly(int n, const ParamCoeff& c);

    /// c * q^a.
    static QLaurentPoly monomial(int n, QExponent a, const ParamCoeff& c = ParamCoeff(1));

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    void add_term(const QExponent& a, const ParamCoeff& c);

    QLaurentPoly& operator+=(const QLaurentPoly& o);
    QLaurentPoly& operator-=(const QLaurentPoly& o);
    friend QLaurentPoly operator+(QLaurentPoly a, const QLaurentPoly& b) { return a += b; }
    friend QLaurentPoly operator-(QLaurentPoly a, const QLaurentPoly& b) { return a -= b; }
    friend QLaurentPoly operator-(const QLaurentPoly& a);
    friend QLaurentPoly operator*(const QLaurentPoly& a, const QLaurentPoly& b);
    friend bool operator==(const QLaurentPoly&, const QLaurentPoly&) = default;

    [[nodiscard]] QLaurentPoly pow(unsigned e) const;
    [[nodiscard]] std::string str() const;

private:
    void check_same_n(const QLaurentPoly& o) const;

    int n_ = 1;
    Terms terms_;
};

/// Multiset of denominator factors; (i, j) with multiplicity e stands for
/// (q_j - q_i)^e.
using DenominatorFactors = std::map<PairIndex, unsigned>;

/// prod (q_j - q_i)^e as a polynomial.
QLaurentPoly denominator_poly(int n, const DenominatorFactors& factors);

/// numerator / prod (q_j - q_i)^e. Not reduced; compare with rat_eq.
struct QRatFrac {
    QLaurentPoly numerator;
    DenominatorFactors denominator;

    [[nodiscard]] int n() const { return numerator.n(); }
    /// "(numerator) / ((q[2]-q[1])^2*(q[3]-q[1]))"; no denominator part when empty.
    [[nodiscard]] std::string str() const;
};

QRatFrac operator*(const QRatFrac& f, const QRatFrac& g);
/// Sum over the lcm of the two factor multisets.
QRatFrac operator+(const QRatFrac& f, const QRatFrac& g);

bool rat_is_zero(const QRatFrac& f);
/// Cross-multiplication test: num(f)*den(g) == num(g)*den(f).
bool rat_eq(const QRatFrac& f, const QRatFrac& g);

/// Image of a single variable: -(q_i*q_j + b*q_j + a) / (q_j - q_i).
QRatFrac a_image_variable(int n, int i, int j, const Deformation& d = Deformation::generic());
/// Ring-homomorphic image of p over the common denominator of its terms.
QRatFrac a_image_rat(const XPoly& p, const Deformation& d = Deformation::generic());

struct AKillsJReport {
    int n = 0;
    std::size_t generators_checked = 0;
    std::size_t products_checked = 0;
    std::vector<std::string> failures;
    [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// A vanishes on every J-generator and on `products` random elements
/// c * g * m (random coefficient, generator and monomial of degree <= 2).
AKillsJReport verify_a_kills_j(int n, const Deformation& d = Deformation::generic(), std::uint64_t seed = 0,
                               int products = 50);

/// Truncated Laurent series in q: only exponents with negative mass <= W
/// are kept.
class QTruncSeries {
public:
    using Terms = std::map<QExponent, ParamCoeff, std::greater<>>;

    QTruncSeries(int n, int w_order);
    static QTruncSeries one(int n, int w_order);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int w_order() const { return w_order_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    /// Adds c * q^a unless its negative mass exceeds W.
    void add_term(const QExponent& a, const ParamCoeff& c);

    friend QTruncSeries operator*(const QTruncSeries& f, const QTruncSeries& g);
    friend bool operator==(const QTruncSeries&, const QTruncSeries&) = default;

private:
    int n_;
    int w_order_;
    Terms terms_;
};

/// Every variable x[i,j] of m has i in S and j not in S.
bool is_s_friendly(const XMonomial& m, const std::set<int>& s);
/// Nonnegative on S, nonpositive off S.
bool is_s_adequate(const QExponent& a, const std::set<int>& s);

/// S = { i : row i of m has positive total exponent }; m is S-friendly when
/// it is pathless.
std::set<int> pathless_subset(const XMonomial& m);

/// Expansion of A(m) with each factor written as a geometric series in
/// q_i/q_j, truncated at negative mass W. Coefficients of retained exponents
/// are exact. Throws std::invalid_argument if m is not S-friendly.
QTruncSeries a_s_expand(const XMonomial& m, const std::set<int>& s, int w_order,
                        const Deformation& d = Deformation::generic());

/// Power series in w truncated at order W with t-polynomial coefficients.
class TWSeries {
public:
    TWSeries(int n, int w_order);
    TWSeries(int n, int w_order, std::vector<TPoly> coeffs);
    static TWSeries constant(const TPoly& p, int w_order);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int w_order() const { return w_order_; }
    [[nodiscard]] const std::vector<TPoly>& coeffs() const { return coeffs_; }
    [[nodiscard]] const TPoly& coeff(int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }

    void add(int w_degree, const TMonomial& m, const ParamCoeff& c);

    TWSeries& operator+=(const TWSeries& o);
    friend TWSeries operator*(const TWSeries& f, const TWSeries& g);
    friend bool operator==(const TWSeries&, const TWSeries&) = default;

    /// "(p0) + (p1)*w + (p2)*w^2 + ..."
    [[nodiscard]] std::string str() const;

private:
    int n_;
    int w_order_;
    std::vector<TPoly> coeffs_;
};

/// Termwise B: q^a -> t^{a+} * w^{negative mass}.
TWSeries b_map(const QTruncSeries& f);

/// Ring-homomorphic image with E(t_i) expanded through w^W.
/// Throws std::invalid_argument if p involves t_n.
TWSeries e_image(const TPoly& p, int w_order, const Deformation& d = Deformation::generic());

/// Checks B(A_S(m)) == E(D(m)) through w^W with S = pathless_subset(m).
/// Throws std::invalid_argument if m is not pathless.
bool verify_ed_eq_ba(const XMonomial& m, int w_order, const Deformation& d = Deformation::generic());

struct EdBaReport {
    int n = 0;
    int w_order = 0;
    std::size_t monomials_checked = 0;
    std::vector<std::string> failures;
    [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// verify_ed_eq_ba on every pathless monomial of degree <= max_degree.
EdBaReport verify_ed_eq_ba_exhaustive(int n, int max_degree, int w_order,
                                      const Deformation& d = Deformation::generic());
/// verify_ed_eq_ba on `count` random pathless monomials of degree <= max_degree
/// (rejection sampling from random_monomial).
EdBaReport verify_ed_eq_ba_random(int n, int count, int max_degree, int w_order, std::uint64_t seed,
                                  const Deformation& d = Deformation::generic());

/// Linear extension of B o A over the pathless monomials of q, each with its
/// own subset S.
TWSeries ba_image_pathless(const XPoly& q, int w_order, const Deformation& d = Deformation::generic());

/// F: constant coefficient in w.
TPoly f_map(const TWSeries& s);
/// G: t_i -> -t_i - b for i in [1, n-1].
TPoly g_map(const TPoly& p, const Deformation& d = Deformation::generic());

/// G(F(E(p))) == p for `samples` random p in t_1..t_{n-1}.
bool verify_e_left_inverse(int samples, std::uint64_t seed, int n = 5,
                           const Deformation& d = Deformation::generic());

}  // namespace subdiv
