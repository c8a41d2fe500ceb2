#pragma once

// Exact coefficient arithmetic: the rationals and the parameter ring Q[b, a]
// in which the deformation parameters beta and alpha live as indeterminates.

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace subdiv {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class v);

    /// Parses "p" or "p/q" (optionally signed). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] const mpq_class& value() const { return value_; }
    [[nodiscard]] std::string numerator_str() const { return value_.get_num().get_str(); }
    [[nodiscard]] std::string denominator_str() const { return value_.get_den().get_str(); }
    [[nodiscard]] std::string str() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    [[nodiscard]] Rational pow(unsigned e) const;

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exponent pair (deg_b, deg_a) of a monomial b^i a^j in the parameter ring.
struct ParamExp {
    unsigned beta = 0;
    unsigned alpha = 0;
    friend auto operator<=>(const ParamExp&, const ParamExp&) = default;
};

/// Element of Q[b, a]. Zero coefficients are never stored, so structural
/// equality is ring equality.
class ParamCoeff {
public:
    // Descending (deg_b, deg_a) order is the rendering order.
    using Terms = std::map<ParamExp, Rational, std::greater<>>;

    ParamCoeff() = default;
    ParamCoeff(const Rational& c);  // NOLINT(google-explicit-constructor)
    ParamCoeff(long c) : ParamCoeff(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static ParamCoeff beta();
    static ParamCoeff alpha();
    static ParamCoeff monomial(ParamExp e, const Rational& c);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_one() const;
    /// True iff the value is a rational constant (possibly zero).
    [[nodiscard]] bool is_constant() const;
    /// The constant term.
    [[nodiscard]] Rational constant() const;
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    ParamCoeff& operator+=(const ParamCoeff& o);
    ParamCoeff& operator-=(const ParamCoeff& o);
    ParamCoeff& operator*=(const ParamCoeff& o);
    /// Accumulates c * b^e.beta * a^e.alpha.
    void add_term(ParamExp e, const Rational& c);

    friend ParamCoeff operator+(ParamCoeff a, const ParamCoeff& b) { return a += b; }
    friend ParamCoeff operator-(ParamCoeff a, const ParamCoeff& b) { return a -= b; }
    friend ParamCoeff operator*(const ParamCoeff& a, const ParamCoeff& b);
    friend ParamCoeff operator-(const ParamCoeff& a);
    friend bool operator==(const ParamCoeff& a, const ParamCoeff& b) = default;

    [[nodiscard]] ParamCoeff pow(unsigned e) const;

    /// Evaluates at b = beta0, a = alpha0.
    [[nodiscard]] Rational specialize(const Rational& beta0, const Rational& alpha0) const;

    /// Renders as a signed sum, e.g. "b^2 - 1/2*a + 3"; zero renders as "0".
    [[nodiscard]] std::string str() const;

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const ParamCoeff& c);

/// Values of the two deformation parameters used by the defining relations.
/// The generic choice keeps them as the indeterminates b and a.
struct Deformation {
    ParamCoeff beta = ParamCoeff::beta();
    ParamCoeff alpha = ParamCoeff::alpha();

    static Deformation generic() { return {}; }
    static Deformation specialized(const Rational& beta0, const Rational& alpha0) {
        return {ParamCoeff(beta0), ParamCoeff(alpha0)};
    }
    [[nodiscard]] bool is_generic() const { return *this == generic(); }
    friend bool operator==(const Deformation&, const Deformation&) = default;
};

/// Renders a term's coefficient prefix for a sum: sign and magnitude split so
/// callers can emit " + 2*b*" style text. Returns the factors of |c| joined by
/// '*', empty when |c| is the bare unit 1.
std::string render_param_monomial(ParamExp e, const Rational& abs_coeff);

}  // namespace subdiv
