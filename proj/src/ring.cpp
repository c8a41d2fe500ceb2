#include "subdiv/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace subdiv {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("Rational: empty text");
    }
    std::size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') {
        pos = 1;
    }
    bool seen_digit = false;
    bool seen_slash = false;
    for (std::size_t i = pos; i < s.size(); ++i) {
        const char c = s[i];
        if (c >= '0' && c <= '9') {
            seen_digit = true;
        } else if (c == '/' && seen_digit && !seen_slash && i + 1 < s.size()) {
            seen_slash = true;
            seen_digit = false;
        } else {
            throw std::invalid_argument("Rational: malformed '" + s + "'");
        }
    }
    if (!seen_digit) {
        throw std::invalid_argument("Rational: malformed '" + s + "'");
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    mpq_class v;
    if (v.set_str(s, 10) != 0) {
        throw std::invalid_argument("Rational: malformed '" + s + "'");
    }
    if (v.get_den() == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational Rational::pow(unsigned e) const {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
    return Rational(mpq_class(num, den));
}

std::string Rational::str() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

ParamCoeff::ParamCoeff(const Rational& c) {
    if (!c.is_zero()) {
        terms_.emplace(ParamExp{}, c);
    }
}

ParamCoeff ParamCoeff::beta() { return monomial({1, 0}, Rational(1)); }

ParamCoeff ParamCoeff::alpha() { return monomial({0, 1}, Rational(1)); }

ParamCoeff ParamCoeff::monomial(ParamExp e, const Rational& c) {
    ParamCoeff out;
    out.add_term(e, c);
    return out;
}

bool ParamCoeff::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == ParamExp{} && terms_.begin()->second.is_one();
}

bool ParamCoeff::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamExp{});
}

Rational ParamCoeff::constant() const {
    auto it = terms_.find(ParamExp{});
    return it == terms_.end() ? Rational() : it->second;
}

void ParamCoeff::add_term(ParamExp e, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

ParamCoeff& ParamCoeff::operator+=(const ParamCoeff& o) {
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

ParamCoeff& ParamCoeff::operator-=(const ParamCoeff& o) {
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

ParamCoeff operator*(const ParamCoeff& a, const ParamCoeff& b) {
    ParamCoeff out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term({ea.beta + eb.beta, ea.alpha + eb.alpha}, ca * cb);
        }
    }
    return out;
}

ParamCoeff& ParamCoeff::operator*=(const ParamCoeff& o) {
    *this = *this * o;
    return *this;
}

ParamCoeff operator-(const ParamCoeff& a) {
    ParamCoeff out = a;
    for (auto& [e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

ParamCoeff ParamCoeff::pow(unsigned e) const {
    ParamCoeff result(1);
    ParamCoeff base = *this;
    while (e > 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

Rational ParamCoeff::specialize(const Rational& beta0, const Rational& alpha0) const {
    Rational sum;
    for (const auto& [e, c] : terms_) {
        sum += c * beta0.pow(e.beta) * alpha0.pow(e.alpha);
    }
    return sum;
}

std::string render_param_monomial(ParamExp e, const Rational& abs_coeff) {
    std::string out;
    auto append = [&out](const std::string& f) {
        if (!out.empty()) {
            out += '*';
        }
        out += f;
    };
    if (!abs_coeff.is_one()) {
        append(abs_coeff.str());
    }
    auto power = [&](const char* sym, unsigned k) {
        if (k == 1) {
            append(sym);
        } else if (k > 1) {
            append(std::string(sym) + "^" + std::to_string(k));
        }
    };
    power("b", e.beta);
    power("a", e.alpha);
    return out;
}

std::string ParamCoeff::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string body = render_param_monomial(e, mag);
        out += body.empty() ? "1" : body;
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ParamCoeff& c) { return os << c.str(); }

}  // namespace subdiv
