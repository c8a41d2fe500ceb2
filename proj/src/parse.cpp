#include "subdiv/parse.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <vector>

namespace subdiv {
namespace {

struct RawTerm {
    Rational coeff{1};
    ParamExp params;
    std::map<PairIndex, std::uint32_t> x;
    std::map<int, std::uint32_t> t;
};

class Parser {
public:
    Parser(std::string_view text, int n) : text_(text), n_(n) {
        if (n < 1) {
            throw std::invalid_argument("ambient size must be positive");
        }
    }

    std::vector<RawTerm> expr() {
        std::vector<RawTerm> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            ++pos_;
            negative = true;
        }
        terms.push_back(term(negative));
        while (true) {
            skip_ws();
            if (at_end()) {
                break;
            }
            const char c = peek();
            if (c != '+' && c != '-') {
                fail("expected '+', '-' or '*'");
            }
            ++pos_;
            terms.push_back(term(c == '-'));
        }
        return terms;
    }

    RawTerm term(bool negative) {
        RawTerm t;
        if (negative) {
            t.coeff = -t.coeff;
        }
        factor(t);
        while (true) {
            skip_ws();
            if (peek() != '*') {
                break;
            }
            ++pos_;
            factor(t);
        }
        return t;
    }

    void factor(RawTerm& t) {
        skip_ws();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const long num = uint();
            long den = 1;
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t at = pos_;
                den = uint();
                if (den == 0) {
                    throw ParseError("zero denominator", at);
                }
            }
            t.coeff *= Rational(num, den);
            return;
        }
        if (c == 'b' || c == 'a') {
            ++pos_;
            const std::uint32_t e = exponent();
            (c == 'b' ? t.params.beta : t.params.alpha) += e;
            return;
        }
        if (c == 'x') {
            const std::size_t at = pos_;
            ++pos_;
            expect('[');
            const long i = uint();
            expect(',');
            const long j = uint();
            expect(']');
            if (!(1 <= i && i < j && j <= n_)) {
                throw ParseError("index x[" + std::to_string(i) + "," + std::to_string(j) +
                                     "] violates 1 <= i < j <= " + std::to_string(n_),
                                 at);
            }
            t.x[{static_cast<int>(i), static_cast<int>(j)}] += exponent();
            return;
        }
        if (c == 't') {
            const std::size_t at = pos_;
            ++pos_;
            expect('[');
            const long i = uint();
            expect(']');
            if (!(1 <= i && i <= n_)) {
                throw ParseError("index t[" + std::to_string(i) + "] out of range for n=" + std::to_string(n_),
                                 at);
            }
            t.t[static_cast<int>(i)] += exponent();
            return;
        }
        fail(at_end() ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    std::uint32_t exponent() {
        skip_ws();
        if (peek() != '^') {
            return 1;
        }
        ++pos_;
        return static_cast<std::uint32_t>(uint());
    }

    long uint() {
        skip_ws();
        const std::size_t start = pos_;
        long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
            if (v > 100'000'000'000L) {
                throw ParseError("integer too large", start);
            }
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected unsigned integer");
        }
        return v;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }
    [[nodiscard]] std::size_t pos() const { return pos_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

private:
    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

XPoly parse_poly(std::string_view text, int n) {
    Parser parser(text, n);
    XPoly out(n);
    for (const RawTerm& t : parser.expr()) {
        if (!t.t.empty()) {
            throw ParseError("t-variables are not allowed in an x-polynomial", 0);
        }
        XMonomial m(n);
        for (const auto& [p, e] : t.x) {
            m = m * XMonomial::variable(n, p.i, p.j, e);
        }
        out.add_term(m, ParamCoeff::monomial(t.params, t.coeff));
    }
    return out;
}

TPoly parse_tpoly(std::string_view text, int n) {
    Parser parser(text, n);
    TPoly out(n);
    for (const RawTerm& t : parser.expr()) {
        if (!t.x.empty()) {
            throw ParseError("x-variables are not allowed in a t-polynomial", 0);
        }
        TMonomial::Exponents e(static_cast<std::size_t>(n), 0);
        for (const auto& [i, k] : t.t) {
            e[static_cast<std::size_t>(i - 1)] += k;
        }
        out.add_term(TMonomial(std::move(e)), ParamCoeff::monomial(t.params, t.coeff));
    }
    return out;
}

XMonomial parse_monomial(std::string_view text, int n) {
    const XPoly p = parse_poly(text, n);
    if (p.size() != 1 || !p.terms().begin()->second.is_one()) {
        throw ParseError("expected a bare monomial, got '" + std::string(text) + "'", 0);
    }
    return p.terms().begin()->first;
}

}  // namespace subdiv
