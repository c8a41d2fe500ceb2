#include "subdiv/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace subdiv {

std::ostream& operator<<(std::ostream& os, const Triple& t) {
    return os << '(' << t.i << ',' << t.j << ',' << t.k << ')';
}

std::size_t pair_count(int n) {
    return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

std::size_t pair_slot(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n)) {
        throw std::out_of_range("pair index x[" + std::to_string(i) + "," + std::to_string(j) +
                                "] invalid for n=" + std::to_string(n));
    }
    // Rows 1..i-1 contribute (n-1) + (n-2) + ... + (n-i+1) slots.
    const auto row = static_cast<std::size_t>(i - 1);
    const auto nn = static_cast<std::size_t>(n);
    return row * (nn - 1) - row * (row - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

PairIndex pair_at(int n, std::size_t slot) {
    std::size_t remaining = slot;
    for (int i = 1; i < n; ++i) {
        const auto row_len = static_cast<std::size_t>(n - i);
        if (remaining < row_len) {
            return {i, i + 1 + static_cast<int>(remaining)};
        }
        remaining -= row_len;
    }
    throw std::out_of_range("pair slot out of range");
}

// ---------------------------------------------------------------- XMonomial

XMonomial::XMonomial(int n) : n_(n), exps_(pair_count(n), 0) {
    if (n < 1) {
        throw std::invalid_argument("ambient size must be positive");
    }
}

XMonomial::XMonomial(int n, Exponents exps) : n_(n), exps_(std::move(exps)) {
    if (n < 1) {
        throw std::invalid_argument("ambient size must be positive");
    }
    if (exps_.size() != pair_count(n)) {
        throw std::invalid_argument("exponent vector length does not match n");
    }
}

XMonomial XMonomial::variable(int n, int i, int j, std::uint32_t power) {
    XMonomial m(n);
    m.exps_[pair_slot(n, i, j)] = power;
    return m;
}

std::uint32_t XMonomial::exponent(int i, int j) const { return exps_[pair_slot(n_, i, j)]; }

std::uint32_t XMonomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0U); }

bool XMonomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

std::vector<std::pair<PairIndex, std::uint32_t>> XMonomial::support() const {
    std::vector<std::pair<PairIndex, std::uint32_t>> out;
    std::size_t slot = 0;
    for (int i = 1; i < n_; ++i) {
        for (int j = i + 1; j <= n_; ++j, ++slot) {
            if (exps_[slot] > 0) {
                out.push_back({{i, j}, exps_[slot]});
            }
        }
    }
    return out;
}

bool XMonomial::divides(const XMonomial& other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("ambient size mismatch");
    }
    for (std::size_t s = 0; s < exps_.size(); ++s) {
        if (exps_[s] > other.exps_[s]) {
            return false;
        }
    }
    return true;
}

XMonomial XMonomial::quotient(const XMonomial& d) const {
    if (!d.divides(*this)) {
        throw std::invalid_argument("monomial quotient: divisor does not divide " + str());
    }
    XMonomial out = *this;
    for (std::size_t s = 0; s < exps_.size(); ++s) {
        out.exps_[s] -= d.exps_[s];
    }
    return out;
}

XMonomial XMonomial::lcm(const XMonomial& other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("ambient size mismatch");
    }
    XMonomial out = *this;
    for (std::size_t s = 0; s < exps_.size(); ++s) {
        out.exps_[s] = std::max(exps_[s], other.exps_[s]);
    }
    return out;
}

bool XMonomial::disjoint(const XMonomial& other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("ambient size mismatch");
    }
    for (std::size_t s = 0; s < exps_.size(); ++s) {
        if (exps_[s] > 0 && other.exps_[s] > 0) {
            return false;
        }
    }
    return true;
}

XMonomial operator*(const XMonomial& a, const XMonomial& b) {
    if (a.n_ != b.n_) {
        throw std::invalid_argument("ambient size mismatch");
    }
    XMonomial out = a;
    for (std::size_t s = 0; s < out.exps_.size(); ++s) {
        out.exps_[s] += b.exps_[s];
    }
    return out;
}

std::strong_ordering operator<=>(const XMonomial& a, const XMonomial& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(), b.exps_.begin(),
                                                  b.exps_.end());
}

std::string XMonomial::str() const {
    std::string out;
    for (const auto& [p, e] : support()) {
        if (!out.empty()) {
            out += '*';
        }
        out += "x[" + std::to_string(p.i) + "," + std::to_string(p.j) + "]";
        if (e > 1) {
            out += "^" + std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

std::ostream& operator<<(std::ostream& os, const XMonomial& m) { return os << m.str(); }

bool is_pathless(const XMonomial& m) {
    const int n = m.n();
    for (int j = 2; j < n; ++j) {
        bool has_in = false;
        for (int i = 1; i < j && !has_in; ++i) {
            has_in = m.exponent(i, j) > 0;
        }
        if (!has_in) {
            continue;
        }
        for (int k = j + 1; k <= n; ++k) {
            if (m.exponent(j, k) > 0) {
                return false;
            }
        }
    }
    return true;
}

bool is_forkless(const XMonomial& m) {
    const int n = m.n();
    for (int i = 1; i < n; ++i) {
        int used = 0;
        for (int j = i + 1; j <= n; ++j) {
            if (m.exponent(i, j) > 0 && ++used > 1) {
                return false;
            }
        }
    }
    return true;
}

std::uint64_t weight_pathless(const XMonomial& m) {
    std::uint64_t w = 0;
    for (const auto& [p, e] : m.support()) {
        w += static_cast<std::uint64_t>(e) * static_cast<std::uint64_t>(m.n() - p.j + p.i);
    }
    return w;
}

std::uint64_t weight_alt(const XMonomial& m) {
    std::uint64_t w = 0;
    for (const auto& [p, e] : m.support()) {
        w += static_cast<std::uint64_t>(e) * static_cast<std::uint64_t>(p.j - p.i);
    }
    return w;
}

std::strong_ordering order_cmp(const XMonomial& a, const XMonomial& b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("order_cmp: ambient size mismatch");
    }
    return a <=> b;
}

// ---------------------------------------------------------------- rendering

namespace detail {

void append_signed_term(std::string& out, bool first, const Rational& c, ParamExp e,
                        const std::string& var_factors) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
        out += negative ? "-" : "";
    } else {
        out += negative ? " - " : " + ";
    }
    std::string body = render_param_monomial(e, mag);
    if (!var_factors.empty()) {
        if (!body.empty()) {
            body += '*';
        }
        body += var_factors;
    }
    out += body.empty() ? "1" : body;
}

}  // namespace detail

// ---------------------------------------------------------------- XPoly

XPoly::XPoly(int n, const ParamCoeff& c) : n_(n) {
    if (!c.is_zero()) {
        terms_.emplace(XMonomial(n), c);
    }
}

XPoly::XPoly(const XMonomial& m, const ParamCoeff& c) : n_(m.n()) {
    if (!c.is_zero()) {
        terms_.emplace(m, c);
    }
}

XPoly XPoly::variable(int n, int i, int j) { return XPoly(XMonomial::variable(n, i, j)); }

ParamCoeff XPoly::coeff(const XMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ParamCoeff() : it->second;
}

std::uint32_t XPoly::degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m.degree());
    }
    return d;
}

void XPoly::check_same_n(const XPoly& o) const {
    if (n_ != o.n_) {
        throw std::invalid_argument("XPoly: ambient size mismatch (" + std::to_string(n_) + " vs " +
                                    std::to_string(o.n_) + ")");
    }
}

void XPoly::add_term(const XMonomial& m, const ParamCoeff& c) {
    if (m.n() != n_) {
        throw std::invalid_argument("XPoly: monomial ambient size mismatch");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

XPoly& XPoly::operator+=(const XPoly& o) {
    check_same_n(o);
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    check_same_n(o);
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

XPoly operator-(const XPoly& a) {
    XPoly out = a;
    for (auto& [m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    a.check_same_n(b);
    XPoly out(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

XPoly& XPoly::operator*=(const XPoly& o) {
    *this = *this * o;
    return *this;
}

XPoly operator*(const ParamCoeff& c, const XPoly& p) {
    XPoly out(p.n_);
    if (c.is_zero()) {
        return out;
    }
    for (const auto& [m, pc] : p.terms_) {
        out.add_term(m, c * pc);
    }
    return out;
}

XPoly operator*(const XMonomial& m, const XPoly& p) {
    XPoly out(p.n_);
    for (const auto& [pm, pc] : p.terms_) {
        out.terms_.emplace_hint(out.terms_.end(), m * pm, pc);
    }
    return out;
}

XPoly XPoly::pow(unsigned e) const {
    XPoly result(n_, ParamCoeff(1));
    XPoly base = *this;
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

XPoly XPoly::specialize(const Rational& beta0, const Rational& alpha0) const {
    XPoly out(n_);
    for (const auto& [m, c] : terms_) {
        out.add_term(m, ParamCoeff(c.specialize(beta0, alpha0)));
    }
    return out;
}

std::string XPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const std::string vars = m.is_one() ? std::string() : m.str();
        for (const auto& [e, r] : c.terms()) {
            detail::append_signed_term(out, first, r, e, vars);
            first = false;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const XPoly& p) { return os << p.str(); }

bool is_pathless(const XPoly& p) {
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [](const auto& t) { return is_pathless(t.first); });
}

bool is_forkless(const XPoly& p) {
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [](const auto& t) { return is_forkless(t.first); });
}

namespace {

void fill_monomials(int n, std::size_t slot, std::uint32_t remaining, XMonomial::Exponents& exps,
                    std::vector<XMonomial>& out) {
    if (slot + 1 == exps.size()) {
        exps[slot] = remaining;
        out.emplace_back(n, exps);
        exps[slot] = 0;
        return;
    }
    for (std::uint32_t e = 0; e <= remaining; ++e) {
        exps[slot] = e;
        fill_monomials(n, slot + 1, remaining - e, exps, out);
    }
    exps[slot] = 0;
}

}  // namespace

std::vector<XMonomial> all_monomials(int n, int degree) {
    if (degree < 0) {
        throw std::invalid_argument("all_monomials: negative degree");
    }
    std::vector<XMonomial> out;
    XMonomial::Exponents exps(pair_count(n), 0);
    if (exps.empty()) {
        if (degree == 0) {
            out.emplace_back(n);
        }
        return out;
    }
    fill_monomials(n, 0, static_cast<std::uint32_t>(degree), exps, out);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// ---------------------------------------------------------------- TMonomial / TPoly

std::uint32_t TMonomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0U); }

bool TMonomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

TMonomial operator*(const TMonomial& a, const TMonomial& b) {
    if (a.exps_.size() != b.exps_.size()) {
        throw std::invalid_argument("TMonomial: ambient size mismatch");
    }
    TMonomial out = a;
    for (std::size_t s = 0; s < out.exps_.size(); ++s) {
        out.exps_[s] += b.exps_[s];
    }
    return out;
}

std::string TMonomial::str() const {
    std::string out;
    for (std::size_t s = 0; s < exps_.size(); ++s) {
        if (exps_[s] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += "t[" + std::to_string(s + 1) + "]";
        if (exps_[s] > 1) {
            out += "^" + std::to_string(exps_[s]);
        }
    }
    return out.empty() ? "1" : out;
}

TPoly::TPoly(int n, const ParamCoeff& c) : n_(n) {
    if (!c.is_zero()) {
        terms_.emplace(TMonomial(n), c);
    }
}

TPoly::TPoly(const TMonomial& m, const ParamCoeff& c) : n_(m.n()) {
    if (!c.is_zero()) {
        terms_.emplace(m, c);
    }
}

TPoly TPoly::variable(int n, int i) {
    if (i < 1 || i > n) {
        throw std::out_of_range("t index out of range");
    }
    TMonomial::Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return TPoly(TMonomial(std::move(e)));
}

ParamCoeff TPoly::coeff(const TMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ParamCoeff() : it->second;
}

void TPoly::check_same_n(const TPoly& o) const {
    if (n_ != o.n_) {
        throw std::invalid_argument("TPoly: ambient size mismatch");
    }
}

void TPoly::add_term(const TMonomial& m, const ParamCoeff& c) {
    if (m.n() != n_) {
        throw std::invalid_argument("TPoly: monomial ambient size mismatch");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

TPoly& TPoly::operator+=(const TPoly& o) {
    check_same_n(o);
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    check_same_n(o);
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

TPoly operator-(const TPoly& a) {
    TPoly out = a;
    for (auto& [m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    a.check_same_n(b);
    TPoly out(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

TPoly operator*(const ParamCoeff& c, const TPoly& p) {
    TPoly out(p.n_);
    for (const auto& [m, pc] : p.terms_) {
        out.add_term(m, c * pc);
    }
    return out;
}

TPoly TPoly::pow(unsigned e) const {
    TPoly result(n_, ParamCoeff(1));
    TPoly base = *this;
    while (e > 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

TPoly TPoly::substitute(const std::vector<TPoly>& images) const {
    if (images.size() != static_cast<std::size_t>(n_)) {
        throw std::invalid_argument("TPoly::substitute: need one image per variable");
    }
    const int target_n = images.empty() ? n_ : images.front().n();
    // powers[i][e] caches images[i]^e
    std::vector<std::vector<TPoly>> powers(images.size());
    auto power = [&](std::size_t i, std::uint32_t e) -> const TPoly& {
        auto& cache = powers[i];
        if (cache.empty()) {
            cache.emplace_back(target_n, ParamCoeff(1));
        }
        while (cache.size() <= e) {
            cache.push_back(cache.back() * images[i]);
        }
        return cache[e];
    };
    TPoly out(target_n);
    for (const auto& [m, c] : terms_) {
        TPoly term(target_n, c);
        for (std::size_t i = 0; i < m.exponents().size(); ++i) {
            if (m.exponents()[i] > 0) {
                term = term * power(i, m.exponents()[i]);
            }
        }
        out += term;
    }
    return out;
}

std::string TPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const std::string vars = m.is_one() ? std::string() : m.str();
        for (const auto& [e, r] : c.terms()) {
            detail::append_signed_term(out, first, r, e, vars);
            first = false;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.str(); }

TPoly d_image(const XPoly& p) {
    const int n = p.n();
    TPoly out(n);
    for (const auto& [m, c] : p.terms()) {
        TMonomial::Exponents e(static_cast<std::size_t>(n), 0);
        for (const auto& [pair, a] : m.support()) {
            e[static_cast<std::size_t>(pair.i - 1)] += a;
        }
        out.add_term(TMonomial(std::move(e)), c);
    }
    return out;
}

}  // namespace subdiv
