#include "subdiv/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "subdiv/groebner.hpp"
#include "subdiv/random.hpp"

namespace subdiv {

namespace {

QExponent zero_exponent(int n) { return QExponent(static_cast<std::size_t>(n), 0); }

QExponent add_exponents(const QExponent& a, const QExponent& b) {
    QExponent out(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) {
        out[s] = a[s] + b[s];
    }
    return out;
}

std::string q_monomial_str(const QExponent& a) {
    std::string out;
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (a[s] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += "q[" + std::to_string(s + 1) + "]";
        if (a[s] != 1) {
            out += "^" + std::to_string(a[s]);
        }
    }
    return out;
}

// q_j - q_i
QLaurentPoly linear_factor(int n, int i, int j) {
    QExponent ej = zero_exponent(n);
    QExponent ei = zero_exponent(n);
    ej[static_cast<std::size_t>(j - 1)] = 1;
    ei[static_cast<std::size_t>(i - 1)] = 1;
    return QLaurentPoly::monomial(n, ej) - QLaurentPoly::monomial(n, ei);
}

// -(q_i q_j + b q_j + a)
QLaurentPoly a_numerator(int n, int i, int j, const Deformation& d) {
    QExponent eij = zero_exponent(n);
    QExponent ej = zero_exponent(n);
    eij[static_cast<std::size_t>(i - 1)] = 1;
    eij[static_cast<std::size_t>(j - 1)] = 1;
    ej[static_cast<std::size_t>(j - 1)] = 1;
    QLaurentPoly out(n);
    out.add_term(eij, ParamCoeff(-1));
    out.add_term(ej, -d.beta);
    out.add_term(zero_exponent(n), -d.alpha);
    return out;
}

// Multiplies num by the factors of `have` missing from `target`.
QLaurentPoly lift_numerator(const QLaurentPoly& num, const DenominatorFactors& have,
                            const DenominatorFactors& target) {
    QLaurentPoly out = num;
    for (const auto& [pair, e] : target) {
        auto it = have.find(pair);
        const unsigned present = it == have.end() ? 0U : it->second;
        if (e > present) {
            out = out * linear_factor(num.n(), pair.i, pair.j).pow(e - present);
        }
    }
    return out;
}

DenominatorFactors lcm_factors(const DenominatorFactors& f, const DenominatorFactors& g) {
    DenominatorFactors out = f;
    for (const auto& [pair, e] : g) {
        auto& slot = out[pair];
        slot = std::max(slot, e);
    }
    return out;
}

}  // namespace

std::uint64_t negative_mass(const QExponent& a) {
    std::uint64_t m = 0;
    for (auto v : a) {
        if (v < 0) {
            m += static_cast<std::uint64_t>(-static_cast<std::int64_t>(v));
        }
    }
    return m;
}

QExponent q_to_r_exponent(const QExponent& a) {
    QExponent b(a.size());
    std::int32_t acc = 0;
    for (std::size_t s = 0; s < a.size(); ++s) {
        acc += a[s];
        b[s] = acc;
    }
    return b;
}

QExponent r_to_q_exponent(const QExponent& b) {
    QExponent a(b.size());
    for (std::size_t s = 0; s < b.size(); ++s) {
        a[s] = s == 0 ? b[0] : b[s] - b[s - 1];
    }
    return a;
}

// ---------------------------------------------------------------- QLaurentPoly

QLaurentPoly::QLaurentPoly(int n, const ParamCoeff& c) : n_(n) {
    if (!c.is_zero()) {
        terms_.emplace(zero_exponent(n), c);
    }
}

QLaurentPoly QLaurentPoly::monomial(int n, QExponent a, const ParamCoeff& c) {
    if (a.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("QLaurentPoly: exponent length does not match n");
    }
    QLaurentPoly out(n);
    out.add_term(a, c);
    return out;
}

void QLaurentPoly::add_term(const QExponent& a, const ParamCoeff& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void QLaurentPoly::check_same_n(const QLaurentPoly& o) const {
    if (n_ != o.n_) {
        throw std::invalid_argument("QLaurentPoly: ambient size mismatch");
    }
}

QLaurentPoly& QLaurentPoly::operator+=(const QLaurentPoly& o) {
    check_same_n(o);
    for (const auto& [a, c] : o.terms_) {
        add_term(a, c);
    }
    return *this;
}

QLaurentPoly& QLaurentPoly::operator-=(const QLaurentPoly& o) {
    check_same_n(o);
    for (const auto& [a, c] : o.terms_) {
        add_term(a, -c);
    }
    return *this;
}

QLaurentPoly operator-(const QLaurentPoly& a) {
    QLaurentPoly out(a.n_);
    for (const auto& [e, c] : a.terms_) {
        out.terms_.emplace(e, -c);
    }
    return out;
}

QLaurentPoly operator*(const QLaurentPoly& a, const QLaurentPoly& b) {
    a.check_same_n(b);
    QLaurentPoly out(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term(add_exponents(ea, eb), ca * cb);
        }
    }
    return out;
}

QLaurentPoly QLaurentPoly::pow(unsigned e) const {
    QLaurentPoly result(n_, ParamCoeff(1));
    QLaurentPoly base = *this;
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

std::string QLaurentPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        const std::string vars = q_monomial_str(a);
        for (const auto& [e, r] : c.terms()) {
            detail::append_signed_term(out, first, r, e, vars);
            first = false;
        }
    }
    return out;
}

QLaurentPoly denominator_poly(int n, const DenominatorFactors& factors) {
    QLaurentPoly out(n, ParamCoeff(1));
    for (const auto& [pair, e] : factors) {
        out = out * linear_factor(n, pair.i, pair.j).pow(e);
    }
    return out;
}

// ---------------------------------------------------------------- QRatFrac

std::string QRatFrac::str() const {
    std::string out = "(" + numerator.str() + ")";
    if (denominator.empty()) {
        return out;
    }
    std::string den;
    for (const auto& [pair, e] : denominator) {
        if (e == 0) {
            continue;
        }
        if (!den.empty()) {
            den += '*';
        }
        den += "(q[" + std::to_string(pair.j) + "]-q[" + std::to_string(pair.i) + "])";
        if (e > 1) {
            den += "^" + std::to_string(e);
        }
    }
    return den.empty() ? out : out + " / (" + den + ")";
}

QRatFrac operator*(const QRatFrac& f, const QRatFrac& g) {
    QRatFrac out{f.numerator * g.numerator, f.denominator};
    for (const auto& [pair, e] : g.denominator) {
        out.denominator[pair] += e;
    }
    return out;
}

QRatFrac operator+(const QRatFrac& f, const QRatFrac& g) {
    const DenominatorFactors common = lcm_factors(f.denominator, g.denominator);
    return {lift_numerator(f.numerator, f.denominator, common) +
                lift_numerator(g.numerator, g.denominator, common),
            common};
}

bool rat_is_zero(const QRatFrac& f) { return f.numerator.is_zero(); }

bool rat_eq(const QRatFrac& f, const QRatFrac& g) {
    // Bring both to the lcm denominator; the linear factors are nonzero, so
    // equality of lifted numerators is equality of fractions.
    const DenominatorFactors common = lcm_factors(f.denominator, g.denominator);
    return lift_numerator(f.numerator, f.denominator, common) ==
           lift_numerator(g.numerator, g.denominator, common);
}

QRatFrac a_image_variable(int n, int i, int j, const Deformation& d) {
    (void)pair_slot(n, i, j);
    return {a_numerator(n, i, j, d), DenominatorFactors{{PairIndex{i, j}, 1U}}};
}

QRatFrac a_image_rat(const XPoly& p, const Deformation& d) {
    const int n = p.n();
    DenominatorFactors common;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [pair, e] : m.support()) {
            auto& slot = common[pair];
            slot = std::max(slot, e);
        }
    }
    std::map<std::pair<PairIndex, unsigned>, QLaurentPoly> num_pow;
    std::map<std::pair<PairIndex, unsigned>, QLaurentPoly> den_pow;
    auto cached = [&](auto& cache, PairIndex pair, unsigned e, bool numerator) -> const QLaurentPoly& {
        auto key = std::make_pair(pair, e);
        auto it = cache.find(key);
        if (it == cache.end()) {
            QLaurentPoly base = numerator ? a_numerator(n, pair.i, pair.j, d) : linear_factor(n, pair.i, pair.j);
            it = cache.emplace(key, base.pow(e)).first;
        }
        return it->second;
    };
    QLaurentPoly total(n);
    for (const auto& [m, c] : p.terms()) {
        QLaurentPoly term(n, c);
        const XMonomial::Exponents& exps = m.exponents();
        for (std::size_t s = 0; s < exps.size(); ++s) {
            const PairIndex pair = pair_at(n, s);
            if (exps[s] > 0) {
                term = term * cached(num_pow, pair, exps[s], true);
            }
            auto it = common.find(pair);
            if (it != common.end() && it->second > exps[s]) {
                term = term * cached(den_pow, pair, it->second - exps[s], false);
            }
        }
        total += term;
    }
    return {total, common};
}

AKillsJReport verify_a_kills_j(int n, const Deformation& d, std::uint64_t seed, int products) {
    AKillsJReport report;
    report.n = n;
    const GBasis basis = generate_basis(n, d);
    for (const auto& g : basis.elements()) {
        ++report.generators_checked;
        const QRatFrac img = a_image_rat(g.poly, d);
        if (!rat_is_zero(img)) {
            std::ostringstream os;
            os << "generator " << g.triple << ": A = " << img.str();
            report.failures.push_back(os.str());
        }
    }
    if (basis.elements().empty()) {
        return report;
    }
    Rng rng(seed);
    for (int k = 0; k < products; ++k) {
        const auto& g = basis.elements()[uniform_below(rng, basis.elements().size())];
        const ParamCoeff c = random_coeff(rng);
        const XMonomial m = random_monomial(rng, n, 2);
        const XPoly elt = c * (m * g.poly);
        ++report.products_checked;
        if (!rat_is_zero(a_image_rat(elt, d))) {
            report.failures.push_back("product " + elt.str());
        }
    }
    return report;
}

// ---------------------------------------------------------------- QTruncSeries

QTruncSeries::QTruncSeries(int n, int w_order) : n_(n), w_order_(w_order) {
    if (w_order < 0) {
        throw std::invalid_argument("truncation order must be nonnegative");
    }
}

QTruncSeries QTruncSeries::one(int n, int w_order) {
    QTruncSeries out(n, w_order);
    out.add_term(zero_exponent(n), ParamCoeff(1));
    return out;
}

void QTruncSeries::add_term(const QExponent& a, const ParamCoeff& c) {
    if (c.is_zero() || negative_mass(a) > static_cast<std::uint64_t>(w_order_)) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

QTruncSeries operator*(const QTruncSeries& f, const QTruncSeries& g) {
    if (f.n_ != g.n_ || f.w_order_ != g.w_order_) {
        throw std::invalid_argument("QTruncSeries: shape mismatch");
    }
    QTruncSeries out(f.n_, f.w_order_);
    for (const auto& [ea, ca] : f.terms_) {
        for (const auto& [eb, cb] : g.terms_) {
            out.add_term(add_exponents(ea, eb), ca * cb);
        }
    }
    return out;
}

bool is_s_friendly(const XMonomial& m, const std::set<int>& s) {
    for (const auto& [pair, e] : m.support()) {
        if (!s.contains(pair.i) || s.contains(pair.j)) {
            return false;
        }
    }
    return true;
}

bool is_s_adequate(const QExponent& a, const std::set<int>& s) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        const bool in_s = s.contains(static_cast<int>(k + 1));
        if ((in_s && a[k] < 0) || (!in_s && a[k] > 0)) {
            return false;
        }
    }
    return true;
}

std::set<int> pathless_subset(const XMonomial& m) {
    std::set<int> s;
    for (const auto& [pair, e] : m.support()) {
        s.insert(pair.i);
    }
    return s;
}

QTruncSeries a_s_expand(const XMonomial& m, const std::set<int>& s, int w_order, const Deformation& d) {
    const int n = m.n();
    for (int i : s) {
        if (i < 1 || i > n - 1) {
            throw std::invalid_argument("subset S must lie in [1, n-1]");
        }
    }
    if (!is_s_friendly(m, s)) {
        throw std::invalid_argument("monomial " + m.str() + " is not S-friendly");
    }
    QTruncSeries result = QTruncSeries::one(n, w_order);
    for (const auto& [pair, e] : m.support()) {
        // sum_k -(q_i^{k+1} q_j^{-k} + b q_i^k q_j^{-k} + a q_i^k q_j^{-k-1})
        QTruncSeries factor(n, w_order);
        const auto si = static_cast<std::size_t>(pair.i - 1);
        const auto sj = static_cast<std::size_t>(pair.j - 1);
        for (int k = 0; k <= w_order; ++k) {
            QExponent a = zero_exponent(n);
            a[si] = k + 1;
            a[sj] = -k;
            factor.add_term(a, ParamCoeff(-1));
            a[si] = k;
            factor.add_term(a, -d.beta);
            a[sj] = -k - 1;
            factor.add_term(a, -d.alpha);
        }
        for (std::uint32_t r = 0; r < e; ++r) {
            result = result * factor;
        }
    }
    return result;
}

// ---------------------------------------------------------------- TWSeries

TWSeries::TWSeries(int n, int w_order)
    : n_(n), w_order_(w_order), coeffs_(static_cast<std::size_t>(w_order + 1), TPoly(n)) {
    if (w_order < 0) {
        throw std::invalid_argument("truncation order must be nonnegative");
    }
}

TWSeries::TWSeries(int n, int w_order, std::vector<TPoly> coeffs) : TWSeries(n, w_order) {
    if (coeffs.size() > coeffs_.size()) {
        throw std::invalid_argument("TWSeries: too many coefficients");
    }
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        coeffs_[k] = std::move(coeffs[k]);
    }
}

TWSeries TWSeries::constant(const TPoly& p, int w_order) { return TWSeries(p.n(), w_order, {p}); }

void TWSeries::add(int w_degree, const TMonomial& m, const ParamCoeff& c) {
    if (w_degree < 0 || w_degree > w_order_) {
        return;
    }
    coeffs_[static_cast<std::size_t>(w_degree)].add_term(m, c);
}

TWSeries& TWSeries::operator+=(const TWSeries& o) {
    if (n_ != o.n_ || w_order_ != o.w_order_) {
        throw std::invalid_argument("TWSeries: shape mismatch");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    return *this;
}

TWSeries operator*(const TWSeries& f, const TWSeries& g) {
    if (f.n_ != g.n_ || f.w_order_ != g.w_order_) {
        throw std::invalid_argument("TWSeries: shape mismatch");
    }
    TWSeries out(f.n_, f.w_order_);
    for (std::size_t a = 0; a < f.coeffs_.size(); ++a) {
        if (f.coeffs_[a].is_zero()) {
            continue;
        }
        for (std::size_t b = 0; a + b < out.coeffs_.size(); ++b) {
            if (!g.coeffs_[b].is_zero()) {
                out.coeffs_[a + b] += f.coeffs_[a] * g.coeffs_[b];
            }
        }
    }
    return out;
}

std::string TWSeries::str() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + coeffs_[k].str() + ")";
        if (k == 1) {
            out += "*w";
        } else if (k > 1) {
            out += "*w^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

TWSeries b_map(const QTruncSeries& f) {
    TWSeries out(f.n(), f.w_order());
    for (const auto& [a, c] : f.terms()) {
        TMonomial::Exponents t(a.size(), 0);
        for (std::size_t s = 0; s < a.size(); ++s) {
            if (a[s] > 0) {
                t[s] = static_cast<std::uint32_t>(a[s]);
            }
        }
        out.add(static_cast<int>(negative_mass(a)), TMonomial(std::move(t)), c);
    }
    return out;
}

TWSeries e_image(const TPoly& p, int w_order, const Deformation& d) {
    const int n = p.n();
    std::vector<TWSeries> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        TWSeries img(n, w_order);
        // -(t^{k+1} + b t^k + a t^{k-1}) w^k, with the a-term absent at k = 0.
        auto tpow = [&](int e) {
            TMonomial::Exponents x(static_cast<std::size_t>(n), 0);
            x[static_cast<std::size_t>(i - 1)] = static_cast<std::uint32_t>(e);
            return TMonomial(std::move(x));
        };
        for (int k = 0; k <= w_order; ++k) {
            img.add(k, tpow(k + 1), ParamCoeff(-1));
            img.add(k, tpow(k), -d.beta);
            if (k > 0) {
                img.add(k, tpow(k - 1), -d.alpha);
            }
        }
        images.push_back(std::move(img));
    }
    TWSeries out(n, w_order);
    for (const auto& [m, c] : p.terms()) {
        if (n > 0 && m.exponent(n) > 0) {
            throw std::invalid_argument("E is defined on t[1..n-1] only");
        }
        TWSeries term = TWSeries::constant(TPoly(n, c), w_order);
        for (int i = 1; i < n; ++i) {
            for (std::uint32_t r = 0; r < m.exponent(i); ++r) {
                term = term * images[static_cast<std::size_t>(i - 1)];
            }
        }
        out += term;
    }
    return out;
}

bool verify_ed_eq_ba(const XMonomial& m, int w_order, const Deformation& d) {
    if (!is_pathless(m)) {
        throw std::invalid_argument("monomial " + m.str() + " is not pathless");
    }
    const TWSeries lhs = e_image(d_image(XPoly(m)), w_order, d);
    const TWSeries rhs = b_map(a_s_expand(m, pathless_subset(m), w_order, d));
    return lhs == rhs;
}

EdBaReport verify_ed_eq_ba_exhaustive(int n, int max_degree, int w_order, const Deformation& d) {
    EdBaReport report{n, w_order, 0, {}};
    for (int deg = 0; deg <= max_degree; ++deg) {
        for (const auto& m : all_monomials(n, deg)) {
            if (!is_pathless(m)) {
                continue;
            }
            ++report.monomials_checked;
            if (!verify_ed_eq_ba(m, w_order, d)) {
                report.failures.push_back(m.str());
            }
        }
    }
    return report;
}

EdBaReport verify_ed_eq_ba_random(int n, int count, int max_degree, int w_order, std::uint64_t seed,
                                  const Deformation& d) {
    EdBaReport report{n, w_order, 0, {}};
    Rng rng(seed);
    while (report.monomials_checked < static_cast<std::size_t>(count)) {
        const XMonomial m = random_monomial(rng, n, max_degree);
        if (!is_pathless(m)) {
            continue;
        }
        ++report.monomials_checked;
        if (!verify_ed_eq_ba(m, w_order, d)) {
            report.failures.push_back(m.str());
        }
    }
    return report;
}

TWSeries ba_image_pathless(const XPoly& q, int w_order, const Deformation& d) {
    TWSeries out(q.n(), w_order);
    for (const auto& [m, c] : q.terms()) {
        if (!is_pathless(m)) {
            throw std::invalid_argument("monomial " + m.str() + " is not pathless");
        }
        TWSeries img = b_map(a_s_expand(m, pathless_subset(m), w_order, d));
        out += TWSeries::constant(TPoly(q.n(), c), w_order) * img;
    }
    return out;
}

TPoly f_map(const TWSeries& s) { return s.coeff(0); }

TPoly g_map(const TPoly& p, const Deformation& d) {
    const int n = p.n();
    std::vector<TPoly> images;
    for (int i = 1; i <= n; ++i) {
        if (i < n) {
            images.push_back(-TPoly::variable(n, i) - TPoly(n, d.beta));
        } else {
            images.push_back(TPoly::variable(n, i));
        }
    }
    return p.substitute(images);
}

bool verify_e_left_inverse(int samples, std::uint64_t seed, int n, const Deformation& d) {
    for (int k = 0; k < samples; ++k) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
        const TPoly p = random_tpoly(rng, n, n - 1, 4, 6);
        if (g_map(f_map(e_image(p, 0, d)), d) != p) {
            return false;
        }
    }
    return true;
}

}  // namespace subdiv
