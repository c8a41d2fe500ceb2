#pragma once

// Reference implementations used only by the tests. Each one takes a
// different route from the library code it checks.

#include <map>
#include <vector>

#include "subdiv/groebner.hpp"
#include "subdiv/poly.hpp"
#include "subdiv/random.hpp"
#include "subdiv/series.hpp"

namespace oracle {

using namespace subdiv;

inline std::uint32_t expo(const XMonomial& m, int i, int j) { return m.exponent(i, j); }

// All monomials of a given degree, by an odometer over slots.
inline std::vector<XMonomial> monomials_of_degree(int n, int degree) {
    const std::size_t slots = pair_count(n);
    std::vector<XMonomial> out;
    if (slots == 0) {
        if (degree == 0) {
            out.emplace_back(n);
        }
        return out;
    }
    std::vector<std::uint32_t> e(slots, 0);
    while (true) {
        std::uint32_t total = 0;
        for (auto v : e) {
            total += v;
        }
        if (total == static_cast<std::uint32_t>(degree)) {
            out.emplace_back(n, e);
        }
        std::size_t s = 0;
        while (s < slots) {
            if (e[s] < static_cast<std::uint32_t>(degree)) {
                ++e[s];
                break;
            }
            e[s] = 0;
            ++s;
        }
        if (s == slots) {
            break;
        }
    }
    return out;
}

// Forkless by the definition: look for x[i,j]*x[i,k] with j < k.
inline bool forkless_by_scan(const XMonomial& m) {
    const int n = m.n();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                if (expo(m, i, j) > 0 && expo(m, i, k) > 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Forkless via maps f: [n-1] -> [n] with f(i) > i and g: [n-1] -> N such
// that m = prod x[i,f(i)]^{g(i)}. Tries every f.
inline bool forkless_by_fg(const XMonomial& m) {
    const int n = m.n();
    if (n <= 1) {
        return true;
    }
    std::vector<int> f(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) {
        f[static_cast<std::size_t>(i - 1)] = i + 1;
    }
    while (true) {
        XMonomial built(n);
        for (int i = 1; i < n; ++i) {
            const int fi = f[static_cast<std::size_t>(i - 1)];
            built = built * XMonomial::variable(n, i, fi, expo(m, i, fi));
        }
        if (built == m) {
            return true;
        }
        int i = n - 1;
        while (i >= 1) {
            auto& v = f[static_cast<std::size_t>(i - 1)];
            if (v < n) {
                ++v;
                break;
            }
            v = i + 1;
            --i;
        }
        if (i < 1) {
            return false;
        }
    }
}

inline std::vector<XMonomial> forkless_by_filter(int n, int degree) {
    std::vector<XMonomial> out;
    for (const auto& m : monomials_of_degree(n, degree)) {
        if (forkless_by_scan(m)) {
            out.push_back(m);
        }
    }
    return out;
}

inline std::vector<Triple> path_triples_by_scan(const XMonomial& m) {
    std::vector<Triple> out;
    const int n = m.n();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                if (expo(m, i, j) > 0 && expo(m, j, k) > 0) {
                    out.push_back({i, j, k});
                }
            }
        }
    }
    return out;
}

// Reduction modulo G choosing uniformly among all (term, element) pairs
// whose head divides the term.
inline XPoly random_normal_form(XPoly p, const GBasis& g, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t guard = 0; guard < 1000000; ++guard) {
        std::vector<std::pair<XMonomial, const GBasisElement*>> moves;
        for (const auto& [m, c] : p.terms()) {
            for (const auto& e : g.elements()) {
                if (e.head.divides(m)) {
                    moves.emplace_back(m, &e);
                }
            }
        }
        if (moves.empty()) {
            return p;
        }
        const auto& [m, e] = moves[uniform_below(rng, moves.size())];
        const ParamCoeff c = p.coeff(m);
        p -= c * (m.quotient(e->head) * e->poly);
    }
    throw std::logic_error("random_normal_form did not terminate");
}

// r-exponents of q^a by multiplying out q_i = r_i r_{i+1} ... r_n.
inline QExponent r_exponent_by_product(const QExponent& a) {
    QExponent r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = i; k < a.size(); ++k) {
            r[k] += a[i];
        }
    }
    // q_i = r_i ... r_n means r_k collects a_i for every i <= k.
    return r;
}

// f_{n,k} from the per-row choice count: row i contributes 1 way for
// exponent 0 and (n - i) ways for each positive exponent.
inline std::vector<std::uint64_t> counts_by_rows(int n, int max_degree) {
    std::vector<std::uint64_t> total(static_cast<std::size_t>(max_degree + 1), 0);
    total[0] = 1;
    for (int i = 1; i < n; ++i) {
        std::vector<std::uint64_t> next(total.size(), 0);
        for (std::size_t d = 0; d < total.size(); ++d) {
            for (std::size_t e = 0; d + e < total.size(); ++e) {
                next[d + e] += total[d] * (e == 0 ? 1U : static_cast<std::uint64_t>(n - i));
            }
        }
        total = next;
    }
    return total;
}

}  // namespace oracle
