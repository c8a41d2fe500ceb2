#include "subdiv/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "subdiv/groebner.hpp"
#include "subdiv/random.hpp"

namespace subdiv {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation of 1..n");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i)] = i + 1;
    }
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.images_.at(static_cast<std::size_t>(a - 1)), p.images_.at(static_cast<std::size_t>(b - 1)));
    return p;
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
    if (sigma.n() != tau.n()) {
        throw std::invalid_argument("permutation size mismatch");
    }
    std::vector<int> v(tau.images_.size());
    for (std::size_t s = 0; s < v.size(); ++s) {
        v[s] = sigma(tau.images_[s]);
    }
    return Permutation(std::move(v));
}

XPoly x_general(int i, int j, int n, const Deformation& d) {
    if (i == j) {
        throw std::invalid_argument("x_general: indices must differ");
    }
    if (i < j) {
        return XPoly::variable(n, i, j);
    }
    return XPoly(n, -d.beta) - XPoly::variable(n, j, i);
}

XPoly j_generator(int i, int j, int k, int n, const Deformation& d) {
    if (i == j || j == k || i == k) {
        throw std::invalid_argument("j_generator: repeated index");
    }
    const XPoly xij = x_general(i, j, n, d);
    const XPoly xjk = x_general(j, k, n, d);
    const XPoly xki = x_general(k, i, n, d);
    return xij * xjk + xjk * xki + xki * xij + d.beta * (xij + xjk + xki) +
           XPoly(n, d.beta * d.beta - d.alpha);
}

XPoly apply_perm(const Permutation& sigma, const XPoly& p, const Deformation& d) {
    const int n = p.n();
    if (sigma.n() != n) {
        throw std::invalid_argument("apply_perm: permutation size mismatch");
    }
    std::map<std::pair<std::size_t, std::uint32_t>, XPoly> cache;
    XPoly out(n);
    for (const auto& [m, c] : p.terms()) {
        XPoly term(n, c);
        const auto& exps = m.exponents();
        for (std::size_t s = 0; s < exps.size(); ++s) {
            if (exps[s] == 0) {
                continue;
            }
            auto key = std::make_pair(s, exps[s]);
            auto it = cache.find(key);
            if (it == cache.end()) {
                const PairIndex pr = pair_at(n, s);
                it = cache.emplace(key, x_general(sigma(pr.i), sigma(pr.j), n, d).pow(exps[s])).first;
            }
            term *= it->second;
        }
        out += term;
    }
    return out;
}

SymmetryReport verify_symmetry(int n, const Deformation& d, std::uint64_t seed, int samples,
                               const JGenerator& jgen) {
    const JGenerator gen = jgen ? jgen : JGenerator([](int i, int j, int k, int m, const Deformation& dd) {
        return j_generator(i, j, k, m, dd);
    });
    SymmetryReport report;
    report.n = n;
    auto label = [](int i, int j, int k) {
        std::ostringstream os;
        os << "J(" << i << "," << j << "," << k << ")";
        return os.str();
    };
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                const XPoly base = gen(i, j, k, n, d);
                if (base != j_relation(n, Triple{i, j, k}, d)) {
                    report.failures_i.push_back(label(i, j, k));
                }
                const int idx[3] = {i, j, k};
                int order[3] = {0, 1, 2};
                do {
                    const int a = idx[order[0]];
                    const int b = idx[order[1]];
                    const int c = idx[order[2]];
                    if (gen(a, b, c, n, d) != base) {
                        report.failures_ii.push_back(label(a, b, c));
                    }
                } while (std::next_permutation(order, order + 3));
            }
        }
    }
    const GBasis basis = generate_basis(n, d);
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        const Permutation sigma(random_permutation(rng, n));
        ++report.permutations_sampled;
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                for (int k = j + 1; k <= n; ++k) {
                    if (apply_perm(sigma, gen(i, j, k, n, d), d) != gen(sigma(i), sigma(j), sigma(k), n, d)) {
                        report.failures_iii.push_back(label(i, j, k) + " under sample " + std::to_string(s));
                    }
                }
            }
        }
        for (const auto& g : basis.elements()) {
            if (!normal_form(apply_perm(sigma, g.poly, d), basis).is_zero()) {
                std::ostringstream os;
                os << "generator " << g.triple << " under sample " << s;
                report.failures_iv.push_back(os.str());
            }
        }
    }
    return report;
}

namespace {

void enumerate_rows(int n, int row, int remaining, XMonomial::Exponents& exps, std::vector<XMonomial>& out) {
    if (row == n) {
        if (remaining == 0) {
            out.emplace_back(n, exps);
        }
        return;
    }
    enumerate_rows(n, row + 1, remaining, exps, out);
    for (int col = row + 1; col <= n; ++col) {
        const std::size_t slot = pair_slot(n, row, col);
        for (int g = 1; g <= remaining; ++g) {
            exps[slot] = static_cast<std::uint32_t>(g);
            enumerate_rows(n, row + 1, remaining - g, exps, out);
        }
        exps[slot] = 0;
    }
}

}  // namespace

std::vector<XMonomial> enumerate_forkless(int n, int degree) {
    if (n < 1 || degree < 0) {
        throw std::invalid_argument("enumerate_forkless: need n >= 1 and degree >= 0");
    }
    std::vector<XMonomial> out;
    XMonomial::Exponents exps(pair_count(n), 0);
    enumerate_rows(n, 1, degree, exps, out);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::string CountTable::csv() const {
    std::string out = "degree,count\n";
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        out += std::to_string(k) + "," + std::to_string(degrees[k]) + "\n";
    }
    return out;
}

CountTable count_forkless(int n, int max_degree) {
    CountTable t{n, {}};
    for (int k = 0; k <= max_degree; ++k) {
        t.degrees.push_back(enumerate_forkless(n, k).size());
    }
    return t;
}

CountTable gf_coeffs(int n, int max_degree) {
    if (n < 1 || max_degree < 0) {
        throw std::invalid_argument("gf_coeffs: need n >= 1 and max_degree >= 0");
    }
    const auto len = static_cast<std::size_t>(max_degree + 1);
    std::vector<mpz_class> numer(len, 0);
    numer[0] = 1;
    for (int j = 0; j <= n - 2; ++j) {
        for (std::size_t k = len; k-- > 1;) {
            numer[k] += j * numer[k - 1];
        }
    }
    // 1/(1-t)^{n-1} = sum_k C(k+n-2, n-2) t^k
    std::vector<mpz_class> denom(len);
    for (std::size_t k = 0; k < len; ++k) {
        if (n == 1) {
            denom[k] = k == 0 ? 1 : 0;
        } else {
            mpz_bin_uiui(denom[k].get_mpz_t(), k + static_cast<unsigned long>(n) - 2,
                         static_cast<unsigned long>(n) - 2);
        }
    }
    CountTable t{n, {}};
    for (std::size_t k = 0; k < len; ++k) {
        mpz_class acc = 0;
        for (std::size_t a = 0; a <= k; ++a) {
            acc += numer[a] * denom[k - a];
        }
        if (!acc.fits_ulong_p()) {
            throw std::overflow_error("gf_coeffs: coefficient too large");
        }
        t.degrees.push_back(acc.get_ui());
    }
    return t;
}

}  // namespace subdiv
