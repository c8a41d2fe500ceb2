#include "subdiv/random.hpp"

#include <numeric>
#include <stdexcept>

namespace subdiv {

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix_seed(mix_seed(seed) ^ mix_seed(index + 0x632be59bd9b4e019ULL));
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below: empty range");
    }
    const std::uint64_t limit = Rng::max() - (Rng::max() % bound);
    while (true) {
        const std::uint64_t v = rng();
        if (v < limit) {
            return v % bound;
        }
    }
}

int uniform_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

XMonomial random_monomial(Rng& rng, int n, int max_deg) {
    XMonomial m(n);
    const std::size_t vars = pair_count(n);
    if (vars == 0) {
        return m;
    }
    const int deg = uniform_int(rng, 0, max_deg);
    XMonomial::Exponents e(vars, 0);
    for (int d = 0; d < deg; ++d) {
        ++e[uniform_below(rng, vars)];
    }
    return {n, std::move(e)};
}

ParamCoeff random_coeff(Rng& rng) {
    switch (uniform_below(rng, 7)) {
        case 0: return ParamCoeff(1);
        case 1: return ParamCoeff(-1);
        case 2: return ParamCoeff(2);
        case 3: return ParamCoeff(-2);
        case 4: return ParamCoeff::beta();
        case 5: return ParamCoeff::alpha();
        default: return ParamCoeff::beta() + ParamCoeff(1);
    }
}

XPoly random_poly(Rng& rng, int n, int max_deg, int max_terms) {
    XPoly p(n);
    const int terms = uniform_int(rng, 1, std::max(1, max_terms));
    for (int k = 0; k < terms; ++k) {
        XMonomial m = random_monomial(rng, n, max_deg);
        p.add_term(m, random_coeff(rng));
    }
    return p;
}

TPoly random_tpoly(Rng& rng, int n, int vars, int max_deg, int max_terms) {
    TPoly p(n);
    const int terms = uniform_int(rng, 1, std::max(1, max_terms));
    for (int k = 0; k < terms; ++k) {
        TMonomial::Exponents e(static_cast<std::size_t>(n), 0);
        const int deg = uniform_int(rng, 0, max_deg);
        for (int d = 0; d < deg && vars > 0; ++d) {
            ++e[uniform_below(rng, static_cast<std::uint64_t>(vars))];
        }
        p.add_term(TMonomial(std::move(e)), random_coeff(rng));
    }
    return p;
}

std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t i = images.size(); i > 1; --i) {
        std::swap(images[i - 1], images[uniform_below(rng, i)]);
    }
    return images;
}

}  // namespace subdiv
