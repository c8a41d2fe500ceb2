#pragma once

// Seeded generators for the property sweeps. The engine is std::mt19937_64,
// whose output sequence is fixed by the standard; bounded draws use
// rejection sampling rather than std::uniform_int_distribution so results
// do not depend on the standard library implementation.

#include <cstdint>
#include <random>
#include <vector>

#include "subdiv/poly.hpp"

namespace subdiv {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive independent per-item seeds.
std::uint64_t mix_seed(std::uint64_t x);
/// Seed for item `index` of a sweep started from `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

/// Degree uniform in [0, max_deg], then each factor an independent uniform
/// pick among the n(n-1)/2 variables. For n = 1 always returns 1.
XMonomial random_monomial(Rng& rng, int n, int max_deg);

/// Uniform pick from {1, -1, 2, -2, b, a, b + 1}.
ParamCoeff random_coeff(Rng& rng);

/// Sum of between 1 and max_terms random monomials with random_coeff
/// coefficients (terms may merge or cancel).
XPoly random_poly(Rng& rng, int n, int max_deg, int max_terms);

/// Random polynomial in t[1..vars] inside an ambient t[1..n].
TPoly random_tpoly(Rng& rng, int n, int vars, int max_deg, int max_terms);

/// Random permutation of 1..n in one-line notation.
std::vector<int> random_permutation(Rng& rng, int n);

}  // namespace subdiv
