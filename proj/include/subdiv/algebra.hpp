#pragma once

// The symmetric generators J_{i,j,k}, the action of the symmetric group,
// and enumeration and counting of forkless monomials.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "subdiv/poly.hpp"
#include "subdiv/ring.hpp"

namespace subdiv {

/// A bijection of [n] in one-line notation: images[i-1] = sigma(i).
class Permutation {
public:
    /// Throws std::invalid_argument unless images is a permutation of 1..n.
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    /// The transposition (a b).
    static Permutation transposition(int n, int a, int b);

    [[nodiscard]] int n() const { return static_cast<int>(images_.size()); }
    [[nodiscard]] int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    [[nodiscard]] const std::vector<int>& images() const { return images_; }

    /// (sigma * tau)(i) = sigma(tau(i)).
    friend Permutation operator*(const Permutation& sigma, const Permutation& tau);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// x[i,j] for i < j, and -b - x[j,i] for i > j. Throws on i == j.
XPoly x_general(int i, int j, int n, const Deformation& d = Deformation::generic());

/// x_ij x_jk + x_jk x_ki + x_ki x_ij + b (x_ij + x_jk + x_ki) + b^2 - a,
/// expanded through x_general. Throws on a repeated index.
XPoly j_generator(int i, int j, int k, int n, const Deformation& d = Deformation::generic());

/// Substitutes x_general(sigma(i), sigma(j)) for each x[i,j].
XPoly apply_perm(const Permutation& sigma, const XPoly& p, const Deformation& d = Deformation::generic());

using JGenerator = std::function<XPoly(int, int, int, int, const Deformation&)>;

struct SymmetryReport {
    int n = 0;
    std::vector<std::string> failures_i;    // J_{i,j,k} vs the defining relation
    std::vector<std::string> failures_ii;   // invariance under reordering i, j, k
    std::vector<std::string> failures_iii;  // sigma . J_{i,j,k} = J_{sigma i, sigma j, sigma k}
    std::vector<std::string> failures_iv;   // sigma . g stays in the ideal
    std::size_t permutations_sampled = 0;

    [[nodiscard]] bool passed_i() const { return failures_i.empty(); }
    [[nodiscard]] bool passed_ii() const { return failures_ii.empty(); }
    [[nodiscard]] bool passed_iii() const { return failures_iii.empty(); }
    [[nodiscard]] bool passed_iv() const { return failures_iv.empty(); }
    [[nodiscard]] bool passed() const { return passed_i() && passed_ii() && passed_iii() && passed_iv(); }
};

/// Runs checks (i)-(iv) with `samples` random permutations. The generator
/// can be replaced to exercise the checks on a perturbed family.
SymmetryReport verify_symmetry(int n, const Deformation& d = Deformation::generic(), std::uint64_t seed = 0,
                               int samples = 10, const JGenerator& jgen = {});

/// Forkless monomials of exactly the given degree, descending in the term
/// order. Built row by row: each row i carries either nothing or a single
/// x[i,f(i)]^{g(i)} with g(i) > 0.
std::vector<XMonomial> enumerate_forkless(int n, int degree);

struct CountTable {
    int n = 0;
    std::vector<std::uint64_t> degrees;

    /// "degree,count" lines.
    [[nodiscard]] std::string csv() const;
    friend bool operator==(const CountTable&, const CountTable&) = default;
};

CountTable count_forkless(int n, int max_degree);
/// Coefficients of prod_{j=0}^{n-2} (1 + j t) / (1 - t)^{n-1}.
CountTable gf_coeffs(int n, int max_degree);

}  // namespace subdiv
