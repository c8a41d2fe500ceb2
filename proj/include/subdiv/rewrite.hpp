#pragma once

// The pathless reduction game: repeatedly rewrite a monomial divisible by
// x[i,j]*x[j,k] (i < j < k) using
//
//   x[i,j]*x[j,k] -> x[i,k]*(x[i,j] + x[j,k] + b) + a
//
// until every monomial is pathless. The result depends on the choices made;
// its image under x[i,j] -> t[i] does not.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "subdiv/poly.hpp"
#include "subdiv/ring.hpp"

namespace subdiv {

/// Largest reducible monomial, lexicographically smallest triple.
struct FirstByOrder {};
/// Smallest reducible monomial, lexicographically largest triple.
struct LastByOrder {};
/// Uniform over all (reducible monomial, applicable triple) pairs.
struct RandomChoice {
    std::uint64_t seed = 0;
};
struct ScriptStep {
    XMonomial monomial;
    Triple triple;
};
/// Replays a fixed sequence of moves.
struct Script {
    std::vector<ScriptStep> steps;
};

using Strategy = std::variant<FirstByOrder, LastByOrder, RandomChoice, Script>;

std::string strategy_name(const Strategy& s);

struct TraceStep {
    XMonomial monomial;
    Triple triple;
    /// Polynomial after the move; absent in light traces.
    std::optional<XPoly> after;
    std::uint64_t replaced_weight = 0;
    std::uint64_t max_produced_weight = 0;
};

struct ReductionTrace {
    std::vector<TraceStep> steps;
};

/// Raised when a Script strategy runs out of moves or names a move that is
/// not applicable.
class ReductionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class TraceDetail { Full, Light };

struct ReductionResult {
    XPoly q;
    ReductionTrace trace;
};

/// All (i, j, k) with x[i,j]*x[j,k] | m, in lexicographic order.
std::vector<Triple> find_path_triples(const XMonomial& m);

/// The monomial and coefficient replacing c*m when the move uses triple t.
XPoly pathless_replacement(const XMonomial& m, const Triple& t, const ParamCoeff& c,
                           const Deformation& d = Deformation::generic());

/// One move of the game on the full term c*m of p.
/// Throws std::invalid_argument if m is absent from p, the triple is
/// malformed, or x[i,j]*x[j,k] does not divide m.
XPoly pathless_step(const XPoly& p, const XMonomial& m, const Triple& t,
                    const Deformation& d = Deformation::generic());

/// Plays the game to the end under the given strategy. Every executed move
/// is checked for strict weight descent; a violation throws std::logic_error.
ReductionResult reduce_pathless(const XPoly& p, const Strategy& s,
                                const Deformation& d = Deformation::generic(),
                                TraceDetail detail = TraceDetail::Full);

/// Trace lines "m=<monomial> t=(i,j,k)".
std::string format_trace(const ReductionTrace& trace);
/// Parses the trace line format into a Script.
Script parse_script(std::string_view text, int n);

struct TUniqueCounterexample {
    int trial = 0;
    XPoly input;
    std::string strategy_a;
    std::string strategy_b;
    XPoly q_a;
    XPoly q_b;
    TPoly d_a;
    TPoly d_b;
    std::string trace_a;
    std::string trace_b;
};

struct TUniqueReport {
    int n = 0;
    int trials = 0;
    int strategies = 0;
    std::uint64_t seed = 0;
    int max_deg = 0;
    int max_terms = 0;
    std::uint64_t total_steps = 0;
    std::vector<TUniqueCounterexample> counterexamples;
    [[nodiscard]] bool passed() const { return counterexamples.empty(); }
};

/// The strategies used for one trial: FirstByOrder, LastByOrder, then
/// RandomChoice with seeds derived from trial_seed.
std::vector<Strategy> sweep_strategies(int count, std::uint64_t trial_seed);

/// Reduces random polynomials under several strategies and compares the
/// D-images of all results (generic b, a).
TUniqueReport verify_t_unique(int n, int trials, int strategies, std::uint64_t seed, int max_deg,
                              int max_terms);

/// p = x[1,2]*x[2,3] (n = 3) and its one-move reduction q; D(p) != D(q).
std::pair<XPoly, XPoly> d_invariance_counterexample();

}  // namespace subdiv
