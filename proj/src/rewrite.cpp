#include "subdiv/rewrite.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "subdiv/parse.hpp"
#include "subdiv/random.hpp"

namespace subdiv {

std::string strategy_name(const Strategy& s) {
    struct Visitor {
        std::string operator()(const FirstByOrder&) const { return "first"; }
        std::string operator()(const LastByOrder&) const { return "last"; }
        std::string operator()(const RandomChoice& r) const { return "random(" + std::to_string(r.seed) + ")"; }
        std::string operator()(const Script& sc) const {
            return "script(" + std::to_string(sc.steps.size()) + " steps)";
        }
    };
    return std::visit(Visitor{}, s);
}

std::vector<Triple> find_path_triples(const XMonomial& m) {
    std::vector<Triple> out;
    const int n = m.n();
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (m.exponent(i, j) == 0) {
                continue;
            }
            for (int k = j + 1; k <= n; ++k) {
                if (m.exponent(j, k) > 0) {
                    out.push_back({i, j, k});
                }
            }
        }
    }
    return out;
}

namespace {

void check_triple(const Triple& t, int n) {
    if (!(1 <= t.i && t.i < t.j && t.j < t.k && t.k <= n)) {
        std::ostringstream os;
        os << "malformed triple " << t << " for n=" << n;
        throw std::invalid_argument(os.str());
    }
}

}  // namespace

XPoly pathless_replacement(const XMonomial& m, const Triple& t, const ParamCoeff& c, const Deformation& d) {
    const int n = m.n();
    check_triple(t, n);
    const XMonomial divisor = XMonomial::variable(n, t.i, t.j) * XMonomial::variable(n, t.j, t.k);
    if (!divisor.divides(m)) {
        throw std::invalid_argument("x[" + std::to_string(t.i) + "," + std::to_string(t.j) + "]*x[" +
                                    std::to_string(t.j) + "," + std::to_string(t.k) + "] does not divide " +
                                    m.str());
    }
    const XMonomial rest = m.quotient(divisor);
    const XMonomial ik = XMonomial::variable(n, t.i, t.k);
    XPoly out(n);
    out.add_term(rest * ik * XMonomial::variable(n, t.i, t.j), c);
    out.add_term(rest * ik * XMonomial::variable(n, t.j, t.k), c);
    out.add_term(rest * ik, c * d.beta);
    out.add_term(rest, c * d.alpha);
    return out;
}

XPoly pathless_step(const XPoly& p, const XMonomial& m, const Triple& t, const Deformation& d) {
    const ParamCoeff c = p.coeff(m);
    if (c.is_zero()) {
        throw std::invalid_argument("monomial " + m.str() + " does not appear in the polynomial");
    }
    XPoly out = p;
    out.add_term(m, -c);
    out += pathless_replacement(m, t, c, d);
    return out;
}

namespace {

// Working state of one game: the current polynomial and, for every
// non-pathless monomial in it, its applicable triples.
class Game {
public:
    using Reducible = std::map<XMonomial, std::vector<Triple>, std::greater<>>;

    explicit Game(const XPoly& p) : poly_(p) {
        for (const auto& [m, c] : poly_.terms()) {
            auto triples = find_path_triples(m);
            if (!triples.empty()) {
                reducible_.emplace(m, std::move(triples));
            }
        }
    }

    [[nodiscard]] bool done() const { return reducible_.empty(); }
    [[nodiscard]] const XPoly& poly() const { return poly_; }
    [[nodiscard]] const Reducible& reducible() const { return reducible_; }

    TraceStep play(const XMonomial& m, const Triple& t, const Deformation& d) {
        const ParamCoeff c = poly_.coeff(m);
        const XPoly replacement = pathless_replacement(m, t, c, d);
        TraceStep step{m, t, std::nullopt, weight_pathless(m), 0};
        accumulate(m, -c);
        for (const auto& [rm, rc] : replacement.terms()) {
            step.max_produced_weight = std::max(step.max_produced_weight, weight_pathless(rm));
            if (weight_pathless(rm) >= step.replaced_weight) {
                throw std::logic_error("weight did not descend when rewriting " + m.str());
            }
            accumulate(rm, rc);
        }
        return step;
    }

private:
    void accumulate(const XMonomial& m, const ParamCoeff& c) {
        const bool was_present = !poly_.coeff(m).is_zero();
        poly_.add_term(m, c);
        const bool present = !poly_.coeff(m).is_zero();
        if (was_present == present) {
            return;
        }
        if (present) {
            auto triples = find_path_triples(m);
            if (!triples.empty()) {
                reducible_.emplace(m, std::move(triples));
            }
        } else {
            reducible_.erase(m);
        }
    }

    XPoly poly_;
    Reducible reducible_;
};

}  // namespace

ReductionResult reduce_pathless(const XPoly& p, const Strategy& s, const Deformation& d, TraceDetail detail) {
    Game game(p);
    ReductionTrace trace;
    std::optional<Rng> rng;
    if (const auto* r = std::get_if<RandomChoice>(&s)) {
        rng.emplace(r->seed);
    }
    const Script* script = std::get_if<Script>(&s);
    std::size_t script_pos = 0;

    while (!game.done()) {
        XMonomial m;
        Triple t;
        if (std::holds_alternative<FirstByOrder>(s)) {
            const auto& [rm, triples] = *game.reducible().begin();
            m = rm;
            t = triples.front();
        } else if (std::holds_alternative<LastByOrder>(s)) {
            const auto& [rm, triples] = *game.reducible().rbegin();
            m = rm;
            t = triples.back();
        } else if (rng) {
            std::uint64_t total = 0;
            for (const auto& [rm, triples] : game.reducible()) {
                total += triples.size();
            }
            std::uint64_t pick = uniform_below(*rng, total);
            for (const auto& [rm, triples] : game.reducible()) {
                if (pick < triples.size()) {
                    m = rm;
                    t = triples[pick];
                    break;
                }
                pick -= triples.size();
            }
        } else {
            if (script_pos >= script->steps.size()) {
                throw ReductionError("script exhausted after " + std::to_string(script_pos) +
                                     " steps; polynomial is not yet pathless: " + game.poly().str());
            }
            const ScriptStep& st = script->steps[script_pos++];
            auto it = game.reducible().find(st.monomial);
            if (it == game.reducible().end() ||
                std::find(it->second.begin(), it->second.end(), st.triple) == it->second.end()) {
                std::ostringstream os;
                os << "script step " << script_pos << " (m=" << st.monomial << " t=" << st.triple
                   << ") is not applicable";
                throw ReductionError(os.str());
            }
            m = st.monomial;
            t = st.triple;
        }
        TraceStep step = game.play(m, t, d);
        if (detail == TraceDetail::Full) {
            step.after = game.poly();
        }
        trace.steps.push_back(std::move(step));
    }
    if (script != nullptr && script_pos != script->steps.size()) {
        throw ReductionError("script has " + std::to_string(script->steps.size() - script_pos) +
                             " unused steps after the game ended");
    }
    return {game.poly(), std::move(trace)};
}

std::string format_trace(const ReductionTrace& trace) {
    std::ostringstream os;
    for (const TraceStep& s : trace.steps) {
        os << "m=" << s.monomial << " t=" << s.triple << '\n';
    }
    return os.str();
}

Script parse_script(std::string_view text, int n) {
    Script script;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        const auto m_pos = line.find("m=");
        const auto t_pos = line.find("t=(");
        const auto close = line.find(')', t_pos == std::string::npos ? 0 : t_pos);
        if (m_pos == std::string::npos || t_pos == std::string::npos || close == std::string::npos ||
            t_pos < m_pos) {
            throw ParseError("script line " + std::to_string(line_no) + ": expected 'm=<monomial> t=(i,j,k)'",
                             0);
        }
        ScriptStep step{parse_monomial(line.substr(m_pos + 2, t_pos - m_pos - 2), n), {}};
        std::string nums = line.substr(t_pos + 3, close - t_pos - 3);
        std::replace(nums.begin(), nums.end(), ',', ' ');
        std::istringstream ns(nums);
        std::string extra;
        if (!(ns >> step.triple.i >> step.triple.j >> step.triple.k) || (ns >> extra)) {
            throw ParseError("script line " + std::to_string(line_no) + ": malformed triple", t_pos);
        }
        check_triple(step.triple, n);
        script.steps.push_back(std::move(step));
    }
    return script;
}

std::vector<Strategy> sweep_strategies(int count, std::uint64_t trial_seed) {
    std::vector<Strategy> out;
    for (int s = 0; s < count; ++s) {
        if (s == 0) {
            out.emplace_back(FirstByOrder{});
        } else if (s == 1) {
            out.emplace_back(LastByOrder{});
        } else {
            out.emplace_back(RandomChoice{derive_seed(trial_seed, static_cast<std::uint64_t>(s))});
        }
    }
    return out;
}

TUniqueReport verify_t_unique(int n, int trials, int strategies, std::uint64_t seed, int max_deg, int max_terms) {
    if (n < 2 || trials < 1 || strategies < 2) {
        throw std::invalid_argument("verify_t_unique: need n >= 2, trials >= 1, strategies >= 2");
    }
    TUniqueReport report{n, trials, strategies, seed, max_deg, max_terms, 0, {}};
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(trial));
        Rng rng(trial_seed);
        const XPoly p = random_poly(rng, n, max_deg, max_terms);
        std::optional<ReductionResult> reference;
        std::string reference_name;
        TPoly reference_d;
        for (const Strategy& s : sweep_strategies(strategies, trial_seed)) {
            ReductionResult r = reduce_pathless(p, s, Deformation::generic(), TraceDetail::Light);
            report.total_steps += r.trace.steps.size();
            TPoly dq = d_image(r.q);
            if (!reference) {
                reference_name = strategy_name(s);
                reference_d = dq;
                reference = std::move(r);
                continue;
            }
            if (dq != reference_d) {
                report.counterexamples.push_back({trial, p, reference_name, strategy_name(s), reference->q, r.q,
                                                  reference_d, dq, format_trace(reference->trace),
                                                  format_trace(r.trace)});
            }
        }
    }
    return report;
}

std::pair<XPoly, XPoly> d_invariance_counterexample() {
    const int n = 3;
    const XPoly p = XPoly::variable(n, 1, 2) * XPoly::variable(n, 2, 3);
    const XMonomial m = p.terms().begin()->first;
    return {p, pathless_step(p, m, {1, 2, 3})};
}

}  // namespace subdiv
