#include "subdiv/report.hpp"

#include <sstream>

namespace subdiv {

namespace {

std::string triple_str(const Triple& t) {
    std::ostringstream os;
    os << t;
    return os.str();
}

}  // namespace

Json report_json(const BuchbergerReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"first", triple_str(f.first)},
                            {"second", triple_str(f.second)},
                            {"remainder", f.remainder.str()}});
    }
    return {{"check", "groebner"}, {"passed", r.passed()}, {"pairs_checked", r.pairs_checked},
            {"failures", failures}};
}

Json report_json(const SpolIdentityReport& r) {
    return {{"check", "spol-identities"}, {"passed", r.passed()}, {"quadruples", r.quadruples},
            {"failures", r.failures}};
}

Json report_json(const TUniqueReport& r) {
    Json cex = Json::array();
    for (const auto& c : r.counterexamples) {
        cex.push_back({{"trial", c.trial},
                       {"input", c.input.str()},
                       {"strategy_a", c.strategy_a},
                       {"strategy_b", c.strategy_b},
                       {"q_a", c.q_a.str()},
                       {"q_b", c.q_b.str()},
                       {"d_a", c.d_a.str()},
                       {"d_b", c.d_b.str()},
                       {"trace_a", c.trace_a},
                       {"trace_b", c.trace_b}});
    }
    return {{"check", "t-unique"}, {"passed", r.passed()}, {"n", r.n},
            {"trials", r.trials}, {"strategies", r.strategies}, {"seed", r.seed},
            {"max_degree", r.max_deg}, {"max_terms", r.max_terms}, {"total_steps", r.total_steps},
            {"counterexamples", cex}};
}

Json report_json(const AKillsJReport& r) {
    return {{"check", "a-kills-j"}, {"passed", r.passed()}, {"n", r.n},
            {"generators_checked", r.generators_checked}, {"products_checked", r.products_checked},
            {"failures", r.failures}};
}

Json report_json(const EdBaReport& r) {
    return {{"check", "ed-ba"}, {"passed", r.passed()}, {"n", r.n}, {"w_order", r.w_order},
            {"monomials_checked", r.monomials_checked}, {"failures", r.failures}};
}

Json report_json(const SymmetryReport& r) {
    return {{"check", "symmetry"},
            {"passed", r.passed()},
            {"n", r.n},
            {"permutations_sampled", r.permutations_sampled},
            {"failures_i", r.failures_i},
            {"failures_ii", r.failures_ii},
            {"failures_iii", r.failures_iii},
            {"failures_iv", r.failures_iv}};
}

Json report_json(const CountTable& t) {
    Json rows = Json::array();
    for (std::size_t k = 0; k < t.degrees.size(); ++k) {
        rows.push_back({{"degree", k}, {"count", t.degrees[k]}});
    }
    return {{"n", t.n}, {"counts", rows}};
}

Json trace_json(const ReductionTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json step = {{"monomial", s.monomial.str()},
                     {"triple", {s.triple.i, s.triple.j, s.triple.k}},
                     {"replaced_weight", s.replaced_weight},
                     {"max_produced_weight", s.max_produced_weight}};
        if (s.after) {
            step["after"] = s.after->str();
        }
        steps.push_back(step);
    }
    return steps;
}

CountTable count_table_from_json(const Json& j) {
    CountTable t;
    t.n = j.at("n").get<int>();
    for (const auto& row : j.at("counts")) {
        if (row.at("degree").get<std::size_t>() != t.degrees.size()) {
            throw std::invalid_argument("count table degrees must be consecutive from 0");
        }
        t.degrees.push_back(row.at("count").get<std::uint64_t>());
    }
    return t;
}

}  // namespace subdiv
