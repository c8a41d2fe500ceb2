// subdiv: command-line front end for the subdivision algebra library.
//
// Exit status: 0 success, 1 verification failure or count mismatch,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "subdiv/algebra.hpp"
#include "subdiv/groebner.hpp"
#include "subdiv/parse.hpp"
#include "subdiv/report.hpp"
#include "subdiv/rewrite.hpp"
#include "subdiv/series.hpp"

using namespace subdiv;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    int n = 4;
    std::string beta = "sym";
    std::string alpha = "sym";
    std::uint64_t seed = 0;
    bool json = false;
};

ParamCoeff parse_param(const std::string& text, const ParamCoeff& symbolic) {
    if (text == "sym") {
        return symbolic;
    }
    try {
        return ParamCoeff(Rational::parse(text));
    } catch (const std::invalid_argument&) {
        throw UsageError("expected 'sym' or a rational, got '" + text + "'");
    }
}

Deformation deformation(const Config& cfg) {
    return {parse_param(cfg.beta, ParamCoeff::beta()), parse_param(cfg.alpha, ParamCoeff::alpha())};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int emit(const Config& cfg, const Json& j, bool passed, const std::string& text) {
    if (cfg.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
        std::cout << (passed ? "PASS" : "FAIL") << "\n";
    }
    return passed ? 0 : 1;
}

std::string failure_lines(const std::vector<std::string>& failures) {
    std::string out;
    for (const auto& f : failures) {
        out += "  failure: " + f + "\n";
    }
    return out;
}

struct ReduceOpts {
    std::string mode = "pathless";
    std::string strategy = "first";
    std::string script_file;
    bool trace = false;
    bool d_image = false;
    std::string input;
};

int cmd_reduce(const Config& cfg, const ReduceOpts& o) {
    const Deformation d = deformation(cfg);
    const XPoly p = parse_poly(o.input, cfg.n);
    Json j = {{"input", p.str()}, {"mode", o.mode}};
    std::string text;
    XPoly q(cfg.n);
    if (o.mode == "forkless") {
        if (o.trace) {
            throw UsageError("--trace applies to --mode pathless only");
        }
        q = normal_form(p, generate_basis(cfg.n, d));
        j["q"] = q.str();
        text = q.str() + "\n";
    } else {
        Strategy s = FirstByOrder{};
        if (o.strategy == "last") {
            s = LastByOrder{};
        } else if (o.strategy == "random") {
            s = RandomChoice{cfg.seed};
            std::cerr << "seed: " << cfg.seed << "\n";
            j["seed"] = cfg.seed;
        } else if (o.strategy == "script") {
            if (o.script_file.empty()) {
                throw UsageError("--strategy script needs --script-file");
            }
            s = parse_script(read_file(o.script_file), cfg.n);
        }
        j["strategy"] = strategy_name(s);
        const ReductionResult r = reduce_pathless(p, s, d, o.trace ? TraceDetail::Full : TraceDetail::Light);
        q = r.q;
        j["q"] = q.str();
        text = q.str() + "\n";
        if (o.trace) {
            j["trace"] = trace_json(r.trace);
        }
        if (o.d_image) {
            text += "D: " + d_image(q).str() + "\n";
        }
        if (o.trace) {
            text += "# trace\n" + format_trace(r.trace);
        }
    }
    if (o.d_image) {
        j["d_image"] = d_image(q).str();
        if (o.mode == "forkless") {
            text += "D: " + d_image(q).str() + "\n";
        }
    }
    if (cfg.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
    return 0;
}

struct VerifyOpts {
    int trials = 100;
    int strategies = 5;
    int max_degree = 4;
    int max_terms = 5;
    int w_order = 4;
    int ed_degree = 3;
    int random_count = 0;
    int samples = 10;
    int products = 50;
};

int verify_groebner(const Config& cfg) {
    const Deformation d = deformation(cfg);
    const BuchbergerReport b = buchberger_report(generate_basis(cfg.n, d));
    const SpolIdentityReport s = verify_spol_identities(cfg.n, d);
    const bool ok = b.passed() && s.passed();
    Json j = {{"check", "groebner"}, {"passed", ok}, {"n", cfg.n}, {"buchberger", report_json(b)},
              {"identities", report_json(s)}};
    std::ostringstream t;
    t << "groebner n=" << cfg.n << ": " << b.pairs_checked << " critical pairs, " << b.failures.size()
      << " nonzero remainders; " << s.quadruples << " quadruples, " << s.failures.size()
      << " identity failures\n";
    for (const auto& f : b.failures) {
        t << "  failure: " << f.first << " " << f.second << " -> " << f.remainder << "\n";
    }
    t << failure_lines(s.failures);
    return emit(cfg, j, ok, t.str());
}

int verify_t_unique_cmd(const Config& cfg, const VerifyOpts& o) {
    if (!deformation(cfg).is_generic()) {
        throw UsageError("t-unique runs with symbolic b and a");
    }
    const TUniqueReport r = verify_t_unique(cfg.n, o.trials, o.strategies, cfg.seed, o.max_degree, o.max_terms);
    std::ostringstream t;
    t << "seed: " << cfg.seed << "\n"
      << "t-unique n=" << cfg.n << ": " << r.trials << " inputs x " << r.strategies << " strategies, "
      << r.total_steps << " moves, " << r.counterexamples.size() << " counterexamples\n";
    for (const auto& c : r.counterexamples) {
        t << "  trial " << c.trial << ": " << c.input << "\n    " << c.strategy_a << ": " << c.d_a << "\n    "
          << c.strategy_b << ": " << c.d_b << "\n";
    }
    return emit(cfg, report_json(r), r.passed(), t.str());
}

int verify_a_kills_j_cmd(const Config& cfg, const VerifyOpts& o) {
    const AKillsJReport r = verify_a_kills_j(cfg.n, deformation(cfg), cfg.seed, o.products);
    Json j = report_json(r);
    j["seed"] = cfg.seed;
    std::ostringstream t;
    t << "seed: " << cfg.seed << "\n"
      << "a-kills-j n=" << cfg.n << ": " << r.generators_checked << " generators, " << r.products_checked
      << " products\n"
      << failure_lines(r.failures);
    return emit(cfg, j, r.passed(), t.str());
}

int verify_ed_ba_cmd(const Config& cfg, const VerifyOpts& o) {
    const Deformation d = deformation(cfg);
    EdBaReport r = verify_ed_eq_ba_exhaustive(cfg.n, o.ed_degree, o.w_order, d);
    if (o.random_count > 0) {
        const EdBaReport extra = verify_ed_eq_ba_random(cfg.n, o.random_count, o.ed_degree, o.w_order, cfg.seed, d);
        r.monomials_checked += extra.monomials_checked;
        r.failures.insert(r.failures.end(), extra.failures.begin(), extra.failures.end());
    }
    Json j = report_json(r);
    j["seed"] = cfg.seed;
    std::ostringstream t;
    t << "seed: " << cfg.seed << "\n"
      << "ed-ba n=" << cfg.n << " W=" << o.w_order << ": " << r.monomials_checked << " pathless monomials\n"
      << failure_lines(r.failures);
    return emit(cfg, j, r.passed(), t.str());
}

int verify_symmetry_cmd(const Config& cfg, const VerifyOpts& o) {
    if (cfg.n < 3) {
        throw UsageError("symmetry needs --n >= 3");
    }
    const SymmetryReport r = verify_symmetry(cfg.n, deformation(cfg), cfg.seed, o.samples);
    Json j = report_json(r);
    j["seed"] = cfg.seed;
    std::ostringstream t;
    t << "seed: " << cfg.seed << "\n"
      << "symmetry n=" << cfg.n << ": " << r.permutations_sampled << " permutations; failures (i) "
      << r.failures_i.size() << ", (ii) " << r.failures_ii.size() << ", (iii) " << r.failures_iii.size()
      << ", (iv) " << r.failures_iv.size() << "\n";
    return emit(cfg, j, r.passed(), t.str());
}

int verify_e_inverse_cmd(const Config& cfg, const VerifyOpts& o) {
    if (cfg.n < 2) {
        throw UsageError("e-inverse needs --n >= 2");
    }
    const bool ok = verify_e_left_inverse(o.samples, cfg.seed, cfg.n, deformation(cfg));
    Json j = {{"check", "e-inverse"}, {"passed", ok}, {"n", cfg.n}, {"samples", o.samples}, {"seed", cfg.seed}};
    std::ostringstream t;
    t << "seed: " << cfg.seed << "\n"
      << "e-inverse n=" << cfg.n << ": " << o.samples << " samples\n";
    return emit(cfg, j, ok, t.str());
}

int cmd_count(const Config& cfg, int max_degree, bool check_gf) {
    const CountTable t = count_forkless(cfg.n, max_degree);
    bool ok = true;
    Json j = report_json(t);
    if (check_gf) {
        ok = t == gf_coeffs(cfg.n, max_degree);
        j["gf_match"] = ok;
    }
    if (cfg.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << t.csv();
        if (!ok) {
            std::cout << "generating function mismatch: " << gf_coeffs(cfg.n, max_degree).csv();
        }
    }
    return ok ? 0 : 1;
}

int cmd_basis(const Config& cfg, int degree) {
    const auto monomials = enumerate_forkless(cfg.n, degree);
    if (cfg.json) {
        Json list = Json::array();
        for (const auto& m : monomials) {
            list.push_back(m.str());
        }
        std::cout << Json{{"n", cfg.n}, {"degree", degree}, {"monomials", list}}.dump(2) << "\n";
    } else {
        for (const auto& m : monomials) {
            std::cout << m << "\n";
        }
    }
    return 0;
}

int cmd_d_image(const Config& cfg, const std::string& input) {
    const TPoly img = d_image(parse_poly(input, cfg.n));
    if (cfg.json) {
        std::cout << Json{{"d_image", img.str()}}.dump(2) << "\n";
    } else {
        std::cout << img << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the subdivision algebra"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--n", cfg.n, "ambient size n")->check(CLI::PositiveNumber);
    app.add_option("--beta", cfg.beta, "'sym' or a rational");
    app.add_option("--alpha", cfg.alpha, "'sym' or a rational");
    app.add_option("--seed", cfg.seed, "seed for randomized commands");
    app.add_flag("--json", cfg.json, "JSON output");

    ReduceOpts ro;
    auto* reduce = app.add_subcommand("reduce", "reduce a polynomial to pathless or forkless form");
    reduce->add_option("--mode", ro.mode)->check(CLI::IsMember({"pathless", "forkless"}));
    reduce->add_option("--strategy", ro.strategy)->check(CLI::IsMember({"first", "last", "random", "script"}));
    reduce->add_option("--script-file", ro.script_file, "moves, one 'm=<monomial> t=(i,j,k)' per line");
    reduce->add_flag("--trace", ro.trace);
    reduce->add_flag("--d-image", ro.d_image);
    reduce->add_option("input", ro.input)->required();

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "run a verification");
    verify->require_subcommand(1);
    auto* v_groebner = verify->add_subcommand("groebner", "Buchberger criterion and the syzygy identities");
    auto* v_tunique = verify->add_subcommand("t-unique", "D-image independence of the reduction order");
    v_tunique->add_option("--trials", vo.trials);
    v_tunique->add_option("--strategies", vo.strategies)->check(CLI::PositiveNumber);
    v_tunique->add_option("--max-degree", vo.max_degree);
    v_tunique->add_option("--max-terms", vo.max_terms)->check(CLI::PositiveNumber);
    auto* v_akj = verify->add_subcommand("a-kills-j", "A vanishes on J");
    v_akj->add_option("--products", vo.products);
    auto* v_edba = verify->add_subcommand("ed-ba", "E(D(m)) = B(A_S(m)) for pathless m");
    v_edba->add_option("--w-order", vo.w_order)->check(CLI::NonNegativeNumber);
    v_edba->add_option("--max-degree", vo.ed_degree);
    v_edba->add_option("--random", vo.random_count, "additional random pathless monomials");
    auto* v_sym = verify->add_subcommand("symmetry", "J_{i,j,k} and the symmetric group action");
    v_sym->add_option("--samples", vo.samples);
    auto* v_einv = verify->add_subcommand("e-inverse", "G(F(E(p))) = p");
    v_einv->add_option("--samples", vo.samples);
    for (auto* sub : verify->get_subcommands({})) {
        sub->fallthrough();
    }
    verify->fallthrough();

    int max_degree = 6;
    bool check_gf = false;
    auto* count = app.add_subcommand("count", "count forkless monomials by degree");
    count->require_subcommand(1);
    count->fallthrough();
    auto* count_forkless_cmd = count->add_subcommand("forkless");
    count_forkless_cmd->fallthrough();
    count_forkless_cmd->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);
    count_forkless_cmd->add_flag("--check-gf", check_gf);

    int degree = 2;
    auto* basis = app.add_subcommand("basis", "list forkless monomials of one degree");
    basis->require_subcommand(1);
    basis->fallthrough();
    auto* basis_forkless = basis->add_subcommand("forkless");
    basis_forkless->fallthrough();
    basis_forkless->add_option("--degree", degree)->check(CLI::NonNegativeNumber);

    std::string d_input;
    auto* dimg = app.add_subcommand("d-image", "apply x[i,j] -> t[i]");
    dimg->add_option("input", d_input)->required();
    reduce->fallthrough();
    dimg->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*reduce) {
            return cmd_reduce(cfg, ro);
        }
        if (*v_groebner) {
            return verify_groebner(cfg);
        }
        if (*v_tunique) {
            return verify_t_unique_cmd(cfg, vo);
        }
        if (*v_akj) {
            return verify_a_kills_j_cmd(cfg, vo);
        }
        if (*v_edba) {
            return verify_ed_ba_cmd(cfg, vo);
        }
        if (*v_sym) {
            return verify_symmetry_cmd(cfg, vo);
        }
        if (*v_einv) {
            return verify_e_inverse_cmd(cfg, vo);
        }
        if (*count_forkless_cmd) {
            return cmd_count(cfg, max_degree, check_gf);
        }
        if (*basis_forkless) {
            return cmd_basis(cfg, degree);
        }
        if (*dimg) {
            return cmd_d_image(cfg, d_input);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ReductionError& e) {
        std::cerr << "script error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
