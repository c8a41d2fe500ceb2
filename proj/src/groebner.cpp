#include "subdiv/groebner.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace subdiv {

namespace {

constexpr std::uint64_t kMaxReductionSteps = 50'000'000;

// Index of the first element (in basis order) whose head divides m.
const GBasisElement* find_reducer(const XMonomial& m, const GBasis& g) {
    for (const GBasisElement& e : g.elements()) {
        if (e.head.divides(m)) {
            return &e;
        }
    }
    return nullptr;
}

}  // namespace

GBasis::GBasis(int n, std::vector<GBasisElement> elements) : n_(n), elements_(std::move(elements)) {
    for (const GBasisElement& e : elements_) {
        if (e.poly.n() != n || e.poly.is_zero()) {
            throw std::invalid_argument("GBasis: element has wrong ambient size or is zero");
        }
        if (head_term(e.poly) != e.head || !head_coeff(e.poly).is_one()) {
            throw std::invalid_argument("GBasis: element " + e.poly.str() + " is not monic with the recorded head");
        }
    }
}

XPoly j_relation(int n, const Triple& t, const Deformation& d) {
    const XPoly xij = XPoly::variable(n, t.i, t.j);
    const XPoly xjk = XPoly::variable(n, t.j, t.k);
    const XPoly xik = XPoly::variable(n, t.i, t.k);
    return xij * xjk - xik * (xij + xjk + XPoly(n, d.beta)) - XPoly(n, d.alpha);
}

GBasis generate_basis(int n, const Deformation& d) {
    if (n < 1) {
        throw std::invalid_argument("generate_basis: n must be positive");
    }
    std::vector<GBasisElement> elements;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                const Triple t{i, j, k};
                XPoly poly = -j_relation(n, t, d);
                elements.push_back({t, poly, XMonomial::variable(n, i, k) * XMonomial::variable(n, i, j)});
            }
        }
    }
    return GBasis(n, std::move(elements));
}

XMonomial head_term(const XPoly& p) {
    if (p.is_zero()) {
        throw std::invalid_argument("head_term of the zero polynomial");
    }
    return p.terms().begin()->first;
}

ParamCoeff head_coeff(const XPoly& p) {
    if (p.is_zero()) {
        throw std::invalid_argument("head_coeff of the zero polynomial");
    }
    return p.terms().begin()->second;
}

std::optional<XPoly> reduce_step_G(const XPoly& p, const GBasis& g) {
    for (const auto& [t, a] : p.terms()) {
        if (const GBasisElement* e = find_reducer(t, g)) {
            return p - a * (t.quotient(e->head) * e->poly);
        }
    }
    return std::nullopt;
}

XPoly normal_form(const XPoly& p, const GBasis& g) {
    if (p.n() != g.n()) {
        throw std::invalid_argument("normal_form: ambient size mismatch");
    }
    XPoly work = p;
    std::optional<XMonomial> cursor;
    std::uint64_t steps = 0;
    while (true) {
        // Monomials above the last rewritten one are already reduced: every
        // rewrite only introduces smaller monomials.
        auto it = cursor ? work.terms().lower_bound(*cursor) : work.terms().begin();
        const GBasisElement* reducer = nullptr;
        for (; it != work.terms().end(); ++it) {
            reducer = find_reducer(it->first, g);
            if (reducer != nullptr) {
                break;
            }
        }
        if (reducer == nullptr) {
            return work;
        }
        if (++steps > kMaxReductionSteps) {
            throw std::logic_error("normal_form: step bound exceeded");
        }
        const XMonomial t = it->first;
        const ParamCoeff a = it->second;
        work -= a * (t.quotient(reducer->head) * reducer->poly);
        cursor = t;
    }
}

XPoly spol(const GBasisElement& g1, const GBasisElement& g2) {
    const XMonomial l = g1.head.lcm(g2.head);
    return l.quotient(g1.head) * g1.poly - l.quotient(g2.head) * g2.poly;
}

BuchbergerReport buchberger_report(const GBasis& g) {
    BuchbergerReport report;
    const auto& els = g.elements();
    for (std::size_t a = 0; a < els.size(); ++a) {
        for (std::size_t b = a; b < els.size(); ++b) {
            if (els[a].head.disjoint(els[b].head)) {
                continue;
            }
            ++report.pairs_checked;
            if (a == b) {
                continue;  // spol(g, g) = 0
            }
            XPoly r = normal_form(spol(els[a], els[b]), g);
            if (!r.is_zero()) {
                report.failures.push_back({els[a].triple, els[b].triple, std::move(r)});
            }
        }
    }
    return report;
}

bool buchberger_check(const GBasis& g) { return buchberger_report(g).passed(); }

bool ideal_member(const XPoly& p, const Deformation& d) {
    return normal_form(p, generate_basis(p.n(), d)).is_zero();
}

std::array<XPoly, 4> u_family(int n, int a, int b, int c, int d_, const Deformation& d) {
    return {-j_relation(n, {a, b, c}, d), -j_relation(n, {a, b, d_}, d), -j_relation(n, {a, c, d_}, d),
            -j_relation(n, {b, c, d_}, d)};
}

namespace {

// One summand coeff * shift * u[index] of a syzygy right-hand side.
struct Summand {
    ParamCoeff coeff;
    XMonomial shift;
    int index;
};

}  // namespace

SpolIdentityReport verify_spol_identities(int n, const Deformation& d) {
    SpolIdentityReport report;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            for (int c = b + 1; c <= n; ++c) {
                for (int dd = c + 1; dd <= n; ++dd) {
                    ++report.quadruples;
                    const auto u = u_family(n, a, b, c, dd, d);
                    auto x = [n](int i, int j) { return XMonomial::variable(n, i, j); };
                    auto X = [n](int i, int j) { return XPoly::variable(n, i, j); };
                    const XMonomial one(n);
                    const ParamCoeff p1(1);
                    const ParamCoeff m1(-1);
                    std::ostringstream where;
                    where << "(a,b,c,d)=(" << a << "," << b << "," << c << "," << dd << ")";

                    const XPoly neat = u[0] * (X(a, dd) - X(b, dd)) - u[1] * (X(a, c) - X(b, c)) -
                                       u[2] * (X(b, c) - X(b, dd)) + u[3] * (X(a, c) - X(a, dd));
                    if (!neat.is_zero()) {
                        report.failures.push_back("four-term syzygy fails at " + where.str());
                    }

                    struct Identity {
                        const char* name;
                        XPoly lhs;
                        XPoly spol_lhs;
                        std::vector<Summand> rhs;
                    };
                    const GBasisElement e1{{a, b, c}, u[0], x(a, c) * x(a, b)};
                    const GBasisElement e2{{a, b, dd}, u[1], x(a, dd) * x(a, b)};
                    const GBasisElement e3{{a, c, dd}, u[2], x(a, dd) * x(a, c)};
                    const std::vector<Identity> identities = {
                        {"spol(u1,u2)", x(a, dd) * u[0] - x(a, c) * u[1], spol(e1, e2),
                         {{m1, x(b, c), 1},
                          {m1, x(a, c), 3},
                          {p1, x(b, dd), 0},
                          {p1, x(b, c), 2},
                          {p1, x(a, dd), 3},
                          {m1, x(b, dd), 2}}},
                        {"spol(u1,u3)", x(a, dd) * u[0] - x(a, b) * u[2], spol(e1, e3),
                         {{d.beta, one, 2},
                          {-d.beta, one, 1},
                          {m1, x(a, b), 3},
                          {m1, x(b, c), 1},
                          {p1, x(b, c), 2},
                          {p1, x(a, dd), 3},
                          {p1, x(c, dd), 0},
                          {m1, x(c, dd), 1}}},
                        {"spol(u2,u3)", x(a, c) * u[1] - x(a, b) * u[2], spol(e2, e3),
                         {{d.beta, one, 2},
                          {-d.beta, one, 1},
                          {m1, x(a, b), 3},
                          {p1, x(a, c), 3},
                          {m1, x(b, dd), 0},
                          {p1, x(c, dd), 0},
                          {p1, x(b, dd), 2},
                          {m1, x(c, dd), 1}}},
                    };
                    for (const Identity& id : identities) {
                        if (id.lhs != id.spol_lhs) {
                            report.failures.push_back(std::string(id.name) + " is not the S-polynomial at " +
                                                      where.str());
                        }
                        XPoly rhs(n);
                        std::set<XMonomial> shifted_heads;
                        for (const Summand& s : id.rhs) {
                            rhs += s.coeff * (s.shift * u[static_cast<std::size_t>(s.index)]);
                            shifted_heads.insert(s.shift * head_term(u[static_cast<std::size_t>(s.index)]));
                        }
                        if (rhs != id.lhs) {
                            report.failures.push_back(std::string(id.name) + " identity fails at " + where.str());
                        }
                        if (shifted_heads.size() != id.rhs.size()) {
                            report.failures.push_back(std::string(id.name) + " shifted heads not distinct at " +
                                                      where.str());
                        }
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace subdiv
