#include "bjq/serialize.hpp"

#include <sstream>

namespace bjq {

namespace {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

Rational rational_from_string(const std::string& s) {
    return Rational(s);
}

json grid_header(const numeric::Grid& g) {
    return json{{"n", g.n}, {"length", g.length}, {"hbar", g.hbar}};
}

numeric::Grid grid_from_json(const json& j) {
    return numeric::Grid(j.at("n").get<int>(), j.at("length").get<double>(),
                         j.at("hbar").get<double>());
}

void split_complex(const std::vector<numeric::Complex>& v, json& re, json& im) {
    re = json::array();
    im = json::array();
    for (const auto& z : v) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
}

void join_complex(const json& re, const json& im, std::vector<numeric::Complex>& out) {
    if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.size() != out.size())
        throw std::invalid_argument("re/im arrays malformed or of wrong length");
    for (size_t a = 0; a < out.size(); ++a)
        out[a] = {re[a].get<double>(), im[a].get<double>()};
}

}  // namespace

json scalar_to_json(const Scalar& s) {
    json terms = json::array();
    for (const auto& [k, c] : s.terms())
        terms.push_back(json{{"hbar", k}, {"re", rational_to_string(c.re)},
                             {"im", rational_to_string(c.im)}});
    return terms;
}

Scalar scalar_from_json(const json& j) {
    Scalar s;
    for (const auto& t : j) {
        GaussianRational c{rational_from_string(t.at("re").get<std::string>()),
                           rational_from_string(t.at("im").get<std::string>())};
        s += Scalar::hbar_term(c, t.at("hbar").get<int>());
    }
    return s;
}

json ncpoly_to_json(const NCPolynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::array();
        for (const auto& [r, s] : m.exps) exps.push_back(json::array({r, s}));
        terms.push_back(json{{"monomial", exps}, {"coeff", scalar_to_json(c)}});
    }
    return json{{"n", p.dimension()}, {"terms", terms}};
}

NCPolynomial ncpoly_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    NCPolynomial p(n);
    for (const auto& t : j.at("terms")) {
        NCMonomial m(n);
        const auto& exps = t.at("monomial");
        if (static_cast<int>(exps.size()) != n)
            throw std::invalid_argument("monomial dimension mismatch");
        for (int i = 0; i < n; ++i) m.exps[i] = {exps[i][0].get<int>(), exps[i][1].get<int>()};
        p.add_term(m, scalar_from_json(t.at("coeff")));
    }
    return p;
}

json phasepoly_to_json(const PhasePolynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::array();
        for (const auto& [a, b] : m.exps) exps.push_back(json::array({a, b}));
        terms.push_back(json{{"monomial", exps}, {"coeff", scalar_to_json(c)}});
    }
    return json{{"n", p.dimension()}, {"terms", terms}};
}

PhasePolynomial phasepoly_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    PhasePolynomial p(n);
    for (const auto& t : j.at("terms")) {
        PhaseMonomial m(n);
        const auto& exps = t.at("monomial");
        if (static_cast<int>(exps.size()) != n)
            throw std::invalid_argument("monomial dimension mismatch");
        for (int i = 0; i < n; ++i) m.exps[i] = {exps[i][0].get<int>(), exps[i][1].get<int>()};
        p.add_term(m, scalar_from_json(t.at("coeff")));
    }
    return p;
}

NCPolynomial ncpoly_from_text(const std::string& text, int n) {
    PhasePolynomial commutative = parse_observable(text, n);
    NCPolynomial p(n);
    for (const auto& [m, c] : commutative.terms()) {
        NCMonomial nm(n);
        nm.exps = m.exps;
        p.add_term(nm, c);
    }
    return p;
}

json gvh_report_to_json(const GvhReport& report) {
    return json{{"op_via_q3p3",
                 {{"text", report.op_via_q3p3.to_string()}, {"terms", ncpoly_to_json(report.op_via_q3p3)}}},
                {"op_via_mixed",
                 {{"text", report.op_via_mixed.to_string()}, {"terms", ncpoly_to_json(report.op_via_mixed)}}},
                {"difference",
                 {{"text", report.difference.to_string()}, {"terms", ncpoly_to_json(report.difference)}}}};
}

json wavefunction_to_json(const numeric::Wavefunction& psi) {
    json j = grid_header(psi.grid);
    split_complex(psi.values, j["re"], j["im"]);
    return j;
}

numeric::Wavefunction wavefunction_from_json(const json& j) {
    numeric::Wavefunction psi(grid_from_json(j));
    join_complex(j.at("re"), j.at("im"), psi.values);
    return psi;
}

json phase_samples_to_json(const numeric::PhaseSamples& h) {
    json j = grid_header(h.grid);
    split_complex(h.values, j["re"], j["im"]);
    return j;
}

numeric::PhaseSamples phase_samples_from_json(const json& j) {
    numeric::PhaseSamples h(grid_from_json(j));
    join_complex(j.at("re"), j.at("im"), h.values);
    return h;
}

}  // namespace bjq
