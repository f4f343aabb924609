#include "bjq/verify.hpp"

#include <random>
#include <sstream>

namespace bjq {

namespace {

using Rng = std::mt19937;

PhasePolynomial random_real_poly(Rng& rng, int n, int max_degree, int max_terms,
                                 bool q_only = false, bool p_only = false) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    PhasePolynomial poly(n);
    const int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        PhaseMonomial m(n);
        int budget = deg(rng);
        for (int j = 0; j < n && budget > 0; ++j) {
            std::uniform_int_distribution<int> part(0, budget);
            int a = q_only || !p_only ? part(rng) : 0;
            if (q_only) {
                m.exps[j].first = a;
                budget -= a;
                continue;
            }
            if (p_only) {
                int b = part(rng);
                m.exps[j].second = b;
                budget -= b;
                continue;
            }
            m.exps[j].first = a;
            budget -= a;
            std::uniform_int_distribution<int> part2(0, budget);
            int b = part2(rng);
            m.exps[j].second = b;
            budget -= b;
        }
        long nu = num(rng);
        if (nu == 0) nu = 1;
        poly.add_term(m, Scalar::rational(Rational(nu, den(rng))));
    }
    return poly;
}

struct Suite {
    int max_degree;
    bool inject_defect;
    std::vector<CheckResult> results;

    void record(const std::string& name, const std::string& coverage, bool pass,
                const std::string& witness) {
        results.push_back({name, coverage, pass, pass ? "" : witness});
    }

    NCPolynomial bj1(int r, int s) {
        PhasePolynomial m = PhasePolynomial::q_pow(1, r, 1) * PhasePolynomial::p_pow(1, s, 1);
        NCPolynomial out = quantize_bj(m);
        if (inject_defect && r == 2 && s == 2)
            out = out + NCPolynomial::constant(Scalar::rational(1, 100), 1);
        return out;
    }

    void check_appendix_sum_forms() {
        for (int r = 1; r <= max_degree; ++r) {
            for (int s = 1; s <= max_degree; ++s) {
                NCPolynomial direct =
                    commutator(NCPolynomial::q_pow(1, r, 1), NCPolynomial::p_pow(1, s, 1));
                NCPolynomial qo = commutator_sum_form(r, s, SumFormSide::QOuter);
                NCPolynomial po = commutator_sum_form(r, s, SumFormSide::POuter);
                if (!(direct == qo && direct == po)) {
                    std::ostringstream w;
                    w << "r=" << r << " s=" << s << ": [q^r,p^s]=" << direct.to_string();
                    record("commutator sum forms", degrees(1), false, w.str());
                    return;
                }
            }
        }
        record("commutator sum forms", degrees(1), true, "");
    }

    void check_bj_triple() {
        for (int r = 0; r <= max_degree; ++r) {
            for (int s = 0; s <= max_degree; ++s) {
                PhasePolynomial m =
                    PhasePolynomial::q_pow(1, r, 1) * PhasePolynomial::p_pow(1, s, 1);
                NCPolynomial a = bj1(r, s);
                NCPolynomial b = quantize_bj_p_outer(m);
                NCPolynomial c = quantize_bj_commutator_form(r, s);
                if (!(a == b && a == c)) {
                    std::ostringstream w;
                    w << "r=" << r << " s=" << s << ": q-outer " << a.to_string() << " / p-outer "
                      << b.to_string() << " / commutator form " << c.to_string();
                    record("Born-Jordan triple equality", degrees(0), false, w.str());
                    return;
                }
            }
        }
        record("Born-Jordan triple equality", degrees(0), true, "");
    }

    void check_pure_powers() {
        for (int r = 0; r <= max_degree; ++r) {
            NCPolynomial bq = quantize_bj(PhasePolynomial::q_pow(1, r, 1));
            NCPolynomial bp = quantize_bj(PhasePolynomial::p_pow(1, r, 1));
            if (!(bq == NCPolynomial::q_pow(1, r, 1) && bp == NCPolynomial::p_pow(1, r, 1))) {
                record("pure power rule", degrees(0), false, "r=" + std::to_string(r));
                return;
            }
        }
        NCPolynomial qp = quantize_bj(parse_observable("q*p", 1));
        NCPolynomial expected =
            NCPolynomial::q_pow(1, 1, 1) * NCPolynomial::p_pow(1, 1, 1) -
            NCPolynomial::constant(Scalar::rational(1, 2) * Scalar::i() * Scalar::hbar(), 1);
        if (!(qp == expected)) {
            record("pure power rule", degrees(0), false, "Op_BJ(qp) = " + qp.to_string());
            return;
        }
        record("pure power rule", degrees(0), true, "");
    }

    void check_bracket_identities() {
        for (int r = 1; r <= max_degree; ++r) {
            for (int s = 1; s <= max_degree; ++s) {
                PhasePolynomial qr = PhasePolynomial::q_pow(1, r, 1);
                PhasePolynomial ps = PhasePolynomial::p_pow(1, s, 1);
                PhasePolynomial bracket = poisson_bracket(qr, ps);
                // {q^r,p^s} = rs q^{r-1} p^{s-1}, so the quantizations agree
                NCPolynomial lhs = quantize_bj(bracket);
                NCPolynomial rhs =
                    (Scalar(r) * Scalar(s)) *
                    quantize_bj(PhasePolynomial::q_pow(1, r - 1, 1) * PhasePolynomial::p_pow(1, s - 1, 1));
                NCPolynomial comm = commutator(NCPolynomial::q_pow(1, r, 1), NCPolynomial::p_pow(1, s, 1));
                NCPolynomial dirac_rhs = (Scalar::i() * Scalar::hbar()) * quantize_bj(bracket);
                if (!(lhs == rhs && comm == dirac_rhs)) {
                    record("bracket identities", degrees(1), false,
                           "r=" + std::to_string(r) + " s=" + std::to_string(s));
                    return;
                }
            }
        }
        // cross-index brackets vanish
        PhasePolynomial q1 = PhasePolynomial::q_pow(1, 2, 2);
        PhasePolynomial p2 = PhasePolynomial::p_pow(2, 3, 2);
        if (!poisson_bracket(q1, p2).is_zero()) {
            record("bracket identities", degrees(1), false, "{q1^2, p2^3} != 0");
            return;
        }
        record("bracket identities", degrees(1), true, "");
    }

    void check_reduced_dirac() {
        for (int t = 1; t <= 4; ++t) {
            for (int v = 1; v <= 4; ++v) {
                SplitObservable a = split(PhasePolynomial::p_pow(1, t, 1));
                SplitObservable b = split(PhasePolynomial::q_pow(1, v, 1));
                auto res = verify_reduced_dirac(a, b);
                if (!res.pass) {
                    record("reduced Dirac condition", "T=p^1..4, V=q^1..4 + random", false,
                           "T=p^" + std::to_string(t) + " V=q^" + std::to_string(v) +
                               ": difference " + res.difference.to_string());
                    return;
                }
            }
        }
        Rng rng(20260823);
        for (int trial = 0; trial < 100; ++trial) {
            int n = trial < 80 ? 1 : 2;
            int deg = n == 1 ? 5 : 3;
            SplitObservable a{random_real_poly(rng, n, deg, 3, false, true),
                              random_real_poly(rng, n, deg, 3, true, false)};
            SplitObservable b{random_real_poly(rng, n, deg, 3, false, true),
                              random_real_poly(rng, n, deg, 3, true, false)};
            auto res = verify_reduced_dirac(a, b);
            if (!res.pass) {
                record("reduced Dirac condition", "T=p^1..4, V=q^1..4 + random", false,
                       "random trial " + std::to_string(trial) + ": difference " +
                           res.difference.to_string());
                return;
            }
        }
        record("reduced Dirac condition", "T=p^1..4, V=q^1..4 + 100 random split pairs", true, "");
    }

    void check_symmetry() {
        Rng rng(77001);
        for (int trial = 0; trial < 100; ++trial) {
            PhasePolynomial h = random_real_poly(rng, 1, std::max(max_degree, 1), 4);
            if (!is_symmetric(quantize_bj(h))) {
                record("symmetry of Op_BJ on real observables", "100 random, degree <= 6", false,
                       "H = " + h.to_string());
                return;
            }
        }
        record("symmetry of Op_BJ on real observables", "100 random, degree <= 6", true, "");
    }

    void check_gvh() {
        GvhReport report = gvh_demo();
        NCPolynomial expected =
            NCPolynomial::constant(Scalar::hbar_term({Rational(-1, 3), 0}, 2), 1);
        bool ok = report.difference == expected &&
                  report.op_via_q3p3 == quantize_bj(parse_observable("q^2*p^2", 1)) &&
                  !(report.op_via_mixed == report.op_via_q3p3);
        record("Groenewold-van Hove obstruction", "q^2 p^2", ok,
               "difference = " + report.difference.to_string());
    }

    void check_weyl_vs_bj() {
        for (int r = 0; r <= 2; ++r) {
            for (int s = 0; r + s <= 2; ++s) {
                PhasePolynomial m =
                    PhasePolynomial::q_pow(1, r, 1) * PhasePolynomial::p_pow(1, s, 1);
                if (!(quantize_bj(m) == quantize_weyl(m))) {
                    record("Weyl agreement at degree <= 2", "degree <= 2 and q^2 p^2", false,
                           "q^" + std::to_string(r) + " p^" + std::to_string(s));
                    return;
                }
            }
        }
        PhasePolynomial q2p2 = parse_observable("q^2*p^2", 1);
        NCPolynomial gap = quantize_bj(q2p2) - quantize_weyl(q2p2);
        NCPolynomial expected =
            NCPolynomial::constant(Scalar::hbar_term({Rational(-1, 6), 0}, 2), 1);
        record("Weyl agreement at degree <= 2", "degree <= 2 and q^2 p^2", gap == expected,
               "Op_BJ(q^2p^2) - Op_W(q^2p^2) = " + gap.to_string());
    }

    std::string degrees(int lo) const {
        return "r,s = " + std::to_string(lo) + ".." + std::to_string(max_degree);
    }
};

}  // namespace

std::vector<CheckResult> run_verification(int max_degree, bool inject_defect) {
    if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
    Suite suite{max_degree, inject_defect, {}};
    suite.check_appendix_sum_forms();
    suite.check_bj_triple();
    suite.check_pure_powers();
    suite.check_bracket_identities();
    suite.check_reduced_dirac();
    suite.check_symmetry();
    suite.check_gvh();
    suite.check_weyl_vs_bj();
    return suite.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace bjq
