#include "bjq/quantize.hpp"

namespace bjq {

namespace {

Rational binomial(int n, int k) {
    Rational r = 1;
    for (int j = 0; j < k; ++j) r = r * Rational(n - j) / Rational(j + 1);
    return r;
}

// Per-index monomial rule of one quantization scheme, as a dimension-n
// polynomial touching only index j.
using MonomialRule = NCPolynomial (*)(int j, int r, int s, int n);

NCPolynomial bj_monomial(int j, int r, int s, int n) {
    NCPolynomial sum(n);
    for (int l = 0; l <= r; ++l)
        sum = sum + NCPolynomial::q_pow(j, r - l, n) * NCPolynomial::p_pow(j, s, n) *
                        NCPolynomial::q_pow(j, l, n);
    return Scalar::rational(1, r + 1) * sum;
}

NCPolynomial bj_monomial_p_outer(int j, int r, int s, int n) {
    NCPolynomial sum(n);
    for (int l = 0; l <= s; ++l)
        sum = sum + NCPolynomial::p_pow(j, s - l, n) * NCPolynomial::q_pow(j, r, n) *
                        NCPolynomial::p_pow(j, l, n);
    return Scalar::rational(1, s + 1) * sum;
}

NCPolynomial weyl_monomial(int j, int r, int s, int n) {
    NCPolynomial sum(n);
    for (int l = 0; l <= r; ++l)
        sum = sum + Scalar::rational(binomial(r, l)) *
                        (NCPolynomial::q_pow(j, r - l, n) * NCPolynomial::p_pow(j, s, n) *
                         NCPolynomial::q_pow(j, l, n));
    Rational half_pow = 1;
    for (int k = 0; k < r; ++k) half_pow /= 2;
    return Scalar::rational(half_pow) * sum;
}

NCPolynomial quantize_with(const PhasePolynomial& h, MonomialRule rule) {
    const int n = h.dimension();
    NCPolynomial result(n);
    for (const auto& [m, c] : h.terms()) {
        NCPolynomial term = NCPolynomial::constant(c, n);
        for (int j = 0; j < n; ++j) {
            const auto [a, b] = m.exps[j];
            if (a == 0 && b == 0) continue;
            term = term * rule(j + 1, a, b, n);
        }
        result = result + term;
    }
    return result;
}

}  // namespace

NCPolynomial quantize_bj(const PhasePolynomial& h) { return quantize_with(h, bj_monomial); }

NCPolynomial quantize_bj_p_outer(const PhasePolynomial& h) {
    return quantize_with(h, bj_monomial_p_outer);
}

NCPolynomial quantize_bj_commutator_form(int r, int s) {
    if (r < 0 || s < 0) throw std::invalid_argument("exponents must be non-negative");
    NCPolynomial c =
        commutator(NCPolynomial::q_pow(1, r + 1, 1), NCPolynomial::p_pow(1, s + 1, 1));
    return Scalar::rational(1, static_cast<long>(r + 1) * (s + 1)) * c.divided_by_i_hbar();
}

NCPolynomial quantize_weyl(const PhasePolynomial& h) { return quantize_with(h, weyl_monomial); }

NCPolynomial quantize(const PhasePolynomial& h, QuantizationRule rule) {
    return rule == QuantizationRule::BornJordan ? quantize_bj(h) : quantize_weyl(h);
}

NCPolynomial naive_op(const PhasePolynomial& h, NaiveOrdering ordering) {
    const int n = h.dimension();
    NCPolynomial result(n);
    for (const auto& [m, c] : h.terms()) {
        NCPolynomial term = NCPolynomial::constant(c, n);
        for (int j = 0; j < n; ++j) {
            const auto [a, b] = m.exps[j];
            if (a == 0 && b == 0) continue;
            if (ordering == NaiveOrdering::QLeft)
                term = term * (NCPolynomial::q_pow(j + 1, a, n) * NCPolynomial::p_pow(j + 1, b, n));
            else
                term = term * (NCPolynomial::p_pow(j + 1, b, n) * NCPolynomial::q_pow(j + 1, a, n));
        }
        result = result + term;
    }
    return result;
}

NCPolynomial dirac_product_op(const PhasePolynomial& h) {
    const int n = h.dimension();
    NCPolynomial result(n);
    for (const auto& [m, c] : h.terms()) {
        NCPolynomial term = NCPolynomial::constant(c, n);
        for (int j = 0; j < n; ++j) {
            const auto [a, b] = m.exps[j];
            if (a == 0 && b == 0) continue;
            NCPolynomial qa = NCPolynomial::q_pow(j + 1, a, n);
            NCPolynomial pb = NCPolynomial::p_pow(j + 1, b, n);
            term = term * (Scalar::rational(1, 2) * (qa * pb + pb * qa));
        }
        result = result + term;
    }
    return result;
}

NCPolynomial dirac_quantize_via_bracket(const PhasePolynomial& a, const PhasePolynomial& b,
                                        const Scalar& scale) {
    NCPolynomial c = commutator(dirac_product_op(a), dirac_product_op(b));
    return scale * c.divided_by_i_hbar();
}

GvhReport gvh_demo() {
    PhasePolynomial q3 = parse_observable("q^3", 1);
    PhasePolynomial p3 = parse_observable("p^3", 1);
    PhasePolynomial q2p = parse_observable("q^2*p", 1);
    PhasePolynomial p2q = parse_observable("p^2*q", 1);
    GvhReport report{dirac_quantize_via_bracket(q3, p3, Scalar::rational(1, 9)),
                     dirac_quantize_via_bracket(q2p, p2q, Scalar::rational(1, 3)),
                     NCPolynomial(1)};
    report.difference = report.op_via_q3p3 - report.op_via_mixed;
    return report;
}

ReducedDiracResult verify_reduced_dirac(const SplitObservable& a, const SplitObservable& b) {
    PhasePolynomial h = a.total();
    PhasePolynomial k = b.total();
    NCPolynomial lhs = commutator(quantize_bj(h), quantize_bj(k));
    NCPolynomial rhs = (Scalar::i() * Scalar::hbar()) * quantize_bj(poisson_bracket(h, k));
    NCPolynomial diff = lhs - rhs;
    return {diff.is_zero(), diff};
}

bool is_symmetric(const NCPolynomial& a) { return adjoint(a) == a; }

}  // namespace bjq
