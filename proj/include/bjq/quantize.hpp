#pragma once

#include "bjq/ccr.hpp"
#include "bjq/phase.hpp"

namespace bjq {

enum class QuantizationRule { BornJordan, Weyl };

/// Ordering convention of the naive product-rule map q^a p^b -> operators.
enum class NaiveOrdering { QLeft, PLeft };

/// Born-Jordan quantization, q-outer average: on q_j^r p_j^s returns
/// (1/(r+1)) sum_{l=0}^{r} q^_j^{r-l} p^_j^s q^_j^l, extended by linearity;
/// distinct-index factors commute and quantize factor-wise.
NCPolynomial quantize_bj(const PhasePolynomial& h);

/// The p-outer average (1/(s+1)) sum_{l=0}^{s} p^^{s-l} q^^r p^^l per index;
/// equal to quantize_bj on every input.
NCPolynomial quantize_bj_p_outer(const PhasePolynomial& h);

/// The commutator form [q^^{r+1}, p^^{s+1}] / (i hbar (r+1)(s+1)), dimension 1.
NCPolynomial quantize_bj_commutator_form(int r, int s);

/// Weyl symmetrization: on q_j^r p_j^s returns
/// 2^{-r} sum_{l=0}^{r} C(r,l) q^^{r-l} p^^s q^^l per index.
NCPolynomial quantize_weyl(const PhasePolynomial& h);

NCPolynomial quantize(const PhasePolynomial& h, QuantizationRule rule);

/// One-sided product-rule map q_j^a p_j^b -> q^_j^a p^_j^b (or p-left, per
/// ordering), by linearity.
NCPolynomial naive_op(const PhasePolynomial& h, NaiveOrdering ordering = NaiveOrdering::QLeft);

/// The product-rule map of the Groenewold-van Hove argument: pure powers map
/// to operator powers, and each mixed monomial to the symmetrized average
/// (q^^a p^^b + p^^b q^^a)/2 per index. The symmetrization is not a choice:
/// it is the unique assignment consistent with the pure-power rules under
/// Dirac's correspondence (e.g. q^2 p = (1/6){q^3, p^2} forces
/// Op(q^2 p) = (q^^2 p^ + p^ q^^2)/2), and it equals the average of the two
/// one-sided orderings, so the construction does not depend on which side one
/// starts from.
NCPolynomial dirac_product_op(const PhasePolynomial& h);

/// Dirac's rule applied to scale*{A,B}: returns scale * [Op(A), Op(B)] / (i hbar)
/// with Op = dirac_product_op.
NCPolynomial dirac_quantize_via_bracket(const PhasePolynomial& a, const PhasePolynomial& b,
                                        const Scalar& scale);

/// The two conflicting operators Dirac's rule assigns to q^2 p^2 and their
/// difference, which is exactly -(1/3) hbar^2.
struct GvhReport {
    NCPolynomial op_via_q3p3;
    NCPolynomial op_via_mixed;
    NCPolynomial difference;
};

GvhReport gvh_demo();

struct ReducedDiracResult {
    bool pass;
    NCPolynomial difference;  // [H^,K^] - i hbar Op_BJ({H,K}); zero iff pass
};

/// Checks the reduced Dirac condition for two split observables:
/// [Op_BJ(T+V), Op_BJ(T'+V')] = i hbar Op_BJ({T+V, T'+V'}) exactly.
ReducedDiracResult verify_reduced_dirac(const SplitObservable& a, const SplitObservable& b);

/// True iff adjoint(a) = a.
bool is_symmetric(const NCPolynomial& a);

}  // namespace bjq
