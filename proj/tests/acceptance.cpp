// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "bjq/numeric.hpp"
#include "bjq/quantize.hpp"
#include "bjq/verify.hpp"

using namespace bjq;
namespace num = bjq::numeric;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("%s  criterion %2d  %-58s%s%s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.empty() ? "" : "  ", detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Scalar ih() { return Scalar::i() * Scalar::hbar(); }

PhasePolynomial random_polynomial(std::mt19937& rng, int max_degree, bool momentum_only,
                                  bool position_only) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> numer(-5, 5);
    std::uniform_int_distribution<long> denom(1, 4);
    std::uniform_int_distribution<int> which(0, 1);
    PhasePolynomial p(1);
    for (int t = 0; t < 3; ++t) {
        long nu = numer(rng);
        if (nu == 0) nu = 1;
        Scalar c = Scalar::rational(Rational(nu, denom(rng)));
        bool use_p = momentum_only || (!position_only && which(rng));
        int d = deg(rng);
        p = p + c * (use_p ? PhasePolynomial::p_pow(1, d, 1) : PhasePolynomial::q_pow(1, d, 1));
    }
    return p;
}

num::Wavefunction random_wavefunction(const num::Grid& grid, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    num::Wavefunction psi(grid);
    for (auto& v : psi.values) v = {gauss(rng), gauss(rng)};
    return psi;
}

double max_deviation(const num::Wavefunction& a, const num::Wavefunction& b) {
    double d = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i)
        d = std::max(d, std::abs(a.values[i] - b.values[i]));
    return d;
}

// 1. Two conflicting Dirac-rule quantizations of q^2 p^2, exact normal forms,
//    difference exactly -(1/3) hbar^2, under 1 second.
void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    NCPolynomial q2 = NCPolynomial::q_pow(1, 2, 1);
    NCPolynomial p2 = NCPolynomial::p_pow(1, 2, 1);
    NCPolynomial qp = NCPolynomial::q_pow(1, 1, 1) * NCPolynomial::p_pow(1, 1, 1);
    NCPolynomial gh1 = q2 * p2 - (Scalar(2) * ih()) * qp -
                       NCPolynomial::constant(Scalar::rational(2, 3) * Scalar::hbar(2), 1);
    NCPolynomial gh2 = q2 * p2 - (Scalar(2) * ih()) * qp -
                       NCPolynomial::constant(Scalar::rational(1, 3) * Scalar::hbar(2), 1);

    NCPolynomial via_q3p3 = dirac_quantize_via_bracket(
        parse_observable("q^3", 1), parse_observable("p^3", 1), Scalar::rational(1, 9));
    NCPolynomial via_mixed = dirac_quantize_via_bracket(
        parse_observable("q^2*p", 1), parse_observable("p^2*q", 1), Scalar::rational(1, 3));
    NCPolynomial expected_diff =
        NCPolynomial::constant(Scalar::hbar_term({Rational(-1, 3), 0}, 2), 1);

    double elapsed = seconds_since(t0);
    bool pass = via_q3p3 == gh1 && via_mixed == gh2 &&
                via_q3p3 - via_mixed == expected_diff && elapsed < 1.0;
    char detail[64];
    std::snprintf(detail, sizeof detail, "%.3f s", elapsed);
    report(1, "ordering obstruction: exact conflicting operators", pass, detail);
}

// 2. The three Born-Jordan monomial forms agree exactly for 0 <= r,s <= 6,
//    under 10 seconds.
void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    for (int r = 0; r <= 6 && pass; ++r)
        for (int s = 0; s <= 6 && pass; ++s) {
            PhasePolynomial m =
                PhasePolynomial::q_pow(1, r, 1) * PhasePolynomial::p_pow(1, s, 1);
            NCPolynomial a = quantize_bj(m);
            pass = a == quantize_bj_p_outer(m) && a == quantize_bj_commutator_form(r, s);
        }
    double elapsed = seconds_since(t0);
    char detail[64];
    std::snprintf(detail, sizeof detail, "%.3f s", elapsed);
    report(2, "Born-Jordan triple form equality, r,s <= 6", pass && elapsed < 10.0, detail);
}

// 3. [q^r, p^s] equals both closed-form expansions exactly for 1 <= r,s <= 6.
void criterion_3() {
    bool pass = true;
    for (int r = 1; r <= 6 && pass; ++r)
        for (int s = 1; s <= 6 && pass; ++s) {
            NCPolynomial direct =
                commutator(NCPolynomial::q_pow(1, r, 1), NCPolynomial::p_pow(1, s, 1));
            pass = commutator_sum_form(r, s, SumFormSide::QOuter) == direct &&
                   commutator_sum_form(r, s, SumFormSide::POuter) == direct;
        }
    report(3, "commutator sum forms, r,s <= 6", pass);
}

// 4. Pure powers pass through; qp maps to the symmetrized product.
void criterion_4() {
    bool pass = true;
    for (int r = 0; r <= 6 && pass; ++r)
        pass = quantize_bj(PhasePolynomial::q_pow(1, r, 1)) == NCPolynomial::q_pow(1, r, 1) &&
               quantize_bj(PhasePolynomial::p_pow(1, r, 1)) == NCPolynomial::p_pow(1, r, 1);
    NCPolynomial qp = NCPolynomial::q_pow(1, 1, 1) * NCPolynomial::p_pow(1, 1, 1);
    pass = pass && quantize_bj(parse_observable("q*p", 1)) ==
                       qp - NCPolynomial::constant(Scalar::rational(1, 2) * ih(), 1);
    report(4, "pure-power and qp rules", pass);
}

// 5. Reduced Dirac condition, symbolic: exhaustive T=p^t, V=q^v for t,v <= 4
//    plus 100 randomized split observables of degree <= 5.
void criterion_5() {
    bool pass = true;
    for (int t = 1; t <= 4 && pass; ++t)
        for (int v = 1; v <= 4 && pass; ++v)
            pass = verify_reduced_dirac(split(PhasePolynomial::p_pow(1, t, 1)),
                                        split(PhasePolynomial::q_pow(1, v, 1)))
                       .pass;
    std::mt19937 rng(20260823);
    for (int trial = 0; trial < 100 && pass; ++trial) {
        SplitObservable a{random_polynomial(rng, 5, true, false),
                          random_polynomial(rng, 5, false, true)};
        SplitObservable b{random_polynomial(rng, 5, true, false),
                          random_polynomial(rng, 5, false, true)};
        pass = verify_reduced_dirac(a, b).pass;
    }
    report(5, "reduced Dirac condition, exhaustive + 100 random pairs", pass);
}

// 6. Symmetry: Op_BJ(H) self-adjoint for 100 randomized real H of degree <= 6.
void criterion_6() {
    std::mt19937 rng(77001);
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<long> numer(-5, 5);
    std::uniform_int_distribution<long> denom(1, 4);
    bool pass = true;
    for (int trial = 0; trial < 100 && pass; ++trial) {
        PhasePolynomial h(1);
        for (int t = 0; t < 3; ++t) {
            PhaseMonomial m(1);
            int r = deg(rng);
            int s = deg(rng) % (7 - r > 0 ? 7 - r : 1);
            m.exps[0] = {r, s};
            long nu = numer(rng);
            if (nu == 0) nu = 1;
            h.add_term(m, Scalar::rational(Rational(nu, denom(rng))));
        }
        pass = is_symmetric(quantize_bj(h));
    }
    report(6, "operator symmetry for 100 random real observables", pass);
}

// 7. At N=256 the Born-Jordan kernel annihilates the full lattice zero set;
//    the Weyl kernel stays norm-preserving there.
void criterion_7() {
    num::Grid grid(256, 16.0, 1.0);
    const int c = grid.n / 2;
    num::Wavefunction psi = num::hermite_wavefunction(grid, 0);
    const double n0 = num::norm(psi);
    bool pass = true;
    double worst_bj = 0.0, worst_weyl = 0.0;
    for (int k = 0; k < grid.n && pass; ++k)
        for (int m = 0; m < grid.n && pass; ++m) {
            long prod = static_cast<long>(k - c) * (m - c);
            if (prod == 0 || prod % grid.n != 0) continue;
            num::Wavefunction bj = num::m_hat_apply(k, m, psi, num::CohenKernel::BornJordan);
            num::Wavefunction w = num::m_hat_apply(k, m, psi, num::CohenKernel::Weyl);
            worst_bj = std::max(worst_bj, num::norm(bj));
            worst_weyl = std::max(worst_weyl, std::abs(num::norm(w) - n0));
            pass = num::norm(bj) <= 1e-10 && std::abs(num::norm(w) - n0) <= 1e-12 * n0;
        }
    char detail[96];
    std::snprintf(detail, sizeof detail, "max |BJ| = %.2e, max Weyl norm drift = %.2e", worst_bj,
                  worst_weyl);
    report(7, "kernel zero set at N=256, Weyl control", pass, detail);
}

// 8. Adding a nullspace witness to a Gaussian symbol changes the Born-Jordan
//    output by <= 1e-9 relative at N=256.
void criterion_8() {
    num::Grid grid(256, 16.0, 1.0);
    const int c = grid.n / 2;
    num::Wavefunction psi = num::hermite_wavefunction(grid, 0);
    num::PhaseSamples h = num::gaussian_symbol(grid, 0.3, -0.4, 1.2);
    num::PhaseSamples witness = num::nullspace_witness(
        grid, {{c + 16, c + 16}, {c - 32, c + 8}}, {num::Complex{1.0, 0.5}, {-0.7, 0.2}});
    num::PhaseSamples hg(grid);
    for (size_t i = 0; i < h.values.size(); ++i)
        hg.values[i] = h.values[i] + witness.values[i];
    num::Wavefunction a = num::quantize_apply_fast(h, psi, num::CohenKernel::BornJordan);
    num::Wavefunction b = num::quantize_apply_fast(hg, psi, num::CohenKernel::BornJordan);
    double rel = max_deviation(a, b) / std::max(num::norm(a), 1e-300);
    char detail[64];
    std::snprintf(detail, sizeof detail, "relative change %.2e", rel);
    report(8, "non-injectivity: nullspace witness invisible to Op_BJ", rel <= 1e-9, detail);
}

// 9. Pure V(q) acts by pointwise multiplication, pure T(p) as a Fourier
//    multiplier, within 1e-6 of the independent realizations at N=256.
void criterion_9() {
    num::Grid grid(256, 16.0, 1.0);
    num::Wavefunction psi = num::hermite_wavefunction(grid, 1);
    std::vector<double> v(static_cast<size_t>(grid.n)), t(static_cast<size_t>(grid.n));
    for (int a = 0; a < grid.n; ++a) v[a] = std::exp(-grid.q(a) * grid.q(a) / 2.0);
    for (int b = 0; b < grid.n; ++b) t[b] = std::exp(-grid.p(b) * grid.p(b) / 8.0);

    num::PhaseSamples hv(grid), ht(grid);
    for (int a = 0; a < grid.n; ++a)
        for (int b = 0; b < grid.n; ++b) {
            hv.at(a, b) = v[a];
            ht.at(a, b) = t[b];
        }
    num::Wavefunction got_v = num::quantize_apply_fast(hv, psi, num::CohenKernel::BornJordan);
    num::Wavefunction want_v = num::apply_pointwise_multiplier(v, psi);
    num::Wavefunction got_t = num::quantize_apply_fast(ht, psi, num::CohenKernel::BornJordan);
    num::Wavefunction want_t = num::apply_fourier_multiplier(t, psi);
    double rv = max_deviation(got_v, want_v) / num::norm(want_v);
    double rt = max_deviation(got_t, want_t) / num::norm(want_t);
    char detail[64];
    std::snprintf(detail, sizeof detail, "V: %.2e, T: %.2e", rv, rt);
    report(9, "pure-V and pure-T recovery vs independent oracles", rv <= 1e-6 && rt <= 1e-6,
           detail);
}

// 10. Op(1) = Id within 1e-10.
void criterion_10() {
    num::Grid grid(256, 16.0, 1.0);
    num::Wavefunction psi = random_wavefunction(grid, 42);
    num::Wavefunction out =
        num::quantize_apply_fast(num::constant_symbol(grid, 1.0), psi, num::CohenKernel::BornJordan);
    double rel = max_deviation(out, psi) / num::norm(psi);
    char detail[64];
    std::snprintf(detail, sizeof detail, "relative deviation %.2e", rel);
    report(10, "Op(1) = Id", rel <= 1e-10, detail);
}

// 11. Numeric reduced Dirac residual <= 5e-4 for contained Gaussians at N=256,
//     under 30 seconds.
void criterion_11() {
    auto t0 = std::chrono::steady_clock::now();
    num::Grid grid(256, 16.0, 1.0);
    num::Wavefunction psi = num::hermite_wavefunction(grid, 0);
    std::vector<double> t(static_cast<size_t>(grid.n)), v(static_cast<size_t>(grid.n));
    for (int b = 0; b < grid.n; ++b) t[b] = std::exp(-grid.p(b) * grid.p(b) / 8.0);
    for (int a = 0; a < grid.n; ++a) v[a] = std::exp(-grid.q(a) * grid.q(a) / 2.0);
    num::PhaseSamples bracket(grid);
    for (int a = 0; a < grid.n; ++a) {
        double q = grid.q(a);
        double vp = -q * std::exp(-q * q / 2.0);
        for (int b = 0; b < grid.n; ++b) {
            double p = grid.p(b);
            double tp = -p / 4.0 * std::exp(-p * p / 8.0);
            bracket.at(a, b) = -tp * vp;
        }
    }
    double residual = num::reduced_dirac_numeric(t, v, bracket, psi);
    double elapsed = seconds_since(t0);
    char detail[64];
    std::snprintf(detail, sizeof detail, "residual %.2e, %.1f s", residual, elapsed);
    report(11, "numeric reduced Dirac, Gaussian T and V at N=256",
           residual <= 5e-4 && elapsed < 30.0, detail);
}

// 12. Numeric symmetry residual <= 1e-8 for a real Gaussian symbol; an
//     imaginary symbol must fail the control with residual > 1e-2.
void criterion_12() {
    num::Grid grid(256, 16.0, 1.0);
    num::Wavefunction psi = num::hermite_wavefunction(grid, 0);
    num::Wavefunction phi = num::hermite_wavefunction(grid, 1);
    num::PhaseSamples h = num::gaussian_symbol(grid, 0.5, 0.3, 1.0);
    double real_residual = num::symmetry_check(h, psi, phi, num::CohenKernel::BornJordan);
    num::PhaseSamples ih_samples(grid);
    for (size_t i = 0; i < h.values.size(); ++i)
        ih_samples.values[i] = num::Complex{0.0, 1.0} * h.values[i];
    double imag_residual =
        num::symmetry_residual(ih_samples, psi, phi, num::CohenKernel::BornJordan);
    char detail[64];
    std::snprintf(detail, sizeof detail, "real: %.2e, imaginary control: %.2e", real_residual,
                  imag_residual);
    report(12, "numeric symmetry + imaginary negative control",
           real_residual <= 1e-8 && imag_residual > 1e-2, detail);
}

// 13. Fast path matches the naive quadrature to 1e-10 for N <= 128 and is at
//     least 10x faster at N=256.
void criterion_13() {
    bool match = true;
    double worst = 0.0;
    for (int n : {32, 64, 128}) {
        num::Grid grid(n, 16.0, 1.0);
        std::mt19937 rng(1300 + n);
        std::normal_distribution<double> gauss(0.0, 1.0);
        num::PhaseSamples h(grid);
        for (auto& x : h.values) x = {gauss(rng), gauss(rng)};
        num::Wavefunction psi = random_wavefunction(grid, 1400 + n);
        num::Wavefunction fast = num::quantize_apply_fast(h, psi, num::CohenKernel::BornJordan);
        num::Wavefunction naive = num::quantize_apply(h, psi, num::CohenKernel::BornJordan);
        double rel = max_deviation(fast, naive) / std::max(num::norm(naive), 1e-300);
        worst = std::max(worst, rel);
        match = match && rel <= 1e-10;
    }

    num::Grid big(256, 16.0, 1.0);
    num::PhaseSamples h = num::gaussian_symbol(big, 0.0, 0.0, 1.5);
    num::Wavefunction psi = num::hermite_wavefunction(big, 0);
    // warm up FFT plans before timing
    num::quantize_apply_fast(h, psi, num::CohenKernel::BornJordan);
    auto t0 = std::chrono::steady_clock::now();
    for (int rep = 0; rep < 5; ++rep)
        num::quantize_apply_fast(h, psi, num::CohenKernel::BornJordan);
    double fast_time = seconds_since(t0) / 5.0;
    t0 = std::chrono::steady_clock::now();
    num::quantize_apply(h, psi, num::CohenKernel::BornJordan);
    double naive_time = seconds_since(t0);
    double speedup = naive_time / fast_time;
    char detail[96];
    std::snprintf(detail, sizeof detail, "max rel dev %.2e, speedup %.1fx at N=256", worst,
                  speedup);
    report(13, "fast path fidelity and >= 10x speedup", match && speedup >= 10.0, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    if (failures == 0) {
        std::printf("all 13 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures);
    return 1;
}
