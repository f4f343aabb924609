#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bjq::numeric {

using Complex = std::complex<double>;

/// Periodic 1-D position grid of N points q_a = (a - N/2) dq with dq = L/N,
/// momentum lattice p_b = (b - N/2) dp with dp = 2 pi hbar / L, so that
/// dq * dp * N = 2 pi hbar.
struct Grid {
    int n;          // number of points, power of two, >= 8
    double length;  // spatial period L
    double hbar;

    Grid(int n_, double length_, double hbar_);

    double dq() const { return length / n; }
    double dp() const { return 2.0 * M_PI * hbar / length; }
    double q(int a) const { return (a - n / 2) * dq(); }
    double p(int b) const { return (b - n / 2) * dp(); }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.n == b.n && a.length == b.length && a.hbar == b.hbar;
    }
};

/// Complex samples of psi at the grid points, periodic extension implied.
struct Wavefunction {
    Grid grid;
    std::vector<Complex> values;  // size N

    explicit Wavefunction(const Grid& g) : grid(g), values(static_cast<size_t>(g.n)) {}
};

/// N x N samples H(q_a, p_b), row-major with row = q index.
struct PhaseSamples {
    Grid grid;
    std::vector<Complex> values;  // size N*N

    explicit PhaseSamples(const Grid& g)
        : grid(g), values(static_cast<size_t>(g.n) * static_cast<size_t>(g.n)) {}

    Complex& at(int a, int b) { return values[static_cast<size_t>(a) * grid.n + b]; }
    Complex at(int a, int b) const { return values[static_cast<size_t>(a) * grid.n + b]; }
};

/// Discrete hbar-Fourier transform of a sampled observable, indexed by
/// q0 = (k - N/2) dp and p0 = (m - N/2) dq. Note the cross pairing: q0 runs
/// over the reciprocal lattice of the position grid, p0 over position-step
/// multiples, so p0-translations are exact circular shifts.
struct SymbolSpectrum {
    Grid grid;
    std::vector<Complex> values;  // size N*N, [k*N + m]

    explicit SymbolSpectrum(const Grid& g)
        : grid(g), values(static_cast<size_t>(g.n) * static_cast<size_t>(g.n)) {}

    Complex& at(int k, int m) { return values[static_cast<size_t>(k) * grid.n + m]; }
    Complex at(int k, int m) const { return values[static_cast<size_t>(k) * grid.n + m]; }
};

enum class CohenKernel { BornJordan, Weyl };

/// sinc t = sin t / t, with a series fallback near zero.
double sinc(double t);

/// Kernel value Theta(q0, p0) at lattice indices (k, m). For Born-Jordan the
/// argument is pi (k-N/2)(m-N/2) / N; the value is exactly zero when
/// (k-N/2)(m-N/2) is a nonzero multiple of N.
double kernel_theta(const Grid& grid, int k, int m, CohenKernel kernel);

/// e^{(i/hbar)(q0 q^ + p0 p^)} psi realized as
/// e^{(i/2 hbar) q0 p0} e^{(i/hbar) q0 q} psi(q + p0); the translation is a
/// circular shift by m - N/2 points. Exactly norm-preserving, and
/// HW(q0,p0)* = HW(-q0,-p0), so real symbols quantize to symmetric operators.
Wavefunction heisenberg_weyl_apply(int k, int m, const Wavefunction& psi);

/// Theta(q0,p0) * heisenberg_weyl_apply(k, m, psi).
Wavefunction m_hat_apply(int k, int m, const Wavefunction& psi, CohenKernel kernel);

SymbolSpectrum symbol_fourier(const PhaseSamples& h);
PhaseSamples symbol_fourier_inverse(const SymbolSpectrum& spectrum);

/// Cohen-kernel quadrature
///   H^ psi = (1/N) sum_{k,m} spectrum[k,m] Theta(q0,p0) (HW(q0,p0) psi),
/// naive O(N^3) reference implementation.
Wavefunction quantize_apply(const PhaseSamples& h, const Wavefunction& psi, CohenKernel kernel);

/// Same result as quantize_apply to ~1e-14; O(N^2 log N): per p0-shift the
/// q0-sum is one inverse DFT of a weighted spectrum row.
Wavefunction quantize_apply_fast(const PhaseSamples& h, const Wavefunction& psi, CohenKernel kernel);

/// G(q,p) = sum_j c_j e^{(i/hbar)(q0_j q + p0_j p)} over lattice points on the
/// sinc zero set; Op_BJ(G) vanishes. Throws if a point violates
/// (k - N/2)(m - N/2) = nonzero multiple of N.
PhaseSamples nullspace_witness(const Grid& grid, const std::vector<std::pair<int, int>>& points,
                               const std::vector<Complex>& coeffs);

/// Discrete pairing sum conj(f) g dq and the induced norm.
Complex inner_product(const Wavefunction& f, const Wavefunction& g);
double norm(const Wavefunction& f);

/// |<H^ psi, phi> - <psi, H^ phi>| / (|psi| |phi|), no realness requirement
/// (used as the negative control for complex symbols).
double symmetry_residual(const PhaseSamples& h, const Wavefunction& psi, const Wavefunction& phi,
                         CohenKernel kernel);

/// As symmetry_residual but rejects symbols with a nonzero imaginary part.
double symmetry_check(const PhaseSamples& h, const Wavefunction& psi, const Wavefunction& phi,
                      CohenKernel kernel);

/// Fourier multiplier psi -> IDFT(T . DFT(psi)) with T sampled on the
/// momentum lattice; the discrete realization of Op(T(p)).
Wavefunction apply_fourier_multiplier(const std::vector<double>& t_samples,
                                      const Wavefunction& psi);

/// Pointwise multiplier psi -> V(q_a) psi(q_a); the realization of Op(V(q)).
Wavefunction apply_pointwise_multiplier(const std::vector<double>& v_samples,
                                        const Wavefunction& psi);

/// Relative residual of [Op(T), Op(V)] psi vs i hbar Op_BJ({T,V}) psi, where
/// bracket_samples holds the caller-supplied analytic {T,V}(q,p) = -T'(p) V'(q).
double reduced_dirac_numeric(const std::vector<double>& t_samples,
                             const std::vector<double>& v_samples,
                             const PhaseSamples& bracket_samples, const Wavefunction& psi);

/// k-th Hermite function on the grid (harmonic-oscillator eigenfunction,
/// unit L^2 norm in the continuum normalization).
Wavefunction hermite_wavefunction(const Grid& grid, int k);

/// H(q,p) = exp(-((q-q0)^2 + (p-p0)^2) / (2 width^2)).
PhaseSamples gaussian_symbol(const Grid& grid, double q0, double p0, double width);

PhaseSamples constant_symbol(const Grid& grid, Complex value);

}  // namespace bjq::numeric
