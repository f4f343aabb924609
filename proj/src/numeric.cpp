#include "bjq/numeric.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>

namespace bjq::numeric {

namespace {

// In-place unnormalized DFT; sign -1 forward, +1 backward. Plans are cached
// per (size, sign) and reused through an aligned scratch buffer.
void fft(std::vector<Complex>& x, int sign) {
    struct Slot {
        fftw_plan plan;
        fftw_complex* buf;
    };
    static std::map<std::pair<int, int>, Slot> cache;
    const int n = static_cast<int>(x.size());
    auto it = cache.find({n, sign});
    if (it == cache.end()) {
        fftw_complex* buf = fftw_alloc_complex(static_cast<size_t>(n));
        fftw_plan plan = fftw_plan_dft_1d(n, buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                          FFTW_ESTIMATE);
        it = cache.emplace(std::make_pair(n, sign), Slot{plan, buf}).first;
    }
    std::memcpy(it->second.buf, x.data(), sizeof(fftw_complex) * x.size());
    fftw_execute(it->second.plan);
    std::memcpy(x.data(), it->second.buf, sizeof(fftw_complex) * x.size());
}

// Y[k] = sum_a x[a] e^{sign 2 pi i (k - N/2)(a - N/2) / N}, unnormalized.
// The centering shifts reduce to (-1)^a pre- and (-1)^k post-twiddles since
// N is a multiple of 4.
void centered_transform(std::vector<Complex>& x, int sign) {
    const int n = static_cast<int>(x.size());
    for (int a = 1; a < n; a += 2) x[a] = -x[a];
    fft(x, sign);
    for (int k = 1; k < n; k += 2) x[k] = -x[k];
}

// Exact roots of unity w[r] = e^{i pi r / N}, r = 0..2N-1, so both the DFT
// phases (even r) and the half-angle BCH phases are table lookups.
const std::vector<Complex>& half_roots(int n) {
    static std::map<int, std::vector<Complex>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<Complex> w(static_cast<size_t>(2 * n));
        for (int r = 0; r < 2 * n; ++r) w[r] = std::polar(1.0, M_PI * r / n);
        it = cache.emplace(n, std::move(w)).first;
    }
    return it->second;
}

Complex root_phase(const std::vector<Complex>& w, long half_units) {
    long mod = static_cast<long>(w.size());
    long r = half_units % mod;
    if (r < 0) r += mod;
    return w[static_cast<size_t>(r)];
}

void check_index(const Grid& grid, int k, int m) {
    if (k < 0 || k >= grid.n || m < 0 || m >= grid.n)
        throw std::out_of_range("lattice index out of range");
}

void check_same_grid(const Grid& a, const Grid& b) {
    if (!(a == b)) throw std::invalid_argument("grid mismatch");
}

}  // namespace

Grid::Grid(int n_, double length_, double hbar_) : n(n_), length(length_), hbar(hbar_) {
    if (n < 8 || (n & (n - 1)) != 0) throw std::invalid_argument("N must be a power of two >= 8");
    if (!(length > 0.0)) throw std::invalid_argument("grid length must be positive");
    if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
}

double sinc(double t) {
    if (std::abs(t) < 1e-4) {
        double t2 = t * t;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    return std::sin(t) / t;
}

double kernel_theta(const Grid& grid, int k, int m, CohenKernel kernel) {
    check_index(grid, k, m);
    if (kernel == CohenKernel::Weyl) return 1.0;
    const int c = grid.n / 2;
    const long prod = static_cast<long>(k - c) * (m - c);
    if (prod == 0) return 1.0;
    if (prod % grid.n == 0) return 0.0;  // sinc at a nonzero multiple of pi
    return sinc(M_PI * static_cast<double>(prod) / grid.n);
}

Wavefunction heisenberg_weyl_apply(int k, int m, const Wavefunction& psi) {
    const Grid& grid = psi.grid;
    check_index(grid, k, m);
    const int n = grid.n;
    const int c = n / 2;
    const int kk = k - c;
    const int mm = m - c;
    const auto& w = half_roots(n);
    // e^{(i/2 hbar) q0 p0} with q0 p0 / hbar = 2 pi kk mm / N. This sign is
    // forced: with the translation psi(q + p0) and modulation e^{(i/hbar) q0 q}
    // it is the unique choice making HW(q0,p0)* = HW(-q0,-p0), hence Op(H)
    // symmetric for real H.
    Complex bch = root_phase(w, static_cast<long>(kk) * mm);
    Wavefunction out(grid);
    for (int a = 0; a < n; ++a) {
        Complex modulation = root_phase(w, 2L * kk * (a - c));
        int src = (a + mm) % n;
        if (src < 0) src += n;
        out.values[a] = bch * modulation * psi.values[src];
    }
    return out;
}

Wavefunction m_hat_apply(int k, int m, const Wavefunction& psi, CohenKernel kernel) {
    const double theta = kernel_theta(psi.grid, k, m, kernel);
    Wavefunction out = heisenberg_weyl_apply(k, m, psi);
    for (auto& v : out.values) v *= theta;
    return out;
}

SymbolSpectrum symbol_fourier(const PhaseSamples& h) {
    const int n = h.grid.n;
    SymbolSpectrum spec(h.grid);
    spec.values = h.values;
    std::vector<Complex> line(static_cast<size_t>(n));
    // rows: p -> p0 index m
    for (int a = 0; a < n; ++a) {
        std::copy_n(spec.values.begin() + static_cast<size_t>(a) * n, n, line.begin());
        centered_transform(line, -1);
        std::copy_n(line.begin(), n, spec.values.begin() + static_cast<size_t>(a) * n);
    }
    // columns: q -> q0 index k
    for (int m = 0; m < n; ++m) {
        for (int a = 0; a < n; ++a) line[a] = spec.values[static_cast<size_t>(a) * n + m];
        centered_transform(line, -1);
        for (int k = 0; k < n; ++k) spec.values[static_cast<size_t>(k) * n + m] = line[k];
    }
    const double scale = 1.0 / n;  // dq dp / (2 pi hbar) per sample
    for (auto& v : spec.values) v *= scale;
    return spec;
}

PhaseSamples symbol_fourier_inverse(const SymbolSpectrum& spectrum) {
    const int n = spectrum.grid.n;
    PhaseSamples h(spectrum.grid);
    h.values = spectrum.values;
    std::vector<Complex> line(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        std::copy_n(h.values.begin() + static_cast<size_t>(k) * n, n, line.begin());
        centered_transform(line, +1);
        std::copy_n(line.begin(), n, h.values.begin() + static_cast<size_t>(k) * n);
    }
    for (int m = 0; m < n; ++m) {
        for (int k = 0; k < n; ++k) line[k] = h.values[static_cast<size_t>(k) * n + m];
        centered_transform(line, +1);
        for (int a = 0; a < n; ++a) h.values[static_cast<size_t>(a) * n + m] = line[a];
    }
    const double scale = 1.0 / n;
    for (auto& v : h.values) v *= scale;
    return h;
}

Wavefunction quantize_apply(const PhaseSamples& h, const Wavefunction& psi, CohenKernel kernel) {
    check_same_grid(h.grid, psi.grid);
    const Grid& grid = h.grid;
    const int n = grid.n;
    const int c = n / 2;
    const auto& w = half_roots(n);
    SymbolSpectrum spec = symbol_fourier(h);
    Wavefunction out(grid);
    std::vector<Complex> shifted(static_cast<size_t>(n));
    for (int m = 0; m < n; ++m) {
        const int mm = m - c;
        for (int a = 0; a < n; ++a) {
            int src = (a + mm) % n;
            if (src < 0) src += n;
            shifted[a] = psi.values[src];
        }
        for (int k = 0; k < n; ++k) {
            const int kk = k - c;
            const double theta = kernel_theta(grid, k, m, kernel);
            if (theta == 0.0) continue;
            Complex coeff = spec.at(k, m) * theta * root_phase(w, static_cast<long>(kk) * mm) /
                            static_cast<double>(n);
            if (coeff == Complex{0.0, 0.0}) continue;
            for (int a = 0; a < n; ++a)
                out.values[a] += coeff * root_phase(w, 2L * kk * (a - c)) * shifted[a];
        }
    }
    return out;
}

Wavefunction quantize_apply_fast(const PhaseSamples& h, const Wavefunction& psi,
                                 CohenKernel kernel) {
    check_same_grid(h.grid, psi.grid);
    const Grid& grid = h.grid;
    const int n = grid.n;
    const int c = n / 2;
    const auto& w = half_roots(n);
    SymbolSpectrum spec = symbol_fourier(h);
    Wavefunction out(grid);
    std::vector<Complex> row(static_cast<size_t>(n));
    for (int m = 0; m < n; ++m) {
        const int mm = m - c;
        for (int k = 0; k < n; ++k) {
            const int kk = k - c;
            row[k] = spec.at(k, m) * kernel_theta(grid, k, m, kernel) *
                     root_phase(w, static_cast<long>(kk) * mm);
        }
        // g[a] = sum_k row[k] e^{2 pi i (k-c)(a-c)/N}, all output points at once
        centered_transform(row, +1);
        for (int a = 0; a < n; ++a) {
            int src = (a + mm) % n;
            if (src < 0) src += n;
            out.values[a] += row[a] * psi.values[src] / static_cast<double>(n);
        }
    }
    return out;
}

PhaseSamples nullspace_witness(const Grid& grid, const std::vector<std::pair<int, int>>& points,
                               const std::vector<Complex>& coeffs) {
    if (points.size() != coeffs.size())
        throw std::invalid_argument("points and coefficients differ in length");
    const int n = grid.n;
    const int c = n / 2;
    for (const auto& [k, m] : points) {
        check_index(grid, k, m);
        const long prod = static_cast<long>(k - c) * (m - c);
        if (prod == 0 || prod % n != 0)
            throw std::invalid_argument("lattice point is not on the sinc zero set");
    }
    const auto& w = half_roots(n);
    PhaseSamples g(grid);
    for (size_t j = 0; j < points.size(); ++j) {
        const long kk = points[j].first - c;
        const long mm = points[j].second - c;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                g.at(a, b) += coeffs[j] * root_phase(w, 2L * (kk * (a - c) + mm * (b - c)));
    }
    return g;
}

Complex inner_product(const Wavefunction& f, const Wavefunction& g) {
    check_same_grid(f.grid, g.grid);
    Complex acc{0.0, 0.0};
    for (size_t a = 0; a < f.values.size(); ++a) acc += std::conj(f.values[a]) * g.values[a];
    return acc * f.grid.dq();
}

double norm(const Wavefunction& f) { return std::sqrt(std::abs(inner_product(f, f))); }

double symmetry_residual(const PhaseSamples& h, const Wavefunction& psi, const Wavefunction& phi,
                         CohenKernel kernel) {
    check_same_grid(h.grid, psi.grid);
    check_same_grid(h.grid, phi.grid);
    Wavefunction h_psi = quantize_apply_fast(h, psi, kernel);
    Wavefunction h_phi = quantize_apply_fast(h, phi, kernel);
    Complex lhs = inner_product(h_psi, phi);
    Complex rhs = inner_product(psi, h_phi);
    return std::abs(lhs - rhs) / (norm(psi) * norm(phi));
}

double symmetry_check(const PhaseSamples& h, const Wavefunction& psi, const Wavefunction& phi,
                      CohenKernel kernel) {
    for (const auto& v : h.values)
        if (std::abs(v.imag()) > 1e-12)
            throw std::invalid_argument("symmetry check requires a real symbol");
    return symmetry_residual(h, psi, phi, kernel);
}

Wavefunction apply_fourier_multiplier(const std::vector<double>& t_samples,
                                      const Wavefunction& psi) {
    const int n = psi.grid.n;
    if (static_cast<int>(t_samples.size()) != n)
        throw std::invalid_argument("multiplier sample count mismatch");
    std::vector<Complex> spectrum = psi.values;
    centered_transform(spectrum, -1);
    for (int l = 0; l < n; ++l) spectrum[l] *= t_samples[l];
    centered_transform(spectrum, +1);
    Wavefunction out(psi.grid);
    for (int a = 0; a < n; ++a) out.values[a] = spectrum[a] / static_cast<double>(n);
    return out;
}

Wavefunction apply_pointwise_multiplier(const std::vector<double>& v_samples,
                                        const Wavefunction& psi) {
    const int n = psi.grid.n;
    if (static_cast<int>(v_samples.size()) != n)
        throw std::invalid_argument("multiplier sample count mismatch");
    Wavefunction out(psi.grid);
    for (int a = 0; a < n; ++a) out.values[a] = v_samples[a] * psi.values[a];
    return out;
}

double reduced_dirac_numeric(const std::vector<double>& t_samples,
                             const std::vector<double>& v_samples,
                             const PhaseSamples& bracket_samples, const Wavefunction& psi) {
    check_same_grid(bracket_samples.grid, psi.grid);
    Wavefunction tv = apply_fourier_multiplier(t_samples, apply_pointwise_multiplier(v_samples, psi));
    Wavefunction vt = apply_pointwise_multiplier(v_samples, apply_fourier_multiplier(t_samples, psi));
    Wavefunction lhs(psi.grid);
    for (size_t a = 0; a < lhs.values.size(); ++a) lhs.values[a] = tv.values[a] - vt.values[a];

    Wavefunction rhs = quantize_apply_fast(bracket_samples, psi, CohenKernel::BornJordan);
    const Complex i_hbar{0.0, psi.grid.hbar};
    for (auto& v : rhs.values) v *= i_hbar;

    Wavefunction diff(psi.grid);
    for (size_t a = 0; a < diff.values.size(); ++a) diff.values[a] = lhs.values[a] - rhs.values[a];
    const double den = std::max(norm(lhs), norm(rhs));
    if (den <= 1e-13 * norm(psi)) return 0.0;  // both sides vanish
    return norm(diff) / den;
}

Wavefunction hermite_wavefunction(const Grid& grid, int k) {
    if (k < 0) throw std::invalid_argument("Hermite order must be non-negative");
    Wavefunction out(grid);
    const double s = std::sqrt(grid.hbar);
    for (int a = 0; a < grid.n; ++a) {
        const double u = grid.q(a) / s;
        // orthonormal recurrence phi_k = sqrt(2/k) u phi_{k-1} - sqrt((k-1)/k) phi_{k-2}
        double prev2 = 0.0;
        double prev1 = std::pow(M_PI, -0.25) * std::exp(-0.5 * u * u);
        for (int j = 1; j <= k; ++j) {
            double cur = std::sqrt(2.0 / j) * u * prev1 - std::sqrt((j - 1.0) / j) * prev2;
            prev2 = prev1;
            prev1 = cur;
        }
        out.values[a] = prev1 / std::sqrt(s);
    }
    return out;
}

PhaseSamples gaussian_symbol(const Grid& grid, double q0, double p0, double width) {
    if (!(width > 0.0)) throw std::invalid_argument("width must be positive");
    PhaseSamples h(grid);
    const double inv = 1.0 / (2.0 * width * width);
    for (int a = 0; a < grid.n; ++a) {
        const double dq = grid.q(a) - q0;
        for (int b = 0; b < grid.n; ++b) {
            const double dp = grid.p(b) - p0;
            h.at(a, b) = std::exp(-(dq * dq + dp * dp) * inv);
        }
    }
    return h;
}

PhaseSamples constant_symbol(const Grid& grid, Complex value) {
    PhaseSamples h(grid);
    for (auto& v : h.values) v = value;
    return h;
}

}  // namespace bjq::numeric
