#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bjq/serialize.hpp"
#include "bjq/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

using namespace bjq;
namespace num = bjq::numeric;

std::string render_numeric(const NCPolynomial& p, double hbar, int n) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    os << std::setprecision(12);
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        auto z = c.evaluate(hbar);
        if (!first) os << " + ";
        first = false;
        os << "(" << z.real();
        if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
        os << ")";
        for (int j = 0; j < n; ++j) {
            const auto [r, s] = m.exps[j];
            std::string qj = n == 1 ? "q" : "q" + std::to_string(j + 1);
            std::string pj = n == 1 ? "p" : "p" + std::to_string(j + 1);
            if (r > 0) os << "*" << qj << (r > 1 ? "^" + std::to_string(r) : "");
            if (s > 0) os << "*" << pj << (s > 1 ? "^" + std::to_string(s) : "");
        }
    }
    return os.str();
}

void print_operator(const NCPolynomial& p, const std::string& format,
                    std::optional<double> hbar) {
    if (format == "json") {
        json j = ncpoly_to_json(p);
        j["text"] = p.to_string();
        if (hbar) j["hbar"] = *hbar;
        std::cout << j.dump(2) << "\n";
    } else if (hbar) {
        std::cout << render_numeric(p, *hbar, p.dimension()) << "\n";
    } else {
        std::cout << p.to_string() << "\n";
    }
}

QuantizationRule parse_rule(const std::string& rule) {
    if (rule == "bj" || rule == "born-jordan") return QuantizationRule::BornJordan;
    if (rule == "weyl") return QuantizationRule::Weyl;
    throw CLI::ValidationError("--rule", "must be 'bj' or 'weyl'");
}

num::CohenKernel parse_kernel(const std::string& kernel) {
    if (kernel == "bj" || kernel == "born-jordan") return num::CohenKernel::BornJordan;
    if (kernel == "weyl") return num::CohenKernel::Weyl;
    throw CLI::ValidationError("--kernel", "must be 'bj' or 'weyl'");
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    json j;
    in >> j;
    return j;
}

// Wavefunction input: a JSON file path or a generator "hermite:k".
num::Wavefunction load_wavefunction(const std::string& spec, const num::Grid& grid) {
    if (spec.rfind("hermite:", 0) == 0)
        return num::hermite_wavefunction(grid, std::stoi(spec.substr(8)));
    num::Wavefunction psi = wavefunction_from_json(load_json_file(spec));
    if (!(psi.grid == grid)) throw std::invalid_argument("wavefunction grid mismatch");
    return psi;
}

// Symbol input: a JSON file path, "gauss:q0,p0,width" or "const:value".
num::PhaseSamples load_symbol(const std::string& spec, const num::Grid& grid) {
    if (spec.rfind("gauss:", 0) == 0) {
        double q0, p0, width;
        char c1, c2;
        std::istringstream ss(spec.substr(6));
        if (!(ss >> q0 >> c1 >> p0 >> c2 >> width) || c1 != ',' || c2 != ',')
            throw std::invalid_argument("expected gauss:q0,p0,width");
        return num::gaussian_symbol(grid, q0, p0, width);
    }
    if (spec.rfind("const:", 0) == 0)
        return num::constant_symbol(grid, std::stod(spec.substr(6)));
    num::PhaseSamples h = phase_samples_from_json(load_json_file(spec));
    if (!(h.grid == grid)) throw std::invalid_argument("symbol grid mismatch");
    return h;
}

int cmd_quantize(const std::string& expr, const std::string& rule, int dim,
                 const std::string& format, std::optional<double> hbar) {
    NCPolynomial op = quantize(parse_observable(expr, dim), parse_rule(rule));
    print_operator(op, format, hbar);
    return kExitOk;
}

int cmd_poisson(const std::string& a, const std::string& b, int dim, const std::string& format) {
    PhasePolynomial r = poisson_bracket(parse_observable(a, dim), parse_observable(b, dim));
    if (format == "json") {
        json j = phasepoly_to_json(r);
        j["text"] = r.to_string();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << r.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_commutator(const std::string& a, const std::string& b, const std::string& rule, int dim,
                   const std::string& format, std::optional<double> hbar) {
    QuantizationRule r = parse_rule(rule);
    NCPolynomial op =
        commutator(quantize(parse_observable(a, dim), r), quantize(parse_observable(b, dim), r));
    print_operator(op, format, hbar);
    return kExitOk;
}

int cmd_gvh(const std::string& format, std::optional<double> hbar) {
    GvhReport report = gvh_demo();
    if (format == "json") {
        json j = gvh_report_to_json(report);
        if (hbar) {
            j["hbar"] = *hbar;
            j["difference"]["numeric"] = render_numeric(report.difference, *hbar, 1);
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "Dirac rule on q^2 p^2 via (1/9){q^3, p^3}:   " << report.op_via_q3p3.to_string()
              << "\n";
    std::cout << "Dirac rule on q^2 p^2 via (1/3){q^2 p, p^2 q}: "
              << report.op_via_mixed.to_string() << "\n";
    if (hbar)
        std::cout << "difference: " << render_numeric(report.difference, *hbar, 1) << "\n";
    else
        std::cout << "difference: " << report.difference.to_string() << "\n";
    return kExitOk;
}

int cmd_verify(int max_degree, bool inject_defect, const std::string& format) {
    auto results = run_verification(max_degree, inject_defect);
    if (format == "json") {
        json j = json::array();
        for (const auto& r : results)
            j.push_back({{"identity", r.name},
                         {"coverage", r.coverage},
                         {"pass", r.pass},
                         {"witness", r.witness}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(42) << r.name
                      << "  " << r.coverage << "\n";
            if (!r.pass) std::cout << "      witness: " << r.witness << "\n";
        }
    }
    return all_passed(results) ? kExitOk : kExitVerifyFail;
}

int cmd_numeric_apply(const std::string& symbol_spec, const std::string& psi_spec,
                      const std::string& kernel, int n, double length, double hbar,
                      const std::string& out_path, bool check_naive) {
    num::Grid grid(n, length, hbar);
    num::PhaseSamples h = load_symbol(symbol_spec, grid);
    num::Wavefunction psi = load_wavefunction(psi_spec, grid);
    num::CohenKernel k = parse_kernel(kernel);
    num::Wavefunction result = num::quantize_apply_fast(h, psi, k);
    if (check_naive) {
        num::Wavefunction slow = num::quantize_apply(h, psi, k);
        double dev = 0.0;
        for (size_t a = 0; a < result.values.size(); ++a)
            dev = std::max(dev, std::abs(result.values[a] - slow.values[a]));
        double scale = std::max(num::norm(slow), 1e-300);
        std::cout << "max deviation from naive quadrature: " << dev / scale << " (relative)\n";
    }
    std::ofstream out(out_path);
    if (!out) throw std::ios_base::failure("cannot open " + out_path);
    out << wavefunction_to_json(result).dump() << "\n";
    std::cout << "wrote " << out_path << " (output norm " << num::norm(result) << ")\n";
    return kExitOk;
}

int cmd_numeric_check(int n, double length, double hbar) {
    num::Grid grid(n, length, hbar);
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok, double value) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << std::left << std::setw(40) << name
                  << "  residual " << value << "\n";
        all_ok = all_ok && ok;
    };

    num::Wavefunction psi = num::hermite_wavefunction(grid, 0);
    num::Wavefunction phi = num::hermite_wavefunction(grid, 1);

    // Op(1) = Id
    num::PhaseSamples one = num::constant_symbol(grid, 1.0);
    num::Wavefunction id = num::quantize_apply_fast(one, psi, num::CohenKernel::BornJordan);
    double dev = 0.0;
    for (size_t a = 0; a < id.values.size(); ++a)
        dev = std::max(dev, std::abs(id.values[a] - psi.values[a]));
    report("Op(1) = Id", dev <= 1e-10, dev);

    // kernel zero on the non-injectivity lattice
    int c = n / 2;
    int step = 16;
    while ((static_cast<long>(step) * step) % n != 0) step *= 2;
    num::Wavefunction zero = num::m_hat_apply(c + step, c + step, psi, num::CohenKernel::BornJordan);
    report("Born-Jordan kernel zero", num::norm(zero) <= 1e-10, num::norm(zero));

    // symmetry residual for a real Gaussian symbol
    num::PhaseSamples g = num::gaussian_symbol(grid, 0.0, 0.0, length / 10.0);
    double sym = num::symmetry_check(g, psi, phi, num::CohenKernel::BornJordan);
    report("symmetry residual (real Gaussian)", sym <= 1e-8, sym);

    // fast path vs naive quadrature
    num::Wavefunction fast = num::quantize_apply_fast(g, psi, num::CohenKernel::BornJordan);
    num::Wavefunction slow = num::quantize_apply(g, psi, num::CohenKernel::BornJordan);
    dev = 0.0;
    for (size_t a = 0; a < fast.values.size(); ++a)
        dev = std::max(dev, std::abs(fast.values[a] - slow.values[a]));
    dev /= std::max(num::norm(slow), 1e-300);
    report("fast path vs naive quadrature", dev <= 1e-10, dev);

    return all_ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Born-Jordan quantization engine: exact operator algebra and "
                 "Cohen-kernel phase-space quadrature"};
    app.require_subcommand(1);

    std::string expr, expr_b, rule = "bj", format = "text", kernel = "bj";
    std::string symbol_spec, psi_spec, out_path = "out.json";
    int dim = 1, max_degree = 6, grid_n = 256;
    double length = 16.0;
    std::optional<double> hbar_opt;
    double grid_hbar = 1.0;
    bool inject_defect = false, check_naive = false;

    auto* quantize_cmd = app.add_subcommand("quantize", "quantize a classical observable");
    quantize_cmd->add_option("expr", expr, "observable expression")->required();
    quantize_cmd->add_option("--rule", rule, "bj or weyl");
    quantize_cmd->add_option("--dim", dim, "number of degrees of freedom");
    quantize_cmd->add_option("--format", format, "text or json");
    quantize_cmd->add_option("--hbar", hbar_opt, "substitute a numeric hbar");

    auto* poisson_cmd = app.add_subcommand("poisson", "Poisson bracket of two observables");
    poisson_cmd->add_option("a", expr, "first observable")->required();
    poisson_cmd->add_option("b", expr_b, "second observable")->required();
    poisson_cmd->add_option("--dim", dim, "number of degrees of freedom");
    poisson_cmd->add_option("--format", format, "text or json");

    auto* comm_cmd = app.add_subcommand("commutator", "commutator of two quantized observables");
    comm_cmd->add_option("a", expr, "first observable")->required();
    comm_cmd->add_option("b", expr_b, "second observable")->required();
    comm_cmd->add_option("--rule", rule, "bj or weyl");
    comm_cmd->add_option("--dim", dim, "number of degrees of freedom");
    comm_cmd->add_option("--format", format, "text or json");
    comm_cmd->add_option("--hbar", hbar_opt, "substitute a numeric hbar");

    auto* gvh_cmd = app.add_subcommand("gvh", "the two conflicting Dirac-rule operators for q^2 p^2");
    gvh_cmd->add_option("--format", format, "text or json");
    gvh_cmd->add_option("--hbar", hbar_opt, "substitute a numeric hbar");

    auto* verify_cmd = app.add_subcommand("verify", "run the exact identity suite");
    verify_cmd->add_option("--max-degree", max_degree, "largest exponent covered")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", format, "text or json");
    verify_cmd->add_flag("--inject-defect", inject_defect, "negative-control fixture")
        ->group("");  // hidden

    auto* apply_cmd = app.add_subcommand("numeric-apply", "apply a quantized sampled symbol to a wavefunction");
    apply_cmd->add_option("--symbol", symbol_spec, "JSON file, gauss:q0,p0,width or const:value")
        ->required();
    apply_cmd->add_option("--psi", psi_spec, "JSON file or hermite:k")->required();
    apply_cmd->add_option("--kernel", kernel, "bj or weyl");
    apply_cmd->add_option("--n", grid_n, "grid size (power of two)");
    apply_cmd->add_option("--length", length, "spatial period");
    apply_cmd->add_option("--hbar", grid_hbar, "numeric hbar");
    apply_cmd->add_option("--out", out_path, "output wavefunction JSON");
    apply_cmd->add_flag("--check", check_naive, "cross-validate against the naive quadrature");

    auto* check_cmd = app.add_subcommand("numeric-check", "run the built-in numeric checks");
    check_cmd->add_option("--n", grid_n, "grid size (power of two)");
    check_cmd->add_option("--length", length, "spatial period");
    check_cmd->add_option("--hbar", grid_hbar, "numeric hbar");

    try {
        app.parse(argc, argv);
        if (quantize_cmd->parsed()) return cmd_quantize(expr, rule, dim, format, hbar_opt);
        if (poisson_cmd->parsed()) return cmd_poisson(expr, expr_b, dim, format);
        if (comm_cmd->parsed()) return cmd_commutator(expr, expr_b, rule, dim, format, hbar_opt);
        if (gvh_cmd->parsed()) return cmd_gvh(format, hbar_opt);
        if (verify_cmd->parsed()) return cmd_verify(max_degree, inject_defect, format);
        if (apply_cmd->parsed())
            return cmd_numeric_apply(symbol_spec, psi_spec, kernel, grid_n, length, grid_hbar,
                                     out_path, check_naive);
        if (check_cmd->parsed()) return cmd_numeric_check(grid_n, length, grid_hbar);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const bjq::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
