#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bjq/scalar.hpp"

namespace bjq {

/// Commutative monomial prod_j q_j^{alpha_j} p_j^{beta_j}.
struct PhaseMonomial {
    std::vector<std::pair<int, int>> exps;

    explicit PhaseMonomial(int n = 1) : exps(static_cast<size_t>(n), {0, 0}) {}

    int dimension() const { return static_cast<int>(exps.size()); }
    int degree() const {
        int d = 0;
        for (const auto& [a, b] : exps) d += a + b;
        return d;
    }
    bool is_constant() const { return degree() == 0; }
    bool depends_on_q() const {
        for (const auto& [a, b] : exps)
            if (a > 0) return true;
        return false;
    }
    bool depends_on_p() const {
        for (const auto& [a, b] : exps)
            if (b > 0) return true;
        return false;
    }

    friend bool operator<(const PhaseMonomial& a, const PhaseMonomial& b) { return a.exps < b.exps; }
    friend bool operator==(const PhaseMonomial& a, const PhaseMonomial& b) { return a.exps == b.exps; }
};

/// Classical observable: commutative polynomial in q_1..q_n, p_1..p_n over
/// the exact scalar ring, canonical form with zero terms pruned.
class PhasePolynomial {
public:
    explicit PhasePolynomial(int n = 1) : n_(n) {
        if (n < 1) throw std::invalid_argument("dimension must be positive");
    }

    int dimension() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<PhaseMonomial, Scalar>& terms() const { return terms_; }

    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    void add_term(const PhaseMonomial& m, const Scalar& c);

    static PhasePolynomial constant(const Scalar& c, int n);
    static PhasePolynomial q_pow(int j, int r, int n);
    static PhasePolynomial p_pow(int j, int s, int n);

    friend PhasePolynomial operator+(const PhasePolynomial& a, const PhasePolynomial& b);
    friend PhasePolynomial operator-(const PhasePolynomial& a, const PhasePolynomial& b);
    friend PhasePolynomial operator-(const PhasePolynomial& a);
    friend PhasePolynomial operator*(const Scalar& c, const PhasePolynomial& a);
    friend PhasePolynomial operator*(const PhasePolynomial& a, const PhasePolynomial& b);
    friend bool operator==(const PhasePolynomial& a, const PhasePolynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    int n_;
    std::map<PhaseMonomial, Scalar> terms_;
};

enum class PhaseVar { Q, P };

/// Formal partial derivative with respect to q_j or p_j (1-based index).
PhasePolynomial partial_derivative(const PhasePolynomial& h, PhaseVar var, int index);

/// {A,B} = sum_j dA/dq_j dB/dp_j - dA/dp_j dB/dq_j.
PhasePolynomial poisson_bracket(const PhasePolynomial& a, const PhasePolynomial& b);

/// Observable of the split form T(p) + V(q).
struct SplitObservable {
    PhasePolynomial kinetic;    // depends only on p variables
    PhasePolynomial potential;  // depends only on q variables (holds constants)

    PhasePolynomial total() const { return kinetic + potential; }
};

/// Splits H into T(p) + V(q); throws std::invalid_argument naming the
/// offending monomial if a mixed term is present. Constants go to V.
SplitObservable split(const PhasePolynomial& h);

/// Parse failure with a 0-based character position into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

/// Parses the observable grammar: rational literals (with optional /den),
/// `i`, `h`, variables q/p or q1..qn/p1..pn, operators + - * ^, parentheses,
/// unary minus. `^` binds tighter than `*` binds tighter than +/-.
PhasePolynomial parse_observable(const std::string& text, int n);

}  // namespace bjq
