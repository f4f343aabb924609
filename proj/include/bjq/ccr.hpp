#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bjq/scalar.hpp"

namespace bjq {

/// Normal-ordered monomial in q^_1..q^_n, p^_1..p^_n: for each index j the
/// exponent pair (r_j, s_j) meaning q_j^{r_j} p_j^{s_j}. Generators with
/// distinct indices commute; within an index all q factors sit left of all
/// p factors.
struct NCMonomial {
    std::vector<std::pair<int, int>> exps;  // size = dimension n

    explicit NCMonomial(int n = 1) : exps(static_cast<size_t>(n), {0, 0}) {}

    int dimension() const { return static_cast<int>(exps.size()); }
    int degree() const {
        int d = 0;
        for (const auto& [r, s] : exps) d += r + s;
        return d;
    }
    bool is_identity() const { return degree() == 0; }

    friend bool operator<(const NCMonomial& a, const NCMonomial& b) { return a.exps < b.exps; }
    friend bool operator==(const NCMonomial& a, const NCMonomial& b) { return a.exps == b.exps; }
};

/// One generator symbol of the free word: position (kind q) or momentum
/// (kind p) with a 1-based index.
struct NCGenerator {
    enum class Kind { Q, P };
    Kind kind;
    int index;  // 1..n
};

/// Free (unordered) word of generators, the input form for normal ordering.
using NCWord = std::vector<NCGenerator>;

/// Noncommutative polynomial in the CCR algebra [q^_j, p^_k] = i hbar delta_jk,
/// kept in canonical normal form: map from normal-ordered monomial to exact
/// scalar, zero terms pruned. Equality of term maps is equality of operators.
class NCPolynomial {
public:
    explicit NCPolynomial(int n = 1) : n_(n) {
        if (n < 1) throw std::invalid_argument("dimension must be positive");
    }

    int dimension() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<NCMonomial, Scalar>& terms() const { return terms_; }

    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    void add_term(const NCMonomial& m, const Scalar& c);

    static NCPolynomial zero(int n) { return NCPolynomial(n); }
    static NCPolynomial constant(const Scalar& c, int n);
    static NCPolynomial monomial(const NCMonomial& m, const Scalar& c);
    /// q^_j^r as a polynomial of dimension n (1-based j).
    static NCPolynomial q_pow(int j, int r, int n);
    static NCPolynomial p_pow(int j, int s, int n);

    friend NCPolynomial operator+(const NCPolynomial& a, const NCPolynomial& b);
    friend NCPolynomial operator-(const NCPolynomial& a, const NCPolynomial& b);
    friend NCPolynomial operator-(const NCPolynomial& a);
    friend NCPolynomial operator*(const Scalar& c, const NCPolynomial& a);
    friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
    friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// Exact division of every coefficient by i*hbar; throws on inexactness.
    NCPolynomial divided_by_i_hbar() const;

    std::string to_string() const;

private:
    int n_;
    std::map<NCMonomial, Scalar> terms_;
};

/// Normal-orders a free word via the CCR rewriting p^_j q^_j = q^_j p^_j - i hbar.
NCPolynomial normal_order(const NCWord& w, int n);

/// ab - ba.
NCPolynomial commutator(const NCPolynomial& a, const NCPolynomial& b);

enum class SumFormSide { QOuter, POuter };

/// The closed sum forms of [q^^r, p^^s] (dimension 1), normalized:
///   q-outer: s*i*hbar * sum_j q^^{r-1-j} p^^{s-1} q^^j
///   p-outer: r*i*hbar * sum_j p^^{s-1-j} q^^{r-1} p^^j
NCPolynomial commutator_sum_form(int r, int s, SumFormSide side);

/// Formal adjoint: reverses each word and conjugates coefficients
/// (q^ and p^ are self-adjoint).
NCPolynomial adjoint(const NCPolynomial& a);

}  // namespace bjq
