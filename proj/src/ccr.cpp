#include "bjq/ccr.hpp"

#include <sstream>

namespace bjq {

namespace {

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational r = 1;
    for (int j = 0; j < k; ++j) r = r * Rational(n - j) / Rational(j + 1);
    return r;
}

Rational factorial(int k) {
    Rational r = 1;
    for (int j = 2; j <= k; ++j) r *= j;
    return r;
}

// (-i)^k as a Gaussian rational.
GaussianRational minus_i_pow(int k) {
    switch (k & 3) {
        case 0: return {1, 0};
        case 1: return {0, -1};
        case 2: return {-1, 0};
        default: return {0, 1};
    }
}

// Normal ordering of p^^s q^^r within one index:
//   p^^s q^^r = sum_k k! C(r,k) C(s,k) (-i hbar)^k q^^{r-k} p^^{s-k}.
// Returns (k, coefficient) pairs.
std::vector<std::pair<int, Scalar>> swap_expansion(int r, int s) {
    std::vector<std::pair<int, Scalar>> out;
    int kmax = std::min(r, s);
    for (int k = 0; k <= kmax; ++k) {
        GaussianRational c(factorial(k) * binomial(r, k) * binomial(s, k));
        out.emplace_back(k, Scalar::hbar_term(c * minus_i_pow(k), k));
    }
    return out;
}

}  // namespace

void NCPolynomial::add_term(const NCMonomial& m, const Scalar& c) {
    if (m.dimension() != n_) throw std::invalid_argument("monomial dimension mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPolynomial NCPolynomial::constant(const Scalar& c, int n) {
    NCPolynomial p(n);
    p.add_term(NCMonomial(n), c);
    return p;
}

NCPolynomial NCPolynomial::monomial(const NCMonomial& m, const Scalar& c) {
    NCPolynomial p(m.dimension());
    p.add_term(m, c);
    return p;
}

NCPolynomial NCPolynomial::q_pow(int j, int r, int n) {
    if (j < 1 || j > n) throw std::invalid_argument("generator index out of range");
    NCMonomial m(n);
    m.exps[j - 1].first = r;
    return monomial(m, Scalar(1));
}

NCPolynomial NCPolynomial::p_pow(int j, int s, int n) {
    if (j < 1 || j > n) throw std::invalid_argument("generator index out of range");
    NCMonomial m(n);
    m.exps[j - 1].second = s;
    return monomial(m, Scalar(1));
}

NCPolynomial operator+(const NCPolynomial& a, const NCPolynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
    NCPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

NCPolynomial operator-(const NCPolynomial& a) {
    NCPolynomial r(a.n_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
}

NCPolynomial operator-(const NCPolynomial& a, const NCPolynomial& b) { return a + (-b); }

NCPolynomial operator*(const Scalar& c, const NCPolynomial& a) {
    NCPolynomial r(a.n_);
    for (const auto& [m, t] : a.terms_) r.add_term(m, c * t);
    return r;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
    const int n = a.n_;
    NCPolynomial result(n);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            // Per index: q^{r1}p^{s1} q^{r2}p^{s2}, reorder the inner p^{s1}q^{r2}.
            // Distinct indices commute, so the expansions combine independently.
            std::vector<std::pair<NCMonomial, Scalar>> partial;
            partial.emplace_back(NCMonomial(n), ca * cb);
            for (int j = 0; j < n; ++j) {
                const auto [r1, s1] = ma.exps[j];
                const auto [r2, s2] = mb.exps[j];
                auto expansion = swap_expansion(r2, s1);
                std::vector<std::pair<NCMonomial, Scalar>> next;
                next.reserve(partial.size() * expansion.size());
                for (const auto& [m, c] : partial) {
                    for (const auto& [k, ck] : expansion) {
                        NCMonomial m2 = m;
                        m2.exps[j] = {r1 + r2 - k, s1 + s2 - k};
                        next.emplace_back(std::move(m2), c * ck);
                    }
                }
                partial = std::move(next);
            }
            for (const auto& [m, c] : partial) result.add_term(m, c);
        }
    }
    return result;
}

NCPolynomial NCPolynomial::divided_by_i_hbar() const {
    NCPolynomial r(n_);
    GaussianRational i{0, 1};
    for (const auto& [m, c] : terms_) r.add_term(m, c.divided_by_hbar(1).divided_by(i));
    return r;
}

std::string NCPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*";
        if (m.is_identity()) {
            os << "1";
            continue;
        }
        bool first_factor = true;
        for (int j = 0; j < n_; ++j) {
            const auto [r, s] = m.exps[j];
            std::string qj = n_ == 1 ? "q" : "q" + std::to_string(j + 1);
            std::string pj = n_ == 1 ? "p" : "p" + std::to_string(j + 1);
            if (r > 0) {
                if (!first_factor) os << "*";
                os << qj;
                if (r > 1) os << "^" << r;
                first_factor = false;
            }
            if (s > 0) {
                if (!first_factor) os << "*";
                os << pj;
                if (s > 1) os << "^" << s;
                first_factor = false;
            }
        }
    }
    return os.str();
}

NCPolynomial normal_order(const NCWord& w, int n) {
    NCPolynomial result = NCPolynomial::constant(Scalar(1), n);
    for (const auto& g : w) {
        if (g.index < 1 || g.index > n) throw std::invalid_argument("generator index out of range");
        NCPolynomial gen = g.kind == NCGenerator::Kind::Q ? NCPolynomial::q_pow(g.index, 1, n)
                                                          : NCPolynomial::p_pow(g.index, 1, n);
        result = result * gen;
    }
    return result;
}

NCPolynomial commutator(const NCPolynomial& a, const NCPolynomial& b) {
    return a * b - b * a;
}

NCPolynomial commutator_sum_form(int r, int s, SumFormSide side) {
    if (r < 1 || s < 1) throw std::invalid_argument("sum form needs r >= 1 and s >= 1");
    NCPolynomial sum(1);
    if (side == SumFormSide::QOuter) {
        for (int j = 0; j <= r - 1; ++j) {
            sum = sum + NCPolynomial::q_pow(1, r - 1 - j, 1) * NCPolynomial::p_pow(1, s - 1, 1) *
                            NCPolynomial::q_pow(1, j, 1);
        }
        return (Scalar(s) * Scalar::i() * Scalar::hbar()) * sum;
    }
    for (int j = 0; j <= s - 1; ++j) {
        sum = sum + NCPolynomial::p_pow(1, s - 1 - j, 1) * NCPolynomial::q_pow(1, r - 1, 1) *
                        NCPolynomial::p_pow(1, j, 1);
    }
    return (Scalar(r) * Scalar::i() * Scalar::hbar()) * sum;
}

NCPolynomial adjoint(const NCPolynomial& a) {
    const int n = a.dimension();
    NCPolynomial result(n);
    for (const auto& [m, c] : a.terms()) {
        // Reversal of q^r p^s is p^s q^r per index; renormalize each factor.
        NCPolynomial term = NCPolynomial::constant(c.conj(), n);
        for (int j = 0; j < n; ++j) {
            const auto [r, s] = m.exps[j];
            if (r == 0 && s == 0) continue;
            term = term * (NCPolynomial::p_pow(j + 1, s, n) * NCPolynomial::q_pow(j + 1, r, n));
        }
        result = result + term;
    }
    return result;
}

}  // namespace bjq
