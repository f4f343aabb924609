#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>

namespace bjq {

using Rational = boost::multiprecision::cpp_rational;

/// Exact element of Q(i): a + b*i with rational a, b.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero Gaussian rational");
        Rational n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

/// Exact coefficient ring Q(i)[hbar]: a polynomial in the formal symbol hbar
/// with Gaussian-rational coefficients. Zero terms are never stored, so
/// equality of the term maps is equality in the ring.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) {
        if (v != 0) terms_[0] = GaussianRational(v);
    }
    Scalar(GaussianRational c) {
        if (!c.is_zero()) terms_[0] = std::move(c);
    }

    static Scalar rational(Rational r) { return Scalar(GaussianRational(std::move(r))); }
    static Scalar rational(long num, long den) { return rational(Rational(num, den)); }
    static Scalar i() { return Scalar(GaussianRational(0, 1)); }
    /// c * hbar^k
    static Scalar hbar_term(GaussianRational c, int k) {
        Scalar s;
        if (!c.is_zero()) s.terms_[k] = std::move(c);
        return s;
    }
    static Scalar hbar(int k = 1) { return hbar_term(GaussianRational(1), k); }

    bool is_zero() const { return terms_.empty(); }

    const std::map<int, GaussianRational>& terms() const { return terms_; }

    /// Complex conjugation, i -> -i (hbar is real).
    Scalar conj() const {
        Scalar r;
        for (const auto& [k, c] : terms_) r.terms_[k] = c.conj();
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        for (const auto& [k, c] : o.terms_) {
            auto it = terms_.find(k);
            if (it == terms_.end()) {
                terms_.emplace(k, c);
            } else {
                it->second = it->second + c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(const Scalar& a) {
        Scalar r;
        for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
        return r;
    }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a += -b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r += hbar_term(ca * cb, ka + kb);
        return r;
    }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

    /// Exact division by a nonzero Gaussian rational.
    Scalar divided_by(const GaussianRational& c) const {
        Scalar r;
        for (const auto& [k, t] : terms_) r.terms_[k] = t / c;
        return r;
    }

    /// Exact division by hbar^k; throws if any term has exponent below k.
    Scalar divided_by_hbar(int k) const {
        Scalar r;
        for (const auto& [e, c] : terms_) {
            if (e < k) throw std::domain_error("inexact division by hbar");
            r.terms_[e - k] = c;
        }
        return r;
    }

    /// Numeric substitution hbar -> value.
    std::complex<double> evaluate(double hbar_value) const {
        std::complex<double> acc{0.0, 0.0};
        double hk = 1.0;
        int last = 0;
        for (const auto& [k, c] : terms_) {
            for (; last < k; ++last) hk *= hbar_value;
            acc += c.to_complex() * hk;
        }
        return acc;
    }

    std::string to_string() const;

private:
    std::map<int, GaussianRational> terms_;
};

}  // namespace bjq
