#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bjq/phase.hpp"

using namespace bjq;

namespace {

PhasePolynomial random_poly(std::mt19937& rng, int max_degree, int n, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<int> hexp(0, 2);
    std::uniform_int_distribution<int> im(0, 1);
    PhasePolynomial p(n);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        PhaseMonomial m(n);
        std::uniform_int_distribution<int> d(0, max_degree);
        int budget = d(rng);
        for (int j = 0; j < n && budget > 0; ++j) {
            std::uniform_int_distribution<int> da(0, budget);
            m.exps[j].first = da(rng);
            budget -= m.exps[j].first;
            std::uniform_int_distribution<int> db(0, budget);
            m.exps[j].second = db(rng);
            budget -= m.exps[j].second;
        }
        long nu = num(rng);
        if (nu == 0) nu = 1;
        GaussianRational c = im(rng) ? GaussianRational(0, Rational(nu, den(rng)))
                                     : GaussianRational(Rational(nu, den(rng)));
        p.add_term(m, Scalar::hbar_term(c, hexp(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("parser: direct reading") {
    PhasePolynomial p = parse_observable("q^2*p^2 + 3*q", 1);
    PhasePolynomial expected(1);
    PhaseMonomial m22(1);
    m22.exps[0] = {2, 2};
    expected.add_term(m22, Scalar(1));
    PhaseMonomial m10(1);
    m10.exps[0] = {1, 0};
    expected.add_term(m10, Scalar(3));
    CHECK(p == expected);
}

TEST_CASE("parser: rational coefficient") {
    PhasePolynomial p = parse_observable("1/9*(q^3)", 1);
    PhaseMonomial m(1);
    m.exps[0] = {3, 0};
    PhasePolynomial expected(1);
    expected.add_term(m, Scalar::rational(1, 9));
    CHECK(p == expected);
}

TEST_CASE("parser: negative exponent rejected") {
    CHECK_THROWS_AS(parse_observable("q^(-1)", 1), ParseError);
}

TEST_CASE("parser: errors carry position") {
    try {
        parse_observable("q + x", 1);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_observable("q3", 2), ParseError);  // index out of range
    CHECK_THROWS_AS(parse_observable("q *", 1), ParseError);
    CHECK_THROWS_AS(parse_observable("(q", 1), ParseError);
    CHECK_THROWS_AS(parse_observable("q q", 1), ParseError);  // trailing input
}

TEST_CASE("parser: i, h, unary minus, multi-index") {
    PhasePolynomial p = parse_observable("-i*h^2*q1*p2 + 1/2", 2);
    PhaseMonomial m(2);
    m.exps[0] = {1, 0};
    m.exps[1] = {0, 1};
    PhasePolynomial expected(2);
    expected.add_term(m, -(Scalar::i() * Scalar::hbar(2)));
    expected.add_term(PhaseMonomial(2), Scalar::rational(1, 2));
    CHECK(p == expected);
}

TEST_CASE("round-trip: parse(print(x)) == x") {
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + trial % 3;
        PhasePolynomial p = random_poly(rng, 5, n);
        CHECK(parse_observable(p.to_string(), n) == p);
    }
}

TEST_CASE("partial derivative: power rule") {
    PhasePolynomial q2p = parse_observable("q^2*p", 1);
    CHECK(partial_derivative(q2p, PhaseVar::Q, 1) == parse_observable("2*q*p", 1));
    CHECK(partial_derivative(q2p, PhaseVar::P, 1) == parse_observable("q^2", 1));
    CHECK(partial_derivative(parse_observable("7", 1), PhaseVar::Q, 1).is_zero());
    CHECK_THROWS_AS(partial_derivative(q2p, PhaseVar::Q, 2), std::invalid_argument);
}

TEST_CASE("poisson bracket: sign convention via the two classical identities") {
    PhasePolynomial q2p2 = parse_observable("q^2*p^2", 1);
    CHECK(poisson_bracket(parse_observable("q^3", 1), parse_observable("p^3", 1)) ==
          Scalar(9) * q2p2);
    CHECK(poisson_bracket(parse_observable("q^2*p", 1), parse_observable("p^2*q", 1)) ==
          Scalar(3) * q2p2);
    CHECK(poisson_bracket(parse_observable("q", 1), parse_observable("q", 1)).is_zero());
}

TEST_CASE("poisson bracket: {q_j^r, p_k^s} identities up to degree 6") {
    for (int r = 1; r <= 6; ++r) {
        for (int s = 1; s <= 6; ++s) {
            PhasePolynomial lhs =
                poisson_bracket(PhasePolynomial::q_pow(1, r, 1), PhasePolynomial::p_pow(1, s, 1));
            PhasePolynomial rhs = (Scalar(r) * Scalar(s)) * (PhasePolynomial::q_pow(1, r - 1, 1) *
                                                             PhasePolynomial::p_pow(1, s - 1, 1));
            CHECK(lhs == rhs);
            CHECK(poisson_bracket(PhasePolynomial::q_pow(1, r, 2), PhasePolynomial::p_pow(2, s, 2))
                      .is_zero());
        }
    }
}

TEST_CASE("poisson bracket: antisymmetry, Leibniz and Jacobi") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + trial % 2;
        PhasePolynomial a = random_poly(rng, 4, n);
        PhasePolynomial b = random_poly(rng, 4, n);
        PhasePolynomial c = random_poly(rng, 4, n);
        CHECK(poisson_bracket(a, b) == -poisson_bracket(b, a));
        CHECK(poisson_bracket(a, b * c) ==
              poisson_bracket(a, b) * c + b * poisson_bracket(a, c));
        PhasePolynomial jacobi = poisson_bracket(a, poisson_bracket(b, c)) +
                                 poisson_bracket(b, poisson_bracket(c, a)) +
                                 poisson_bracket(c, poisson_bracket(a, b));
        CHECK(jacobi.is_zero());
    }
}

TEST_CASE("split: direct split, mixed rejection, constants to V") {
    SplitObservable s = split(parse_observable("1/2*p^2 + q^4", 1));
    CHECK(s.kinetic == parse_observable("1/2*p^2", 1));
    CHECK(s.potential == parse_observable("q^4", 1));

    CHECK_THROWS_AS(split(parse_observable("q^2*p^2", 1)), std::invalid_argument);

    SplitObservable c = split(parse_observable("5", 1));
    CHECK(c.kinetic.is_zero());
    CHECK(c.potential == parse_observable("5", 1));
}
