#include "bjq/phase.hpp"

#include <cctype>
#include <sstream>

namespace bjq {

void PhasePolynomial::add_term(const PhaseMonomial& m, const Scalar& c) {
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

PhasePolynomial PhasePolynomial::constant(const Scalar& c, int n) {
    PhasePolynomial p(n);
    p.add_term(PhaseMonomial(n), c);
    return p;
}

PhasePolynomial PhasePolynomial::q_pow(int j, int r, int n) {
    if (j < 1 || j > n) throw std::invalid_argument("variable index out of range");
    PhaseMonomial m(n);
    m.exps[j - 1].first = r;
    PhasePolynomial p(n);
    p.add_term(m, Scalar(1));
    return p;
}

PhasePolynomial PhasePolynomial::p_pow(int j, int s, int n) {
    if (j < 1 || j > n) throw std::invalid_argument("variable index out of range");
    PhaseMonomial m(n);
    m.exps[j - 1].second = s;
    PhasePolynomial p(n);
    p.add_term(m, Scalar(1));
    return p;
}

PhasePolynomial operator+(const PhasePolynomial& a, const PhasePolynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
    PhasePolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

PhasePolynomial operator-(const PhasePolynomial& a) {
    PhasePolynomial r(a.n_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
}

PhasePolynomial operator-(const PhasePolynomial& a, const PhasePolynomial& b) { return a + (-b); }

PhasePolynomial operator*(const Scalar& c, const PhasePolynomial& a) {
    PhasePolynomial r(a.n_);
    for (const auto& [m, t] : a.terms_) r.add_term(m, c * t);
    return r;
}

PhasePolynomial operator*(const PhasePolynomial& a, const PhasePolynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
    PhasePolynomial r(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            PhaseMonomial m = ma;
            for (int j = 0; j < a.n_; ++j) {
                m.exps[j].first += mb.exps[j].first;
                m.exps[j].second += mb.exps[j].second;
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

std::string PhasePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*";
        if (m.is_constant()) {
            os << "1";
            continue;
        }
        bool first_factor = true;
        for (int j = 0; j < n_; ++j) {
            const auto [a, b] = m.exps[j];
            std::string qj = n_ == 1 ? "q" : "q" + std::to_string(j + 1);
            std::string pj = n_ == 1 ? "p" : "p" + std::to_string(j + 1);
            if (a > 0) {
                if (!first_factor) os << "*";
                os << qj;
                if (a > 1) os << "^" << a;
                first_factor = false;
            }
            if (b > 0) {
                if (!first_factor) os << "*";
                os << pj;
                if (b > 1) os << "^" << b;
                first_factor = false;
            }
        }
    }
    return os.str();
}

PhasePolynomial partial_derivative(const PhasePolynomial& h, PhaseVar var, int index) {
    const int n = h.dimension();
    if (index < 1 || index > n) throw std::invalid_argument("variable index out of range");
    PhasePolynomial r(n);
    for (const auto& [m, c] : h.terms()) {
        auto [a, b] = m.exps[index - 1];
        int e = var == PhaseVar::Q ? a : b;
        if (e == 0) continue;
        PhaseMonomial d = m;
        if (var == PhaseVar::Q)
            d.exps[index - 1].first -= 1;
        else
            d.exps[index - 1].second -= 1;
        r.add_term(d, Scalar(e) * c);
    }
    return r;
}

PhasePolynomial poisson_bracket(const PhasePolynomial& a, const PhasePolynomial& b) {
    if (a.dimension() != b.dimension()) throw std::invalid_argument("dimension mismatch");
    const int n = a.dimension();
    PhasePolynomial r(n);
    for (int j = 1; j <= n; ++j) {
        r = r + partial_derivative(a, PhaseVar::Q, j) * partial_derivative(b, PhaseVar::P, j) -
            partial_derivative(a, PhaseVar::P, j) * partial_derivative(b, PhaseVar::Q, j);
    }
    return r;
}

SplitObservable split(const PhasePolynomial& h) {
    const int n = h.dimension();
    SplitObservable s{PhasePolynomial(n), PhasePolynomial(n)};
    for (const auto& [m, c] : h.terms()) {
        bool on_q = m.depends_on_q();
        bool on_p = m.depends_on_p();
        if (on_q && on_p) {
            PhasePolynomial witness(n);
            witness.add_term(m, c);
            throw std::invalid_argument("observable is not of split form T(p)+V(q): mixed term " +
                                        witness.to_string());
        }
        if (on_p)
            s.kinetic.add_term(m, c);
        else
            s.potential.add_term(m, c);  // constants land in V
    }
    return s;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

struct Parser {
    Lexer lex;
    int n;

    PhasePolynomial parse_expr() {
        PhasePolynomial acc = parse_term();
        for (;;) {
            if (lex.eat('+'))
                acc = acc + parse_term();
            else if (lex.eat('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    PhasePolynomial parse_term() {
        PhasePolynomial acc = parse_factor();
        while (lex.eat('*')) acc = acc * parse_factor();
        return acc;
    }

    PhasePolynomial parse_factor() {
        if (lex.eat('-')) return -parse_factor();
        return parse_power();
    }

    PhasePolynomial parse_power() {
        PhasePolynomial base = parse_atom();
        if (!lex.eat('^')) return base;
        int e = parse_exponent();
        PhasePolynomial acc = PhasePolynomial::constant(Scalar(1), n);
        for (int k = 0; k < e; ++k) acc = acc * base;
        return acc;
    }

    int parse_exponent() {
        size_t at = lex.pos;
        bool paren = lex.eat('(');
        bool neg = paren && lex.eat('-');
        char c = lex.peek();
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("expected integer exponent", lex.pos);
        long v = read_integer();
        if (paren && !lex.eat(')')) throw ParseError("expected ')'", lex.pos);
        if (neg) throw ParseError("exponent must be a non-negative integer", at);
        return static_cast<int>(v);
    }

    long read_integer() {
        lex.skip_ws();
        long v = 0;
        size_t start = lex.pos;
        while (lex.pos < lex.text.size() && std::isdigit(static_cast<unsigned char>(lex.text[lex.pos]))) {
            v = v * 10 + (lex.text[lex.pos] - '0');
            if (v > 1000000000L) throw ParseError("integer literal too large", start);
            ++lex.pos;
        }
        return v;
    }

    PhasePolynomial parse_atom() {
        char c = lex.peek();
        size_t at = lex.pos;
        if (c == '(') {
            lex.eat('(');
            PhasePolynomial e = parse_expr();
            if (!lex.eat(')')) throw ParseError("expected ')'", lex.pos);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = read_integer();
            Rational r(num);
            if (lex.pos < lex.text.size() && lex.text[lex.pos] == '/') {
                ++lex.pos;
                if (!std::isdigit(static_cast<unsigned char>(lex.peek())))
                    throw ParseError("expected denominator", lex.pos);
                long den = read_integer();
                if (den == 0) throw ParseError("zero denominator", at);
                r = Rational(num, den);
            }
            return PhasePolynomial::constant(Scalar::rational(r), n);
        }
        if (c == 'i') {
            ++lex.pos;
            return PhasePolynomial::constant(Scalar::i(), n);
        }
        if (c == 'h') {
            ++lex.pos;
            return PhasePolynomial::constant(Scalar::hbar(), n);
        }
        if (c == 'q' || c == 'p') {
            ++lex.pos;
            int index = 1;
            if (lex.pos < lex.text.size() && std::isdigit(static_cast<unsigned char>(lex.text[lex.pos])))
                index = static_cast<int>(read_integer());
            if (index < 1 || index > n)
                throw ParseError("variable index out of range for dimension " + std::to_string(n), at);
            return c == 'q' ? PhasePolynomial::q_pow(index, 1, n)
                            : PhasePolynomial::p_pow(index, 1, n);
        }
        if (c == '\0') throw ParseError("unexpected end of input", lex.pos);
        if (std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError(std::string("unknown identifier '") + c + "'", at);
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
};

}  // namespace

PhasePolynomial parse_observable(const std::string& text, int n) {
    Parser parser{Lexer{text}, n};
    PhasePolynomial result = parser.parse_expr();
    parser.lex.skip_ws();
    if (parser.lex.pos != text.size())
        throw ParseError("trailing input", parser.lex.pos);
    return result;
}

}  // namespace bjq
