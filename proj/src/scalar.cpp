#include "bjq/scalar.hpp"

#include <sstream>
#include <vector>

namespace bjq {

namespace {

// One atomic summand r * [i] * h^k, rendered in the expression grammar.
void render_atom(std::ostream& os, const Rational& r, bool imag, int k, bool first) {
    Rational mag = r < 0 ? Rational(-r) : r;
    if (first) {
        if (r < 0) os << "-";
    } else {
        os << (r < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    if (mag != 1 || (!imag && k == 0)) {
        std::ostringstream num;
        num << boost::multiprecision::numerator(mag);
        if (boost::multiprecision::denominator(mag) != 1)
            num << "/" << boost::multiprecision::denominator(mag);
        factors.push_back(num.str());
    }
    if (imag) factors.push_back("i");
    if (k > 0) factors.push_back(k == 1 ? "h" : "h^" + std::to_string(k));
    for (size_t j = 0; j < factors.size(); ++j) {
        if (j > 0) os << "*";
        os << factors[j];
    }
}

}  // namespace

std::string Scalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (c.re != 0) {
            render_atom(os, c.re, false, k, first);
            first = false;
        }
        if (c.im != 0) {
            render_atom(os, c.im, true, k, first);
            first = false;
        }
    }
    return os.str();
}

}  // namespace bjq
