#include "mldeg/rational.hpp"
#include "mldeg/errors.hpp"

namespace mldeg {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty rational literal");
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: '" + text + "'");
    }
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

Rational rational_pow(const Rational& q, unsigned long e) {
    Rational r = 1;
    Rational base = q;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

std::complex<double> complex_pow(const std::complex<double>& z, unsigned long e) {
    std::complex<double> r{1.0, 0.0};
    std::complex<double> base = z;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

Integer denominator_lcm(const std::vector<Rational>& qs) {
    Integer l = 1;
    for (const auto& q : qs) {
        Integer d = q.get_den();
        Integer g = gcd(l, d);
        l = l / g * d;
    }
    return l;
}

Integer integer_content(const std::vector<Integer>& zs) {
    Integer g = 0;
    for (const auto& z : zs) {
        g = gcd(g, z);
        if (g == 1) break;
    }
    return g;
}

} // namespace mldeg
