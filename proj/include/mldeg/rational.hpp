#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace mldeg {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a", "-a" or "a/b" with arbitrary-precision integers.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& q);

// q^e for e >= 0.
Rational rational_pow(const Rational& q, unsigned long e);

std::complex<double> complex_pow(const std::complex<double>& z, unsigned long e);

inline double to_double(const Rational& q) { return q.get_d(); }

// Least common multiple of the denominators of a coefficient list.
Integer denominator_lcm(const std::vector<Rational>& qs);

// gcd of the numerators, assuming integral entries.
Integer integer_content(const std::vector<Integer>& zs);

} // namespace mldeg
