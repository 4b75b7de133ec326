#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace superchain {

// Exact arithmetic over Q. mpq_rational keeps values in lowest terms with a
// positive denominator, which is the invariant the rest of the library relies on.
using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

} // namespace superchain
