#ifndef PCPFORGE_RATIONAL_HPP
#define PCPFORGE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pcpforge {

// Exact arbitrary-precision rational. All instance weights, probabilities and
// distances that the contracts call "exact" are carried in this type; floating
// point appears only in the spectral module.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational rat(long num, long den = 1);

// Parses "p/q" or "p". Throws Error(ParseError) on malformed input.
Rational rat_parse(const std::string& s);

// Canonical "p/q" (or "p" when q == 1).
std::string rat_str(const Rational& q);

double rat_double(const Rational& q);

// (1 - 1/t)^e as an exact rational.
Rational geometric_tail(long t, long e);

}  // namespace pcpforge

#endif
