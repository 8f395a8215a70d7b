#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace catspec {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int numerator(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int denominator(const Rat& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

// Exact conversion: every finite double is a dyadic rational.
Rat rat_from_double(double x);

// Nearest integer, ties away from zero.
Int round_nearest(const Rat& x);

// "n" when the denominator is 1, otherwise "n/d".
std::string rat_to_string(const Rat& x);

// Accepts "n" and "n/d" with optional sign. Throws Error on malformed input.
Rat rat_from_string(const std::string& s);

}  // namespace catspec
