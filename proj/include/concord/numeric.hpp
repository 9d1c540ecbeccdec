#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace concord {

// Exact arithmetic substrate. cpp_rational is always stored reduced with a
// positive denominator, which is exactly the canonical form we rely on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline const Int& num(const Rational& x) { return numerator(x); }
inline const Int& den(const Rational& x) { return denominator(x); }

// Floor division / floor remainder (cpp_int's % truncates toward zero).
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);

// Inverse of a modulo m (m >= 1). Throws DomainError when gcd(a, m) != 1.
// mod_inverse(0, 1) = 0 by convention.
Int mod_inverse(const Int& a, const Int& m);

// Sawtooth ((x)): x - floor(x) - 1/2 for non-integral x, and 0 at integers.
Rational sawtooth(const Rational& x);

bool is_integer(const Rational& x);

// "p/q" for non-integers, "p" otherwise.
std::string to_string(const Rational& x);

} // namespace concord
