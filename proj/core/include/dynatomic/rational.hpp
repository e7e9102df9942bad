#ifndef DYNATOMIC_RATIONAL_HPP
#define DYNATOMIC_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dynatomic {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Parses "a", "-a", "a/b" with optional surrounding whitespace. The stored
// value is canonical (lowest terms, positive denominator).
Rational parse_rational(const std::string& text);

// Canonical form: "a" for integers, "a/b" otherwise, '-' in front.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Exact conversion; throws if q is not a machine-width integer.
std::int64_t to_int64(const Rational& q);

} // namespace dynatomic

#endif
