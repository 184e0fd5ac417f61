#ifndef SIMPLEX_FORGE_NUMBERS_HPP
#define SIMPLEX_FORGE_NUMBERS_HPP

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace simplex_forge {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// "p/q" for non-integers, "p" for integers.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

}  // namespace simplex_forge

#endif
