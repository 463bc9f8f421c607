#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace lagint {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parse "p", "-p" or "p/q" into an exact rational.
Rational parse_rational(const std::string& text);

/// Canonical rendering: integers as decimal strings, proper fractions as "p/q".
std::string rational_to_string(const Rational& value);

} // namespace lagint
