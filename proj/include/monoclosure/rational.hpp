#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monoclosure {

using Integer = mpz_class;
using Rational = mpq_class;

/// Malformed user input: syntax errors, length mismatches, ambient mismatches.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematically undefined request (colon by the zero ideal, order of the
/// zero ideal, a relevant ideal for a valuation that does not contract I into
/// its maximal ideal, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// "p/q" for proper fractions, "p" for integers.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

Integer ceil_div(const Rational& q);
Integer floor_of(const Rational& q);

}  // namespace monoclosure
