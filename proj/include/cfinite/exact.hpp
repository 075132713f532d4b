#pragma once

// Exact integers and rationals. Both are backed by GMP; mpq_class values
// handed out by this library are always canonical (den > 0, coprime parts).

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cfinite {

using ExactInteger = mpz_class;
using ExactRational = mpq_class;

/// num/den in canonical form. Throws InvalidInput when den == 0.
ExactRational make_rational(const ExactInteger& num, const ExactInteger& den);

bool is_canonical(const ExactRational& q);
bool is_integer(const ExactRational& q);

/// Strict decimal integer: optional '-', no '+', no leading zeros, no "-0".
ExactInteger parse_integer(std::string_view text);

/// Strict canonical rational: "p" or "p/q" with q > 1 and gcd(p, q) = 1.
ExactRational parse_rational(std::string_view text);

/// Lenient rational for user input: accepts "6/4" and reduces it.
ExactRational parse_rational_lenient(std::string_view text);

/// Comma separated list of rationals, "" is the empty list. Uses the lenient
/// parser and rejects whitespace.
std::vector<ExactRational> parse_rational_list(std::string_view text);

std::string to_string(const ExactInteger& z);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const ExactRational& q);

std::string join(const std::vector<ExactRational>& values, std::string_view sep = ",");
std::string join(const std::vector<ExactInteger>& values, std::string_view sep = ",");

ExactInteger lcm_of_denominators(const std::vector<ExactRational>& values);

} // namespace cfinite
