#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

#include "treeshuffle/errors.hpp"

namespace treeshuffle {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses a nonnegative rational written as "p" or "p/q" (decimal digits
/// only, q > 0). The result is reduced to lowest terms.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q" or plain "p" for integers. Inverse of parse_rational.
std::string format_rational(const Rational& q);

std::string format_integer(const Integer& n);

Integer factorial(std::size_t n);

/// Bell numbers: partitions of an n-set.
Integer bell_number(std::size_t n);

/// Fubini numbers: ordered partitions of an n-set.
Integer ordered_bell_number(std::size_t n);

/// Derangement numbers d_n (d_0 = 1, d_1 = 0, d_2 = 1, ...).
Integer derangement_number(std::size_t n);

} // namespace treeshuffle
