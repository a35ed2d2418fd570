#pragma once

// Arbitrary-precision integers and exact fractions shared by every module.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace collatz {

/// Non-negative big integer. Negative values never enter through the public API.
using Natural = mpz_class;

/// Exact fraction, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

Natural natural_from_u64(std::uint64_t v);

/// Parses a decimal string of digits. Throws std::invalid_argument otherwise.
Natural parse_natural(std::string_view text);

/// Builds num/den reduced. Throws std::invalid_argument when den == 0.
Rational make_rational(const Natural& num, const Natural& den);

/// "p/q" form; integers still carry "/1".
std::string rational_text(const Rational& q);

/// Inverse of rational_text. Also accepts a bare integer.
Rational parse_rational(std::string_view text);

/// Nearest double when numerator and denominator fit in 53 bits; mpq's truncating
/// conversion beyond that.
double to_double(const Rational& q);

/// Saturating conversion for counts that are known to be small.
std::uint64_t to_u64(const Natural& v);

struct NaturalHash {
  std::size_t operator()(const Natural& v) const noexcept;
};

}  // namespace collatz
