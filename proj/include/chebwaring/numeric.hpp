#pragma once

#include <gmpxx.h>

#include <string>

namespace chebwaring {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds p/q in lowest terms with a positive denominator.
BigRational make_rational(const BigInt& num, const BigInt& den = 1);

bool is_integer(const BigRational& q);

/// Decimal "p" or "p/q"; the canonical text form used in reports.
std::string to_string(const BigInt& v);
std::string to_string(const BigRational& q);

/// Parses "p" or "p/q" (optional sign on p). Throws Error(parse) on junk
/// and Error(pole) on a zero denominator.
BigRational parse_rational(const std::string& text);

}  // namespace chebwaring
