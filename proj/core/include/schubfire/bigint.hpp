#pragma once

#include <gmpxx.h>

#include <string>

namespace schubfire {

using BigInt = mpz_class;

/// Binomial coefficient C(n, k); zero when k < 0, n < 0 or k > n.
BigInt binomial(long n, long k);

/// Same as binomial() but in machine integers; throws std::overflow_error.
long binomial_small(long n, long k);

std::string to_decimal(const BigInt& value);

/// Parses an optionally signed decimal integer; throws ParseError.
BigInt parse_decimal(const std::string& text);

}  // namespace schubfire
