#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace seshadri {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator). Every coefficient in the library is a Rat.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Builds a canonical rational num/den. Throws std::domain_error on den == 0.
Rat make_rat(const BigInt& num, const BigInt& den = 1);

/// Parses "a", "-a", "a/b" (no spaces). Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& q);
std::string to_string(const BigInt& z);

bool is_integer(const Rat& q);

/// Integral value of q; throws std::domain_error when q is not an integer or
/// does not fit in 64 bits.
std::int64_t to_int64(const Rat& q);
std::int64_t to_int64(const BigInt& z);

/// floor(sqrt(v)) for v >= 0 by integer Newton iteration.
BigInt isqrt_floor(const BigInt& v);

/// Smallest s with s*s >= v, for v >= 0.
BigInt isqrt_ceil(const BigInt& v);

bool is_perfect_square(const BigInt& v);

} // namespace seshadri
