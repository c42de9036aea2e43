#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace walks {

using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

/// 4^n, 16^n, ... as exact integers.
BigInt int_pow(const BigInt& base, unsigned long e);

inline int sign(const BigRat& q) { return mpq_sgn(q.get_mpq_t()); }

/// Exact decimal rendering of a rational, truncated (not rounded) to
/// `significant` digits. The zero rational renders as "0." followed by
/// `significant` zeros so that safe-digit comparison against near-zero
/// values behaves sensibly.
std::string to_decimal(const BigRat& q, int significant);

/// Decimal rendering of sign * sqrt(|q|), truncated to `significant`
/// digits. Exact when |q| is a perfect rational square; otherwise
/// computed with guard precision well beyond the displayed digits.
std::string sqrt_to_decimal(const BigRat& q, int significant);

/// sqrt of a perfect rational square, exactly. Returns false if either
/// the numerator or denominator of q is not a perfect square.
bool exact_sqrt(const BigRat& q, BigRat& out);

}  // namespace walks
