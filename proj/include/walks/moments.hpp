#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "walks/poly.hpp"

namespace walks {

struct ZeroPolynomial : std::domain_error {
  using std::domain_error::domain_error;
};

/// One standardized central moment m_k / sigma^k, kept exact by storing
/// the signed square sign(m_k) * m_k^2 / sigma^(2k) (sigma itself is an
/// irrational square root in general), plus a decimal rendering.
struct StdMoment {
  unsigned k = 0;
  BigRat signed_square;
  std::string decimal;
};

/// Exact moments of the distribution F(t)/F(1): mass, mean, variance and
/// standardized central moments 3..M. Degenerate (variance 0)
/// distributions carry the marker instead of standardized moments.
struct MomentReport {
  long n = -1;  // endpoint parameter, when the caller has one
  BigInt mass;
  BigRat mean;
  BigRat variance;
  bool degenerate = false;
  std::vector<StdMoment> std_moments;
};

MomentReport moment_report(const ZPoly& f, unsigned max_moment, int precision = 12, long n = -1);

/// Decimal rendering of a standardized moment from its signed square,
/// at any requested precision.
std::string std_moment_decimal(const BigRat& signed_square, int precision);

/// Closed forms for the mean and variance of the break-even count over
/// walks to (n,n) with unit steps, evaluated exactly.
std::pair<BigRat, BigRat> a2_moment_check(unsigned n);

}  // namespace walks
