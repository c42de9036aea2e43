#pragma once

#include <stdexcept>

#include "walks/poly.hpp"
#include "walks/series.hpp"

namespace walks {

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BigInt catalan(unsigned n);

/// Number of free walks of length 2n with exactly 2k losing times:
/// C(2k,k) * C(2n-2k, n-k). The discrete arcsine distribution.
BigInt arcsine_count(unsigned n, unsigned k);

/// Losing-time polynomial over walks to (n,n) with unit steps:
/// Catalan(n) * sum_{k=0..n} t^(2k). Uniform over even values.
ZPoly chung_feller_poly(unsigned n);

/// z^n coefficient of 2 / (sqrt(1-4z) + sqrt(1-4z t^2)), extracted from
/// exact truncated-series arithmetic. Must equal chung_feller_poly(n).
ZPoly chung_feller_gf_coeff(unsigned n, size_t order);

/// z^n coefficient of 1 / (t sqrt(1-4z) - t + 1): break-even counts
/// over walks to (n,n) with unit steps.
ZPoly a2_gf_coeff(unsigned n, size_t order);

/// The star-algebra system for forward King walks (steps r, u, and the
/// diagonal), solved as truncated series:
///   f_n       = z t^2 phi_tilde                  (negative walks)
///   phi_tilde = (zt)* ( f_n (zt)* )*             (nonpositive walks, t marks length)
///   f_p       = f_n at t=1                       (positive walks)
///   f_k       = z* ( f_n z* + f_p z* )*          (all King walks; t marks losing times)
struct KingSystem {
  size_t order;
  TruncatedSeries f_n;
  TruncatedSeries phi_tilde;
  TruncatedSeries f_p;
  TruncatedSeries f_k;
};

KingSystem solve_king_system(size_t order);

}  // namespace walks
