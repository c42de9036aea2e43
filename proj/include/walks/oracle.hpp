#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "walks/poly.hpp"
#include "walks/walk.hpp"

namespace walks {

/// Enumeration exceeded the configured work guard.
struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultOracleGuard = 100'000'000;

/// Joint distribution of (a1,a2,a3,a4) over all walks of a fixed length:
/// the finite grand generating polynomial. Sparse map from exponent
/// tuples to exact counts.
struct GrandPolynomial {
  unsigned length = 0;
  std::map<std::array<std::uint32_t, 4>, BigInt> terms;

  BigInt total_mass() const;
  /// Marginal in one statistic (the others evaluated at 1).
  ZPoly marginal(Stat which) const;
};

/// Exhaustive enumeration of all |S|^n walks of length n.
GrandPolynomial oracle_grand_poly(const StepSet2& s, unsigned n,
                                  std::uint64_t guard = kDefaultOracleGuard);

/// Statistic polynomials for every endpoint inside the box [0,a]x[0,b],
/// from one exhaustive traversal of all walks staying in the box.
/// Result is indexed [x][y]; unreachable endpoints hold the zero
/// polynomial.
std::vector<std::vector<ZPoly>> oracle_box_polys(const StepSet2& s, int a, int b, Stat stat,
                                                 std::uint64_t guard = kDefaultOracleGuard);

ZPoly oracle_endpoint_poly(const StepSet2& s, int a, int b, Stat stat,
                           std::uint64_t guard = kDefaultOracleGuard);

/// 3-D analogue, marking visits to one region; indexed [x][y][z].
std::vector<std::vector<std::vector<ZPoly>>> oracle_box_polys_3d(
    const StepSet3& s, int a, int b, int c, int region,
    std::uint64_t guard = kDefaultOracleGuard);

ZPoly oracle_endpoint_poly_3d(const StepSet3& s, int a, int b, int c, int region,
                              std::uint64_t guard = kDefaultOracleGuard);

}  // namespace walks
