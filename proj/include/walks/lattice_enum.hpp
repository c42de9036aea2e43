#pragma once

#include <map>
#include <vector>

#include "walks/poly.hpp"
#include "walks/walk.hpp"

namespace walks {

/// Statistic polynomial over all walks from (0,0) to (a,b), computed by
/// the predecessor recursion over lattice cells. Exact; agrees with the
/// brute-force oracle. Only a1 and a2 are locally incrementable; a3/a4
/// are served by the oracle.
ZPoly endpoint_poly_2d(const StepSet2& s, int a, int b, Stat stat);

/// Diagonal polynomials F_{n,n} for every n in `ns`, from a single sweep
/// to the largest requested endpoint. Entries for unreachable (n,n) are
/// the zero polynomial.
std::map<int, ZPoly> diagonal_polys(const StepSet2& s, Stat stat, const std::vector<int>& ns);

/// Statistic polynomial to (a,b,c) marking visits to one region (1..7).
ZPoly endpoint_poly_3d(const StepSet3& s, int a, int b, int c, int region);

}  // namespace walks
