#include "walks/lattice_enum.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace walks {

namespace {

// Losing-time increment for a step (dx,dy) arriving at (x,y): the new
// point is either strictly below the diagonal, or on it having arrived
// from strictly below (which, landing on the diagonal, is exactly
// dx < dy).
inline unsigned a1_increment(int x, int y, int dx, int dy) {
  if (y < x) return 1;
  if (y == x && dx < dy) return 1;
  return 0;
}

inline unsigned stat_increment(Stat stat, int x, int y, int dx, int dy) {
  switch (stat) {
    case Stat::a1: return a1_increment(x, y, dx, dy);
    case Stat::a2: return (y == x) ? 1 : 0;
    default: throw std::invalid_argument("endpoint_poly_2d: only a1 and a2 have a forward recursion");
  }
}

using Coeffs = std::vector<BigInt>;

// Column-major sweep keeping only the last max_dx+1 columns alive.
// capture(x, y, coeffs) is called for cells selected by want(x, y).
void sweep(const StepSet2& s, int a, int b, Stat stat,
           const std::function<bool(int, int)>& want,
           const std::function<void(int, int, const Coeffs&)>& capture) {
  const auto& steps = s.steps();
  const size_t depth = static_cast<size_t>(s.max_dx()) + 1;
  std::vector<std::vector<Coeffs>> ring(depth, std::vector<Coeffs>(static_cast<size_t>(b) + 1));

  for (int x = 0; x <= a; ++x) {
    auto& col = ring[static_cast<size_t>(x) % depth];
    for (int y = 0; y <= b; ++y) {
      Coeffs& out = col[static_cast<size_t>(y)];
      out.clear();
      if (x == 0 && y == 0) {
        out.assign(1, BigInt(1));
      } else {
        for (const auto& st : steps) {
          int px = x - st.dx, py = y - st.dy;
          if (px < 0 || py < 0) continue;
          const Coeffs& src = ring[static_cast<size_t>(px) % depth][static_cast<size_t>(py)];
          if (src.empty()) continue;
          unsigned e = stat_increment(stat, x, y, st.dx, st.dy);
          if (out.size() < src.size() + e) out.resize(src.size() + e, BigInt(0));
          for (size_t k = 0; k < src.size(); ++k) out[k + e] += src[k];
        }
      }
      if (want(x, y)) capture(x, y, out);
    }
  }
}

ZPoly poly_from(const Coeffs& c) {
  return ZPoly::from_coeffs(c);
}

}  // namespace

ZPoly endpoint_poly_2d(const StepSet2& s, int a, int b, Stat stat) {
  if (a < 0 || b < 0) throw std::invalid_argument("endpoint_poly_2d: negative endpoint");
  ZPoly result;
  sweep(
      s, a, b, stat, [&](int x, int y) { return x == a && y == b; },
      [&](int, int, const Coeffs& c) { result = poly_from(c); });
  return result;
}

std::map<int, ZPoly> diagonal_polys(const StepSet2& s, Stat stat, const std::vector<int>& ns) {
  std::map<int, ZPoly> out;
  if (ns.empty()) return out;
  int nmax = *std::max_element(ns.begin(), ns.end());
  int nmin = *std::min_element(ns.begin(), ns.end());
  if (nmin < 0) throw std::invalid_argument("diagonal_polys: negative n");
  std::vector<bool> wanted(static_cast<size_t>(nmax) + 1, false);
  for (int n : ns) wanted[static_cast<size_t>(n)] = true;
  sweep(
      s, nmax, nmax, stat,
      [&](int x, int y) { return x == y && wanted[static_cast<size_t>(x)]; },
      [&](int x, int, const Coeffs& c) { out[x] = poly_from(c); });
  return out;
}

ZPoly endpoint_poly_3d(const StepSet3& s, int a, int b, int c, int region) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("endpoint_poly_3d: negative endpoint");
  if (region < 1 || region > 7) throw std::invalid_argument("region must be in 1..7");
  const auto& steps = s.steps();
  int max_dx = 0;
  for (const auto& st : steps) max_dx = std::max(max_dx, st.dx);
  const size_t depth = static_cast<size_t>(max_dx) + 1;
  using Plane = std::vector<std::vector<Coeffs>>;
  std::vector<Plane> ring(
      depth, Plane(static_cast<size_t>(b) + 1, std::vector<Coeffs>(static_cast<size_t>(c) + 1)));

  ZPoly result;
  for (int x = 0; x <= a; ++x) {
    auto& plane = ring[static_cast<size_t>(x) % depth];
    for (int y = 0; y <= b; ++y) {
      for (int z = 0; z <= c; ++z) {
        Coeffs& out = plane[static_cast<size_t>(y)][static_cast<size_t>(z)];
        out.clear();
        if (x == 0 && y == 0 && z == 0) {
          out.assign(1, BigInt(1));
        } else {
          unsigned e = (classify_region_3d(x, y, z) == region) ? 1 : 0;
          for (const auto& st : steps) {
            int px = x - st.dx, py = y - st.dy, pz = z - st.dz;
            if (px < 0 || py < 0 || pz < 0) continue;
            const Coeffs& src =
                ring[static_cast<size_t>(px) % depth][static_cast<size_t>(py)][static_cast<size_t>(pz)];
            if (src.empty()) continue;
            if (out.size() < src.size() + e) out.resize(src.size() + e, BigInt(0));
            for (size_t k = 0; k < src.size(); ++k) out[k + e] += src[k];
          }
        }
        if (x == a && y == b && z == c) result = poly_from(out);
      }
    }
  }
  return result;
}

}  // namespace walks
