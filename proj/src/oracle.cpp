#include "walks/oracle.hpp"

#include <functional>

namespace walks {

BigInt GrandPolynomial::total_mass() const {
  BigInt m = 0;
  for (const auto& [e, c] : terms) m += c;
  return m;
}

ZPoly GrandPolynomial::marginal(Stat which) const {
  size_t idx = static_cast<size_t>(which);
  std::vector<BigInt> coeffs;
  for (const auto& [e, c] : terms) {
    size_t k = e[idx];
    if (coeffs.size() <= k) coeffs.resize(k + 1, BigInt(0));
    coeffs[k] += c;
  }
  return ZPoly::from_coeffs(std::move(coeffs));
}

GrandPolynomial oracle_grand_poly(const StepSet2& s, unsigned n, std::uint64_t guard) {
  BigInt work = int_pow(BigInt(static_cast<long>(s.size())), n);
  if (work > guard)
    throw TooLarge("oracle_grand_poly: |S|^n = " + work.get_str() + " exceeds guard");

  GrandPolynomial g;
  g.length = n;
  Walk2 walk(n, s.steps().front());
  std::vector<size_t> odometer(n, 0);
  const auto& steps = s.steps();
  while (true) {
    StatVector v = compute_stats(walk);
    std::array<std::uint32_t, 4> key = {static_cast<std::uint32_t>(v.a1),
                                        static_cast<std::uint32_t>(v.a2),
                                        static_cast<std::uint32_t>(v.a3),
                                        static_cast<std::uint32_t>(v.a4)};
    g.terms[key] += 1;
    // advance the odometer
    size_t i = 0;
    while (i < n && odometer[i] + 1 == steps.size()) {
      odometer[i] = 0;
      walk[i] = steps[0];
      ++i;
    }
    if (i == n) break;
    ++odometer[i];
    walk[i] = steps[odometer[i]];
  }
  return g;
}

namespace {

struct BoxEnumerator {
  const StepSet2& s;
  int a, b;
  Stat stat;
  std::uint64_t guard;
  std::uint64_t nodes = 0;
  std::vector<std::vector<std::vector<BigInt>>> acc = {};  // [x][y] -> coeffs

  void record(int x, int y, std::uint64_t value) {
    auto& cell = acc[static_cast<size_t>(x)][static_cast<size_t>(y)];
    if (cell.size() <= value) cell.resize(value + 1, BigInt(0));
    cell[value] += 1;
  }

  // Depth-first over all walks inside the box; stat values maintained
  // incrementally (h = current height, h_prev = previous height).
  void visit(int x, int y, long h, long h_prev, const StatVector& v, unsigned depth) {
    if (++nodes > guard) throw TooLarge("oracle enumeration exceeded guard");
    std::uint64_t value = 0;
    switch (stat) {
      case Stat::a1: value = v.a1; break;
      case Stat::a2: value = v.a2; break;
      case Stat::a3: value = v.a3; break;
      case Stat::a4: value = v.a4; break;
    }
    record(x, y, value);
    for (const auto& st : s.steps()) {
      int nx = x + st.dx, ny = y + st.dy;
      if (nx > a || ny > b) continue;
      long nh = h + st.dy - st.dx;
      StatVector nv = v;
      if (nh < 0 || (nh == 0 && h < 0)) ++nv.a1;
      if (nh == 0) {
        ++nv.a2;
        nv.a3 = depth + 1;
      }
      if (depth >= 1 && h_prev != 0 && nh != 0 && ((h_prev < 0) != (nh < 0))) ++nv.a4;
      visit(nx, ny, nh, h, nv, depth + 1);
    }
  }
};

struct BoxEnumerator3 {
  const StepSet3& s;
  int a, b, c;
  int region;
  std::uint64_t guard;
  std::uint64_t nodes = 0;
  std::vector<std::vector<std::vector<std::vector<BigInt>>>> acc = {};  // [x][y][z] -> coeffs

  void record(int x, int y, int z, std::uint64_t value) {
    auto& cell = acc[static_cast<size_t>(x)][static_cast<size_t>(y)][static_cast<size_t>(z)];
    if (cell.size() <= value) cell.resize(value + 1, BigInt(0));
    cell[value] += 1;
  }

  void visit(int x, int y, int z, std::uint64_t visits) {
    if (++nodes > guard) throw TooLarge("oracle enumeration exceeded guard");
    record(x, y, z, visits);
    for (const auto& st : s.steps()) {
      int nx = x + st.dx, ny = y + st.dy, nz = z + st.dz;
      if (nx > a || ny > b || nz > c) continue;
      std::uint64_t nvisits = visits + (classify_region_3d(nx, ny, nz) == region ? 1 : 0);
      visit(nx, ny, nz, nvisits);
    }
  }
};

}  // namespace

std::vector<std::vector<ZPoly>> oracle_box_polys(const StepSet2& s, int a, int b, Stat stat,
                                                 std::uint64_t guard) {
  if (a < 0 || b < 0) throw std::invalid_argument("oracle_box_polys: negative corner");
  BoxEnumerator e{s, a, b, stat, guard};
  e.acc.assign(static_cast<size_t>(a) + 1,
               std::vector<std::vector<BigInt>>(static_cast<size_t>(b) + 1));
  e.visit(0, 0, 0, 0, StatVector{}, 0);
  std::vector<std::vector<ZPoly>> out(static_cast<size_t>(a) + 1,
                                      std::vector<ZPoly>(static_cast<size_t>(b) + 1));
  for (size_t x = 0; x <= static_cast<size_t>(a); ++x)
    for (size_t y = 0; y <= static_cast<size_t>(b); ++y)
      out[x][y] = ZPoly::from_coeffs(std::move(e.acc[x][y]));
  return out;
}

ZPoly oracle_endpoint_poly(const StepSet2& s, int a, int b, Stat stat, std::uint64_t guard) {
  auto box = oracle_box_polys(s, a, b, stat, guard);
  return box[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

std::vector<std::vector<std::vector<ZPoly>>> oracle_box_polys_3d(const StepSet3& s, int a, int b,
                                                                 int c, int region,
                                                                 std::uint64_t guard) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("oracle_box_polys_3d: negative corner");
  if (region < 1 || region > 7) throw std::invalid_argument("region must be in 1..7");
  BoxEnumerator3 e{s, a, b, c, region, guard};
  e.acc.assign(static_cast<size_t>(a) + 1,
               std::vector<std::vector<std::vector<BigInt>>>(
                   static_cast<size_t>(b) + 1,
                   std::vector<std::vector<BigInt>>(static_cast<size_t>(c) + 1)));
  e.visit(0, 0, 0, 0);
  std::vector<std::vector<std::vector<ZPoly>>> out(
      static_cast<size_t>(a) + 1,
      std::vector<std::vector<ZPoly>>(static_cast<size_t>(b) + 1,
                                      std::vector<ZPoly>(static_cast<size_t>(c) + 1)));
  for (size_t x = 0; x <= static_cast<size_t>(a); ++x)
    for (size_t y = 0; y <= static_cast<size_t>(b); ++y)
      for (size_t z = 0; z <= static_cast<size_t>(c); ++z)
        out[x][y][z] = ZPoly::from_coeffs(std::move(e.acc[x][y][z]));
  return out;
}

ZPoly oracle_endpoint_poly_3d(const StepSet3& s, int a, int b, int c, int region,
                              std::uint64_t guard) {
  auto box = oracle_box_polys_3d(s, a, b, c, region, guard);
  return box[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(c)];
}

}  // namespace walks
