#include "walks/closed_forms.hpp"

#include <stdexcept>

namespace walks {

BigInt catalan(unsigned n) {
  return binomial(2 * n, n) / (n + 1);
}

BigInt arcsine_count(unsigned n, unsigned k) {
  if (k > n) throw std::out_of_range("arcsine_count: k out of range");
  return binomial(2 * k, k) * binomial(2 * (n - k), n - k);
}

ZPoly chung_feller_poly(unsigned n) {
  BigInt c = catalan(n);
  std::vector<BigInt> coeffs(2 * n + 1, BigInt(0));
  for (unsigned k = 0; k <= n; ++k) coeffs[2 * k] = c;
  return ZPoly::from_coeffs(std::move(coeffs));
}

namespace {

ZPoly integer_coeff(const TruncatedSeries& s, unsigned n, const char* what) {
  auto p = to_integer(s.coeff(n));
  if (!p) throw std::logic_error(std::string(what) + ": coefficient is not integral");
  return *p;
}

// 1 + c * z for a polynomial c in t.
TruncatedSeries one_plus_z_times(size_t order, QPoly c) {
  TruncatedSeries s = TruncatedSeries::one(order);
  if (order >= 1) s.set_coeff(1, std::move(c));
  return s;
}

}  // namespace

ZPoly chung_feller_gf_coeff(unsigned n, size_t order) {
  if (order < n) throw std::invalid_argument("chung_feller_gf_coeff: order < n");
  TruncatedSeries a = sqrt(one_plus_z_times(order, QPoly(-4)));
  TruncatedSeries b = sqrt(one_plus_z_times(order, QPoly::monomial(BigRat(-4), 2)));
  TruncatedSeries gf = BigRat(2) * reciprocal(a + b);
  return integer_coeff(gf, n, "chung_feller_gf_coeff");
}

ZPoly a2_gf_coeff(unsigned n, size_t order) {
  if (order < n) throw std::invalid_argument("a2_gf_coeff: order < n");
  QPoly t = QPoly::monomial(BigRat(1), 1);
  TruncatedSeries root = sqrt(one_plus_z_times(order, QPoly(-4)));
  // t*sqrt(1-4z) - t + 1
  TruncatedSeries denom = t * root;
  denom.set_coeff(0, denom.coeff(0) - t + QPoly(1));
  return integer_coeff(reciprocal(denom), n, "a2_gf_coeff");
}

KingSystem solve_king_system(size_t order) {
  const TruncatedSeries zt_star = star(TruncatedSeries::zt(order));
  const QPoly t2 = QPoly::monomial(BigRat(1), 2);

  // Each right-hand occurrence of f_n carries a factor z, so each pass
  // pins one more z order; order+1 passes reach the fixed point.
  TruncatedSeries f_n(order);
  TruncatedSeries phi(order);
  for (size_t pass = 0; pass <= order + 1; ++pass) {
    phi = zt_star * star(f_n * zt_star);
    TruncatedSeries next = TruncatedSeries::z(order) * (t2 * phi);
    if (next == f_n) break;
    if (pass == order + 1) throw NonConvergence("king system did not stabilize");
    f_n = next;
  }

  KingSystem sys{order, f_n, phi, f_n.at_t_one(), TruncatedSeries(order)};
  const TruncatedSeries z_star = star(TruncatedSeries::z(order));
  sys.f_k = z_star * star(sys.f_n * z_star + sys.f_p * z_star);
  return sys;
}

}  // namespace walks
