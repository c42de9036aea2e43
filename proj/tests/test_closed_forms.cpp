#include <doctest.h>

#include "walks/closed_forms.hpp"
#include "walks/lattice_enum.hpp"
#include "walks/oracle.hpp"

using namespace walks;

namespace {
const Step2 kR{1, 0};
const Step2 kU{0, 1};
}  // namespace

TEST_CASE("arcsine counts") {
  CHECK(arcsine_count(0, 0) == 1);
  CHECK(arcsine_count(1, 0) == 2);
  CHECK(arcsine_count(1, 1) == 2);
  CHECK(arcsine_count(2, 0) == 6);
  CHECK(arcsine_count(2, 1) == 4);
  CHECK(arcsine_count(2, 2) == 6);
  CHECK_THROWS_AS(arcsine_count(2, 3), std::out_of_range);

  for (unsigned n = 0; n <= 12; ++n) {
    BigInt total = 0;
    for (unsigned k = 0; k <= n; ++k) total += arcsine_count(n, k);
    CHECK(total == int_pow(BigInt(4), n));
  }
}

TEST_CASE("arcsine counts match the oracle a1 distribution over free walks") {
  StepSet2 ru({kR, kU});
  for (unsigned n = 1; n <= 6; ++n) {
    auto g = oracle_grand_poly(ru, 2 * n);
    ZPoly dist = g.marginal(Stat::a1);
    for (unsigned k = 0; k <= n; ++k) CHECK(dist.coeff(2 * k) == arcsine_count(n, k));
    for (size_t j = 1; j < dist.size(); j += 2) CHECK(dist.coeff(j) == 0);
  }
}

TEST_CASE("chung_feller_poly") {
  CHECK(chung_feller_poly(0) == ZPoly(1));
  CHECK(chung_feller_poly(1) == ZPoly::from_coeffs({BigInt(1), BigInt(0), BigInt(1)}));
  CHECK(chung_feller_poly(2) ==
        ZPoly::from_coeffs({BigInt(2), BigInt(0), BigInt(2), BigInt(0), BigInt(2)}));
  StepSet2 ru({kR, kU});
  for (unsigned n = 0; n <= 12; ++n)
    CHECK(chung_feller_poly(n) ==
          endpoint_poly_2d(ru, static_cast<int>(n), static_cast<int>(n), Stat::a1));
}

TEST_CASE("chung_feller_gf_coeff extracts the same polynomials") {
  CHECK(chung_feller_gf_coeff(0, 0) == ZPoly(1));
  CHECK(chung_feller_gf_coeff(1, 1) == chung_feller_poly(1));
  CHECK(chung_feller_gf_coeff(2, 2) == chung_feller_poly(2));
  for (unsigned n = 0; n <= 20; ++n) CHECK(chung_feller_gf_coeff(n, 20) == chung_feller_poly(n));
  CHECK_THROWS_AS(chung_feller_gf_coeff(5, 3), std::invalid_argument);
}

TEST_CASE("a2_gf_coeff matches the forward recursion") {
  CHECK(a2_gf_coeff(0, 0) == ZPoly(1));
  CHECK(a2_gf_coeff(1, 1) == ZPoly::from_coeffs({BigInt(0), BigInt(2)}));
  CHECK(a2_gf_coeff(2, 2) == ZPoly::from_coeffs({BigInt(0), BigInt(2), BigInt(4)}));
  StepSet2 ru({kR, kU});
  for (unsigned n = 0; n <= 20; ++n)
    CHECK(a2_gf_coeff(n, 20) ==
          endpoint_poly_2d(ru, static_cast<int>(n), static_cast<int>(n), Stat::a2));
}

TEST_CASE("king system small coefficients") {
  auto sys = solve_king_system(4);
  CHECK(to_integer(sys.f_k.coeff(0)) == ZPoly(1));
  CHECK(to_integer(sys.f_k.coeff(1)) == ZPoly::from_coeffs({BigInt(2), BigInt(0), BigInt(1)}));

  // t=1 diagonal counts from the oracle (central Delannoy numbers,
  // computed, not assumed)
  StepSet2 king({kR, kU, {1, 1}});
  std::vector<long> expected = {1, 3, 13, 63, 321};
  for (unsigned n = 0; n <= 4; ++n) {
    BigInt mass = oracle_endpoint_poly(king, static_cast<int>(n), static_cast<int>(n), Stat::a1).at_one();
    CHECK(mass == expected[n]);
    CHECK(sys.f_k.at_t_one().coeff(n) == QPoly(BigRat(mass)));
  }
}

TEST_CASE("king system matches the oracle polynomial per z order") {
  auto sys = solve_king_system(8);
  StepSet2 king({kR, kU, {1, 1}});
  for (unsigned n = 0; n <= 8; ++n) {
    auto from_series = to_integer(sys.f_k.coeff(n));
    REQUIRE(from_series.has_value());
    CHECK(*from_series ==
          oracle_endpoint_poly(king, static_cast<int>(n), static_cast<int>(n), Stat::a1));
  }
}

TEST_CASE("king system residuals vanish through order 12") {
  const size_t order = 12;
  auto sys = solve_king_system(order);
  auto zt_star = star(TruncatedSeries::zt(order));
  auto z_star = star(TruncatedSeries::z(order));
  QPoly t2 = QPoly::monomial(BigRat(1), 2);

  // Eq. (1): F_N = z t^2 Phi~
  CHECK(sys.f_n == TruncatedSeries::z(order) * (t2 * sys.phi_tilde));
  // Eq. (2): Phi~ = (zt)* (F_N (zt)*)*
  CHECK(sys.phi_tilde == zt_star * star(sys.f_n * zt_star));
  // F_P = F_N at t=1
  CHECK(sys.f_p == sys.f_n.at_t_one());
  // K identity
  CHECK(sys.f_k == z_star * star(sys.f_n * z_star + sys.f_p * z_star));
}
