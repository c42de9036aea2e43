#include <doctest.h>

#include <random>

#include "walks/lattice_enum.hpp"
#include "walks/moments.hpp"

using namespace walks;

namespace {
const Step2 kR{1, 0};
const Step2 kU{0, 1};
}  // namespace

TEST_CASE("moment_report basics") {
  // a1 at n=1: F = 1 + t^2, mean 1, variance 1 (Prop-1 values at n=1)
  auto r = moment_report(ZPoly::from_coeffs({BigInt(1), BigInt(0), BigInt(1)}), 4);
  CHECK(r.mass == 2);
  CHECK(r.mean == BigRat(1));
  CHECK(r.variance == BigRat(1));
  CHECK_FALSE(r.degenerate);

  // a1 at n=2: F = 2 + 2t^2 + 2t^4, mean 2, variance 8/3
  auto r2 = moment_report(
      ZPoly::from_coeffs({BigInt(2), BigInt(0), BigInt(2), BigInt(0), BigInt(2)}), 4);
  CHECK(r2.mean == BigRat(2));
  CHECK(r2.variance == BigRat(8, 3));

  // point mass: degenerate marker
  auto r3 = moment_report(ZPoly::monomial(BigInt(5), 3), 6);
  CHECK(r3.mean == BigRat(3));
  CHECK(r3.variance == BigRat(0));
  CHECK(r3.degenerate);
  CHECK(r3.std_moments.empty());

  CHECK_THROWS_AS(moment_report(ZPoly(), 4), ZeroPolynomial);
  CHECK_THROWS_AS(moment_report(ZPoly(1), 1), std::invalid_argument);
}

TEST_CASE("mean * mass = F'(1) on random polynomials") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> coeff(0, 9);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BigInt> cs;
    size_t d = 1 + rng() % 12;
    bool nonzero = false;
    for (size_t i = 0; i <= d; ++i) {
      int c = coeff(rng);
      cs.emplace_back(c);
      nonzero |= c != 0;
    }
    if (!nonzero) cs[0] = 1;
    ZPoly f = ZPoly::from_coeffs(cs);
    auto r = moment_report(f, 2);
    CHECK(r.mean * BigRat(f.at_one()) == BigRat(f.derivative().at_one()));
  }
}

TEST_CASE("Proposition 1: exact mean n and variance n^2/3 + 2n/3 up to n=30") {
  StepSet2 ru({kR, kU});
  for (long n = 1; n <= 30; ++n) {
    auto f = endpoint_poly_2d(ru, static_cast<int>(n), static_cast<int>(n), Stat::a1);
    auto r = moment_report(f, 3, 12, n);
    CHECK(r.mean == BigRat(n));
    BigRat expected_var(n * n + 2 * n, 3);
    expected_var.canonicalize();
    CHECK(r.variance == expected_var);
    // uniform even distribution: odd standardized moments vanish exactly
    CHECK(r.std_moments[0].signed_square == BigRat(0));
  }
}

TEST_CASE("Proposition 2 closed forms: a2 mean and variance") {
  auto [m1, v1] = a2_moment_check(1);
  CHECK(m1 == BigRat(1));
  CHECK(v1 == BigRat(0));
  auto [m2, v2] = a2_moment_check(2);
  CHECK(m2 == BigRat(5, 3));
  CHECK(v2 == BigRat(2, 9));

  StepSet2 ru({kR, kU});
  for (unsigned n = 1; n <= 30; ++n) {
    auto f = endpoint_poly_2d(ru, static_cast<int>(n), static_cast<int>(n), Stat::a2);
    auto r = moment_report(f, 2);
    auto [mean, variance] = a2_moment_check(n);
    CHECK(r.mean == mean);
    CHECK(r.variance == variance);
  }
}

TEST_CASE("odd standardized moments vanish for symmetric families") {
  StepSet2 ru({kR, kU});
  StepSet2 evens({{0, 2}, {2, 0}});
  for (const auto& s : {ru, evens}) {
    for (int n = 2; n <= 30; ++n) {
      auto f = endpoint_poly_2d(s, n, n, Stat::a1);
      if (f.is_zero()) continue;
      auto r = moment_report(f, 5, 12, n);
      if (r.degenerate) continue;
      CHECK(r.std_moments[0].signed_square == BigRat(0));  // m3
      CHECK(r.std_moments[2].signed_square == BigRat(0));  // m5
    }
  }
}

TEST_CASE("King walks are genuinely skewed at n=1") {
  // distribution {0,0,2}: mean 2/3, variance 8/9, m3 = 16/27. Kept as a
  // regression against accidentally "symmetrizing" the statistics: the
  // King family is reflect-closed yet not symmetric about its mean.
  auto r = moment_report(ZPoly::from_coeffs({BigInt(2), BigInt(0), BigInt(1)}), 3);
  CHECK(r.mean == BigRat(2, 3));
  CHECK(r.variance == BigRat(8, 9));
  BigRat expected = BigRat(16 * 16, 27 * 27) / (BigRat(8, 9) * BigRat(8, 9) * BigRat(8, 9));
  CHECK(r.std_moments[0].signed_square == expected);
}

TEST_CASE("standardized moment decimals agree with exact rationals") {
  // uniform {0,2,4}: variance 8/3, m4 = 32/3, s4 = (32/3)/(8/3)^2 = 3/2
  auto r = moment_report(ZPoly::from_coeffs({BigInt(1), BigInt(0), BigInt(1), BigInt(0), BigInt(1)}), 4, 10);
  CHECK(r.std_moments[1].signed_square == BigRat(9, 4));
  CHECK(r.std_moments[1].decimal == "1.500000000");
}
