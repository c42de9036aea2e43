#include <doctest.h>

#include "walks/arith.hpp"

using namespace walks;

TEST_CASE("binomial and factorial basics") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(400, 200) % 2 == 0);
  CHECK(factorial(6) == 720);
  CHECK(int_pow(BigInt(4), 8) == 65536);
}

TEST_CASE("exact decimal rendering truncates") {
  CHECK(to_decimal(BigRat(1, 3), 10) == "0.3333333333");
  CHECK(to_decimal(BigRat(-5, 2), 4) == "-2.500");
  CHECK(to_decimal(BigRat(2, 1), 3) == "2.00");
  // 1/3 + 2/330 = 0.339393...: truncated, never rounded up
  BigRat r = BigRat(1, 3) + BigRat(2, 330);
  CHECK(to_decimal(r, 6) == "0.339393");
  CHECK(to_decimal(BigRat(0), 5) == "0.00000");
  CHECK(to_decimal(BigRat(1, 3000), 3) == "0.000333");
}

TEST_CASE("sqrt rendering: exact squares take the exact path") {
  CHECK(sqrt_to_decimal(BigRat(81, 25), 5) == "1.8000");
  CHECK(sqrt_to_decimal(BigRat(-81, 25), 5) == "-1.8000");  // sign(m_k) convention
  CHECK(sqrt_to_decimal(BigRat(0), 4) == "0.0000");
  BigRat root;
  CHECK(exact_sqrt(BigRat(49, 9), root));
  CHECK(root == BigRat(7, 3));
  CHECK_FALSE(exact_sqrt(BigRat(2), root));
}

TEST_CASE("sqrt rendering: irrational values") {
  // sqrt(2) = 1.41421356237309504880...
  CHECK(sqrt_to_decimal(BigRat(2), 12) == "1.41421356237");
  // sqrt(1/2) = 0.70710678...
  CHECK(sqrt_to_decimal(BigRat(1, 2), 8) == "0.70710678");
}

TEST_CASE("rational canonicalization invariant") {
  BigRat a(6, 8);
  a.canonicalize();
  CHECK(a.get_num() == 3);
  CHECK(a.get_den() == 4);
  BigRat b = a * BigRat(8, 3);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
  CHECK(g == 1);
  CHECK(b.get_den() > 0);
}
