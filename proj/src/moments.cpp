#include "walks/moments.hpp"

#include <stdexcept>

namespace walks {

std::string std_moment_decimal(const BigRat& signed_square, int precision) {
  return sqrt_to_decimal(signed_square, precision);
}

MomentReport moment_report(const ZPoly& f, unsigned max_moment, int precision, long n) {
  if (f.is_zero()) throw ZeroPolynomial("moment_report: zero polynomial");
  if (max_moment < 2) throw std::invalid_argument("moment_report: max moment must be >= 2");

  // Raw power sums R_j = sum_k c_k k^j, exactly.
  std::vector<BigInt> raw(max_moment + 1, BigInt(0));
  auto coeffs = f.coeffs();
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    BigInt p = 1;
    for (unsigned j = 0; j <= max_moment; ++j) {
      raw[j] += coeffs[k] * p;
      p *= static_cast<long>(k);
    }
  }

  MomentReport r;
  r.n = n;
  r.mass = raw[0];
  if (r.mass <= 0) throw ZeroPolynomial("moment_report: polynomial has nonpositive mass");
  BigRat mass_q(r.mass);
  r.mean = BigRat(raw[1]) / mass_q;
  r.mean.canonicalize();

  // Central moments via the binomial transform of the raw sums:
  //   m_j = (1/mass) * sum_i C(j,i) R_i (-mean)^(j-i)
  std::vector<BigRat> neg_mean_pow(max_moment + 1);
  neg_mean_pow[0] = 1;
  for (unsigned i = 1; i <= max_moment; ++i) neg_mean_pow[i] = neg_mean_pow[i - 1] * (-r.mean);
  std::vector<BigRat> central(max_moment + 1);
  for (unsigned j = 2; j <= max_moment; ++j) {
    BigRat acc(0);
    for (unsigned i = 0; i <= j; ++i) {
      acc += BigRat(binomial(j, i) * raw[i]) * neg_mean_pow[j - i];
    }
    central[j] = acc / mass_q;
    central[j].canonicalize();
  }

  r.variance = central[2];
  if (sign(r.variance) < 0) throw std::logic_error("moment_report: negative variance");
  if (sign(r.variance) == 0) {
    r.degenerate = true;
    return r;
  }

  BigRat var_pow = r.variance * r.variance;  // variance^k, starting at k=2
  for (unsigned k = 3; k <= max_moment; ++k) {
    var_pow *= r.variance;
    StdMoment m;
    m.k = k;
    m.signed_square = central[k] * central[k] / var_pow;
    m.signed_square.canonicalize();
    if (sign(central[k]) < 0) m.signed_square = -m.signed_square;
    m.decimal = std_moment_decimal(m.signed_square, precision);
    r.std_moments.push_back(std::move(m));
  }
  return r;
}

std::pair<BigRat, BigRat> a2_moment_check(unsigned n) {
  if (n < 1) throw std::invalid_argument("a2_moment_check: need n >= 1");
  BigInt fact_n = factorial(n);
  BigInt fact_2n = factorial(2 * n);
  BigInt four_n = int_pow(BigInt(4), n);
  BigInt sixteen_n = int_pow(BigInt(16), n);
  BigInt fn2 = fact_n * fact_n;

  BigRat mean(four_n * fn2 - fact_2n, fact_2n);
  mean.canonicalize();

  BigInt f2n_sq = fact_2n * fact_2n;
  BigInt num = sixteen_n * fn2 * fn2 + four_n * fn2 * fact_2n - 4 * n * f2n_sq - 2 * f2n_sq;
  BigRat variance(-num, f2n_sq);
  variance.canonicalize();
  return {mean, variance};
}

}  // namespace walks
