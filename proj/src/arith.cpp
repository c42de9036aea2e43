#include "walks/arith.hpp"

#include <cassert>
#include <stdexcept>

namespace walks {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

namespace {

// Digits of num/den truncated to `significant` significant digits.
// Produces a plain decimal string (no exponent); our domain is moment
// ratios and fitted constants, all of moderate magnitude.
std::string decimal_digits(const BigInt& num, const BigInt& den, int significant, bool negative) {
  assert(den > 0 && num >= 0);
  std::string out = negative ? "-" : "";
  BigInt ip = num / den;
  BigInt rem = num % den;
  std::string ipart = ip.get_str();
  out += ipart;
  int used = (ip == 0) ? 0 : static_cast<int>(ipart.size());
  if (used >= significant) return out;  // big integer part: no fractional digits
  out += '.';
  while (used < significant) {
    rem *= 10;
    BigInt d = rem / den;
    rem %= den;
    char c = static_cast<char>('0' + d.get_ui());
    out += c;
    if (used > 0 || c != '0') ++used;
  }
  return out;
}

}  // namespace

std::string to_decimal(const BigRat& q, int significant) {
  if (significant < 1) throw std::invalid_argument("to_decimal: need at least one digit");
  if (sign(q) == 0) return "0." + std::string(static_cast<size_t>(significant), '0');
  BigInt num = abs(q.get_num());
  return decimal_digits(num, q.get_den(), significant, sign(q) < 0);
}

bool exact_sqrt(const BigRat& q, BigRat& out) {
  if (sign(q) < 0) return false;
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  out = BigRat(rn, rd);
  out.canonicalize();
  return true;
}

std::string sqrt_to_decimal(const BigRat& q, int significant) {
  bool neg = sign(q) < 0;
  BigRat a = abs(q);
  BigRat root;
  if (exact_sqrt(a, root)) {
    if (neg) root = -root;
    return to_decimal(root, significant);
  }
  // Irrational: 50+ guard digits, then truncate the digit string.
  const int guard = significant + 50;
  mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(guard * 4 + 64);
  mpf_class fn(a.get_num(), bits), fd(a.get_den(), bits);
  mpf_class v(0, bits);
  v = fn / fd;
  mpf_class r(0, bits);
  r = sqrt(v);
  mp_exp_t exp10 = 0;
  std::string digits = r.get_str(exp10, 10, static_cast<size_t>(guard));
  // Reassemble a plain decimal from mantissa digits and base-10 exponent.
  std::string out = neg ? "-" : "";
  if (digits.empty()) digits = "0";
  if (exp10 <= 0) {
    out += "0.";
    out += std::string(static_cast<size_t>(-exp10), '0');
    out += digits;
  } else if (static_cast<size_t>(exp10) >= digits.size()) {
    out += digits + std::string(static_cast<size_t>(exp10) - digits.size(), '0');
  } else {
    out += digits.substr(0, static_cast<size_t>(exp10)) + "." + digits.substr(static_cast<size_t>(exp10));
  }
  // Truncate to the requested number of significant digits.
  int seen = 0;
  size_t cut = out.size();
  bool any = false;
  for (size_t i = 0; i < out.size(); ++i) {
    char c = out[i];
    if (c >= '1' && c <= '9') any = true;
    if (c >= '0' && c <= '9' && any) ++seen;
    if (seen == significant) {
      cut = i + 1;
      break;
    }
  }
  out = out.substr(0, cut);
  if (out.find('.') == std::string::npos) out += '.';
  return out;
}

}  // namespace walks
