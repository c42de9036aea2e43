#include "walks/series.hpp"

#include <algorithm>
#include <sstream>

namespace walks {

TruncatedSeries TruncatedSeries::truncated(size_t order) const {
  TruncatedSeries r(std::min(order, this->order()));
  for (size_t k = 0; k <= r.order(); ++k) r.c_[k] = c_[k];
  return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(order());
  for (size_t k = 0; k <= order(); ++k) r.c_[k] = -c_[k];
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (size_t k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (size_t k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (size_t i = 0; i <= r.order(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; i + j <= r.order(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
  }
  return r;
}

TruncatedSeries operator*(const QPoly& p, const TruncatedSeries& s) {
  TruncatedSeries r(s.order());
  for (size_t k = 0; k <= s.order(); ++k) r.c_[k] = p * s.c_[k];
  return r;
}

TruncatedSeries TruncatedSeries::at_t_one() const {
  TruncatedSeries r(order());
  for (size_t k = 0; k <= order(); ++k) r.c_[k] = QPoly(c_[k].evaluate(BigRat(1)));
  return r;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k <= order(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c_[k].to_string() << ")";
    if (k >= 1) os << "*z";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  if (first) os << "0";
  os << " + O(z^" << order() + 1 << ")";
  return os.str();
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
  const QPoly& p0 = f.coeff(0);
  if (p0.is_zero() || p0.coeff(0) == 0)
    throw ZeroConstantTerm("reciprocal: constant term is zero");
  if (p0.degree() != std::optional<size_t>(0))
    throw ZeroConstantTerm("reciprocal: z^0 coefficient involves t, result not a polynomial series");
  BigRat inv0 = 1 / p0.coeff(0);
  TruncatedSeries g(f.order());
  g.set_coeff(0, QPoly(inv0));
  for (size_t n = 1; n <= f.order(); ++n) {
    QPoly acc;
    for (size_t i = 1; i <= n; ++i) acc = acc + f.coeff(i) * g.coeff(n - i);
    g.set_coeff(n, (-inv0) * acc);
  }
  return g;
}

TruncatedSeries star(const TruncatedSeries& f) {
  if (!f.coeff(0).is_zero()) {
    if (f.coeff(0).coeff(0) != 0)
      throw NonzeroConstantTerm("star: scalar constant term must be 0");
    throw NonzeroConstantTerm("star: z^0 coefficient involves t, star leaves Q[t][[z]]");
  }
  return reciprocal(TruncatedSeries::one(f.order()) - f);
}

TruncatedSeries sqrt(const TruncatedSeries& f) {
  if (f.coeff(0) != QPoly(1))
    throw BadConstantTerm("sqrt: constant term must be exactly 1");
  TruncatedSeries g(f.order());
  g.set_coeff(0, QPoly(1));
  const BigRat half(1, 2);
  for (size_t n = 1; n <= f.order(); ++n) {
    QPoly acc;
    for (size_t i = 1; i + 1 <= n; ++i) acc = acc + g.coeff(i) * g.coeff(n - i);
    // F_n = 2*G_n + sum_{i=1}^{n-1} G_i G_{n-i}
    g.set_coeff(n, half * (f.coeff(n) - acc));
  }
  return g;
}

}  // namespace walks
