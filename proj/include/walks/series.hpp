#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "walks/poly.hpp"

namespace walks {

struct SeriesDomainError : std::domain_error {
  using std::domain_error::domain_error;
};
/// star() needs a vanishing constant term (formal convergence).
struct NonzeroConstantTerm : SeriesDomainError {
  using SeriesDomainError::SeriesDomainError;
};
/// sqrt() needs constant term exactly 1.
struct BadConstantTerm : SeriesDomainError {
  using SeriesDomainError::SeriesDomainError;
};
/// reciprocal() needs an invertible constant term.
struct ZeroConstantTerm : SeriesDomainError {
  using SeriesDomainError::SeriesDomainError;
};

/// Power series in z truncated at a fixed order, with coefficients that
/// are exact polynomials in t over the rationals: an element of Q[t][[z]]
/// known modulo z^(order+1). Operations on series of different orders
/// truncate to the smaller order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(size_t order) : c_(order + 1) {}

  static TruncatedSeries constant(size_t order, const BigRat& v) {
    TruncatedSeries s(order);
    s.c_[0] = QPoly(v);
    return s;
  }
  static TruncatedSeries one(size_t order) { return constant(order, BigRat(1)); }
  /// coeff * z^k
  static TruncatedSeries monomial(size_t order, size_t k, QPoly coeff) {
    TruncatedSeries s(order);
    if (k <= order) s.c_[k] = std::move(coeff);
    return s;
  }
  /// z
  static TruncatedSeries z(size_t order) { return monomial(order, 1, QPoly(1)); }
  /// z*t
  static TruncatedSeries zt(size_t order) { return monomial(order, 1, QPoly::monomial(BigRat(1), 1)); }

  size_t order() const { return c_.size() - 1; }
  const QPoly& coeff(size_t k) const { return c_.at(k); }
  void set_coeff(size_t k, QPoly p) { c_.at(k) = std::move(p); }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

  TruncatedSeries truncated(size_t order) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const QPoly& p, const TruncatedSeries& s);
  friend TruncatedSeries operator*(const TruncatedSeries& s, const QPoly& p) { return p * s; }
  friend TruncatedSeries operator*(const BigRat& r, const TruncatedSeries& s) { return QPoly(r) * s; }

  /// Substitute t := 1 in every coefficient polynomial.
  TruncatedSeries at_t_one() const;

  std::string to_string() const;

 private:
  std::vector<QPoly> c_;
};

/// 1/F. Requires the z^0 coefficient of F to be a nonzero scalar; a
/// z^0 term that genuinely involves t has no polynomial reciprocal, so
/// the result would leave Q[t][[z]].
TruncatedSeries reciprocal(const TruncatedSeries& f);

/// Kleene star F* = 1 + F + F^2 + ... = 1/(1-F). Requires the z^0
/// coefficient of F to vanish identically: a nonzero scalar diverges,
/// and a t-dependent z^0 term would require infinitely many powers of t
/// per z order.
TruncatedSeries star(const TruncatedSeries& f);

/// G with G*G = F and G(0) = 1. Requires constant term exactly 1.
TruncatedSeries sqrt(const TruncatedSeries& f);

}  // namespace walks
