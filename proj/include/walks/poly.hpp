#pragma once

#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "walks/arith.hpp"

namespace walks {

/// Dense univariate polynomial with exact coefficients, canonical form
/// (no trailing zero coefficient). The zero polynomial has an empty
/// coefficient vector and no degree.
template <typename C>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const C& constant) {  // NOLINT: implicit by design
    if (constant != 0) c_.push_back(constant);
  }
  Polynomial(long constant) : Polynomial(C(constant)) {}

  static Polynomial from_coeffs(std::vector<C> coeffs) {
    Polynomial p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }

  /// c * t^e
  static Polynomial monomial(const C& c, size_t e) {
    if (c == 0) return Polynomial();
    Polynomial p;
    p.c_.assign(e + 1, C(0));
    p.c_[e] = c;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  std::optional<size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  size_t size() const { return c_.size(); }
  std::span<const C> coeffs() const { return c_; }

  const C& coeff(size_t k) const {
    static const C zero(0);
    return k < c_.size() ? c_[k] : zero;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), C(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, C(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }

  friend Polynomial operator*(const C& s, const Polynomial& p) {
    if (s == 0) return Polynomial();
    Polynomial r(p);
    for (auto& c : r.c_) c *= s;
    return r;
  }
  friend Polynomial operator*(const Polynomial& p, const C& s) { return s * p; }

  /// p(t) * t^e
  Polynomial shifted(size_t e) const {
    if (is_zero() || e == 0) return *this;
    Polynomial r;
    r.c_.assign(c_.size() + e, C(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + e] = c_[i];
    return r;
  }

  C evaluate(const C& x) const {
    C acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  /// p(1): total mass of a counting polynomial.
  C at_one() const {
    C acc(0);
    for (const auto& c : c_) acc += c;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    Polynomial r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * C(static_cast<long>(i));
    r.trim();
    return r;
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      C a = c_[i];
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      bool unit = (a == 1);
      if (i == 0 || !unit) os << a;
      if (i > 0) {
        if (!unit) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<C> c_;
};

using ZPoly = Polynomial<BigInt>;
using QPoly = Polynomial<BigRat>;

inline QPoly to_rational(const ZPoly& p) {
  std::vector<BigRat> c;
  c.reserve(p.size());
  for (const auto& a : p.coeffs()) c.emplace_back(a);
  return QPoly::from_coeffs(std::move(c));
}

/// Fails (nullopt) if any coefficient has a denominator other than 1.
inline std::optional<ZPoly> to_integer(const QPoly& p) {
  std::vector<BigInt> c;
  c.reserve(p.size());
  for (const auto& a : p.coeffs()) {
    if (a.get_den() != 1) return std::nullopt;
    c.push_back(a.get_num());
  }
  return ZPoly::from_coeffs(std::move(c));
}

}  // namespace walks
