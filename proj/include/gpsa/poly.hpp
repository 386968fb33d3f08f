#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gpsa/field.hpp"

namespace gpsa {

// Polynomial in t over F_q. Coefficients are raw field reps, index = exponent;
// no trailing zeros (the zero polynomial has an empty coefficient vector and
// degree -1).
class Poly {
public:
  Poly() = default;
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<uint32_t> coeffs);

  static Poly zero(FieldPtr field) { return Poly(std::move(field)); }
  static Poly constant(FieldPtr field, uint32_t c);
  static Poly t(FieldPtr field) { return Poly(std::move(field), {0, 1}); }
  // single term c * t^k
  static Poly term(FieldPtr field, uint64_t k, uint32_t c);

  const FieldPtr& field() const { return field_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  uint32_t coeff(size_t k) const { return k < c_.size() ? c_[k] : 0; }
  uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
  // order of vanishing at t=0; -1 for the zero polynomial
  int valuation() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(uint32_t c) const;
  Poly shifted(uint64_t k) const;  // * t^k
  Poly pow(uint64_t n) const;
  // (quotient, remainder), deg rem < deg divisor
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly monic() const;
  uint32_t eval(uint32_t x) const;
  uint32_t eval_at_zero() const { return coeff(0); }
  Poly derivative() const;
  // coefficient-wise a -> a^{p^i}
  Poly coeff_frobenius(uint64_t i) const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // sparse "exp:coeff" term list, ascending exponents; "0" for zero
  std::string str() const;
  static Poly parse(const FieldPtr& field, const std::string& text);

private:
  void trim();
  FieldPtr field_;
  std::vector<uint32_t> c_;
};

Poly gcd(const Poly& a, const Poly& b);  // monic

// Rational function num/den over F_q(t); den monic and coprime to num.
class RatFunc {
public:
  RatFunc() = default;
  explicit RatFunc(Poly num);  // denominator 1
  RatFunc(Poly num, Poly den);

  static RatFunc zero(const FieldPtr& f) { return RatFunc(Poly::zero(f)); }
  static RatFunc one(const FieldPtr& f) { return RatFunc(Poly::constant(f, 1)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return den_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.degree() == 0; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  RatFunc scaled(uint32_t c) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // order at t=0 (negative for a pole); INT32_MIN sentinel for zero
  int valuation() const;

  std::string str() const;
  static RatFunc parse(const FieldPtr& field, const std::string& text);

private:
  void normalize();
  Poly num_, den_;
};

// Truncated power series: coefficients c_0..c_{D-1}, precision D. Arithmetic
// never reports digits at indices >= the resulting precision.
class TruncSeries {
public:
  TruncSeries() = default;
  TruncSeries(FieldPtr field, std::vector<uint32_t> coeffs)
      : field_(std::move(field)), c_(std::move(coeffs)) {}
  static TruncSeries zero(FieldPtr field, size_t precision) {
    return TruncSeries(std::move(field), std::vector<uint32_t>(precision, 0));
  }

  const FieldPtr& field() const { return field_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  size_t precision() const { return c_.size(); }
  uint32_t coeff(size_t k) const { return k < c_.size() ? c_[k] : 0; }
  bool is_zero() const;

  TruncSeries truncated(size_t precision) const;
  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries scaled(uint32_t c) const;
  TruncSeries shifted(size_t k) const;    // * t^k, precision grows by k
  TruncSeries mul_poly(const Poly& p) const;
  TruncSeries inverse() const;            // requires unit constant term
  TruncSeries p_power() const;            // x -> x^p (O(D))
  TruncSeries q_power(uint64_t i) const;  // x -> x^{q^i}
  TruncSeries pow(uint64_t n) const;

  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

  std::string str() const;  // comma-separated coefficient list
  static TruncSeries parse(const FieldPtr& field, const std::string& text);

private:
  FieldPtr field_;
  std::vector<uint32_t> c_;
};

// Base-q section operator: (cartier(f, r))_k = f_{qk+r}.
Poly cartier(const Poly& f, uint32_t r);
TruncSeries cartier(const TruncSeries& f, uint32_t r);
// For num/den computed as cartier(num * den^{q-1}, r) / den, re-normalized.
RatFunc cartier(const RatFunc& f, uint32_t r);

// Expansion of a rational function as a power series (denominator must be a
// unit at t=0).
TruncSeries expand(const RatFunc& f, size_t precision);

// Bivariate polynomial P(t, X) as a vector of X-coefficients in F_q[t].
class BivarPoly {
public:
  BivarPoly() = default;
  BivarPoly(FieldPtr field, std::vector<Poly> xcoeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<Poly>& xcoeffs() const { return x_; }
  int deg_x() const { return static_cast<int>(x_.size()) - 1; }
  Poly xcoeff(size_t j) const;
  bool is_zero() const { return x_.empty(); }

  BivarPoly derivative_x() const;
  TruncSeries eval(const TruncSeries& s, size_t precision) const;

  bool operator==(const BivarPoly& o) const { return x_ == o.x_; }

  // lines "X^j : <poly>", zero X-coefficients omitted
  std::string str() const;
  static BivarPoly parse(const FieldPtr& field, const std::string& text);

private:
  void trim();
  FieldPtr field_;
  std::vector<Poly> x_;
};

// Coefficient-wise root lifting: returns x with P(t,x) = 0 mod t^D extending
// prefix. The prefix must pin the root: with v the t-valuation of dP/dX at the
// root, the prefix must be longer than v and consistent with P.
TruncSeries series_root(const BivarPoly& P, const TruncSeries& prefix, size_t D);

}  // namespace gpsa
