#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpsa/digits.hpp"
#include "gpsa/gps.hpp"
#include "gpsa/poly.hpp"

namespace gpsa {

struct TruncGpsTerm {
  Rational exponent;
  uint32_t coeff = 0;
};

// Exact finite truncation of a generalized power series: every coefficient at
// exponents below the frontier is represented (absent terms are zero). A
// missing frontier means the value is exact everywhere (polynomial case).
class TruncGps {
public:
  TruncGps() = default;
  TruncGps(FieldPtr field, std::vector<TruncGpsTerm> terms, std::optional<Rational> frontier);

  static TruncGps zero(FieldPtr field, std::optional<Rational> frontier);
  static TruncGps from_poly(const Poly& p);  // exact, integer exponents
  // coefficients below the bound read off an automaton; fails when more than
  // max_terms support elements lie below the bound (accumulation point) or
  // the enumeration budget runs out
  static TruncGps from_automaton(const GpsAutomaton& x, const Rational& bound,
                                 size_t max_terms, size_t step_budget);

  const FieldPtr& field() const { return field_; }
  const std::vector<TruncGpsTerm>& terms() const { return terms_; }
  const std::optional<Rational>& frontier() const { return frontier_; }
  bool is_zero() const { return terms_.empty(); }

  uint32_t coeff(const Rational& e) const;
  // all exponents lie in Z[1/p]
  bool automaton_representable(uint32_t p) const;

  TruncGps operator+(const TruncGps& o) const;
  TruncGps operator-(const TruncGps& o) const;
  TruncGps operator*(const TruncGps& o) const;
  TruncGps pow(uint64_t n) const;
  TruncGps scaled(uint32_t c) const;
  // exponents multiplied by a positive rational m
  TruncGps scale_exponents(const Rational& m) const;
  // P(t, x) truncated at the common frontier
  TruncGps substitute(const BivarPoly& P) const;

  bool operator==(const TruncGps& o) const {
    return terms_ == o.terms_ && frontier_ == o.frontier_;
  }

  std::string str(uint32_t p) const;  // "gps v1" file body
  static TruncGps parse(const std::string& text);

private:
  void normalize();
  FieldPtr field_;
  std::vector<TruncGpsTerm> terms_;
  std::optional<Rational> frontier_;
};

inline bool operator==(const TruncGpsTerm& a, const TruncGpsTerm& b) {
  return a.exponent == b.exponent && a.coeff == b.coeff;
}

}  // namespace gpsa
