#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpsa/error.hpp"

namespace gpsa {

using BigInt = boost::multiprecision::cpp_int;

// Nonnegative element of Z[1/p]: value = num / p^kexp, canonical (p does not
// divide num unless num = 0, and num = 0 forces kexp = 0). The base p is
// contextual and passed to the operations.
struct PAdicRational {
  BigInt num = 0;
  uint32_t kexp = 0;

  static PAdicRational from_integer(const BigInt& n);
  static PAdicRational make(const BigInt& num, uint32_t kexp, uint32_t p);

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return kexp == 0; }

  bool operator==(const PAdicRational& o) const { return num == o.num && kexp == o.kexp; }
  bool operator!=(const PAdicRational& o) const { return !(*this == o); }
};

PAdicRational padic_add(const PAdicRational& a, const PAdicRational& b, uint32_t p);
// requires a >= b
PAdicRational padic_sub(const PAdicRational& a, const PAdicRational& b, uint32_t p);
int padic_compare(const PAdicRational& a, const PAdicRational& b, uint32_t p);
// value * p^k; k may be negative
PAdicRational padic_scale_pk(const PAdicRational& a, int64_t k, uint32_t p);
// value * n for a nonnegative integer
PAdicRational padic_scale_int(const PAdicRational& a, const BigInt& n, uint32_t p);
BigInt padic_floor(const PAdicRational& a, uint32_t p);
BigInt padic_ceil(const PAdicRational& a, uint32_t p);
PAdicRational padic_frac(const PAdicRational& a, uint32_t p);
// value / q^i when the result stays in Z[1/p]; q must be a power of p
PAdicRational padic_div_qi(const PAdicRational& a, uint32_t q, uint32_t i, uint32_t p);

// Base-p radix-point representation: integer digits most significant first,
// no leading zero; fractional digits with no trailing zero. Zero renders ".".
struct CanonicalString {
  std::vector<uint32_t> intpart;
  std::vector<uint32_t> fracpart;

  bool operator==(const CanonicalString& o) const {
    return intpart == o.intpart && fracpart == o.fracpart;
  }
  std::string str() const;
};

CanonicalString canon_string(const PAdicRational& r, uint32_t p);
PAdicRational parse_radix_string(const std::string& s, uint32_t p);
PAdicRational from_canonical(const CanonicalString& s, uint32_t p);

// "num/p^k" or a plain integer
std::string exponent_str(const PAdicRational& r, uint32_t p);
PAdicRational parse_exponent(const std::string& s, uint32_t p);

// General exact nonnegative rational, for truncated-series exponents that may
// leave Z[1/p] (rescaling by arbitrary integers).
struct Rational {
  BigInt num = 0;
  BigInt den = 1;

  Rational() = default;
  Rational(BigInt n, BigInt d);
  static Rational from_integer(const BigInt& n) { return Rational(n, 1); }
  static Rational from_padic(const PAdicRational& r, uint32_t p);

  bool is_zero() const { return num == 0; }
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;  // requires *this >= o
  Rational operator*(const Rational& o) const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
  bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }

  // in Z[1/p] iff den is a power of p
  std::optional<PAdicRational> to_padic(uint32_t p) const;

  std::string str() const;
  static Rational parse(const std::string& s);
};

// S_{a,b,c} membership parameters.
struct SabcParams {
  BigInt a = 1;
  BigInt b = 0;
  BigInt c = 0;
};

struct SabcWitness {
  bool member = false;
  BigInt n = 0;                  // the forced integer part, n = ceil(a*r)
  std::vector<uint32_t> digits;  // b_1, b_2, ... (position i multiplies p^-i)
  BigInt digit_sum = 0;
};

// Membership of r in S_{a,b,c}: a*r = n - sum b_i p^{-i} with n >= -b and
// sum b_i <= c. The finite digit sum is < 1, so n = ceil(a*r) is forced and
// the digits are read off the expansion of n - a*r.
SabcWitness sabc_contains(const PAdicRational& r, const SabcParams& params, uint32_t p);

}  // namespace gpsa
