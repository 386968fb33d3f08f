#include "gpsa/digits.hpp"

#include <algorithm>
#include <sstream>

#include "gpsa/text.hpp"

namespace gpsa {

namespace {

BigInt pow_big(uint32_t p, uint32_t k) {
  BigInt r = 1;
  for (uint32_t i = 0; i < k; ++i) r *= p;
  return r;
}

}  // namespace

PAdicRational PAdicRational::from_integer(const BigInt& n) {
  require(n >= 0, Err::Domain, "negative exponent value");
  PAdicRational r;
  r.num = n;
  r.kexp = 0;
  return r;
}

PAdicRational PAdicRational::make(const BigInt& num, uint32_t kexp, uint32_t p) {
  require(num >= 0, Err::Domain, "negative exponent value");
  PAdicRational r;
  r.num = num;
  r.kexp = kexp;
  if (r.num == 0) {
    r.kexp = 0;
    return r;
  }
  while (r.kexp > 0 && r.num % p == 0) {
    r.num /= p;
    --r.kexp;
  }
  return r;
}

PAdicRational padic_add(const PAdicRational& a, const PAdicRational& b, uint32_t p) {
  uint32_t k = std::max(a.kexp, b.kexp);
  BigInt na = a.num * pow_big(p, k - a.kexp);
  BigInt nb = b.num * pow_big(p, k - b.kexp);
  return PAdicRational::make(na + nb, k, p);
}

PAdicRational padic_sub(const PAdicRational& a, const PAdicRational& b, uint32_t p) {
  uint32_t k = std::max(a.kexp, b.kexp);
  BigInt na = a.num * pow_big(p, k - a.kexp);
  BigInt nb = b.num * pow_big(p, k - b.kexp);
  require(na >= nb, Err::Domain, "exponent subtraction below zero");
  return PAdicRational::make(na - nb, k, p);
}

int padic_compare(const PAdicRational& a, const PAdicRational& b, uint32_t p) {
  uint32_t k = std::max(a.kexp, b.kexp);
  BigInt na = a.num * pow_big(p, k - a.kexp);
  BigInt nb = b.num * pow_big(p, k - b.kexp);
  if (na < nb) return -1;
  if (na > nb) return 1;
  return 0;
}

PAdicRational padic_scale_pk(const PAdicRational& a, int64_t k, uint32_t p) {
  if (a.is_zero()) return a;
  if (k >= 0) {
    uint32_t kk = static_cast<uint32_t>(k);
    if (kk >= a.kexp) return PAdicRational::make(a.num * pow_big(p, kk - a.kexp), 0, p);
    return PAdicRational::make(a.num, a.kexp - kk, p);
  }
  uint64_t kk = static_cast<uint64_t>(-k);
  require(a.kexp + kk <= UINT32_MAX, Err::Domain, "exponent denominator overflow");
  return PAdicRational::make(a.num, a.kexp + static_cast<uint32_t>(kk), p);
}

PAdicRational padic_scale_int(const PAdicRational& a, const BigInt& n, uint32_t p) {
  require(n >= 0, Err::Domain, "negative scale");
  return PAdicRational::make(a.num * n, a.kexp, p);
}

BigInt padic_floor(const PAdicRational& a, uint32_t p) { return a.num / pow_big(p, a.kexp); }

BigInt padic_ceil(const PAdicRational& a, uint32_t p) {
  BigInt d = pow_big(p, a.kexp);
  return (a.num + d - 1) / d;
}

PAdicRational padic_frac(const PAdicRational& a, uint32_t p) {
  BigInt d = pow_big(p, a.kexp);
  return PAdicRational::make(a.num % d, a.kexp, p);
}

PAdicRational padic_div_qi(const PAdicRational& a, uint32_t q, uint32_t i, uint32_t p) {
  uint64_t e = 0;
  uint32_t qq = q;
  while (qq > 1) {
    require(qq % p == 0, Err::Domain, "q is not a power of p");
    qq /= p;
    ++e;
  }
  return padic_scale_pk(a, -static_cast<int64_t>(e * i), p);
}

std::string CanonicalString::str() const {
  std::ostringstream os;
  for (uint32_t d : intpart) os << d;
  os << '.';
  for (uint32_t d : fracpart) os << d;
  return os.str();
}

CanonicalString canon_string(const PAdicRational& r, uint32_t p) {
  CanonicalString s;
  BigInt intval = padic_floor(r, p);
  while (intval > 0) {
    s.intpart.push_back(static_cast<uint32_t>(intval % p));
    intval /= p;
  }
  std::reverse(s.intpart.begin(), s.intpart.end());
  PAdicRational f = padic_frac(r, p);
  if (!f.is_zero()) {
    // f = m / p^k with 0 < m < p^k: exactly k digits, then trailing zeros drop
    BigInt m = f.num;
    uint32_t k = f.kexp;
    std::vector<uint32_t> digits(k, 0);
    for (uint32_t i = 0; i < k; ++i) {
      digits[k - 1 - i] = static_cast<uint32_t>(m % p);
      m /= p;
    }
    while (!digits.empty() && digits.back() == 0) digits.pop_back();
    s.fracpart = std::move(digits);
  }
  return s;
}

PAdicRational from_canonical(const CanonicalString& s, uint32_t p) {
  BigInt intval = 0;
  for (uint32_t d : s.intpart) {
    require(d < p, Err::Format, "digit out of range");
    intval = intval * p + d;
  }
  BigInt fracnum = 0;
  for (uint32_t d : s.fracpart) {
    require(d < p, Err::Format, "digit out of range");
    fracnum = fracnum * p + d;
  }
  uint32_t k = static_cast<uint32_t>(s.fracpart.size());
  return PAdicRational::make(intval * pow_big(p, k) + fracnum, k, p);
}

PAdicRational parse_radix_string(const std::string& s, uint32_t p) {
  CanonicalString c;
  bool seen_dot = false;
  for (char ch : s) {
    if (ch == '.') {
      require(!seen_dot, Err::Format, "second radix point in " + s);
      seen_dot = true;
      continue;
    }
    require(ch >= '0' && ch <= '9', Err::Format, "bad digit in " + s);
    uint32_t d = static_cast<uint32_t>(ch - '0');
    require(d < p, Err::Format, "digit out of range in " + s);
    (seen_dot ? c.fracpart : c.intpart).push_back(d);
  }
  return from_canonical(c, p);
}

std::string exponent_str(const PAdicRational& r, uint32_t p) {
  std::ostringstream os;
  if (r.kexp == 0) {
    os << r.num;
  } else {
    os << r.num << '/' << p << '^' << r.kexp;
  }
  return os.str();
}

PAdicRational parse_exponent(const std::string& s, uint32_t p) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    require(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos, Err::Format,
            "bad exponent: " + s);
    return PAdicRational::from_integer(BigInt(s));
  }
  std::string nums = trim_spaces(s.substr(0, slash));
  std::string dens = trim_spaces(s.substr(slash + 1));
  require(!nums.empty() && nums.find_first_not_of("0123456789") == std::string::npos, Err::Format,
          "bad exponent numerator: " + s);
  auto caret = dens.find('^');
  require(caret != std::string::npos, Err::Format,
          "exponent denominator must be p^k: " + s);
  std::string base = dens.substr(0, caret);
  std::string ks = dens.substr(caret + 1);
  uint32_t bp, kk;
  require(parse_u32(base, bp) && parse_u32(ks, kk), Err::Format, "bad exponent: " + s);
  require(bp == p, Err::Format, "exponent base does not match field characteristic: " + s);
  return PAdicRational::make(BigInt(nums), kk, p);
}

Rational::Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
  require(den > 0, Err::Domain, "nonpositive denominator");
  require(num >= 0, Err::Domain, "negative rational exponent");
  BigInt g = boost::multiprecision::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
}

Rational Rational::from_padic(const PAdicRational& r, uint32_t p) {
  return Rational(r.num, pow_big(p, r.kexp));
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
  BigInt n = num * o.den - o.num * den;
  require(n >= 0, Err::Domain, "rational subtraction below zero");
  return Rational(n, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}

std::optional<PAdicRational> Rational::to_padic(uint32_t p) const {
  BigInt d = den;
  uint32_t k = 0;
  while (d % p == 0) {
    d /= p;
    ++k;
  }
  if (d != 1) return std::nullopt;
  return PAdicRational::make(num, k, p);
}

std::string Rational::str() const {
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    require(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos, Err::Format,
            "bad rational: " + s);
    return Rational(BigInt(s), 1);
  }
  std::string nums = trim_spaces(s.substr(0, slash));
  std::string dens = trim_spaces(s.substr(slash + 1));
  if (dens.find('^') != std::string::npos) {
    auto caret = dens.find('^');
    uint32_t bp, kk;
    require(parse_u32(dens.substr(0, caret), bp) && parse_u32(dens.substr(caret + 1), kk),
            Err::Format, "bad rational: " + s);
    return Rational(BigInt(nums), pow_big(bp, kk));
  }
  require(!nums.empty() && nums.find_first_not_of("0123456789") == std::string::npos &&
              !dens.empty() && dens.find_first_not_of("0123456789") == std::string::npos,
          Err::Format, "bad rational: " + s);
  return Rational(BigInt(nums), BigInt(dens));
}

SabcWitness sabc_contains(const PAdicRational& r, const SabcParams& params, uint32_t p) {
  require(params.a >= 1, Err::Domain, "a must be positive");
  SabcWitness w;
  PAdicRational s = padic_scale_int(r, params.a, p);
  w.n = padic_ceil(s, p);
  // remainder = n - s lies in [0, 1); its fractional digits are the b_i
  PAdicRational rem =
      padic_sub(PAdicRational::from_integer(w.n), s, p);
  if (!rem.is_zero()) {
    CanonicalString cs = canon_string(rem, p);
    require(cs.intpart.empty(), Err::Internal, "ceil remainder not in [0,1)");
    w.digits = cs.fracpart;
  }
  for (uint32_t d : w.digits) w.digit_sum += d;
  w.member = (w.digit_sum <= params.c) && (w.n >= -params.b);
  return w;
}

}  // namespace gpsa
