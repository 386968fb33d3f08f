#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpsa/digits.hpp"
#include "test_util.hpp"

using namespace gpsa;

namespace {

// Independent membership oracle: search over n and digit vectors directly.
bool sabc_brute(const PAdicRational& r, const SabcParams& params, uint32_t p,
                uint32_t max_positions) {
  PAdicRational s = padic_scale_int(r, params.a, p);
  BigInt nmax = padic_ceil(s, p) + 2;
  std::vector<uint32_t> digits(max_positions, 0);
  // enumerate digit vectors with sum <= c by recursion
  std::function<bool(uint32_t, BigInt)> rec = [&](uint32_t pos, BigInt used) -> bool {
    if (pos == max_positions) {
      // value = sum digits[i] p^{-(i+1)}
      BigInt num = 0;
      for (uint32_t i = 0; i < max_positions; ++i) num = num * p + digits[i];
      PAdicRational dsum = PAdicRational::make(num, max_positions, p);
      for (BigInt n = 0; n <= nmax; ++n) {
        if (n < -params.b) continue;
        // n - dsum == s?
        PAdicRational lhs;
        if (padic_compare(PAdicRational::from_integer(n), dsum, p) < 0) continue;
        lhs = padic_sub(PAdicRational::from_integer(n), dsum, p);
        if (lhs == s) return true;
      }
      return false;
    }
    for (uint32_t d = 0; d < p; ++d) {
      if (used + d > params.c) break;
      digits[pos] = d;
      if (rec(pos + 1, used + d)) return true;
    }
    digits[pos] = 0;
    return false;
  };
  return rec(0, 0);
}

}  // namespace

TEST_CASE("canonical strings: worked examples, p=2") {
  uint32_t p = 2;
  CHECK(canon_string(PAdicRational::make(5, 1, p), p).str() == "10.1");
  CHECK(canon_string(PAdicRational::from_integer(0), p).str() == ".");
  CHECK(canon_string(PAdicRational::make(7, 3, p), p).str() == ".111");
  CHECK(canon_string(PAdicRational::from_integer(5), p).str() == "101.");
  CHECK(parse_radix_string("10.1", p) == PAdicRational::make(5, 1, p));
  CHECK(parse_radix_string(".", p) == PAdicRational::from_integer(0));
}

TEST_CASE("string round trip on random values") {
  auto gen = testutil::rng();
  for (uint32_t p : {2u, 3u, 5u}) {
    for (int i = 0; i < 10000 / 3; ++i) {
      PAdicRational r = PAdicRational::make(BigInt(gen() % 100000), gen() % 12, p);
      CanonicalString s = canon_string(r, p);
      CHECK(from_canonical(s, p) == r);
      CHECK(parse_radix_string(s.str(), p) == r);
      // canonical invariants
      if (!s.intpart.empty()) CHECK(s.intpart.front() != 0);
      if (!s.fracpart.empty()) CHECK(s.fracpart.back() != 0);
    }
  }
}

TEST_CASE("exponent arithmetic examples") {
  uint32_t p = 2;
  PAdicRational a = PAdicRational::make(3, 2, p);  // 3/4
  PAdicRational b = PAdicRational::make(1, 2, p);  // 1/4
  CHECK(padic_add(a, b, p) == PAdicRational::from_integer(1));
  CHECK(padic_scale_pk(a, 2, p) == PAdicRational::from_integer(3));
  CHECK(padic_compare(PAdicRational::make(31, 5, p), PAdicRational::from_integer(1), p) < 0);
  CHECK(padic_sub(a, b, p) == PAdicRational::make(1, 1, p));
  CHECK_THROWS_AS(padic_sub(b, a, p), Error);
  CHECK(padic_floor(a, p) == 0);
  CHECK(padic_ceil(a, p) == 1);
  CHECK(padic_frac(PAdicRational::make(5, 1, p), p) == PAdicRational::make(1, 1, p));
  CHECK(padic_div_qi(PAdicRational::from_integer(3), 4, 1, p) == PAdicRational::make(3, 2, p));
}

TEST_CASE("exponent text form") {
  uint32_t p = 2;
  CHECK(exponent_str(PAdicRational::make(7, 3, p), p) == "7/2^3");
  CHECK(exponent_str(PAdicRational::from_integer(6), p) == "6");
  CHECK(parse_exponent("7/2^3", p) == PAdicRational::make(7, 3, p));
  CHECK(parse_exponent("6", p) == PAdicRational::from_integer(6));
  CHECK_THROWS_AS(parse_exponent("7/3^2", p), Error);
}

TEST_CASE("sabc membership: worked examples, p=2") {
  uint32_t p = 2;
  SabcParams one{1, 0, 1};
  auto w = sabc_contains(PAdicRational::make(3, 2, p), one, p);  // 3/4 = 1 - 1/4
  CHECK(w.member);
  CHECK(w.n == 1);
  REQUIRE(w.digits.size() == 2);
  CHECK(w.digits[0] == 0);
  CHECK(w.digits[1] == 1);

  auto w2 = sabc_contains(PAdicRational::make(5, 3, p), one, p);  // 5/8 needs digit sum 2
  CHECK_FALSE(w2.member);
  CHECK(sabc_contains(PAdicRational::make(5, 3, p), SabcParams{1, 0, 2}, p).member);

  auto w0 = sabc_contains(PAdicRational::from_integer(0), SabcParams{7, 2, 0}, p);
  CHECK(w0.member);
  CHECK(w0.n == 0);
}

TEST_CASE("sabc agrees with the brute-force oracle") {
  auto gen = testutil::rng();
  for (uint32_t p : {2u, 3u}) {
    for (int i = 0; i < 500; ++i) {
      PAdicRational r = PAdicRational::make(BigInt(gen() % 512), gen() % 7, p);
      SabcParams params;
      params.a = static_cast<uint32_t>(gen() % 4 + 1);
      params.b = static_cast<uint32_t>(gen() % 3);
      params.c = static_cast<uint32_t>(gen() % 4);
      bool fast = sabc_contains(r, params, p).member;
      bool slow = sabc_brute(r, params, p, 14);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("sabc monotone in c") {
  auto gen = testutil::rng();
  uint32_t p = 3;
  for (int i = 0; i < 300; ++i) {
    PAdicRational r = PAdicRational::make(BigInt(gen() % 1000), gen() % 8, p);
    SabcParams params{static_cast<uint32_t>(gen() % 5 + 1), 0,
                      static_cast<uint32_t>(gen() % 5)};
    if (sabc_contains(r, params, p).member) {
      SabcParams bigger = params;
      bigger.c = params.c + 1 + static_cast<uint32_t>(gen() % 3);
      CHECK(sabc_contains(r, bigger, p).member);
    }
  }
}

TEST_CASE("big exponents stay exact") {
  uint32_t p = 2;
  // 1 - 2^-200
  BigInt num = (BigInt(1) << 200) - 1;
  PAdicRational r = PAdicRational::make(num, 200, p);
  auto w = sabc_contains(r, SabcParams{1, 0, 5}, p);
  CHECK(w.member);
  CHECK(w.n == 1);
  CHECK(w.digit_sum == 1);
  CHECK(w.digits.size() == 200);
  CanonicalString s = canon_string(r, p);
  CHECK(s.intpart.empty());
  CHECK(s.fracpart.size() == 200);
}

TEST_CASE("rational exponents and p-adic conversion") {
  Rational r(3, 2);
  CHECK(r.to_padic(2).has_value());
  CHECK_FALSE(r.to_padic(3).has_value());
  Rational x = Rational(1, 2) * Rational::from_integer(3);
  CHECK(x == Rational(3, 2));
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("63/2^6") == Rational(63, 64));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK_THROWS_AS(Rational(1, 3) - Rational(1, 2), Error);
}
