#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpsa/poly.hpp"
#include "test_util.hpp"

using namespace gpsa;

namespace {
// substitute t -> t^q, for the digit-reconstruction identity
Poly spread(const Poly& f, uint32_t q) {
  if (f.is_zero()) return f;
  std::vector<uint32_t> c(q * (f.coeffs().size() - 1) + 1, 0);
  for (size_t i = 0; i < f.coeffs().size(); ++i) c[q * i] = f.coeffs()[i];
  return Poly(f.field(), std::move(c));
}
}  // namespace

TEST_CASE("gcd(t^2+t, t) = t over F_2") {
  FieldPtr f = Field::make(2, 1);
  Poly a(f, {0, 1, 1});
  Poly b = Poly::t(f);
  CHECK(gcd(a, b) == b);
}

TEST_CASE("divmod over F_3: (t^2+1) / (t+1)") {
  FieldPtr f = Field::make(3, 1);
  Poly a(f, {1, 0, 1});
  Poly d(f, {1, 1});
  auto [q, r] = a.divmod(d);
  CHECK(q == Poly(f, {2, 1}));  // t + 2
  CHECK(r == Poly::constant(f, 2));
  CHECK(q * d + r == a);
}

TEST_CASE("divmod against reconstruction on random inputs") {
  auto gen = testutil::rng();
  FieldPtr f = Field::make(3, 2);
  for (int i = 0; i < 300; ++i) {
    Poly a = testutil::random_poly(gen, f, 8);
    Poly d = testutil::random_nonzero_poly(gen, f, 4);
    auto [q, r] = a.divmod(d);
    CHECK(q * d + r == a);
    CHECK(r.degree() < d.degree());
  }
}

TEST_CASE("ratfunc normalization: t/t^2 -> 1/t, monic den") {
  FieldPtr f = Field::make(2, 1);
  RatFunc r(Poly::t(f), Poly(f, {0, 0, 1}));
  CHECK(r.num() == Poly::constant(f, 1));
  CHECK(r.den() == Poly::t(f));
  CHECK(r.den().leading() == 1);
}

TEST_CASE("ratfunc normalization is idempotent and den monic") {
  auto gen = testutil::rng();
  FieldPtr f = Field::make(3, 1);
  for (int i = 0; i < 200; ++i) {
    Poly n = testutil::random_poly(gen, f, 6);
    Poly d = testutil::random_nonzero_poly(gen, f, 6);
    RatFunc r(n, d);
    CHECK(r.den().leading() == 1);
    RatFunc again(r.num(), r.den());
    CHECK(again == r);
    CHECK(gcd(r.num(), r.den()).degree() <= 0);
  }
}

TEST_CASE("cartier on a truncated series: digit 0, q=2") {
  FieldPtr f = Field::make(2, 1);
  // f = t + t^2 + t^4 + t^8 truncated at D=9
  TruncSeries s(f, {0, 1, 1, 0, 1, 0, 0, 0, 1});
  TruncSeries c0 = cartier(s, 0);
  CHECK(c0.precision() == 5);
  CHECK(c0.coeffs() == std::vector<uint32_t>{0, 1, 1, 0, 1});  // t + t^2 + t^4
  TruncSeries c1 = cartier(s, 1);
  CHECK(c1.precision() == 4);
  CHECK(c1.coeffs() == std::vector<uint32_t>{1, 0, 0, 0});  // index 1 only
}

TEST_CASE("semilinearity: cartier(g^q h, r) = g cartier(h, r)") {
  auto gen = testutil::rng();
  FieldPtr f = Field::make(2, 2);
  uint32_t q = f->q();
  for (int i = 0; i < 100; ++i) {
    Poly g = testutil::random_poly(gen, f, 5);
    Poly h = testutil::random_poly(gen, f, 9);
    Poly gq = g.pow(q);
    for (uint32_t r = 0; r < q; ++r) {
      CHECK(cartier(gq * h, r) == g * cartier(h, r));
    }
  }
}

TEST_CASE("digit reconstruction: sum_r t^r (cartier_r f)(t^q) = f") {
  auto gen = testutil::rng();
  for (FieldPtr f : {Field::make(2, 1), Field::make(2, 2), Field::make(3, 1)}) {
    uint32_t q = f->q();
    for (int i = 0; i < 50; ++i) {
      Poly a = testutil::random_poly(gen, f, 17);
      Poly sum = Poly::zero(f);
      for (uint32_t r = 0; r < q; ++r)
        sum = sum + spread(cartier(a, r), q).shifted(r);
      CHECK(sum == a);
    }
  }
}

TEST_CASE("cartier on rational functions agrees with series expansion") {
  auto gen = testutil::rng();
  FieldPtr f = Field::make(2, 1);
  for (int i = 0; i < 100; ++i) {
    Poly n = testutil::random_poly(gen, f, 5);
    Poly d = testutil::random_nonzero_poly(gen, f, 4);
    if (d.eval_at_zero() == 0) continue;
    RatFunc r(n, d);
    for (uint32_t dig = 0; dig < 2; ++dig) {
      RatFunc cr = cartier(r, dig);
      TruncSeries lhs = expand(cr, 32);
      TruncSeries rhs = cartier(expand(r, 70), dig).truncated(32);
      CHECK(lhs.truncated(rhs.precision()) == rhs);
    }
  }
}

TEST_CASE("series arithmetic basics") {
  FieldPtr f = Field::make(2, 1);
  TruncSeries one(f, {1, 0, 0, 0, 0, 0, 0, 0});
  TruncSeries geo(f, std::vector<uint32_t>(8, 1));  // 1/(1+t)
  TruncSeries denom(f, {1, 1, 0, 0, 0, 0, 0, 0});
  CHECK(denom * geo == one);
  CHECK(denom.inverse() == geo);
  CHECK((geo + geo).is_zero());
  CHECK(geo.p_power().truncated(8) ==
        TruncSeries(f, {1, 0, 1, 0, 1, 0, 1, 0}));
}

TEST_CASE("series precision rules") {
  FieldPtr f = Field::make(2, 1);
  TruncSeries a(f, {1, 1, 1, 1, 1, 1});
  TruncSeries b(f, {1, 1});
  CHECK((a + b).precision() == 2);
  CHECK((a * b).precision() == 2);
  CHECK(a.shifted(3).precision() == 9);
}

TEST_CASE("expand rejects poles at zero") {
  FieldPtr f = Field::make(2, 1);
  RatFunc r(Poly::constant(f, 1), Poly::t(f));
  CHECK_THROWS_AS(expand(r, 8), Error);
}

TEST_CASE("polynomial text round trip") {
  FieldPtr f4 = Field::make(2, 2);
  Poly p(f4, {1, 0, f4->from_coords({0, 1})});
  CHECK(p.str() == "0:[1,0] 2:[0,1]");
  CHECK(Poly::parse(f4, p.str()) == p);
  CHECK(Poly::parse(f4, "0").is_zero());
  CHECK(Poly::zero(f4).str() == "0");
  FieldPtr f2 = Field::make(2, 1);
  RatFunc r(Poly(f2, {1, 1}), Poly(f2, {0, 1, 1}));
  CHECK(RatFunc::parse(f2, r.str()) == r);
}

TEST_CASE("bivariate text round trip") {
  FieldPtr f = Field::make(2, 1);
  BivarPoly P(f, {Poly::t(f), Poly::constant(f, 1), Poly::constant(f, 1)});
  BivarPoly back = BivarPoly::parse(f, P.str());
  CHECK(back == P);
  CHECK(P.deg_x() == 2);
}
