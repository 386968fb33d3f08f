#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gpsa/field.hpp"
#include "test_util.hpp"

using namespace gpsa;

TEST_CASE("F_2 basics") {
  FieldPtr f = Field::make(2, 1);
  CHECK(f->q() == 2);
  CHECK(f->add(1, 1) == 0);
  CHECK(f->mul(1, 1) == 1);
  CHECK(f->inv(1) == 1);
  CHECK_THROWS_AS(f->inv(0), Error);
}

TEST_CASE("F_4 multiplication: g * (g+1) = 1") {
  // canonical modulus for e=2, p=2 is g^2+g+1
  FieldPtr f = Field::make(2, 2);
  CHECK(f->modulus() == std::vector<uint32_t>{1, 1, 1});
  uint32_t g = f->from_coords({0, 1});
  uint32_t g1 = f->from_coords({1, 1});
  CHECK(f->mul(g, g1) == 1);
  CHECK(f->mul(g, g) == g1);  // g^2 = g+1
}

TEST_CASE("frobenius order divides e") {
  auto gen = testutil::rng();
  for (FieldPtr f : {Field::make(2, 4), Field::make(3, 2), Field::make(5, 1)}) {
    for (int i = 0; i < 50; ++i) {
      uint32_t a = testutil::random_elem(gen, *f);
      uint32_t x = a;
      for (uint32_t k = 0; k < f->e(); ++k) x = f->frobenius(x);
      CHECK(x == a);
    }
  }
}

TEST_CASE("field axioms on random triples") {
  auto gen = testutil::rng();
  for (FieldPtr f : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2),
                     Field::make(3, 2), Field::make(2, 4), Field::make(65521, 1)}) {
    for (int i = 0; i < 1000; ++i) {
      uint32_t a = testutil::random_elem(gen, *f);
      uint32_t b = testutil::random_elem(gen, *f);
      uint32_t c = testutil::random_elem(gen, *f);
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
    }
  }
}

TEST_CASE("pow against repeated multiplication") {
  auto gen = testutil::rng();
  FieldPtr f = Field::make(3, 2);
  for (int i = 0; i < 200; ++i) {
    uint32_t a = testutil::random_elem(gen, *f);
    uint64_t n = gen() % 40;
    uint32_t expect = 1;
    for (uint64_t k = 0; k < n; ++k) expect = f->mul(expect, a);
    CHECK(f->pow(a, n) == expect);
  }
}

TEST_CASE("frobenius is the p-th power map") {
  auto gen = testutil::rng();
  FieldPtr f = Field::make(5, 2);
  for (int i = 0; i < 200; ++i) {
    uint32_t a = testutil::random_elem(gen, *f);
    CHECK(f->frobenius(a) == f->pow(a, f->p()));
    CHECK(f->frobenius_iter(a, 2) == f->pow(f->pow(a, f->p()), f->p()));
  }
}

TEST_CASE("element text round trip") {
  FieldPtr f2 = Field::make(2, 1);
  CHECK(f2->format(1) == "1");
  CHECK(f2->parse("1") == 1);
  FieldPtr f4 = Field::make(2, 2);
  CHECK(f4->format(f4->from_coords({1, 1})) == "[1,1]");
  CHECK(f4->parse("[1,1]") == f4->from_coords({1, 1}));
  CHECK_THROWS_AS(f4->parse("[1,2]"), Error);
  CHECK_THROWS_AS(f4->parse("[1]"), Error);
}

TEST_CASE("config mismatch is rejected") {
  FieldPtr f2 = Field::make(2, 1);
  FieldPtr f3 = Field::make(3, 1);
  FieldElem a(f2, 1), b(f3, 1);
  CHECK_THROWS_AS(a + b, Error);
  FieldPtr f2b = Field::make(2, 1);
  FieldElem c(f2b, 1);
  CHECK((a + c).rep() == 0);  // equal configurations interoperate
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(Field::make(4, 1), Error);   // p not prime
  CHECK_THROWS_AS(Field::make(2, 17), Error);  // q > 2^16
  CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), Error);  // x^2+1 reducible mod 2
  CHECK_NOTHROW(Field::make(2, 2, {1, 1, 1}));
  CHECK_THROWS_AS(Field::make(2, 2, {1, 1, 2}), Error);  // not monic / out of range
}

TEST_CASE("generator has full order") {
  for (FieldPtr f : {Field::make(2, 3), Field::make(7, 1), Field::make(3, 3)}) {
    uint32_t g = f->generator();
    uint32_t x = 1;
    for (uint32_t i = 1; i < f->q() - 1; ++i) {
      x = f->mul(x, g);
      CHECK(x != 1);
    }
    CHECK(f->mul(x, g) == 1);
  }
}
