#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gpsa/dfao.hpp"
#include "test_util.hpp"

using namespace gpsa;
using namespace gpsa::testutil;

namespace {

// all strings over nsym symbols up to a length, including the empty string
template <typename Fn>
void for_all_strings(uint32_t nsym, size_t maxlen, Fn&& fn) {
  std::vector<uint32_t> s;
  std::function<void(size_t)> rec = [&](size_t len) {
    fn(s);
    if (len == maxlen) return;
    for (uint32_t d = 0; d < nsym; ++d) {
      s.push_back(d);
      rec(len + 1);
      s.pop_back();
    }
  };
  rec(0);
}

bool agree_on_all_strings(const Dfao& a, const Dfao& b, size_t maxlen) {
  REQUIRE(a.alphabet == b.alphabet);
  bool ok = true;
  for_all_strings(a.alphabet.size(), maxlen, [&](const std::vector<uint32_t>& s) {
    if (a.run_raw(s) != b.run_raw(s)) ok = false;
  });
  return ok;
}

std::vector<uint32_t> strip_trailing_zeros(std::vector<uint32_t> s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("run: one-state all-ones machine") {
  Dfao a = all_ones_lsd();
  DigitString s = DigitString::parse(a.alphabet, "1011");
  CHECK(run(a, s).rep() == 1);
  CHECK(run(a, DigitString(a.alphabet, {})).rep() == 1);
}

TEST_CASE("run: powers-of-two machine on LSD strings") {
  Dfao a = powers_of_two_lsd();
  CHECK(run(a, DigitString::parse(a.alphabet, "001")).rep() == 1);  // 4
  CHECK(run(a, DigitString::parse(a.alphabet, "11")).rep() == 0);   // 3
  CHECK(run(a, DigitString::parse(a.alphabet, "1")).rep() == 1);    // 1
  CHECK(run(a, DigitString::parse(a.alphabet, "")).rep() == 0);     // 0
  for (uint64_t n = 0; n < 512; ++n) {
    bool pow2 = n != 0 && (n & (n - 1)) == 0;
    CHECK(a.run_raw(DigitString::integer_lsd(n, 2).syms()) == (pow2 ? 1u : 0u));
  }
}

TEST_CASE("run rejects out-of-alphabet symbols") {
  Dfao a = all_ones_lsd();
  CHECK_THROWS_AS(DigitString(a.alphabet, {2}), Error);
  CHECK_THROWS_AS(DigitString::parse(a.alphabet, "1.1"), Error);
}

TEST_CASE("product identities") {
  auto gen = rng();
  Dfao a = powers_of_two_lsd();
  Dfao zero = a;
  zero.outputs = {0, 0, 0};
  Dfao ones = all_ones_lsd();

  Dfao sum = product(a, zero, Combine::Add);
  Dfao prodones = product(a, ones, Combine::Mul);
  Dfao cancel = product(a, a, Combine::Add);
  for (int i = 0; i < 1000; ++i) {
    auto s = random_string(gen, 2, gen() % 12);
    CHECK(sum.run_raw(s) == a.run_raw(s));
    CHECK(prodones.run_raw(s) == a.run_raw(s));
    CHECK(cancel.run_raw(s) == 0);
  }
  CHECK(sum.state_count() <= a.state_count() * zero.state_count());
}

TEST_CASE("product rejects mismatched shapes") {
  Dfao a = powers_of_two_lsd();
  Dfao b = a;
  b.semantics = Semantics::MsdInteger;
  CHECK_THROWS_AS(product(a, b, Combine::Add), Error);
  Dfao c = z_machine_radix(2);
  CHECK_THROWS_AS(product(a, c, Combine::Add), Error);
}

TEST_CASE("minimize: idempotent and output-preserving") {
  auto gen = rng();
  FieldPtr f2 = Field::make(2, 1);
  for (int i = 0; i < 60; ++i) {
    Dfao a = random_dfao(gen, f2, 2 + gen() % 9, Alphabet{2, false}, Semantics::LsdInteger);
    Dfao m = minimize(a);
    CHECK(agree_on_all_strings(a, m, 10));
    Dfao mm = minimize(m);
    CHECK(mm.state_count() == m.state_count());
    for (int j = 0; j < 200; ++j) {
      auto s = random_string(gen, 2, 8 + gen() % 30);
      CHECK(a.run_raw(s) == m.run_raw(s));
    }
  }
}

TEST_CASE("minimize collapses duplicate all-ones states") {
  FieldPtr f = Field::make(2, 1);
  Dfao a;
  a.field = f;
  a.alphabet = Alphabet{2, false};
  a.semantics = Semantics::LsdInteger;
  a.initial = 0;
  a.outputs = {1, 1};
  a.transitions = {1, 1, 0, 0};  // two copies wired in parallel
  CHECK(minimize(a).state_count() == 1);
}

TEST_CASE("minimize drops unreachable states") {
  Dfao a = powers_of_two_lsd();
  a.outputs.push_back(1);
  a.transitions.insert(a.transitions.end(), {0, 3});
  CHECK(minimize(a).state_count() == 3);
}

TEST_CASE("minimize is a lower bound under random joint refinement") {
  auto gen = rng();
  FieldPtr f3 = Field::make(3, 1);
  for (int i = 0; i < 20; ++i) {
    Dfao a = random_dfao(gen, f3, 3 + gen() % 6, Alphabet{3, false}, Semantics::LsdInteger);
    Dfao m = minimize(a);
    // distinguishable-state count from exhaustive experiments of length <= 6
    std::map<std::vector<uint32_t>, std::set<uint32_t>> behavior;
    std::vector<std::vector<uint32_t>> probes;
    for_all_strings(3, 5, [&](const std::vector<uint32_t>& s) { probes.push_back(s); });
    std::set<std::vector<uint32_t>> distinct;
    std::vector<bool> reach = reachable_states(a);
    for (uint32_t s = 0; s < a.state_count(); ++s) {
      if (!reach[s]) continue;
      std::vector<uint32_t> sig;
      for (const auto& w : probes) {
        uint32_t cur = s;
        for (uint32_t sym : w) cur = a.step(cur, sym);
        sig.push_back(a.outputs[cur]);
      }
      distinct.insert(sig);
    }
    CHECK(m.state_count() >= distinct.size());
    CHECK(m.state_count() <= a.state_count());
  }
}

TEST_CASE("reverse: worked example and involution") {
  auto gen = rng();
  Dfao a = powers_of_two_lsd();
  Dfao r = reverse(a, 1 << 16);
  CHECK(r.semantics == Semantics::MsdInteger);
  // MSD membership: exactly one 1 digit
  for_all_strings(2, 12, [&](const std::vector<uint32_t>& s) {
    uint32_t ones = 0;
    for (uint32_t d : s) ones += d;
    std::vector<uint32_t> rev(s.rbegin(), s.rend());
    CHECK(r.run_raw(s) == a.run_raw(rev));
    CHECK(r.run_raw(s) == (ones == 1 ? 1u : 0u));
  });
  Dfao rr = reverse(r, 1 << 16);
  Dfao m = minimize(a);
  CHECK(rr.state_count() == m.state_count());
  for (int i = 0; i < 1000; ++i) {
    auto s = random_string(gen, 2, gen() % 14);
    CHECK(rr.run_raw(s) == m.run_raw(s));
  }
}

TEST_CASE("reverse of a one-state machine") {
  Dfao a = all_ones_lsd();
  CHECK(reverse(a, 16).state_count() == 1);
}

TEST_CASE("reverse budget error reports exploration size") {
  auto gen = rng();
  FieldPtr f = Field::make(2, 2);
  Dfao a = random_dfao(gen, f, 8, Alphabet{2, false}, Semantics::LsdInteger);
  try {
    reverse(a, 2);
    // tiny budgets may still suffice for degenerate machines
  } catch (const Error& e) {
    CHECK(e.code() == Err::Budget);
    CHECK(std::string(e.what()).find("explored") != std::string::npos);
  }
}

TEST_CASE("zero_normalize pad-invariant: trailing zeros, LSD") {
  auto gen = rng();
  FieldPtr f = Field::make(2, 1);
  for (int i = 0; i < 30; ++i) {
    Dfao a = random_dfao(gen, f, 1 + gen() % 6, Alphabet{2, false}, Semantics::LsdInteger);
    Dfao b = zero_normalize(a, ZeroMode::PadInvariant);
    for_all_strings(2, 9, [&](const std::vector<uint32_t>& s) {
      CHECK(b.run_raw(s) == a.run_raw(strip_trailing_zeros(s)));
    });
    for (int j = 0; j < 100; ++j) {
      auto s = random_string(gen, 2, gen() % 20);
      auto s0 = s;
      s0.push_back(0);
      CHECK(b.run_raw(s) == b.run_raw(s0));
    }
  }
}

TEST_CASE("zero_normalize pad-invariant: leading zeros, MSD") {
  auto gen = rng();
  FieldPtr f = Field::make(3, 1);
  for (int i = 0; i < 30; ++i) {
    Dfao a = random_dfao(gen, f, 1 + gen() % 6, Alphabet{3, false}, Semantics::MsdInteger);
    Dfao b = zero_normalize(a, ZeroMode::PadInvariant);
    for_all_strings(3, 6, [&](const std::vector<uint32_t>& s) {
      std::vector<uint32_t> stripped = s;
      std::reverse(stripped.begin(), stripped.end());
      stripped = strip_trailing_zeros(stripped);
      std::reverse(stripped.begin(), stripped.end());
      CHECK(b.run_raw(s) == a.run_raw(stripped));
    });
  }
}

TEST_CASE("zero_normalize canonical-zero: fractional") {
  auto gen = rng();
  FieldPtr f = Field::make(2, 1);
  for (int i = 0; i < 30; ++i) {
    Dfao a = random_dfao(gen, f, 1 + gen() % 6, Alphabet{2, false}, Semantics::MsdFractional);
    Dfao b = zero_normalize(a, ZeroMode::CanonicalZero);
    for_all_strings(2, 9, [&](const std::vector<uint32_t>& s) {
      if (!s.empty() && s.back() == 0)
        CHECK(b.run_raw(s) == 0);
      else
        CHECK(b.run_raw(s) == a.run_raw(s));
    });
  }
}

TEST_CASE("zero_normalize canonical-zero: radix machines") {
  Dfao z = z_machine_radix(2);
  Dfao n = zero_normalize(z, ZeroMode::CanonicalZero);
  uint32_t dot = z.alphabet.dot();
  // ".111" stays 1
  CHECK(n.run_raw({dot, 1, 1, 1}) == 1);
  // trailing fractional zero: "10" after the dot
  CHECK(n.run_raw({dot, 1, 0}) == 0);
  // leading integer zero
  CHECK(n.run_raw({0, dot, 1}) == 0);
  // no radix point at all
  CHECK(n.run_raw({1, 1}) == 0);
  // two radix points
  CHECK(n.run_raw({dot, 1, dot, 1}) == 0);
}

TEST_CASE("pad-invariant mode rejects radix semantics") {
  Dfao z = z_machine_radix(2);
  CHECK_THROWS_AS(zero_normalize(z, ZeroMode::PadInvariant), Error);
}

TEST_CASE("block_recode: e=1 is the identity") {
  Dfao a = powers_of_two_lsd();
  Dfao b = block_recode(a);
  CHECK(b.state_count() == a.state_count());
  CHECK(b.transitions == a.transitions);
}

TEST_CASE("block_recode: base-4 machine agrees digitwise") {
  auto gen = rng();
  FieldPtr f4 = Field::make(2, 2);
  for (int trial = 0; trial < 12; ++trial) {
    Dfao a = random_dfao(gen, f4, 1 + gen() % 5, Alphabet{4, false}, Semantics::LsdInteger);
    Dfao b = block_recode(a);
    CHECK(b.alphabet.base == 2);
    CHECK(b.state_count() <= a.state_count() * ((4 - 1) / (2 - 1) + 0 + 3));  // |S| (p^e-1)/(p-1)
    for (uint64_t n = 0; n < (1 << 12); ++n) {
      uint32_t want = a.run_raw(DigitString::integer_lsd(n, 4).syms());
      uint32_t got = b.run_raw(DigitString::integer_lsd(n, 2).syms());
      if (want != got) {
        CHECK(want == got);
        break;
      }
    }
  }
}

TEST_CASE("block_recode state bound") {
  auto gen = rng();
  FieldPtr f8 = Field::make(2, 3);
  Dfao a = random_dfao(gen, f8, 4, Alphabet{8, false}, Semantics::LsdInteger);
  Dfao b = block_recode(a);
  CHECK(b.state_count() <= 4u * (1 + 2 + 4));
}

TEST_CASE("dot export: node and edge counts parse back") {
  for (const Dfao& a : {powers_of_two_lsd(), all_ones_lsd(), z_machine_radix(2)}) {
    std::string dot = dot_export(a);
    size_t nodes = 0, edges = 0;
    std::istringstream is(dot);
    std::string line;
    while (std::getline(is, line)) {
      if (line.find("->") != std::string::npos)
        ++edges;
      else if (line.find("label=") != std::string::npos)
        ++nodes;
    }
    CHECK(nodes == a.state_count());
    CHECK(edges == static_cast<size_t>(a.state_count()) * a.alphabet.size());
  }
  // zero states drawn distinctly
  std::string dot = dot_export(powers_of_two_lsd());
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
}

TEST_CASE("dfao file format: golden bytes for the kernel machine") {
  Dfao a = powers_of_two_lsd();
  std::string expect =
      "dfao v1\n"
      "field p=2 e=1\n"
      "alphabet digits p=2 radix=false\n"
      "semantics lsd-integer\n"
      "states 3\n"
      "initial 0\n"
      "output 0 0\n"
      "output 1 1\n"
      "output 2 0\n"
      "trans 0 0 0\n"
      "trans 0 1 1\n"
      "trans 1 0 1\n"
      "trans 1 1 2\n"
      "trans 2 0 2\n"
      "trans 2 1 2\n";
  CHECK(write_dfao(a) == expect);
  Dfao b = parse_dfao(expect);
  CHECK(write_dfao(b) == expect);
  CHECK(b.outputs == a.outputs);
  CHECK(b.transitions == a.transitions);
}

TEST_CASE("dfao files round trip for radix and extension fields") {
  auto gen = rng();
  Dfao z = z_machine_radix(3);
  std::string text = write_dfao(z);
  Dfao back = parse_dfao(text);
  CHECK(write_dfao(back) == text);

  FieldPtr f4 = Field::make(2, 2);
  Dfao a = random_dfao(gen, f4, 5, Alphabet{4, false}, Semantics::LsdInteger);
  std::string t2 = write_dfao(a);
  CHECK(t2.find("modulus=[1,1,1]") != std::string::npos);
  Dfao b = parse_dfao(t2);
  CHECK(write_dfao(b) == t2);
}

TEST_CASE("dfao parser rejects malformed files") {
  std::string good = write_dfao(powers_of_two_lsd());
  CHECK_THROWS_AS(parse_dfao(good + "junk 1 2\n"), Error);
  CHECK_THROWS_AS(parse_dfao(good.substr(0, good.size() - 13)), Error);
  std::string bad = good;
  bad.replace(bad.find("states 3"), 8, "states 4");
  CHECK_THROWS_AS(parse_dfao(bad), Error);
  std::string unknown = good;
  unknown.replace(unknown.find("field p=2 e=1"), 13, "field p=2 e=1 x=3");
  CHECK_THROWS_AS(parse_dfao(unknown), Error);
}

TEST_CASE("validate flags bad radix machines") {
  Dfao z = z_machine_radix(2);
  CHECK_NOTHROW(z.validate());
  Dfao bad = z;
  // second dot jumps back to a live state
  bad.transitions[1 * bad.alphabet.size() + bad.alphabet.dot()] = 2;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("constructed machines keep transitions total") {
  auto gen = rng();
  FieldPtr f = Field::make(2, 1);
  for (int i = 0; i < 20; ++i) {
    Dfao a = random_dfao(gen, f, 1 + gen() % 7, Alphabet{2, false}, Semantics::LsdInteger);
    for (const Dfao& d :
         {minimize(a), product(a, a, Combine::Mul), zero_normalize(a, ZeroMode::CanonicalZero)}) {
      CHECK(d.transitions.size() == static_cast<size_t>(d.state_count()) * d.alphabet.size());
      CHECK_NOTHROW(d.validate());
    }
  }
}
