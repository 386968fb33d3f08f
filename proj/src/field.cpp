#include "gpsa/field.hpp"

#include <algorithm>
#include <sstream>

namespace gpsa {

const char* err_name(Err code) {
  switch (code) {
    case Err::DivisionByZero: return "division-by-zero";
    case Err::ConfigMismatch: return "config-mismatch";
    case Err::AlphabetMismatch: return "alphabet-mismatch";
    case Err::SemanticsMismatch: return "semantics-mismatch";
    case Err::Format: return "format";
    case Err::Domain: return "domain";
    case Err::Budget: return "budget";
    case Err::Inseparable: return "inseparable";
    case Err::Reducible: return "reducible";
    case Err::NoRoot: return "no-root";
    case Err::Bounds: return "bounds";
    case Err::Precondition: return "precondition";
    case Err::Inconclusive: return "inconclusive";
    case Err::Unsupported: return "unsupported";
    case Err::Internal: return "internal";
  }
  return "unknown";
}

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense polynomials over F_p (coefficients in [0,p)), used only to set up a
// field: modulus checks and the multiplication table bootstrap.
using FpPoly = std::vector<uint32_t>;

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
  }
  fp_trim(r);
  return r;
}

uint32_t fp_inv_scalar(uint32_t a, uint32_t p) {
  // extended euclid on integers
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    int64_t qq = r / nr;
    std::swap(t -= qq * nt, nt);
    std::swap(r -= qq * nr, nr);
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, uint32_t p) {
  fp_trim(a);
  uint32_t lead_inv = fp_inv_scalar(m.back(), p);
  while (a.size() >= m.size()) {
    uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(a.back()) * lead_inv % p);
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      uint64_t sub = static_cast<uint64_t>(c) * m[i] % p;
      a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
    }
    fp_trim(a);
    if (a.empty()) break;
  }
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint32_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly fp_powmod_xp(const FpPoly& g, const FpPoly& m, uint32_t p) {
  // g^p mod m by square-and-multiply
  FpPoly base = g, result = {1};
  uint32_t n = p;
  while (n > 0) {
    if (n & 1) result = fp_mod(fp_mul(result, base, p), m, p);
    base = fp_mod(fp_mul(base, base, p), m, p);
    n >>= 1;
  }
  return result;
}

// f monic of degree e >= 1 is irreducible iff gcd(X^{p^k} - X mod f, f) = 1
// for all k in [1, e/2].
bool fp_irreducible(const FpPoly& f, uint32_t p) {
  size_t e = f.size() - 1;
  if (e == 1) return true;
  FpPoly xq = {0, 1};  // X^{p^k} mod f, starting at k=0
  for (size_t k = 1; 2 * k <= e; ++k) {
    xq = fp_powmod_xp(xq, f, p);
    FpPoly diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    fp_trim(diff);
    FpPoly g = fp_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

Field::Field(uint32_t p, uint32_t e, std::vector<uint32_t> modulus)
    : p_(p), e_(e), mod_(std::move(modulus)) {
  uint64_t q = 1;
  for (uint32_t i = 0; i < e_; ++i) q *= p_;
  q_ = static_cast<uint32_t>(q);
}

FieldPtr Field::make(uint32_t p, uint32_t e) {
  require(is_prime_u32(p), Err::Domain, "p must be prime");
  require(e >= 1, Err::Domain, "e must be positive");
  if (e == 1) return make(p, e, {0, 1});
  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) {
    q *= p;
    require(q <= (1u << 16), Err::Domain, "q = p^e must be at most 2^16");
  }
  for (uint64_t v = 0; v < q; ++v) {
    std::vector<uint32_t> mod(e + 1, 0);
    uint64_t t = v;
    for (uint32_t i = 0; i < e; ++i) {
      mod[i] = static_cast<uint32_t>(t % p);
      t /= p;
    }
    mod[e] = 1;
    if (fp_irreducible(mod, p)) return make(p, e, mod);
  }
  fail(Err::Internal, "no irreducible modulus found");
}

FieldPtr Field::make(uint32_t p, uint32_t e, const std::vector<uint32_t>& modulus) {
  require(is_prime_u32(p), Err::Domain, "p must be prime");
  require(e >= 1, Err::Domain, "e must be positive");
  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) {
    q *= p;
    require(q <= (1u << 16), Err::Domain, "q = p^e must be at most 2^16");
  }
  require(modulus.size() == e + 1, Err::Domain, "modulus must have degree e");
  require(modulus.back() == 1, Err::Domain, "modulus must be monic");
  for (uint32_t c : modulus) require(c < p, Err::Domain, "modulus coefficient out of range");
  require(fp_irreducible(modulus, p), Err::Domain, "modulus is reducible");
  auto f = std::shared_ptr<Field>(new Field(p, e, modulus));
  f->build_tables();
  return f;
}

uint32_t Field::mul_slow(uint32_t a, uint32_t b) const {
  // schoolbook product of coordinate vectors, reduced mod the modulus
  std::vector<uint32_t> da = coords(a), db = coords(b);
  std::vector<uint32_t> prod(2 * e_ - 1, 0);
  for (uint32_t i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (uint32_t j = 0; j < e_; ++j)
      prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(da[i]) * db[j]) % p_);
  }
  for (int k = static_cast<int>(prod.size()) - 1; k >= static_cast<int>(e_); --k) {
    uint32_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (uint32_t i = 0; i < e_; ++i) {
      uint64_t sub = static_cast<uint64_t>(c) * mod_[i] % p_;
      prod[k - e_ + i] = static_cast<uint32_t>((prod[k - e_ + i] + p_ - sub) % p_);
    }
  }
  prod.resize(e_);
  return from_coords(prod);
}

void Field::build_tables() {
  // factor q-1
  std::vector<uint32_t> primes;
  uint32_t n = q_ - 1;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);

  auto pow_slow = [&](uint32_t a, uint32_t k) {
    uint32_t r = 1;
    while (k > 0) {
      if (k & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      k >>= 1;
    }
    return r;
  };

  gen_ = 0;
  for (uint32_t g = 1; g < q_; ++g) {
    bool ok = true;
    for (uint32_t pr : primes) {
      if (pow_slow(g, (q_ - 1) / pr) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_ = g;
      break;
    }
  }
  require(gen_ != 0, Err::Internal, "no multiplicative generator found");

  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  uint32_t cur = 1;
  for (uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = cur;
    exp_[i + (q_ - 1)] = cur;
    log_[cur] = i;
    cur = mul_slow(cur, gen_);
  }
  require(cur == 1, Err::Internal, "generator order mismatch");
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (e_ == 1) return (a + b) % p_;
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    r += ((da + db) % p_) * mult;
    mult *= p_;
  }
  return r;
}

uint32_t Field::neg(uint32_t a) const {
  if (p_ == 2) return a;
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    uint32_t da = a % p_;
    a /= p_;
    r += (da == 0 ? 0 : p_ - da) * mult;
    mult *= p_;
  }
  return r;
}

uint32_t Field::pow(uint32_t a, uint64_t n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  uint64_t k = n % (q_ - 1);
  if (k == 0) return 1;
  uint64_t l = static_cast<uint64_t>(log_[a]) * k % (q_ - 1);
  return exp_[l];
}

uint32_t Field::frobenius_iter(uint32_t a, uint64_t i) const {
  if (a == 0) return 0;
  uint64_t l = log_[a];
  for (uint64_t k = 0; k < i % e_; ++k) l = l * p_ % (q_ - 1);
  return exp_[l];
}

uint32_t Field::q_power(uint32_t a, uint64_t i) const {
  (void)i;
  return a;  // x^q = x on F_q
}

std::vector<uint32_t> Field::coords(uint32_t a) const {
  std::vector<uint32_t> c(e_);
  for (uint32_t i = 0; i < e_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

uint32_t Field::from_coords(const std::vector<uint32_t>& c) const {
  require(c.size() == e_, Err::Domain, "coordinate vector must have length e");
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    require(c[i] < p_, Err::Domain, "coordinate out of range");
    r += c[i] * mult;
    mult *= p_;
  }
  return r;
}

std::string Field::format(uint32_t a) const {
  require(a < q_, Err::Domain, "element out of range");
  if (e_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << '[';
  auto c = coords(a);
  for (uint32_t i = 0; i < e_; ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

uint32_t Field::parse(const std::string& text) const {
  require(!text.empty(), Err::Format, "empty field element");
  if (text.front() == '[') {
    require(text.back() == ']', Err::Format, "unterminated element: " + text);
    std::vector<uint32_t> c;
    std::string body = text.substr(1, text.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      require(!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos,
              Err::Format, "bad coordinate in " + text);
      c.push_back(static_cast<uint32_t>(std::stoul(tok)));
    }
    require(c.size() == e_, Err::Format, "element has wrong coordinate count: " + text);
    for (uint32_t x : c) require(x < p_, Err::Format, "coordinate out of range: " + text);
    return from_coords(c);
  }
  require(text.find_first_not_of("0123456789") == std::string::npos, Err::Format,
          "bad field element: " + text);
  uint64_t v = std::stoull(text);
  require(e_ == 1 || v < q_, Err::Format, "element out of range: " + text);
  require(v < q_, Err::Format, "element out of range: " + text);
  return static_cast<uint32_t>(v);
}

}  // namespace gpsa
