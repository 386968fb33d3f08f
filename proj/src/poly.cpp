#include "gpsa/poly.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "gpsa/text.hpp"

namespace gpsa {

namespace {
const Field& common(const FieldPtr& a, const FieldPtr& b) {
  require(a && b, Err::Internal, "value without field");
  require(a->same(*b), Err::ConfigMismatch, "operands from different field configurations");
  return *a;
}
}  // namespace

Poly::Poly(FieldPtr field, std::vector<uint32_t> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(FieldPtr field, uint32_t c) {
  std::vector<uint32_t> v;
  if (c != 0) v.push_back(c);
  return Poly(std::move(field), std::move(v));
}

Poly Poly::term(FieldPtr field, uint64_t k, uint32_t c) {
  std::vector<uint32_t> v;
  if (c != 0) {
    v.assign(k + 1, 0);
    v[k] = c;
  }
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly Poly::operator+(const Poly& o) const {
  const Field& f = common(field_, o.field_);
  std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = f.add(coeff(i), o.coeff(i));
  return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  if (!field_) return *this;
  std::vector<uint32_t> r(c_);
  for (auto& x : r) x = field_->neg(x);
  return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  const Field& f = common(field_, o.field_);
  if (is_zero() || o.is_zero()) return Poly::zero(field_);
  std::vector<uint32_t> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(c_[i], o.c_[j]));
  }
  return Poly(field_, std::move(r));
}

Poly Poly::scaled(uint32_t c) const {
  if (c == 0) return Poly::zero(field_);
  std::vector<uint32_t> r(c_);
  for (auto& x : r) x = field_->mul(x, c);
  return Poly(field_, std::move(r));
}

Poly Poly::shifted(uint64_t k) const {
  if (is_zero()) return *this;
  std::vector<uint32_t> r(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), r.begin() + k);
  return Poly(field_, std::move(r));
}

Poly Poly::pow(uint64_t n) const {
  Poly base = *this, r = Poly::constant(field_, 1);
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  const Field& f = common(field_, d.field_);
  require(!d.is_zero(), Err::DivisionByZero, "polynomial division by zero");
  Poly rem = *this;
  if (rem.degree() < d.degree()) return {Poly::zero(field_), rem};
  std::vector<uint32_t> quot(rem.degree() - d.degree() + 1, 0);
  uint32_t lead_inv = f.inv(d.leading());
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    size_t shift = rem.degree() - d.degree();
    uint32_t c = f.mul(rem.leading(), lead_inv);
    quot[shift] = c;
    std::vector<uint32_t> rc = rem.c_;
    for (size_t i = 0; i < d.c_.size(); ++i)
      rc[shift + i] = f.sub(rc[shift + i], f.mul(c, d.c_[i]));
    rem = Poly(field_, std::move(rc));
  }
  return {Poly(field_, std::move(quot)), rem};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

uint32_t Poly::eval(uint32_t x) const {
  uint32_t r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, x), c_[i]);
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly::zero(field_);
  std::vector<uint32_t> r(c_.size() - 1, 0);
  for (size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = field_->mul(c_[i], field_->from_int(i));
  return Poly(field_, std::move(r));
}

Poly Poly::coeff_frobenius(uint64_t i) const {
  std::vector<uint32_t> r(c_);
  for (auto& x : r) x = field_->frobenius_iter(x, i);
  return Poly(field_, std::move(r));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << i << ':' << field_->format(c_[i]);
  }
  return os.str();
}

Poly Poly::parse(const FieldPtr& field, const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  std::vector<uint32_t> c;
  bool any = false;
  while (is >> tok) {
    any = true;
    if (tok == "0" && c.empty()) continue;  // zero polynomial sentinel
    auto pos = tok.find(':');
    require(pos != std::string::npos, Err::Format, "bad polynomial term: " + tok);
    std::string es = tok.substr(0, pos);
    require(!es.empty() && es.find_first_not_of("0123456789") == std::string::npos, Err::Format,
            "bad exponent: " + tok);
    uint64_t exp = std::stoull(es);
    require(exp <= (1u << 20), Err::Format, "exponent too large: " + tok);
    uint32_t val = field->parse(tok.substr(pos + 1));
    if (c.size() <= exp) c.resize(exp + 1, 0);
    require(c[exp] == 0, Err::Format, "duplicate exponent: " + tok);
    c[exp] = val;
  }
  require(any, Err::Format, "empty polynomial");
  return Poly(field, std::move(c));
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RatFunc::RatFunc(Poly num) : num_(std::move(num)) {
  den_ = Poly::constant(num_.field(), 1);
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  common(num_.field(), den_.field());
  normalize();
}

void RatFunc::normalize() {
  require(!den_.is_zero(), Err::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(den_.field(), 1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  uint32_t lead = den_.leading();
  if (lead != 1) {
    uint32_t inv = den_.field()->inv(lead);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
  require(!num_.is_zero(), Err::DivisionByZero, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::scaled(uint32_t c) const { return RatFunc(num_.scaled(c), den_); }

int RatFunc::valuation() const {
  if (num_.is_zero()) return INT_MIN;
  return num_.valuation() - den_.valuation();
}

std::string RatFunc::str() const {
  if (is_poly()) return num_.str();
  return num_.str() + " / " + den_.str();
}

RatFunc RatFunc::parse(const FieldPtr& field, const std::string& text) {
  auto pos = text.find('/');
  if (pos == std::string::npos) return RatFunc(Poly::parse(field, text));
  return RatFunc(Poly::parse(field, text.substr(0, pos)),
                 Poly::parse(field, text.substr(pos + 1)));
}

bool TruncSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](uint32_t x) { return x == 0; });
}

TruncSeries TruncSeries::truncated(size_t precision) const {
  std::vector<uint32_t> r(c_.begin(), c_.begin() + std::min(precision, c_.size()));
  r.resize(std::min(precision, c_.size()), 0);
  return TruncSeries(field_, std::move(r));
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  const Field& f = common(field_, o.field_);
  size_t n = std::min(c_.size(), o.c_.size());
  std::vector<uint32_t> r(n);
  for (size_t i = 0; i < n; ++i) r[i] = f.add(c_[i], o.c_[i]);
  return TruncSeries(field_, std::move(r));
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  const Field& f = common(field_, o.field_);
  size_t n = std::min(c_.size(), o.c_.size());
  std::vector<uint32_t> r(n);
  for (size_t i = 0; i < n; ++i) r[i] = f.sub(c_[i], o.c_[i]);
  return TruncSeries(field_, std::move(r));
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  const Field& f = common(field_, o.field_);
  size_t n = std::min(c_.size(), o.c_.size());
  std::vector<uint32_t> r(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j + i < n; ++j) {
      if (o.c_[j] == 0) continue;
      r[i + j] = f.add(r[i + j], f.mul(c_[i], o.c_[j]));
    }
  }
  return TruncSeries(field_, std::move(r));
}

TruncSeries TruncSeries::scaled(uint32_t c) const {
  std::vector<uint32_t> r(c_);
  for (auto& x : r) x = field_->mul(x, c);
  return TruncSeries(field_, std::move(r));
}

TruncSeries TruncSeries::shifted(size_t k) const {
  std::vector<uint32_t> r(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), r.begin() + k);
  return TruncSeries(field_, std::move(r));
}

TruncSeries TruncSeries::mul_poly(const Poly& p) const {
  const Field& f = common(field_, p.field());
  std::vector<uint32_t> r(c_.size(), 0);
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    uint32_t pc = p.coeffs()[i];
    if (pc == 0) continue;
    for (size_t j = 0; i + j < r.size() && j < c_.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(pc, c_[j]));
  }
  return TruncSeries(field_, std::move(r));
}

TruncSeries TruncSeries::inverse() const {
  require(!c_.empty() && c_[0] != 0, Err::DivisionByZero,
          "series inverse requires a unit constant term");
  const Field& f = *field_;
  std::vector<uint32_t> r(c_.size(), 0);
  uint32_t c0inv = f.inv(c_[0]);
  r[0] = c0inv;
  for (size_t k = 1; k < c_.size(); ++k) {
    uint32_t acc = 0;
    for (size_t i = 1; i <= k; ++i) acc = f.add(acc, f.mul(coeff(i), r[k - i]));
    r[k] = f.neg(f.mul(acc, c0inv));
  }
  return TruncSeries(field_, std::move(r));
}

TruncSeries TruncSeries::p_power() const {
  const Field& f = *field_;
  uint32_t p = f.p();
  if (c_.empty()) return *this;
  size_t n = p * (c_.size() - 1) + 1;
  std::vector<uint32_t> r(n, 0);
  for (size_t i = 0; i < c_.size(); ++i) r[p * i] = f.frobenius(c_[i]);
  return TruncSeries(field_, std::move(r));
}

TruncSeries TruncSeries::q_power(uint64_t i) const {
  TruncSeries r = *this;
  uint64_t steps = i * field_->e();
  for (uint64_t k = 0; k < steps; ++k) r = r.p_power();
  return r;
}

namespace {
TruncSeries series_one(const FieldPtr& field, size_t D) {
  std::vector<uint32_t> one(D, 0);
  if (D > 0) one[0] = 1;
  return TruncSeries(field, std::move(one));
}
}  // namespace

TruncSeries TruncSeries::pow(uint64_t n) const {
  // base-p powering: x^n = prod (x^{p^i})^{d_i}, p-th powers are O(D)
  size_t D = c_.size();
  if (n == 0) return series_one(field_, D);
  uint32_t p = field_->p();
  TruncSeries base = *this;
  TruncSeries acc = series_one(field_, D);
  while (n > 0) {
    uint32_t d = static_cast<uint32_t>(n % p);
    for (uint32_t k = 0; k < d; ++k) acc = (acc * base).truncated(D);
    n /= p;
    if (n > 0) base = base.p_power().truncated(D);
  }
  return acc.truncated(D);
}

std::string TruncSeries::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << field_->format(c_[i]);
  }
  return os.str();
}

TruncSeries TruncSeries::parse(const FieldPtr& field, const std::string& text) {
  std::vector<uint32_t> c;
  for (const std::string& tok : split_commas_bracket_aware(text))
    c.push_back(field->parse(tok));
  return TruncSeries(field, std::move(c));
}

Poly cartier(const Poly& f, uint32_t r) {
  const FieldPtr& fld = f.field();
  uint32_t q = fld->q();
  require(r < q, Err::Domain, "cartier digit out of range");
  std::vector<uint32_t> out;
  for (size_t k = 0; q * k + r < f.coeffs().size(); ++k) out.push_back(f.coeffs()[q * k + r]);
  return Poly(fld, std::move(out));
}

TruncSeries cartier(const TruncSeries& f, uint32_t r) {
  const FieldPtr& fld = f.field();
  uint32_t q = fld->q();
  require(r < q, Err::Domain, "cartier digit out of range");
  size_t D = f.precision();
  size_t outD = (D > r) ? (D - r - 1) / q + 1 : 0;
  std::vector<uint32_t> out(outD, 0);
  for (size_t k = 0; k < outD; ++k) out[k] = f.coeff(q * k + r);
  return TruncSeries(fld, std::move(out));
}

RatFunc cartier(const RatFunc& f, uint32_t r) {
  const FieldPtr& fld = f.field();
  uint32_t q = fld->q();
  require(r < q, Err::Domain, "cartier digit out of range");
  if (f.is_zero()) return f;
  Poly denq = f.den().pow(q - 1);
  return RatFunc(cartier(f.num() * denq, r), f.den());
}

TruncSeries expand(const RatFunc& f, size_t precision) {
  const FieldPtr& fld = f.field();
  require(f.den().eval_at_zero() != 0, Err::Domain,
          "rational function has a pole at t=0");
  std::vector<uint32_t> den(precision, 0);
  for (size_t i = 0; i < std::min(precision, f.den().coeffs().size()); ++i)
    den[i] = f.den().coeffs()[i];
  TruncSeries deninv = TruncSeries(fld, std::move(den)).inverse();
  return deninv.mul_poly(f.num());
}

BivarPoly::BivarPoly(FieldPtr field, std::vector<Poly> xcoeffs)
    : field_(std::move(field)), x_(std::move(xcoeffs)) {
  for (auto& c : x_) common(field_, c.field());
  trim();
}

void BivarPoly::trim() {
  while (!x_.empty() && x_.back().is_zero()) x_.pop_back();
}

Poly BivarPoly::xcoeff(size_t j) const {
  if (j < x_.size()) return x_[j];
  return Poly::zero(field_);
}

BivarPoly BivarPoly::derivative_x() const {
  if (x_.size() <= 1) return BivarPoly(field_, {});
  std::vector<Poly> r;
  for (size_t j = 1; j < x_.size(); ++j)
    r.push_back(x_[j].scaled(field_->from_int(j)));
  return BivarPoly(field_, std::move(r));
}

TruncSeries BivarPoly::eval(const TruncSeries& s, size_t precision) const {
  // Term-by-term with pow(): p-th powers stay O(D), which matters at large D.
  TruncSeries x = s.truncated(precision);
  TruncSeries acc = TruncSeries::zero(field_, precision);
  for (size_t j = 0; j < x_.size(); ++j) {
    if (x_[j].is_zero()) continue;
    acc = acc + x.pow(j).mul_poly(x_[j]);
  }
  return acc;
}

std::string BivarPoly::str() const {
  std::ostringstream os;
  for (size_t j = 0; j < x_.size(); ++j) {
    if (x_[j].is_zero()) continue;
    os << "X^" << j << " : " << x_[j].str() << '\n';
  }
  if (x_.empty()) os << "X^0 : 0\n";
  return os.str();
}

BivarPoly BivarPoly::parse(const FieldPtr& field, const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<Poly> coeffs;
  bool any = false;
  while (std::getline(is, line)) {
    std::string s = strip_comment(line);
    if (s.empty()) continue;
    any = true;
    auto colon = s.find(':');
    require(colon != std::string::npos, Err::Format, "bad bivariate line: " + line);
    std::string head = trim_spaces(s.substr(0, colon));
    require(head.size() > 2 && head[0] == 'X' && head[1] == '^', Err::Format,
            "bad X power: " + head);
    std::string js = head.substr(2);
    require(js.find_first_not_of("0123456789") == std::string::npos, Err::Format,
            "bad X power: " + head);
    size_t j = std::stoul(js);
    require(j <= 4096, Err::Format, "X power too large");
    Poly c = Poly::parse(field, s.substr(colon + 1));
    if (coeffs.size() <= j) coeffs.resize(j + 1, Poly::zero(field));
    coeffs[j] = std::move(c);
  }
  require(any, Err::Format, "empty bivariate polynomial");
  return BivarPoly(field, std::move(coeffs));
}

}  // namespace gpsa
