#include "gpsa/trunc_gps.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gpsa/io.hpp"
#include "gpsa/text.hpp"

namespace gpsa {

namespace {
std::optional<Rational> min_frontier(const std::optional<Rational>& a,
                                     const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? a : b;
}
}  // namespace

TruncGps::TruncGps(FieldPtr field, std::vector<TruncGpsTerm> terms,
                   std::optional<Rational> frontier)
    : field_(std::move(field)), terms_(std::move(terms)), frontier_(std::move(frontier)) {
  normalize();
}

void TruncGps::normalize() {
  std::map<std::pair<BigInt, BigInt>, uint32_t> acc;
  for (const TruncGpsTerm& t : terms_) {
    if (t.coeff == 0) continue;
    if (frontier_ && !(t.exponent < *frontier_)) continue;
    auto key = std::make_pair(t.exponent.num, t.exponent.den);
    auto [it, inserted] = acc.try_emplace(key, 0u);
    it->second = field_->add(it->second, t.coeff);
  }
  terms_.clear();
  for (const auto& [key, c] : acc) {
    if (c == 0) continue;
    terms_.push_back(TruncGpsTerm{Rational(key.first, key.second), c});
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const TruncGpsTerm& a, const TruncGpsTerm& b) { return a.exponent < b.exponent; });
}

TruncGps TruncGps::zero(FieldPtr field, std::optional<Rational> frontier) {
  return TruncGps(std::move(field), {}, std::move(frontier));
}

TruncGps TruncGps::from_poly(const Poly& p) {
  std::vector<TruncGpsTerm> terms;
  for (size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i] != 0)
      terms.push_back(TruncGpsTerm{Rational::from_integer(BigInt(i)), p.coeffs()[i]});
  return TruncGps(p.field(), std::move(terms), std::nullopt);
}

TruncGps TruncGps::from_automaton(const GpsAutomaton& x, const Rational& bound,
                                  size_t max_terms, size_t step_budget) {
  SupportEnum se = support_enum(x, bound, max_terms + 1, step_budget);
  require(se.complete, Err::Budget,
          se.exponents.size() > max_terms
              ? "more than " + std::to_string(max_terms) +
                    " support elements below the bound; use pointwise verification"
              : "support enumeration budget exhausted below the bound");
  std::vector<TruncGpsTerm> terms;
  uint32_t p = x.p();
  for (const PAdicRational& e : se.exponents)
    terms.push_back(TruncGpsTerm{Rational::from_padic(e, p), x.coeff_raw(e)});
  return TruncGps(x.field(), std::move(terms), bound);
}

uint32_t TruncGps::coeff(const Rational& e) const {
  if (frontier_) require(e < *frontier_, Err::Domain, "exponent beyond the frontier");
  for (const TruncGpsTerm& t : terms_)
    if (t.exponent == e) return t.coeff;
  return 0;
}

bool TruncGps::automaton_representable(uint32_t p) const {
  for (const TruncGpsTerm& t : terms_)
    if (!t.exponent.to_padic(p)) return false;
  return true;
}

TruncGps TruncGps::operator+(const TruncGps& o) const {
  require(field_->same(*o.field_), Err::ConfigMismatch, "mixed fields");
  std::vector<TruncGpsTerm> terms = terms_;
  terms.insert(terms.end(), o.terms_.begin(), o.terms_.end());
  return TruncGps(field_, std::move(terms), min_frontier(frontier_, o.frontier_));
}

TruncGps TruncGps::operator-(const TruncGps& o) const {
  require(field_->same(*o.field_), Err::ConfigMismatch, "mixed fields");
  std::vector<TruncGpsTerm> terms = terms_;
  for (const TruncGpsTerm& t : o.terms_)
    terms.push_back(TruncGpsTerm{t.exponent, field_->neg(t.coeff)});
  return TruncGps(field_, std::move(terms), min_frontier(frontier_, o.frontier_));
}

TruncGps TruncGps::operator*(const TruncGps& o) const {
  require(field_->same(*o.field_), Err::ConfigMismatch, "mixed fields");
  // supports are nonnegative, so the product is exact below the smaller
  // frontier
  std::vector<TruncGpsTerm> terms;
  for (const TruncGpsTerm& a : terms_)
    for (const TruncGpsTerm& b : o.terms_)
      terms.push_back(TruncGpsTerm{a.exponent + b.exponent, field_->mul(a.coeff, b.coeff)});
  return TruncGps(field_, std::move(terms), min_frontier(frontier_, o.frontier_));
}

TruncGps TruncGps::pow(uint64_t n) const {
  TruncGps acc(field_, {TruncGpsTerm{Rational::from_integer(0), 1}}, frontier_);
  TruncGps base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

TruncGps TruncGps::scaled(uint32_t c) const {
  std::vector<TruncGpsTerm> terms = terms_;
  for (TruncGpsTerm& t : terms) t.coeff = field_->mul(t.coeff, c);
  return TruncGps(field_, std::move(terms), frontier_);
}

TruncGps TruncGps::scale_exponents(const Rational& m) const {
  require(!m.is_zero(), Err::Domain, "exponent scale must be positive");
  std::vector<TruncGpsTerm> terms = terms_;
  for (TruncGpsTerm& t : terms) t.exponent = t.exponent * m;
  std::optional<Rational> fr = frontier_;
  if (fr) fr = *fr * m;
  return TruncGps(field_, std::move(terms), std::move(fr));
}

TruncGps TruncGps::substitute(const BivarPoly& P) const {
  require(field_->same(*P.field()), Err::ConfigMismatch, "mixed fields");
  TruncGps acc = TruncGps::zero(field_, frontier_);
  for (size_t j = 0; j < P.xcoeffs().size(); ++j) {
    const Poly& pj = P.xcoeffs()[j];
    if (pj.is_zero()) continue;
    acc = acc + from_poly(pj) * pow(j);
  }
  return acc;
}

std::string TruncGps::str(uint32_t p) const {
  std::ostringstream os;
  os << "gps v1\n";
  os << field_header(*field_);
  os << " frontier=" << (frontier_ ? frontier_->str() : std::string("none")) << '\n';
  for (const TruncGpsTerm& t : terms_) {
    auto padic = t.exponent.to_padic(p);
    os << (padic ? exponent_str(*padic, p) : t.exponent.str()) << ' '
       << field_->format(t.coeff) << '\n';
  }
  return os.str();
}

TruncGps TruncGps::parse(const std::string& text) {
  std::istringstream is(text);
  std::string raw;
  bool header = false;
  FieldPtr field;
  std::optional<Rational> frontier;
  std::vector<TruncGpsTerm> terms;
  while (std::getline(is, raw)) {
    std::string s = strip_comment(raw);
    if (s.empty()) continue;
    auto toks = split_ws(s);
    if (!header) {
      require(toks.size() == 2 && toks[0] == "gps" && toks[1] == "v1", Err::Format,
              "expected 'gps v1' header");
      header = true;
      continue;
    }
    if (!field) {
      require(toks.size() >= 2 && toks[0] == "field", Err::Format, "expected field line");
      std::string fr;
      std::vector<std::string> fieldtoks;
      for (const std::string& t : toks) {
        if (t.rfind("frontier=", 0) == 0)
          fr = t.substr(9);
        else
          fieldtoks.push_back(t);
      }
      field = parse_field_header(fieldtoks);
      require(!fr.empty(), Err::Format, "field line needs a frontier");
      if (fr != "none") frontier = Rational::parse(fr);
      continue;
    }
    require(toks.size() == 2, Err::Format, "bad series term line: " + s);
    terms.push_back(TruncGpsTerm{Rational::parse(toks[0]), field->parse(toks[1])});
  }
  require(header && field, Err::Format, "truncated gps file");
  return TruncGps(field, std::move(terms), std::move(frontier));
}

}  // namespace gpsa
