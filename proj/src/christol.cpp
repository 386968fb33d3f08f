#include "gpsa/christol.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gpsa/io.hpp"
#include "gpsa/linalg.hpp"
#include "gpsa/text.hpp"

namespace gpsa {

namespace {

// Polynomials in X over F_q(t), reduced modulo a fixed P. Only what the
// kernel construction needs: multiplication, remainder, gcd, q-th powers.
using XPoly = std::vector<RatFunc>;

void xtrim(XPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

XPoly xfrom_bivar(const BivarPoly& P) {
  XPoly out;
  for (const Poly& c : P.xcoeffs()) out.push_back(RatFunc(c));
  xtrim(out);
  return out;
}

XPoly xmul(const XPoly& a, const XPoly& b, const FieldPtr& f) {
  if (a.empty() || b.empty()) return {};
  XPoly r(a.size() + b.size() - 1, RatFunc::zero(f));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  xtrim(r);
  return r;
}

XPoly xmod(XPoly a, const XPoly& m) {
  xtrim(a);
  RatFunc lead_inv = m.back().inverse();
  while (a.size() >= m.size()) {
    RatFunc c = a.back() * lead_inv;
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) a[shift + i] = a[shift + i] - c * m[i];
    xtrim(a);
    if (a.empty()) break;
  }
  return a;
}

XPoly xgcd(XPoly a, XPoly b) {
  xtrim(a);
  xtrim(b);
  while (!b.empty()) {
    XPoly r = xmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    RatFunc inv = a.back().inverse();
    for (auto& c : a) c = c * inv;
  }
  return a;
}

XPoly xderivative(const XPoly& a, const FieldPtr& f) {
  if (a.size() <= 1) return {};
  XPoly r(a.size() - 1, RatFunc::zero(f));
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i].scaled(f->from_int(i));
  xtrim(r);
  return r;
}

// coefficient-wise q-th power with X -> X^q, reduced mod m
XPoly xqpower(const XPoly& a, const XPoly& m, const FieldPtr& f) {
  uint32_t q = f->q();
  if (a.empty()) return {};
  XPoly r(static_cast<size_t>(q) * (a.size() - 1) + 1, RatFunc::zero(f));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    RatFunc cq = RatFunc::one(f);
    for (uint32_t k = 0; k < q; ++k) cq = cq * a[i];
    r[q * i] = cq;
  }
  return xmod(std::move(r), m);
}

void check_separable_squarefree(const BivarPoly& P) {
  const FieldPtr& f = P.field();
  XPoly m = xfrom_bivar(P);
  require(m.size() >= 2, Err::Domain, "polynomial must involve X");
  XPoly d = xderivative(m, f);
  require(!d.empty(), Err::Inseparable, "polynomial has identically zero X-derivative");
  XPoly g = xgcd(m, d);
  if (g.size() >= 2) {
    std::ostringstream os;
    os << "polynomial has a repeated factor of X-degree " << g.size() - 1;
    fail(Err::Reducible, os.str());
  }
}

std::vector<RatFunc> coords_of(const XPoly& a, size_t d, const FieldPtr& f) {
  std::vector<RatFunc> out(d, RatFunc::zero(f));
  for (size_t i = 0; i < a.size() && i < d; ++i) out[i] = a[i];
  return out;
}

XPoly x_to_the_q(const XPoly& P, const FieldPtr& f) {
  uint32_t q = f->q();
  XPoly x{RatFunc::zero(f), RatFunc::one(f)};
  XPoly acc{RatFunc::one(f)};
  XPoly base = x;
  uint32_t n = q;
  while (n > 0) {
    if (n & 1) acc = xmod(xmul(acc, base, f), P);
    base = xmod(xmul(base, base, f), P);
    n >>= 1;
  }
  return acc;
}

}  // namespace

void OreRelation::validate() const {
  require(!coeffs.empty(), Err::Domain, "empty relation");
  require(!coeffs[0].is_zero(), Err::Domain, "a_0 must be nonzero");
}

std::string OreRelation::str() const {
  std::ostringstream os;
  os << "ore v1\n";
  os << field_header(*coeffs[0].field()) << '\n';
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero() || i == 0)
      os << "term " << i << ' ' << coeffs[i].str() << '\n';
  if (!g.is_zero()) os << "g " << g.str() << '\n';
  return os.str();
}

OreRelation OreRelation::parse(const FieldPtr& field, const std::string& text) {
  std::istringstream is(text);
  std::string raw;
  OreRelation r;
  std::map<uint32_t, Poly> terms;
  Poly g = Poly::zero(field);
  bool header = false, fieldline = false;
  while (std::getline(is, raw)) {
    std::string s = strip_comment(raw);
    if (s.empty()) continue;
    auto toks = split_ws(s);
    if (!header) {
      require(toks.size() == 2 && toks[0] == "ore" && toks[1] == "v1", Err::Format,
              "expected 'ore v1' header");
      header = true;
      continue;
    }
    if (!fieldline) {
      FieldPtr f = parse_field_header(toks);
      require(f->same(*field), Err::ConfigMismatch, "ore file field mismatch");
      fieldline = true;
      continue;
    }
    if (toks[0] == "term") {
      require(toks.size() >= 3, Err::Format, "bad term line");
      uint32_t i;
      require(parse_u32(toks[1], i), Err::Format, "bad term index");
      auto pos = s.find(toks[1]);
      std::string rest = s.substr(pos + toks[1].size());
      auto [it, inserted] = terms.emplace(i, Poly::parse(field, rest));
      require(inserted, Err::Format, "duplicate term index");
    } else if (toks[0] == "g") {
      g = Poly::parse(field, s.substr(1));
    } else {
      fail(Err::Format, "unknown ore line: " + toks[0]);
    }
  }
  require(header && fieldline && !terms.empty(), Err::Format, "truncated ore file");
  uint32_t m = terms.rbegin()->first;
  r.coeffs.assign(m + 1, Poly::zero(field));
  for (auto& [i, p] : terms) r.coeffs[i] = std::move(p);
  r.g = std::move(g);
  r.validate();
  return r;
}

OreRelation ore_relation(const BivarPoly& P, const TruncSeries& prefix) {
  const FieldPtr& f = P.field();
  check_separable_squarefree(P);
  // the prefix must identify a root of P
  (void)series_root(P, prefix, std::max<size_t>(prefix.precision(), 8));

  XPoly mP = xfrom_bivar(P);
  size_t d = mP.size() - 1;

  // coordinates of x^{q^i} mod P, i = 1..d
  std::vector<std::vector<RatFunc>> w;
  {
    XPoly cur{RatFunc::zero(f), RatFunc::one(f)};
    for (size_t i = 1; i <= d; ++i) {
      cur = xqpower(cur, mP, f);
      w.push_back(coords_of(cur, d, f));
    }
  }
  std::vector<RatFunc> xcoords(d, RatFunc::zero(f));
  if (d >= 2)
    xcoords[1] = RatFunc::one(f);
  else
    xcoords[0] = RatFunc(-P.xcoeff(0)) * RatFunc(P.xcoeff(1)).inverse();

  auto assemble = [&](size_t m, const std::vector<RatFunc>& b, const RatFunc& gamma) {
    // x - sum b_i x^{q^i} - gamma = 0, denominators cleared
    Poly lcm = Poly::constant(f, 1);
    auto fold = [&](const RatFunc& r) {
      Poly g2 = gcd(lcm, r.den());
      lcm = lcm.divmod(g2).first * r.den();
    };
    for (const RatFunc& bi : b) fold(bi);
    fold(gamma);
    OreRelation rel;
    rel.coeffs.assign(m + 1, Poly::zero(f));
    rel.coeffs[0] = lcm.monic();
    RatFunc scale(rel.coeffs[0]);
    for (size_t i = 0; i < m; ++i) {
      RatFunc ai = -(b[i] * scale);
      require(ai.is_poly(), Err::Internal, "denominator clearing failed");
      rel.coeffs[i + 1] = ai.num();
    }
    RatFunc gg = -(gamma * scale);
    require(gg.is_poly(), Err::Internal, "denominator clearing failed");
    rel.g = gg.num();
    rel.validate();
    return rel;
  };

  for (size_t m = 0; m <= d; ++m) {
    // homogeneous attempt: x = sum b_i x^{q^i} across all coordinates
    {
      std::vector<std::vector<RatFunc>> M(d, std::vector<RatFunc>(m, RatFunc::zero(f)));
      std::vector<RatFunc> rhs = xcoords;
      for (size_t row = 0; row < d; ++row)
        for (size_t i = 0; i < m; ++i) M[row][i] = w[i][row];
      if (auto b = solve_ratfunc(M, rhs)) return assemble(m, *b, RatFunc::zero(f));
    }
    // affine attempt: match the non-constant coordinates, keep the remainder
    // in the constant coordinate if it is polynomial
    {
      std::optional<std::vector<RatFunc>> b;
      if (d == 1) {
        b = std::vector<RatFunc>(m, RatFunc::zero(f));
      } else {
        std::vector<std::vector<RatFunc>> M(d - 1, std::vector<RatFunc>(m, RatFunc::zero(f)));
        std::vector<RatFunc> rhs(d - 1, RatFunc::zero(f));
        for (size_t row = 1; row < d; ++row) {
          rhs[row - 1] = xcoords[row];
          for (size_t i = 0; i < m; ++i) M[row - 1][i] = w[i][row];
        }
        b = solve_ratfunc(M, rhs);
      }
      if (b) {
        RatFunc gamma = xcoords[0];
        for (size_t i = 0; i < m; ++i) gamma = gamma - (*b)[i] * w[i][0];
        if (gamma.is_poly()) return assemble(m, *b, gamma);
      }
    }
  }
  fail(Err::Internal, "no additive relation of depth <= deg_X(P) found");
}

namespace {

constexpr size_t kOutputPrecisionCap = 1u << 12;

// constant coefficient of sum_j coords_j * x^j; poles of the coordinates must
// cancel in the combination
uint32_t state_output(const std::vector<RatFunc>& coords, const TruncSeries& root) {
  const FieldPtr& f = root.field();
  int maxpole = 0;
  for (const RatFunc& c : coords)
    if (!c.is_zero()) maxpole = std::max(maxpole, c.den().valuation());
  size_t prec = static_cast<size_t>(maxpole) + 1;
  require(root.precision() >= prec, Err::Budget, "root precision too small for output map");
  TruncSeries acc = TruncSeries::zero(f, prec);
  TruncSeries rootp = root.truncated(prec);
  for (size_t j = 0; j < coords.size(); ++j) {
    const RatFunc& c = coords[j];
    if (c.is_zero()) continue;
    int vd = c.den().valuation();
    // c = num / (t^vd den0) with den0 a unit; shift by t^maxpole overall
    Poly den0 = c.den().divmod(Poly::term(f, static_cast<uint64_t>(vd), 1)).first;
    TruncSeries cs = expand(RatFunc(c.num(), den0), prec);
    cs = cs.shifted(static_cast<size_t>(maxpole - vd)).truncated(prec);
    acc = acc + (cs * rootp.pow(j)).truncated(prec);
  }
  for (int k = 0; k < maxpole; ++k)
    require(acc.coeff(static_cast<size_t>(k)) == 0, Err::Internal,
            "pole failed to cancel in state output");
  return acc.coeff(static_cast<size_t>(maxpole));
}

}  // namespace

KernelResult kernel_automaton(const BivarPoly& P, const TruncSeries& prefix, size_t budget) {
  const FieldPtr& f = P.field();
  check_separable_squarefree(P);
  uint32_t q = f->q();
  XPoly mP = xfrom_bivar(P);
  size_t d = mP.size() - 1;

  // columns of the q-power basis { (x^q)^k } and the inverse change of basis
  std::vector<std::vector<RatFunc>> M(d, std::vector<RatFunc>(d, RatFunc::zero(f)));
  {
    XPoly xq = x_to_the_q(mP, f);
    XPoly cur{RatFunc::one(f)};
    for (size_t k = 0; k < d; ++k) {
      auto col = coords_of(cur, d, f);
      for (size_t row = 0; row < d; ++row) M[row][k] = col[row];
      if (k + 1 < d) cur = xmod(xmul(cur, xq, f), mP);
    }
  }
  auto Minv = invert_ratfunc(M);
  require(Minv.has_value(), Err::Reducible,
          "q-th powers of the root do not span: polynomial reducible or degenerate");

  size_t root_precision = 64;
  TruncSeries root = series_root(P, prefix, root_precision);

  std::vector<KernelState> states;
  std::map<std::vector<std::string>, uint32_t> index;
  auto intern = [&](std::vector<RatFunc> coords) {
    std::vector<std::string> key;
    key.reserve(coords.size());
    for (const RatFunc& c : coords) key.push_back(c.str());
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(states.size());
    require(states.size() < budget, Err::Budget,
            "kernel closure exceeded budget of " + std::to_string(budget) + " states");
    index.emplace(std::move(key), id);
    states.push_back(KernelState{std::move(coords)});
    return id;
  };

  {
    std::vector<RatFunc> x0(d, RatFunc::zero(f));
    if (d >= 2)
      x0[1] = RatFunc::one(f);
    else
      x0[0] = RatFunc(-P.xcoeff(0)) * RatFunc(P.xcoeff(1)).inverse();
    intern(std::move(x0));
  }

  Dfao base;
  base.field = f;
  base.alphabet = Alphabet{q, false};
  base.semantics = Semantics::LsdInteger;
  base.initial = 0;

  for (uint32_t sid = 0; sid < states.size(); ++sid) {
    std::vector<RatFunc> u = states[sid].coords;
    std::vector<RatFunc> c(d, RatFunc::zero(f));
    for (size_t row = 0; row < d; ++row)
      for (size_t col = 0; col < d; ++col) c[row] = c[row] + (*Minv)[row][col] * u[col];
    for (uint32_t r = 0; r < q; ++r) {
      std::vector<RatFunc> next(d, RatFunc::zero(f));
      for (size_t k = 0; k < d; ++k) next[k] = cartier(c[k], r);
      base.transitions.push_back(intern(std::move(next)));
    }
  }

  base.outputs.resize(states.size());
  for (uint32_t sid = 0; sid < states.size(); ++sid) {
    for (;;) {
      try {
        base.outputs[sid] = state_output(states[sid].coords, root);
        break;
      } catch (const Error& e) {
        if (e.code() != Err::Budget || root_precision >= kOutputPrecisionCap)
          throw;
        root_precision = std::min(kOutputPrecisionCap, root_precision * 2);
        root = series_root(P, prefix, root_precision);
      }
    }
  }

  KernelResult result;
  result.machine_base_q = base;
  result.states = std::move(states);
  result.root = root;
  result.machine = minimize(zero_normalize(block_recode(base), ZeroMode::PadInvariant));
  return result;
}

TruncSeries series_from_dfao(const Dfao& a, size_t D) {
  require(a.semantics == Semantics::LsdInteger || a.semantics == Semantics::MsdInteger,
          Err::SemanticsMismatch, "series extraction needs integer semantics");
  std::vector<uint32_t> c(D, 0);
  for (size_t n = 0; n < D; ++n) {
    DigitString s = a.semantics == Semantics::LsdInteger
                        ? DigitString::integer_lsd(n, a.alphabet.base)
                        : DigitString::integer_msd(n, a.alphabet.base);
    c[n] = a.run_raw(s.syms());
  }
  return TruncSeries(a.field, std::move(c));
}

AnnihilatingPoly automaton_to_polynomial(const Dfao& a, uint32_t deg_x, uint32_t deg_t,
                                         size_t D) {
  require(deg_x >= 1 && D >= 1, Err::Domain, "bounds must be positive");
  require(pad_invariant(a), Err::Precondition, "machine must be pad-invariant");
  const FieldPtr& f = a.field;
  TruncSeries fa = series_from_dfao(a, D);

  size_t unknowns = static_cast<size_t>(deg_x + 1) * (deg_t + 1);
  FqMatrix m(f, D, unknowns);
  TruncSeries fj(f, [&] {
    std::vector<uint32_t> one(D, 0);
    one[0] = 1;
    return one;
  }());
  for (uint32_t j = 0; j <= deg_x; ++j) {
    for (uint32_t i = 0; i <= deg_t; ++i) {
      size_t col = static_cast<size_t>(j) * (deg_t + 1) + i;
      for (size_t k = i; k < D; ++k) m.set(k, col, fj.coeff(k - i));
    }
    if (j < deg_x) fj = (fj * fa).truncated(D);
  }
  auto basis = m.nullspace();
  if (basis.empty()) {
    std::ostringstream os;
    os << "no relation within bounds deg_X<=" << deg_x << " deg_t<=" << deg_t << " (rank "
       << m.rank() << ", unknowns " << unknowns << ")";
    fail(Err::Bounds, os.str());
  }
  const std::vector<uint32_t>& v = basis.front();
  uint32_t lead = 0;
  for (uint32_t x : v)
    if (x != 0) {
      lead = x;
      break;
    }
  uint32_t inv = f->inv(lead);
  std::vector<Poly> xcoeffs;
  for (uint32_t j = 0; j <= deg_x; ++j) {
    std::vector<uint32_t> c(deg_t + 1, 0);
    for (uint32_t i = 0; i <= deg_t; ++i)
      c[i] = f->mul(v[static_cast<size_t>(j) * (deg_t + 1) + i], inv);
    xcoeffs.push_back(Poly(f, std::move(c)));
  }
  AnnihilatingPoly out;
  out.poly = BivarPoly(f, std::move(xcoeffs));
  out.verified_precision = D;
  out.rank = m.rank();
  out.unknowns = unknowns;
  require(out.poly.eval(fa, D).is_zero(), Err::Internal, "nullspace vector fails to annihilate");
  return out;
}

}  // namespace gpsa
