#include "gpsa/poly.hpp"

namespace gpsa {

namespace {

TruncSeries padded(const TruncSeries& s, size_t precision) {
  std::vector<uint32_t> c(s.coeffs());
  c.resize(precision, 0);
  return TruncSeries(s.field(), std::move(c));
}

int first_nonzero(const TruncSeries& s) {
  for (size_t i = 0; i < s.precision(); ++i)
    if (s.coeff(i) != 0) return static_cast<int>(i);
  return -1;
}

}  // namespace

TruncSeries series_root(const BivarPoly& P, const TruncSeries& prefix, size_t D) {
  const FieldPtr& field = P.field();
  require(!P.is_zero(), Err::Domain, "zero polynomial has no distinguished root");
  require(prefix.precision() >= 1, Err::Precondition, "empty root prefix");
  BivarPoly Pd = P.derivative_x();
  require(!Pd.is_zero(), Err::Inseparable, "polynomial has identically zero X-derivative");

  size_t L = prefix.precision();
  // valuation of dP/dX at the root; stable once the prefix pins more digits
  TruncSeries dp = Pd.eval(prefix, L);
  int v_signed = first_nonzero(dp);
  require(v_signed >= 0, Err::Inseparable,
          "X-derivative vanishes at the prefix to working precision");
  size_t v = static_cast<size_t>(v_signed);
  require(L > v, Err::Precondition,
          "prefix too short to pin the root (need length > derivative valuation)");

  // prefix consistency
  {
    TruncSeries y = P.eval(prefix, L);
    require(y.is_zero(), Err::NoRoot, "no root extends the given prefix");
  }
  if (D <= L) return prefix.truncated(D);

  std::vector<uint32_t> xc(prefix.coeffs());
  uint32_t u = dp.coeff(v);
  uint32_t uinv = field->inv(u);

  // coefficientwise phase: append one coefficient at a time, checking the
  // intermediate coefficients of P(x) as we go
  size_t warm_until = std::min(D, std::max(L + 1, 2 * v + 2));
  while (xc.size() < warm_until) {
    size_t n = xc.size();
    TruncSeries x(field, xc);
    TruncSeries y = P.eval(padded(x, n + v + 1), n + v + 1);
    for (size_t k = 0; k < n + v; ++k)
      require(y.coeff(k) == 0, Err::NoRoot, "no root extends the given prefix");
    uint32_t c = field->neg(field->mul(y.coeff(n + v), uinv));
    xc.push_back(c);
  }
  if (xc.size() >= D) return TruncSeries(field, std::move(xc)).truncated(D);

  // Hensel phase: with P(x) = 0 mod t^mu and mu > 2v, the update
  // x -> x - P(x)/P'(x) certifies 2(mu - v) digits per round
  size_t mu = xc.size() + v;
  while (xc.size() < D) {
    size_t m = std::min(D, 2 * (mu - v));
    TruncSeries x = padded(TruncSeries(field, xc), m);
    TruncSeries y = P.eval(x, m + v);
    TruncSeries dy = Pd.eval(x, m + v);
    // delta = -(y / t^v) * inverse(dy / t^v) mod t^m
    std::vector<uint32_t> ys(m, 0), ds(m, 0);
    for (size_t k = 0; k < m; ++k) {
      ys[k] = y.coeff(k + v);
      ds[k] = dy.coeff(k + v);
    }
    TruncSeries delta =
        (TruncSeries(field, std::move(ys)) * TruncSeries(field, std::move(ds)).inverse())
            .scaled(field->neg(1));
    TruncSeries xnew = x + delta;
    xc.assign(xnew.coeffs().begin(), xnew.coeffs().end());
    mu = m;
  }

  TruncSeries root = TruncSeries(field, std::move(xc)).truncated(D);
  TruncSeries check = P.eval(padded(root, D), D);
  require(check.is_zero(), Err::NoRoot, "no root extends the given prefix");
  return root;
}

}  // namespace gpsa
