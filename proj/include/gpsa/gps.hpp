#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gpsa/dfao.hpp"
#include "gpsa/digits.hpp"
#include "gpsa/poly.hpp"

namespace gpsa {

// Generalized power series with support in Z[1/p]_{>=0}, backed by a radix
// DFAO. The machine is stored canonical-zero normalized, so the automaton
// function and the coefficient function coincide: non-canonical strings
// output zero.
class GpsAutomaton {
public:
  explicit GpsAutomaton(Dfao machine);
  static GpsAutomaton zero(const FieldPtr& field);

  const Dfao& machine() const { return machine_; }
  const FieldPtr& field() const { return machine_.field; }
  uint32_t p() const { return machine_.alphabet.base; }

  uint32_t coeff_raw(const PAdicRational& r) const;
  FieldElem coeff(const PAdicRational& r) const;
  bool same_series(const GpsAutomaton& o) const { return same_function(machine_, o.machine_); }

private:
  Dfao machine_;
};

struct SupportEnum {
  std::vector<PAdicRational> exponents;
  bool complete = false;  // exhausted the support below the bound
  size_t steps_used = 0;
};

// First min(K, |support below bound|) exponents in increasing order. Best-
// first search over string prefixes; zero-sink prefixes are pruned. A spent
// step budget returns a partial, incomplete enumeration (the expected outcome
// for series whose support is not well-ordered).
SupportEnum support_enum(const GpsAutomaton& x, const Rational& bound, size_t max_count,
                         size_t step_budget);

GpsAutomaton gps_add(const GpsAutomaton& a, const GpsAutomaton& b);

// outputs through a -> a^{q^i} (the identity on F_q values; kept explicit)
GpsAutomaton frobenius_power(const GpsAutomaton& x, uint32_t i);

// coeff(result, r) = coeff(x, r / p^k); radix-point delay construction
GpsAutomaton exponent_scale_pk(const GpsAutomaton& x, int32_t k);

struct FracSupportCheck {
  bool ok = false;
  std::optional<PAdicRational> witness;  // an exponent >= 1 with nonzero coefficient
};
FracSupportCheck check_support_fractional(const GpsAutomaton& z);

// coeff(result, n + f) = c(n) * z(f) for integer n and f in [0,1); requires
// z supported in [0,1) so the two digit blocks never interact
GpsAutomaton mul_int_frac(const Dfao& c, const GpsAutomaton& z);

// sum over listed terms of a_i x^{q^i}, plus g
struct OreForm {
  std::vector<std::pair<uint32_t, Poly>> terms;
  Poly g;
};

struct OreSampleRow {
  PAdicRational exponent;
  uint32_t residue = 0;
};
struct OreSampleReport {
  std::vector<OreSampleRow> rows;
  bool all_zero = true;
};

// Coefficient of sum a_i x^{q^i} + g at each sample exponent, as a finite
// exact sum over the polynomial supports.
OreSampleReport verify_ore_pointwise(const GpsAutomaton& x, const OreForm& form,
                                     const std::vector<PAdicRational>& samples);

struct DecomposedPair {
  Dfao indicator;   // MSD-integer machine with outputs in {0,1}
  GpsAutomaton frac;  // series supported in [0,1)
};

// x = sum_j indicator_j * frac_j, one pair per distinct post-radix state
std::vector<DecomposedPair> decompose(const GpsAutomaton& x);
GpsAutomaton recombine(const std::vector<DecomposedPair>& pairs);

}  // namespace gpsa
