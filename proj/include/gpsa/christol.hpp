#pragma once

#include <cstdint>
#include <vector>

#include "gpsa/dfao.hpp"
#include "gpsa/poly.hpp"

namespace gpsa {

// Additive relation sum_i a_i x^{q^i} + g = 0 with polynomial coefficients
// and a_0 nonzero.
struct OreRelation {
  std::vector<Poly> coeffs;  // a_0 .. a_m
  Poly g;                    // zero when the relation is homogeneous

  uint32_t depth() const { return static_cast<uint32_t>(coeffs.size()) - 1; }
  void validate() const;
  std::string str() const;
  static OreRelation parse(const FieldPtr& field, const std::string& text);
};

// Smallest m with x - sum_{i=1..m} b_i x^{q^i} equal to a polynomial inside
// F_q(t)[X]/(P), returned with denominators cleared. When the b_i and the
// polynomial part come out polynomial (every worked case), a_0 = 1.
OreRelation ore_relation(const BivarPoly& P, const TruncSeries& prefix);

// Element of F_q(t)[X]/(P) in the power basis 1, x, .., x^{d-1}.
struct KernelState {
  std::vector<RatFunc> coords;
  bool operator==(const KernelState& o) const { return coords == o.coords; }
};

struct KernelResult {
  Dfao machine;         // base p, LSD, pad-invariant, minimized
  Dfao machine_base_q;  // the raw base-q section closure
  std::vector<KernelState> states;  // parallel to machine_base_q's states
  TruncSeries root;     // truncation used for the output map
};

// Section-operator closure of the root of P identified by the prefix.
KernelResult kernel_automaton(const BivarPoly& P, const TruncSeries& prefix, size_t budget);

struct AnnihilatingPoly {
  BivarPoly poly;
  size_t verified_precision = 0;  // identity checked modulo t^D only
  size_t rank = 0;
  size_t unknowns = 0;
};

// Degree-bounded annihilating polynomial of the series generated by an
// integer-semantics machine, found by exact linear algebra on D coefficient
// equations.
AnnihilatingPoly automaton_to_polynomial(const Dfao& a, uint32_t deg_x, uint32_t deg_t,
                                         size_t D);

// coefficient n = output on the canonical representation of n, for n < D
TruncSeries series_from_dfao(const Dfao& a, size_t D);

}  // namespace gpsa
