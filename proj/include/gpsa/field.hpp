#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gpsa/error.hpp"

namespace gpsa {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// F_{p^e} with q = p^e <= 2^16. An element is a vector of e residues mod p
// (coordinates w.r.t. powers of the generator), packed into a single value
// in [0, q) as base-p digits. Multiplication, inversion and powering go
// through log/exp tables built once at construction.
class Field {
public:
  // Deterministic modulus: the lexicographically smallest monic irreducible
  // polynomial of degree e over F_p (low coefficients read as a base-p number).
  static FieldPtr make(uint32_t p, uint32_t e);
  // Explicit modulus: ascending coefficients, length e+1, monic, irreducible.
  static FieldPtr make(uint32_t p, uint32_t e, const std::vector<uint32_t>& modulus);

  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint32_t q() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return mod_; }

  bool same(const Field& o) const { return p_ == o.p_ && e_ == o.e_ && mod_ == o.mod_; }

  uint32_t zero() const { return 0; }
  uint32_t one() const { return 1; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  uint32_t inv(uint32_t a) const {
    require(a != 0, Err::DivisionByZero, "inverse of zero field element");
    return exp_[(q_ - 1) - log_[a]];
  }
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
  // a^n with n >= 0; 0^0 = 1.
  uint32_t pow(uint32_t a, uint64_t n) const;
  // a^p
  uint32_t frobenius(uint32_t a) const { return pow(a, p_); }
  // a^{p^i}
  uint32_t frobenius_iter(uint32_t a, uint64_t i) const;
  // a^{q^i} for subfield-fixing powers; identity on F_q but kept for clarity
  uint32_t q_power(uint32_t a, uint64_t i) const;

  std::vector<uint32_t> coords(uint32_t a) const;
  uint32_t from_coords(const std::vector<uint32_t>& c) const;
  // n mod p, embedded through the prime subfield
  uint32_t from_int(uint64_t n) const { return static_cast<uint32_t>(n % p_); }

  // e = 1: decimal residue. e > 1: "[c0,c1,...,c_{e-1}]" with no spaces.
  std::string format(uint32_t a) const;
  uint32_t parse(const std::string& text) const;

  uint32_t generator() const { return gen_; }

private:
  Field(uint32_t p, uint32_t e, std::vector<uint32_t> modulus);
  void build_tables();
  uint32_t mul_slow(uint32_t a, uint32_t b) const;

  uint32_t p_ = 0, e_ = 0, q_ = 0;
  std::vector<uint32_t> mod_;
  uint32_t gen_ = 0;
  std::vector<uint32_t> exp_;  // size 2(q-1): g^i, doubled to skip a reduction
  std::vector<uint32_t> log_;  // size q; log_[0] unused
};

// Owning element for API boundaries; hot paths use raw reps plus a Field.
class FieldElem {
public:
  FieldElem() = default;
  FieldElem(FieldPtr field, uint32_t rep) : field_(std::move(field)), rep_(rep) {}

  const FieldPtr& field() const { return field_; }
  uint32_t rep() const { return rep_; }
  bool is_zero() const { return rep_ == 0; }

  FieldElem operator+(const FieldElem& o) const { return with(f().add(rep_, sameRep(o))); }
  FieldElem operator-(const FieldElem& o) const { return with(f().sub(rep_, sameRep(o))); }
  FieldElem operator*(const FieldElem& o) const { return with(f().mul(rep_, sameRep(o))); }
  FieldElem operator-() const { return with(f().neg(rep_)); }
  FieldElem inverse() const { return with(f().inv(rep_)); }
  FieldElem pow(uint64_t n) const { return with(f().pow(rep_, n)); }
  FieldElem frobenius() const { return with(f().frobenius(rep_)); }

  bool operator==(const FieldElem& o) const { return f().same(o.f()) && rep_ == o.rep_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  std::string str() const { return f().format(rep_); }

private:
  const Field& f() const {
    require(field_ != nullptr, Err::Internal, "element without field");
    return *field_;
  }
  uint32_t sameRep(const FieldElem& o) const {
    require(o.field_ && f().same(*o.field_), Err::ConfigMismatch,
            "field elements from different configurations");
    return o.rep_;
  }
  FieldElem with(uint32_t r) const { return FieldElem(field_, r); }

  FieldPtr field_;
  uint32_t rep_ = 0;
};

bool is_prime_u32(uint32_t n);

}  // namespace gpsa
