#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gpsa/poly.hpp"

namespace gpsa {

// Dense row-major matrix over F_q (raw element reps).
class FqMatrix {
public:
  FqMatrix() = default;
  FqMatrix(FieldPtr field, size_t rows, size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  const FieldPtr& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  void set(size_t r, size_t c, uint32_t v) { a_[r * cols_ + c] = v; }

  // In-place reduced row echelon form; returns pivot column per pivot row.
  std::vector<size_t> rref();
  size_t rank() const;
  // Canonical nullspace basis (one vector per free column, RREF-derived).
  std::vector<std::vector<uint32_t>> nullspace() const;

private:
  FieldPtr field_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<uint32_t> a_;
};

// Solve M x = rhs over F_q(t) by fraction-field elimination. Returns nullopt
// when the system is inconsistent; free variables are set to zero.
std::optional<std::vector<RatFunc>> solve_ratfunc(std::vector<std::vector<RatFunc>> M,
                                                  std::vector<RatFunc> rhs);

// Inverse of a square RatFunc matrix; nullopt when singular.
std::optional<std::vector<std::vector<RatFunc>>> invert_ratfunc(
    std::vector<std::vector<RatFunc>> M);

}  // namespace gpsa
