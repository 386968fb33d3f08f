#include "gpsa/linalg.hpp"

#include <algorithm>

namespace gpsa {

std::vector<size_t> FqMatrix::rref() {
  const Field& f = *field_;
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t pivot = row;
    while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row) {
      for (size_t c = 0; c < cols_; ++c) std::swap(a_[row * cols_ + c], a_[pivot * cols_ + c]);
    }
    uint32_t inv = f.inv(at(row, col));
    if (inv != 1) {
      uint32_t* pr = &a_[row * cols_];
      for (size_t c = col; c < cols_; ++c) pr[c] = f.mul(pr[c], inv);
    }
    const uint32_t* src = &a_[row * cols_];
    for (size_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      uint32_t factor = at(r, col);
      if (factor == 0) continue;
      uint32_t* dst = &a_[r * cols_];
      for (size_t c = col; c < cols_; ++c)
        dst[c] = f.sub(dst[c], f.mul(factor, src[c]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t FqMatrix::rank() const {
  FqMatrix copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<uint32_t>> FqMatrix::nullspace() const {
  const Field& f = *field_;
  FqMatrix m = *this;
  std::vector<size_t> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<uint32_t>> basis;
  for (size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<uint32_t> v(cols_, 0);
    v[free_col] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.neg(m.at(r, free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<RatFunc>> solve_ratfunc(std::vector<std::vector<RatFunc>> M,
                                                  std::vector<RatFunc> rhs) {
  size_t rows = M.size();
  require(rows == rhs.size(), Err::Internal, "system shape mismatch");
  size_t cols = rows == 0 ? 0 : M[0].size();
  const FieldPtr& field = rows ? rhs[0].field() : nullptr;
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && M[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(M[pivot], M[row]);
    std::swap(rhs[pivot], rhs[row]);
    RatFunc inv = M[row][col].inverse();
    for (size_t c = col; c < cols; ++c) M[row][c] = M[row][c] * inv;
    rhs[row] = rhs[row] * inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || M[r][col].is_zero()) continue;
      RatFunc factor = M[r][col];
      for (size_t c = col; c < cols; ++c) M[r][c] = M[r][c] - factor * M[row][c];
      rhs[r] = rhs[r] - factor * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t r = row; r < rows; ++r)
    if (!rhs[r].is_zero()) return std::nullopt;
  std::vector<RatFunc> x(cols, field ? RatFunc::zero(field) : RatFunc());
  for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = rhs[r];
  return x;
}

std::optional<std::vector<std::vector<RatFunc>>> invert_ratfunc(
    std::vector<std::vector<RatFunc>> M) {
  size_t n = M.size();
  if (n == 0) return std::vector<std::vector<RatFunc>>{};
  const FieldPtr& field = M[0][0].field();
  std::vector<std::vector<RatFunc>> inv(n, std::vector<RatFunc>(n, RatFunc::zero(field)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = RatFunc::one(field);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && M[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(M[pivot], M[col]);
    std::swap(inv[pivot], inv[col]);
    RatFunc s = M[col][col].inverse();
    for (size_t c = 0; c < n; ++c) {
      M[col][c] = M[col][c] * s;
      inv[col][c] = inv[col][c] * s;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col].is_zero()) continue;
      RatFunc factor = M[r][col];
      for (size_t c = 0; c < n; ++c) {
        M[r][c] = M[r][c] - factor * M[col][c];
        inv[r][c] = inv[r][c] - factor * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace gpsa
