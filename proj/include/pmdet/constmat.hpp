#pragma once

#include <cstddef>
#include <vector>

#include "pmdet/field.hpp"

namespace pmdet {

/// Dense constant matrix over Z_p, row-major.  Used for leading-coefficient
/// matrices, constant terms, evaluations, and the constant-term determinant
/// bookkeeping.  Plain value semantics; mutation is limited to set() so the
/// elimination routines can work on copies.
class ConstMatrix {
public:
  ConstMatrix(const FieldContext& ctx, std::size_t rows, std::size_t cols)
      : ctx_(ctx), rows_(rows), cols_(cols),
        e_(rows * cols, FieldElement{0}) {}

  static ConstMatrix identity(const FieldContext& ctx, std::size_t n) {
    ConstMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, ctx.one());
    return m;
  }

  const FieldContext& ctx() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElement at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, FieldElement v) {
    e_[i * cols_ + j] = v;
  }

  FieldElement* row(std::size_t i) { return e_.data() + i * cols_; }
  const FieldElement* row(std::size_t i) const { return e_.data() + i * cols_; }

  bool operator==(const ConstMatrix& o) const noexcept {
    return ctx_ == o.ctx_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           e_ == o.e_;
  }

private:
  FieldContext ctx_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> e_;
};

ConstMatrix mul(const ConstMatrix& a, const ConstMatrix& b);

/// Rank by Gaussian elimination on a working copy.
std::size_t rank(const ConstMatrix& m);

} // namespace pmdet
