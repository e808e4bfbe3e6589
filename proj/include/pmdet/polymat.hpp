#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pmdet/constmat.hpp"
#include "pmdet/poly.hpp"

namespace pmdet {

/// Per-column degree profile of a matrix (entries may be -infinity).
using DegreeProfile = std::vector<Degree>;

/// Integer shift weighting row degrees: entry i is the exponent of the
/// x^s diagonal acting on row i.  Shifts are plain finite integers.
class Shift {
public:
  Shift() = default;
  explicit Shift(std::vector<long> v) : v_(std::move(v)) {}
  Shift(std::initializer_list<long> v) : v_(v) {}
  static Shift zeros(std::size_t n) { return Shift(std::vector<long>(n, 0)); }
  /// Shift dominating a column-degree profile, with -infinity mapped to 0.
  static Shift from_cdeg(const DegreeProfile& d) {
    std::vector<long> v(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
      v[i] = d[i].finite() && d[i].value() > 0 ? d[i].value() : 0;
    return Shift(std::move(v));
  }

  std::size_t size() const noexcept { return v_.size(); }
  long operator[](std::size_t i) const { return v_[i]; }
  const std::vector<long>& values() const noexcept { return v_; }
  long sum() const noexcept {
    long s = 0;
    for (long x : v_) s += x;
    return s;
  }
  long min() const;
  long max() const;
  bool operator==(const Shift&) const = default;

private:
  std::vector<long> v_;
};

/// Dense matrix of polynomials over Z_p, row-major, immutable after
/// construction (operations return new matrices).  The column-degree
/// profile is computed once at construction and cached.
class PolyMatrix {
public:
  /// Zero matrix.
  PolyMatrix(const FieldContext& ctx, std::size_t rows, std::size_t cols);
  /// From a flat row-major entry vector (size rows*cols, contexts must all
  /// match ctx).
  PolyMatrix(const FieldContext& ctx, std::size_t rows, std::size_t cols,
             std::vector<Polynomial> entries);
  static PolyMatrix from_rows(const FieldContext& ctx,
                              const std::vector<std::vector<Polynomial>>& r);
  static PolyMatrix identity(const FieldContext& ctx, std::size_t n);

  const FieldContext& ctx() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Polynomial& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }
  const Polynomial& operator()(std::size_t i, std::size_t j) const {
    return at(i, j);
  }

  /// Cached column-degree profile.
  const DegreeProfile& cdeg() const noexcept { return cdeg_; }

  PolyMatrix transpose() const;
  ConstMatrix constant_term() const;

  bool operator==(const PolyMatrix& o) const noexcept {
    return ctx_ == o.ctx_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           e_ == o.e_;
  }

private:
  FieldContext ctx_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> e_;
  DegreeProfile cdeg_;
};

/// Shifted column degrees: cdeg_s(M) has entry j = max_i(deg M[i][j] + s_i).
/// The shift length must equal rows(M).
DegreeProfile cdeg_shifted(const PolyMatrix& m, const Shift& s);

/// Sum of a degree profile; -infinity is absorbing.
Degree sum_cdeg(const DegreeProfile& d);

/// Shifted leading-coefficient matrix: entry (i,j) is the coefficient of
/// x^(cdeg_s(M)_j - s_i) in M[i][j].  A zero column has no shifted leading
/// coefficient and is a usage error.
ConstMatrix lcoeff_shifted(const PolyMatrix& m, const Shift& s);

/// True iff lcoeff_shifted(M, s) has full column rank.  A matrix with a zero
/// column is never reduced; a zero-width matrix trivially is.
bool is_column_reduced_shifted(const PolyMatrix& m, const Shift& s);

/// Exact matrix product.
PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b);

/// Product specialized for unbalanced column degrees: requires s >= cdeg(A)
/// entrywise, s nonnegative, and sum(s) >= sum of cdeg_s(B).  Returns exactly
/// mul(a, b); internally buckets B's columns by shifted column degree
/// (powers of two of the average) so the work tracks sum(cdeg_s(B)).
PolyMatrix mul_unbalanced(const PolyMatrix& a, const PolyMatrix& b,
                          const Shift& s);

PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom);
PolyMatrix hstack(const PolyMatrix& left, const PolyMatrix& right);
/// Split after row k: returns (top k rows, remaining rows).
std::pair<PolyMatrix, PolyMatrix> vsplit(const PolyMatrix& m, std::size_t k);
/// Split after column k: returns (left k columns, remaining columns).
std::pair<PolyMatrix, PolyMatrix> hsplit(const PolyMatrix& m, std::size_t k);

PolyMatrix select_columns(const PolyMatrix& m,
                          const std::vector<std::size_t>& idx);
PolyMatrix select_rows(const PolyMatrix& m,
                       const std::vector<std::size_t>& idx);

/// Entrywise evaluation at a point.
ConstMatrix eval_matrix(const PolyMatrix& m, FieldElement a);

} // namespace pmdet
