#pragma once

#include "pmdet/polymat.hpp"

namespace pmdet {

/// Shift-minimal right kernel basis of F: the columns generate every
/// polynomial vector p with F·p = 0.  Construction verifies exact
/// annihilation, shifted column reducedness (which implies full column
/// rank) and the degree-sum bound sum(cdeg_s(N)) <= sum(s); violations are
/// internal errors, never user errors.
class KernelBasis {
public:
  KernelBasis(const PolyMatrix& f, PolyMatrix n, Shift shift);

  const PolyMatrix& basis() const noexcept { return n_; }
  const Shift& shift() const noexcept { return shift_; }
  std::size_t source_rows() const noexcept { return src_rows_; }
  std::size_t source_cols() const noexcept { return src_cols_; }

private:
  PolyMatrix n_;
  Shift shift_;
  std::size_t src_rows_, src_cols_;
};

/// Kernel basis of F under shift s; requires s >= cdeg(F) entrywise and
/// s >= 0.  The result has cols(F) - rank(F) columns, sorted by ascending
/// shifted column degree (ties by construction order).
KernelBasis kernel_basis(const PolyMatrix& f, const Shift& s);

/// Definition check: exact annihilation, full column rank, and generation
/// of every kernel vector, the latter decided by coefficient linear algebra
/// up to the degree bound sum(s) (complete at that bound for minimal bases).
bool is_kernel_basis(const PolyMatrix& f, const PolyMatrix& n,
                     const Shift& s);

} // namespace pmdet
