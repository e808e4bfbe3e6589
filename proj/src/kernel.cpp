#include "pmdet/kernel.hpp"

#include <algorithm>
#include <vector>

#include "pmdet/errors.hpp"
#include "pmdet/oracle.hpp"
#include "pmdet/orderbasis.hpp"

namespace pmdet {
namespace {

bool matrix_is_zero(const PolyMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return false;
  return true;
}

} // namespace

KernelBasis::KernelBasis(const PolyMatrix& f, PolyMatrix n, Shift shift)
    : n_(std::move(n)), shift_(std::move(shift)), src_rows_(f.rows()),
      src_cols_(f.cols()) {
  if (n_.rows() != f.cols() || shift_.size() != f.cols())
    throw InternalError("kernel basis: shape mismatch");
  if (!matrix_is_zero(mul(f, n_)))
    throw InternalError("kernel basis: columns are not annihilated");
  if (!is_column_reduced_shifted(n_, shift_))
    throw InternalError("kernel basis: not shift-column-reduced");
  Degree total = sum_cdeg(cdeg_shifted(n_, shift_));
  if (n_.cols() > 0 && total.finite() && total.value() > shift_.sum())
    throw InternalError("kernel basis: shifted degree sum exceeds the bound");
}

KernelBasis kernel_basis(const PolyMatrix& f, const Shift& s) {
  if (s.size() != f.cols())
    throw UsageError("kernel_basis: shift length must equal the column count");
  const DegreeProfile& cd = f.cdeg();
  for (std::size_t j = 0; j < f.cols(); ++j) {
    if (s[j] < 0) throw UsageError("kernel_basis: shift entries must be >= 0");
    if (cd[j].finite() && cd[j].value() > s[j])
      throw UsageError("kernel_basis: shift must dominate the column degrees");
  }
  // Any minimal kernel column has shifted degree at most sum(s), so an
  // order basis one past that bound already contains a full kernel basis;
  // exactness is decided against the untruncated input, not by degrees.
  const std::size_t sigma = static_cast<std::size_t>(s.sum()) + 1;
  OrderBasis ob = order_basis(f, sigma, s);
  const PolyMatrix& p = ob.basis();

  PolyMatrix prod = mul(f, p);
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < p.cols(); ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < prod.rows() && zero; ++r)
      zero = prod.at(r, c).is_zero();
    if (zero) keep.push_back(c);
  }
  const DegreeProfile& sd = ob.shifted_degrees();
  std::stable_sort(keep.begin(), keep.end(),
                   [&](std::size_t a, std::size_t b) { return sd[a] < sd[b]; });
  return KernelBasis(f, select_columns(p, keep), s);
}

bool is_kernel_basis(const PolyMatrix& f, const PolyMatrix& n,
                     const Shift& s) {
  if (n.rows() != f.cols() || s.size() != f.cols())
    throw UsageError("is_kernel_basis: incompatible shapes");
  if (!matrix_is_zero(mul(f, n))) return false;
  // Full column rank: a rank-deficient polynomial matrix has a nonzero
  // kernel vector within the degree-sum bound of its own column degrees.
  if (n.cols() > 0) {
    long dsum = 0;
    for (Degree d : n.cdeg()) {
      if (d.is_neg_inf()) return false; // zero column
      dsum += std::max(d.value(), 0L);
    }
    if (coefficient_nullspace(n, dsum).cols() > 0) return false;
  }
  const long bound = std::max(s.sum(), 0L);
  PolyMatrix all = coefficient_nullspace(f, bound);
  if (all.cols() == 0) return true;
  if (n.cols() == 0) return false;
  return oracle_in_span(n, all, s);
}

} // namespace pmdet
