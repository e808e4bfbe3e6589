#pragma once

#include <utility>

#include "pmdet/kernel.hpp"

namespace pmdet {

/// Row-reduced (weak Popov) basis R of the row module of A together with
/// the factor recovering the input: A = vleft · r exactly.
struct RowBasisPair {
  PolyMatrix r;      ///< rank(A) x cols(A), weak Popov, monic pivots
  PolyMatrix vleft;  ///< rows(A) x rank(A)
};

/// Column basis factorization of a full-row-rank F_U, plus the kernel data
/// the determinant driver consumes alongside it.
struct ColBasisTriple {
  PolyMatrix g1;   ///< k x k nonsingular column basis of F_U
  KernelBasis n;   ///< kernel basis of F_U under the shift
  PolyMatrix v_u;  ///< k x n right factor with g1 · v_u = F_U
};

/// Mulders-Storjohann weak Popov reduction with a tracked left factor.
/// Rows of r form a row-reduced basis of the row module of a (pivot = the
/// rightmost entry of maximal degree, pivots distinct and monic, rows
/// sorted by pivot position); zero rows are dropped.
RowBasisPair weak_popov_row_basis(const PolyMatrix& a);

/// Column basis of F_U (k x n, full row rank) with right factor and kernel
/// basis under shift s (requires s >= cdeg(F_U) entrywise, as for
/// kernel_basis).  Throws RankDeficientError carrying the discovered rank
/// when F_U does not have full row rank.
ColBasisTriple col_basis(const PolyMatrix& f_u, const Shift& s);

} // namespace pmdet
