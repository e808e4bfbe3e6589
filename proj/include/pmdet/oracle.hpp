#pragma once

#include "pmdet/polymat.hpp"

// Reference implementations used by tests, --oracle-check and the benchmark
// comparison.  Everything here is written directly from definitions with its
// own local arithmetic; no code is shared with the optimized paths beyond
// the basic containers.

namespace pmdet {

/// Exact determinant.  Picks evaluation-interpolation when the field has
/// more points than deg(det F) requires, otherwise fraction-free (Bareiss)
/// elimination over Z_p[x].
Polynomial oracle_det(const PolyMatrix& f);

/// The two strategies, exposed for cross-checking and benchmarks.
Polynomial oracle_det_bareiss(const PolyMatrix& f);
/// Requires p > sum of column degrees of F.
Polynomial oracle_det_eval_interp(const PolyMatrix& f);

/// Basis of all kernel vectors of F whose entries have degree <= bound,
/// found by coefficient-wise linear algebra.  Columns of the result are the
/// basis vectors; zero-width when the kernel is trivial at that bound.
PolyMatrix coefficient_nullspace(const PolyMatrix& f, long bound);

/// Definitional triple-loop product.
PolyMatrix naive_mul(const PolyMatrix& a, const PolyMatrix& b);

/// True iff every column of targets lies in the K[x]-module generated by
/// the columns of basis.  Combination-degree bounds come from the
/// predictable-degree property when basis is s-column-reduced, and from a
/// Cramer-style worst case otherwise; either way membership is decided
/// exactly by coefficient-space linear algebra.
bool oracle_in_span(const PolyMatrix& basis, const PolyMatrix& targets,
                    const Shift& s);

} // namespace pmdet
