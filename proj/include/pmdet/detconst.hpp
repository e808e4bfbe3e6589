#pragma once

#include "pmdet/constmat.hpp"

namespace pmdet {

/// Exact determinant over Z_p (Gaussian elimination with row swaps).
FieldElement det_const(const ConstMatrix& m);

/// For U_R0 of shape n x (n-k) with full column rank, returns a completion
/// U_L* of shape n x k made of distinct standard-basis columns such that
/// [U_L*, U_R0] is invertible.  The unit columns are the rows left without
/// a pivot by a column-echelon reduction of U_R0, in ascending order, so
/// the output is deterministic.  Rank deficiency is an internal error.
ConstMatrix unimodular_completion(const ConstMatrix& u_r0);

/// The determinant contribution of the inverse transformation: given the
/// constant terms V_U0 (k x n) and U_R0 (n x (n-k)) with V_U0 * U_R0 = 0
/// and U_R0 of full column rank, returns
///   det(V_U0 * U_L*) / det([U_L*, U_R0])
/// which is independent of the completion chosen.  With n = k (U_R0 of
/// width zero) this is det(V_U0).
FieldElement unimodular_det_contribution(const ConstMatrix& v_u0,
                                         const ConstMatrix& u_r0);

} // namespace pmdet
