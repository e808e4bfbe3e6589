#pragma once

#include <cstddef>
#include <vector>

#include "pmdet/polymat.hpp"

namespace pmdet {

/// One node of the recursive determinant computation, recorded pre-order.
/// Leaves (1x1 blocks) appear with k = 0, d_v = 1 and empty block profiles.
struct DetNode {
  std::size_t level;     ///< recursion depth, root = 0
  std::size_t dim;       ///< block dimension at this node
  std::size_t k;         ///< split point ceil(dim/2), 0 for leaves
  Degree sum_cdeg;       ///< sum of the node input's column degrees
  FieldElement d_v;      ///< constant determinant contribution of the node
  DegreeProfile cdeg_f;  ///< column degrees of the node input
  DegreeProfile cdeg_g1; ///< column degrees of the first diagonal block
  DegreeProfile cdeg_g2; ///< column degrees of the second diagonal block
};

/// Full account of one determinant run: the exact determinant, the
/// recursion trace, the 1x1 leaf entries in evaluation order, the root
/// factorization, and wall time spent per recursion level (excluding
/// deeper levels).  The product of all node d_v values and all leaf
/// polynomials equals det (unless the run aborted on a singular input).
struct DetReport {
  Polynomial det;
  bool singular = false;
  bool aborted = false; ///< a rank deficiency cut the recursion short
  std::vector<DetNode> nodes;
  std::vector<Polynomial> leaves;
  FieldElement root_d_v{1};
  Polynomial root_det_g1;
  Polynomial root_det_g2;
  std::vector<double> level_seconds;
};

/// Recursive determinant with full trace.  Exact for every square input;
/// singular inputs yield the zero polynomial and singular = true (either
/// computed exactly as zero or detected via rank deficiency, in which case
/// aborted is also set).
DetReport determinant_with_report(const PolyMatrix& f);

/// The determinant of a square matrix (zero polynomial when singular).
Polynomial determinant(const PolyMatrix& f);

/// Runs determinant on f or its transpose, whichever has the smaller sum
/// of column degrees (ties favor f); the result is identical either way.
Polynomial determinant_auto(const PolyMatrix& f);

/// Cheap a-priori bound: deg det f <= sum cdeg f.  A minus-infinity result
/// (some column is zero) certifies a zero determinant.
Degree degree_certificate(const PolyMatrix& f);

} // namespace pmdet
