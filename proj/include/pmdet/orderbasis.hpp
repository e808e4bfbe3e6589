#pragma once

#include <cstddef>
#include <vector>

#include "pmdet/polymat.hpp"

namespace pmdet {

/// Shift-minimal order basis: the columns of basis() generate the module of
/// all polynomial vectors p with F·p ≡ 0 mod x^sigma, and the basis is
/// shift-column-reduced.  Construction verifies the residual and the
/// reducedness against the generating series; violations are internal
/// errors, never user errors.
class OrderBasis {
public:
  OrderBasis(const PolyMatrix& series, PolyMatrix p, std::size_t sigma,
             Shift shift, long det_x_power);

  const PolyMatrix& basis() const noexcept { return p_; }
  std::size_t order() const noexcept { return sigma_; }
  const Shift& shift() const noexcept { return shift_; }
  /// det basis() = c·x^t for a nonzero constant c; this is t (the number of
  /// pivot promotions performed while building the basis).
  long det_x_power() const noexcept { return det_x_power_; }
  const DegreeProfile& shifted_degrees() const noexcept { return scdeg_; }

private:
  PolyMatrix p_;
  std::size_t sigma_;
  Shift shift_;
  long det_x_power_;
  DegreeProfile scdeg_;
};

/// Order basis of F to order sigma under shift s.  Dispatches to a
/// divide-and-conquer scheme for large orders; the result always satisfies
/// the same contract as the iterative engine (sorted shifted degrees agree,
/// the basis itself may differ).
OrderBasis order_basis(const PolyMatrix& f, std::size_t sigma, const Shift& s);

/// The order-by-order elimination engine, exposed for cross-checking.
OrderBasis order_basis_iterative(const PolyMatrix& f, std::size_t sigma,
                                 const Shift& s);

} // namespace pmdet
