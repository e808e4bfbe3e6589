#include "pmdet/detconst.hpp"

#include <cstddef>
#include <vector>

#include "pmdet/errors.hpp"

namespace pmdet {

FieldElement det_const(const ConstMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("det_const: matrix not square");
  const FieldContext& ctx = m.ctx();
  const std::size_t n = m.rows();
  ConstMatrix w = m;
  FieldElement det = ctx.one();
  bool negated = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && ctx.is_zero(w.at(piv, col))) ++piv;
    if (piv == n) return ctx.zero();
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) {
        FieldElement t = w.at(piv, j);
        w.set(piv, j, w.at(col, j));
        w.set(col, j, t);
      }
      negated = !negated;
    }
    det = ctx.mul(det, w.at(col, col));
    FieldElement pinv = ctx.inv(w.at(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (ctx.is_zero(w.at(r, col))) continue;
      FieldElement f = ctx.mul(w.at(r, col), pinv);
      for (std::size_t j = col; j < n; ++j)
        w.set(r, j, ctx.sub(w.at(r, j), ctx.mul(f, w.at(col, j))));
    }
  }
  return negated ? ctx.neg(det) : det;
}

ConstMatrix unimodular_completion(const ConstMatrix& u_r0) {
  const FieldContext& ctx = u_r0.ctx();
  const std::size_t n = u_r0.rows(), w = u_r0.cols();
  if (w > n)
    throw UsageError("unimodular_completion: more columns than rows");
  ConstMatrix work = u_r0;
  std::vector<std::size_t> pivot_row;
  for (std::size_t j = 0; j < w; ++j) {
    // Clear the entries sitting in previously chosen pivot rows (column t
    // is 1 at its own pivot row and 0 at all earlier ones), then take the
    // bottom-most remaining nonzero row as this column's pivot.
    for (std::size_t t = 0; t < j; ++t) {
      FieldElement f = work.at(pivot_row[t], j);
      if (ctx.is_zero(f)) continue;
      for (std::size_t i = 0; i < n; ++i)
        work.set(i, j, ctx.sub(work.at(i, j), ctx.mul(f, work.at(i, t))));
    }
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!ctx.is_zero(work.at(i, j))) piv = i;
    if (piv == n)
      throw InternalError("unimodular_completion: input rank deficient");
    FieldElement pinv = ctx.inv(work.at(piv, j));
    for (std::size_t i = 0; i < n; ++i)
      work.set(i, j, ctx.mul(work.at(i, j), pinv));
    pivot_row.push_back(piv);
  }
  std::vector<bool> is_pivot_row(n, false);
  for (std::size_t i : pivot_row) is_pivot_row[i] = true;
  ConstMatrix u_l(ctx, n, n - w);
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot_row[i]) u_l.set(i, col++, ctx.one());
  return u_l;
}

FieldElement unimodular_det_contribution(const ConstMatrix& v_u0,
                                         const ConstMatrix& u_r0) {
  const FieldContext& ctx = v_u0.ctx();
  if (!(ctx == u_r0.ctx()))
    throw UsageError("unimodular_det_contribution: context mismatch");
  const std::size_t k = v_u0.rows(), n = v_u0.cols(), w = u_r0.cols();
  if (u_r0.rows() != n || k + w != n)
    throw UsageError("unimodular_det_contribution: shape mismatch");

  ConstMatrix prod = mul(v_u0, u_r0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < w; ++j)
      if (!ctx.is_zero(prod.at(i, j)))
        throw InternalError(
            "unimodular_det_contribution: V_U0 * U_R0 is not zero");

  if (w == 0) return det_const(v_u0);

  ConstMatrix u_l = unimodular_completion(u_r0);
  FieldElement num = det_const(mul(v_u0, u_l));
  ConstMatrix star(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) star.set(i, j, u_l.at(i, j));
    for (std::size_t j = 0; j < w; ++j) star.set(i, k + j, u_r0.at(i, j));
  }
  FieldElement den = det_const(star);
  if (ctx.is_zero(den))
    throw InternalError("unimodular_det_contribution: singular completion");
  return ctx.mul(num, ctx.inv(den));
}

} // namespace pmdet
