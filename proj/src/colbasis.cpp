#include "pmdet/colbasis.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "pmdet/errors.hpp"

namespace pmdet {

namespace {

// Pivot data of a working row: degree and the rightmost position attaining
// it.  pos < 0 marks a zero row.
struct Pivot {
  long deg = -1;
  long pos = -1;
};

Pivot pivot_of(const std::vector<Polynomial>& row) {
  Degree d = Degree::neg_inf();
  for (const Polynomial& p : row) d = std::max(d, p.degree());
  if (!d.finite()) return {};
  Pivot pv{d.value(), -1};
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j].degree() == d) pv.pos = static_cast<long>(j);
  return pv;
}

} // namespace

RowBasisPair weak_popov_row_basis(const PolyMatrix& a) {
  const FieldContext& ctx = a.ctx();
  const std::size_t n = a.rows(), k = a.cols();

  std::vector<std::vector<Polynomial>> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i].reserve(k);
    for (std::size_t j = 0; j < k; ++j) w[i].push_back(a.at(i, j));
  }
  // vleft tracked column-major: c[i] is the column paired with working row
  // i, so a = sum_i c[i] * w[i] stays exact under every operation below.
  std::vector<std::vector<Polynomial>> c(
      n, std::vector<Polynomial>(n, Polynomial(ctx)));
  for (std::size_t i = 0; i < n; ++i)
    c[i][i] = Polynomial::constant(ctx, ctx.one());

  std::vector<Pivot> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = pivot_of(w[i]);

  for (;;) {
    // Smallest pivot position held by two or more rows; within it the row
    // of minimal (degree, index) reduces the lowest-indexed other row.
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::vector<std::size_t>> bucket(k);
    for (std::size_t i = 0; i < n; ++i)
      if (piv[i].pos >= 0)
        bucket[static_cast<std::size_t>(piv[i].pos)].push_back(i);
    std::size_t reducer = none, target = none, p = 0;
    for (std::size_t pos = 0; pos < k && target == none; ++pos) {
      if (bucket[pos].size() < 2) continue;
      p = pos;
      reducer = bucket[pos][0];
      for (std::size_t i : bucket[pos])
        if (piv[i].deg < piv[reducer].deg) reducer = i;
      for (std::size_t i : bucket[pos])
        if (i != reducer) {
          target = i;
          break;
        }
    }
    if (target == none) break;

    const long e = piv[target].deg - piv[reducer].deg;
    FieldElement cf =
        ctx.mul(w[target][p].leading_coeff(), ctx.inv(w[reducer][p].leading_coeff()));
    for (std::size_t j = 0; j < k; ++j)
      if (!w[reducer][j].is_zero())
        w[target][j] = w[target][j].sub(
            w[reducer][j].scale(cf).times_x(static_cast<std::size_t>(e)));
    for (std::size_t i = 0; i < n; ++i)
      if (!c[target][i].is_zero())
        c[reducer][i] = c[reducer][i].add(
            c[target][i].scale(cf).times_x(static_cast<std::size_t>(e)));
    piv[target] = pivot_of(w[target]);
  }

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (piv[i].pos >= 0) keep.push_back(i);
  std::sort(keep.begin(), keep.end(), [&](std::size_t x, std::size_t y) {
    return piv[x].pos < piv[y].pos;
  });

  // Normalize pivots monic; the inverse scaling folds into the left factor.
  for (std::size_t i : keep) {
    FieldElement l = w[i][static_cast<std::size_t>(piv[i].pos)].leading_coeff();
    if (l.v == 1) continue;
    FieldElement li = ctx.inv(l);
    for (std::size_t j = 0; j < k; ++j) w[i][j] = w[i][j].scale(li);
    for (std::size_t r = 0; r < n; ++r) c[i][r] = c[i][r].scale(l);
  }

  const std::size_t rk = keep.size();
  std::vector<Polynomial> re;
  re.reserve(rk * k);
  for (std::size_t i : keep)
    for (std::size_t j = 0; j < k; ++j) re.push_back(std::move(w[i][j]));
  std::vector<Polynomial> ve(n * rk, Polynomial(ctx));
  for (std::size_t j = 0; j < rk; ++j)
    for (std::size_t i = 0; i < n; ++i)
      ve[i * rk + j] = std::move(c[keep[j]][i]);
  return {PolyMatrix(ctx, rk, k, std::move(re)),
          PolyMatrix(ctx, n, rk, std::move(ve))};
}

ColBasisTriple col_basis(const PolyMatrix& f_u, const Shift& s) {
  if (f_u.rows() == 0)
    throw UsageError("col_basis: input must have at least one row");
  KernelBasis n = kernel_basis(f_u, s); // also validates the shift

  RowBasisPair rb = weak_popov_row_basis(f_u.transpose());
  const std::size_t k = f_u.rows();
  if (rb.r.rows() < k) throw RankDeficientError(rb.r.rows(), k);

  PolyMatrix g1 = rb.r.transpose();
  PolyMatrix v_u = rb.vleft.transpose();
  if (!(mul(g1, v_u) == f_u))
    throw InternalError("col_basis: factor reconstruction failed");

  // Column degrees of the basis never exceed the k largest of the input.
  DegreeProfile dg = g1.cdeg(), df = f_u.cdeg();
  std::sort(dg.begin(), dg.end(), std::greater<>());
  std::sort(df.begin(), df.end(), std::greater<>());
  for (std::size_t i = 0; i < dg.size(); ++i)
    if (dg[i] > df[i]) throw InternalError("col_basis: degree bound violated");

  return {std::move(g1), std::move(n), std::move(v_u)};
}

} // namespace pmdet
