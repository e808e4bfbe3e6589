#include "pmdet/orderbasis.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "pmdet/errors.hpp"

namespace pmdet {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Divide-and-conquer kicks in above this order; below it the order-by-order
// elimination is cheaper than the products the recursion would pay for.
constexpr std::size_t kPmBasisLeafOrder = 64;

struct BasisResult {
  PolyMatrix p;
  std::vector<long> scdeg; // tracked shifted column degrees (normalized)
  long promotions = 0;
};

PolyMatrix truncate_series(const PolyMatrix& f, std::size_t k) {
  std::vector<Polynomial> entries;
  entries.reserve(f.rows() * f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      entries.push_back(f.at(i, j).truncated(k));
  return PolyMatrix(f.ctx(), f.rows(), f.cols(), std::move(entries));
}

// Coefficients from..from+len-1 of every entry, reinterpreted at degree 0.
PolyMatrix slice_series(const PolyMatrix& f, std::size_t from,
                        std::size_t len) {
  std::vector<Polynomial> entries;
  entries.reserve(f.rows() * f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const Polynomial& e = f.at(i, j);
      std::vector<FieldElement> w;
      if (e.coeffs().size() > from) {
        std::size_t hi = std::min(e.coeffs().size(), from + len);
        w.assign(e.coeffs().begin() + static_cast<long>(from),
                 e.coeffs().begin() + static_cast<long>(hi));
      }
      entries.push_back(Polynomial(f.ctx(), std::move(w)));
    }
  return PolyMatrix(f.ctx(), f.rows(), f.cols(), std::move(entries));
}

// The order-by-order elimination engine.  s_norm is the shift normalized to
// min 0; s_min restores true values (true shift = s_norm + s_min).  When
// early_ok (true shift dominates cdeg of the original series), columns whose
// true shifted degree falls below the reached order are exactly annihilated
// and are skipped for the remaining orders; this changes no arithmetic,
// it only skips provably-zero residual work.
BasisResult mbasis_leaf(const PolyMatrix& f, std::size_t sigma,
                        const std::vector<long>& s_norm, long s_min,
                        bool early_ok) {
  const FieldContext& ctx = f.ctx();
  const std::size_t m = f.rows(), n = f.cols();

  // Series coefficients, slice-major, each slice m×n row-major.
  long maxdeg = -1;
  for (Degree d : f.cdeg())
    if (d.finite()) maxdeg = std::max(maxdeg, d.value());
  const std::size_t fslices = static_cast<std::size_t>(maxdeg + 1);
  std::vector<u64> fs(fslices * m * n, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& cs = f.at(i, j).coeffs();
      for (std::size_t e = 0; e < cs.size(); ++e)
        fs[e * m * n + i * n + j] = cs[e].v;
    }

  // Basis columns: coef[c][e*n + l] is the x^e coefficient of row l.
  std::vector<std::vector<u64>> coef(n);
  std::vector<std::size_t> used(n, 1);
  for (std::size_t c = 0; c < n; ++c) {
    coef[c].assign(n, 0);
    coef[c][c] = 1;
  }
  std::vector<long> scdeg(s_norm);
  long promotions = 0;

  // A zero series column is annihilated by its unit vector at every order
  // and is never chosen as a pivot nor reduced: skip it outright.
  std::vector<char> inert(n, 0), finished(n, 0);
  for (std::size_t c = 0; c < n; ++c)
    if (f.cdeg()[c].is_neg_inf()) inert[c] = 1;

  long slack = std::numeric_limits<long>::max();
  for (std::size_t c = 0; c < n; ++c)
    if (f.cdeg()[c].finite())
      slack = std::min(slack, s_norm[c] + s_min - f.cdeg()[c].value());
  if (slack == std::numeric_limits<long>::max()) slack = 0; // all-zero series
  if (slack < 0) early_ok = false;

  const bool small = ctx.small_modulus();
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<std::vector<u64>> lambda(n);
  std::vector<u128> acc(m);
  struct Op {
    std::size_t dst, src;
    u64 alpha;
  };
  std::vector<Op> ops;
  std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, column)
  std::vector<u64> pivinv;

  for (std::size_t ord = 0; ord < sigma; ++ord) {
    order.clear();
    for (std::size_t c = 0; c < n; ++c) {
      if (inert[c] || finished[c]) continue;
      if (early_ok && scdeg[c] + s_min - slack < static_cast<long>(ord)) {
        finished[c] = 1;
        continue;
      }
      order.push_back(c);
    }
    if (order.empty()) continue;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                     std::size_t b) {
      return scdeg[a] < scdeg[b];
    });

    // Residual coefficient of x^ord for each active column.
    for (std::size_t c : order) {
      auto& lam = lambda[c];
      lam.assign(m, 0);
      const long lo =
          std::max<long>(0, static_cast<long>(ord) -
                                static_cast<long>(fslices) + 1);
      const long hi = std::min<long>(static_cast<long>(ord),
                                     static_cast<long>(used[c]) - 1);
      if (lo > hi) continue;
      if (small) {
        std::fill(acc.begin(), acc.end(), u128{0});
        for (long b = lo; b <= hi; ++b) {
          const u64* fa = fs.data() + (ord - b) * m * n;
          const u64* pc = coef[c].data() + static_cast<std::size_t>(b) * n;
          for (std::size_t r = 0; r < m; ++r) {
            const u64* far = fa + r * n;
            u128 t = 0;
            for (std::size_t l = 0; l < n; ++l)
              t += static_cast<u128>(far[l]) * pc[l];
            acc[r] += t;
          }
        }
        for (std::size_t r = 0; r < m; ++r) lam[r] = ctx.reduce128(acc[r]);
      } else {
        for (long b = lo; b <= hi; ++b) {
          const u64* fa = fs.data() + (ord - b) * m * n;
          const u64* pc = coef[c].data() + static_cast<std::size_t>(b) * n;
          for (std::size_t r = 0; r < m; ++r) {
            const u64* far = fa + r * n;
            u64 t = lam[r];
            for (std::size_t l = 0; l < n; ++l)
              t = ctx.add_raw(t, ctx.mul_raw(far[l], pc[l]));
            lam[r] = t;
          }
        }
      }
    }

    // Symbolic elimination on the residual, recording the column ops; the
    // ops are replayed on the basis afterwards in the same sequence.
    ops.clear();
    pivots.clear();
    pivinv.clear();
    for (std::size_t c : order) {
      auto& lam = lambda[c];
      for (std::size_t t = 0; t < pivots.size(); ++t) {
        const std::size_t pr = pivots[t].first, pc = pivots[t].second;
        if (lam[pr] == 0) continue;
        const u64 alpha = ctx.mul_raw(lam[pr], pivinv[t]);
        const auto& src = lambda[pc];
        for (std::size_t r = 0; r < m; ++r)
          lam[r] = ctx.sub_raw(lam[r], ctx.mul_raw(alpha, src[r]));
        ops.push_back({c, pc, alpha});
      }
      std::size_t r = 0;
      while (r < m && lam[r] == 0) ++r;
      if (r < m) {
        pivots.emplace_back(r, c);
        pivinv.push_back(ctx.inv(FieldElement{lam[r]}).v);
      }
    }

    for (const Op& op : ops) {
      const std::size_t du = used[op.src];
      if (used[op.dst] < du) {
        coef[op.dst].resize(du * n, 0);
        used[op.dst] = du;
      }
      const u64* src = coef[op.src].data();
      u64* dst = coef[op.dst].data();
      for (std::size_t t = 0; t < du * n; ++t)
        dst[t] = ctx.sub_raw(dst[t], ctx.mul_raw(op.alpha, src[t]));
    }

    // Promote pivot columns by x; each promotion multiplies det P by x.
    for (const auto& pv : pivots) {
      const std::size_t c = pv.second;
      auto& v = coef[c];
      const std::size_t du = used[c];
      v.resize((du + 1) * n, 0);
      for (std::size_t t = (du + 1) * n; t-- > n;) v[t] = v[t - n];
      std::fill(v.begin(), v.begin() + static_cast<long>(n), 0);
      used[c] = du + 1;
      scdeg[c] += 1;
      ++promotions;
    }
  }

  std::vector<Polynomial> entries;
  entries.reserve(n * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<FieldElement> w(used[c]);
      for (std::size_t e = 0; e < used[c]; ++e)
        w[e] = FieldElement{coef[c][e * n + l]};
      entries.push_back(Polynomial(ctx, std::move(w)));
    }
  return {PolyMatrix(ctx, n, n, std::move(entries)), std::move(scdeg),
          promotions};
}

// Columns of b equal to their identity column pass a's column through
// unchanged; only the rest participate in the product.
PolyMatrix mul_skip_units(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.rows(), k = b.cols();
  std::vector<std::size_t> rest;
  std::vector<char> unit(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    bool u = true;
    for (std::size_t r = 0; r < b.rows() && u; ++r) {
      const Polynomial& e = b.at(r, c);
      u = r == c ? e.degree() == Degree(0) && e.coeff(0) == a.ctx().one()
                 : e.is_zero();
    }
    if (u)
      unit[c] = 1;
    else
      rest.push_back(c);
  }
  if (rest.size() == k) return mul(a, b);
  PolyMatrix partial = rest.empty() ? PolyMatrix(a.ctx(), n, 0)
                                    : mul(a, select_columns(b, rest));
  std::vector<Polynomial> entries;
  entries.reserve(n * k);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pos = 0;
    for (std::size_t c = 0; c < k; ++c)
      entries.push_back(unit[c] ? a.at(i, c) : partial.at(i, pos++));
  }
  return PolyMatrix(a.ctx(), n, k, std::move(entries));
}

BasisResult pmbasis(const PolyMatrix& f, std::size_t sigma,
                    const std::vector<long>& s_norm, long s_min,
                    bool early_ok) {
  if (sigma <= kPmBasisLeafOrder)
    return mbasis_leaf(f, sigma, s_norm, s_min, early_ok);
  const std::size_t s1 = sigma / 2, s2 = sigma - s1;
  BasisResult b1 = pmbasis(truncate_series(f, s1), s1, s_norm, s_min,
                           early_ok);
  PolyMatrix g = slice_series(mul(f, b1.p), s1, s2);
  BasisResult b2 = pmbasis(g, s2, b1.scdeg, s_min, early_ok);
  PolyMatrix p = mul_skip_units(b1.p, b2.p);
  return {std::move(p), std::move(b2.scdeg),
          b1.promotions + b2.promotions};
}

BasisResult run_order_basis(const PolyMatrix& f, std::size_t sigma,
                            const Shift& s, bool allow_dnc) {
  if (sigma < 1) throw UsageError("order_basis: order must be >= 1");
  if (s.size() != f.cols())
    throw UsageError("order_basis: shift length must equal the column count");
  const long s_min = s.min();
  std::vector<long> s_norm(s.values());
  for (long& v : s_norm) v -= s_min;
  PolyMatrix ft = truncate_series(f, sigma);
  bool early_ok = true;
  for (std::size_t c = 0; c < ft.cols(); ++c)
    if (Degree d = ft.cdeg()[c]; d.finite() && d.value() > s[c]) {
      early_ok = false;
      break;
    }
  return allow_dnc ? pmbasis(ft, sigma, s_norm, s_min, early_ok)
                   : mbasis_leaf(ft, sigma, s_norm, s_min, early_ok);
}

} // namespace

OrderBasis::OrderBasis(const PolyMatrix& series, PolyMatrix p,
                       std::size_t sigma, Shift shift, long det_x_power)
    : p_(std::move(p)), sigma_(sigma), shift_(std::move(shift)),
      det_x_power_(det_x_power) {
  if (p_.rows() != p_.cols() || p_.rows() != series.cols())
    throw InternalError("order basis: shape mismatch");
  PolyMatrix r = mul(truncate_series(series, sigma_), p_);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) {
      const auto& cs = r.at(i, j).coeffs();
      const std::size_t lim = std::min<std::size_t>(cs.size(), sigma_);
      for (std::size_t t = 0; t < lim; ++t)
        if (cs[t].v != 0)
          throw InternalError("order basis: nonzero residual below the order");
    }
  if (!is_column_reduced_shifted(p_, shift_))
    throw InternalError("order basis: result is not shift-column-reduced");
  scdeg_ = cdeg_shifted(p_, shift_);
}

OrderBasis order_basis(const PolyMatrix& f, std::size_t sigma,
                       const Shift& s) {
  BasisResult r = run_order_basis(f, sigma, s, true);
  return OrderBasis(f, std::move(r.p), sigma, s, r.promotions);
}

OrderBasis order_basis_iterative(const PolyMatrix& f, std::size_t sigma,
                                 const Shift& s) {
  BasisResult r = run_order_basis(f, sigma, s, false);
  return OrderBasis(f, std::move(r.p), sigma, s, r.promotions);
}

} // namespace pmdet
