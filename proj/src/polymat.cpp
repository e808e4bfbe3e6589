#include "pmdet/polymat.hpp"

#include <algorithm>

#include "pmdet/errors.hpp"
#include "ntt.hpp"

namespace pmdet {

namespace {

// NTT-based products pay off once entries are long enough to amortize the
// transforms; below this result length the direct path wins.
constexpr std::size_t kNttMatMinResultLen = 64;

long max_plain_degree(const PolyMatrix& m) {
  long d = -1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j).degree().finite())
        d = std::max(d, m.at(i, j).degree().value());
  return d;
}

void require_mul_shapes(const PolyMatrix& a, const PolyMatrix& b) {
  if (!(a.ctx() == b.ctx()))
    throw UsageError("matrix product across different moduli");
  if (a.cols() != b.rows())
    throw UsageError("matrix product shape mismatch: " +
                     std::to_string(a.cols()) + " inner vs " +
                     std::to_string(b.rows()));
}

// Direct path: per output entry, accumulate all inner convolutions into one
// coefficient buffer, reducing once per coefficient when the modulus allows.
PolyMatrix mul_direct(const PolyMatrix& a, const PolyMatrix& b) {
  const FieldContext& ctx = a.ctx();
  const long da = max_plain_degree(a), db = max_plain_degree(b);
  if (da < 0 || db < 0) return PolyMatrix(ctx, a.rows(), b.cols());
  const std::size_t buf_len = static_cast<std::size_t>(da + db) + 1;
  const bool small = ctx.small_modulus();

  std::vector<Polynomial> out(a.rows() * b.cols(), Polynomial(ctx));
  const long total = static_cast<long>(a.rows() * b.cols());
#pragma omp parallel
  {
    std::vector<unsigned __int128> acc;
    std::vector<std::uint64_t> acc64;
#pragma omp for schedule(static)
    for (long t = 0; t < total; ++t) {
      const std::size_t i = static_cast<std::size_t>(t) / b.cols();
      const std::size_t j = static_cast<std::size_t>(t) % b.cols();
      if (small) {
        acc.assign(buf_len, 0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
          const auto& f = a.at(i, k).coeffs();
          const auto& g = b.at(k, j).coeffs();
          for (std::size_t u = 0; u < f.size(); ++u) {
            if (f[u].v == 0) continue;
            const unsigned __int128 fu = f[u].v;
            for (std::size_t v = 0; v < g.size(); ++v)
              acc[u + v] += fu * g[v].v;
          }
        }
        std::vector<FieldElement> c(buf_len);
        for (std::size_t e = 0; e < buf_len; ++e)
          c[e] = FieldElement{ctx.reduce128(acc[e])};
        out[static_cast<std::size_t>(t)] = Polynomial(ctx, std::move(c));
      } else {
        acc64.assign(buf_len, 0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
          const auto& f = a.at(i, k).coeffs();
          const auto& g = b.at(k, j).coeffs();
          for (std::size_t u = 0; u < f.size(); ++u) {
            if (f[u].v == 0) continue;
            for (std::size_t v = 0; v < g.size(); ++v)
              acc64[u + v] =
                  ctx.add_raw(acc64[u + v], ctx.mul_raw(f[u].v, g[v].v));
          }
        }
        std::vector<FieldElement> c(buf_len);
        for (std::size_t e = 0; e < buf_len; ++e)
          c[e] = FieldElement{acc64[e]};
        out[static_cast<std::size_t>(t)] = Polynomial(ctx, std::move(c));
      }
    }
  }
  return PolyMatrix(ctx, a.rows(), b.cols(), std::move(out));
}

// Transform-domain path: forward-transform every entry once, accumulate each
// output entry across the inner dimension in the frequency domain, then one
// inverse transform per output entry.  Exact mod p, so identical to the
// direct path.
PolyMatrix mul_ntt(const PolyMatrix& a, const PolyMatrix& b,
                   std::size_t size) {
  const FieldContext& ctx = a.ctx();
  const detail::NttPlan plan = detail::make_ntt_plan(ctx, size);
  const std::size_t m = a.rows(), n = a.cols(), k = b.cols();
  const bool small = ctx.small_modulus();

  auto transform_all = [&](const PolyMatrix& src) {
    std::vector<std::vector<std::uint64_t>> f(src.rows() * src.cols());
    const long total = static_cast<long>(f.size());
#pragma omp parallel for schedule(static)
    for (long t = 0; t < total; ++t) {
      const auto& c = src.at(static_cast<std::size_t>(t) / src.cols(),
                             static_cast<std::size_t>(t) % src.cols())
                          .coeffs();
      auto& v = f[static_cast<std::size_t>(t)];
      v.assign(size, 0);
      for (std::size_t e = 0; e < c.size(); ++e) v[e] = c[e].v;
      detail::ntt_forward(plan, v.data());
    }
    return f;
  };
  const auto fa = transform_all(a);
  const auto fb = transform_all(b);

  std::vector<Polynomial> out(m * k, Polynomial(ctx));
  const long total = static_cast<long>(m * k);
#pragma omp parallel
  {
    std::vector<unsigned __int128> acc;
    std::vector<std::uint64_t> bin;
#pragma omp for schedule(static)
    for (long t = 0; t < total; ++t) {
      const std::size_t i = static_cast<std::size_t>(t) / k;
      const std::size_t j = static_cast<std::size_t>(t) % k;
      bin.assign(size, 0);
      if (small) {
        acc.assign(size, 0);
        for (std::size_t l = 0; l < n; ++l) {
          const std::uint64_t* fv = fa[i * n + l].data();
          const std::uint64_t* gv = fb[l * k + j].data();
          for (std::size_t e = 0; e < size; ++e)
            acc[e] += static_cast<unsigned __int128>(fv[e]) * gv[e];
        }
        for (std::size_t e = 0; e < size; ++e) bin[e] = ctx.reduce128(acc[e]);
      } else {
        for (std::size_t l = 0; l < n; ++l) {
          const std::uint64_t* fv = fa[i * n + l].data();
          const std::uint64_t* gv = fb[l * k + j].data();
          for (std::size_t e = 0; e < size; ++e)
            bin[e] = ctx.add_raw(bin[e], ctx.mul_raw(fv[e], gv[e]));
        }
      }
      detail::ntt_inverse(plan, bin.data());
      std::vector<FieldElement> c(size);
      for (std::size_t e = 0; e < size; ++e) c[e] = FieldElement{bin[e]};
      out[static_cast<std::size_t>(t)] = Polynomial(ctx, std::move(c));
    }
  }
  return PolyMatrix(ctx, m, k, std::move(out));
}

} // namespace

long Shift::min() const {
  if (v_.empty()) return 0;
  return *std::min_element(v_.begin(), v_.end());
}

long Shift::max() const {
  if (v_.empty()) return 0;
  return *std::max_element(v_.begin(), v_.end());
}

PolyMatrix::PolyMatrix(const FieldContext& ctx, std::size_t rows,
                       std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), e_(rows * cols, Polynomial(ctx)),
      cdeg_(cols, Degree::neg_inf()) {}

PolyMatrix::PolyMatrix(const FieldContext& ctx, std::size_t rows,
                       std::size_t cols, std::vector<Polynomial> entries)
    : ctx_(ctx), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_)
    throw UsageError("matrix entry count does not match its shape");
  for (const Polynomial& p : e_)
    if (!(p.ctx() == ctx_))
      throw UsageError("matrix entry from a different modulus");
  cdeg_.assign(cols_, Degree::neg_inf());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      cdeg_[j] = std::max(cdeg_[j], e_[i * cols_ + j].degree());
}

PolyMatrix PolyMatrix::from_rows(
    const FieldContext& ctx, const std::vector<std::vector<Polynomial>>& r) {
  const std::size_t rows = r.size();
  const std::size_t cols = rows == 0 ? 0 : r[0].size();
  std::vector<Polynomial> flat;
  flat.reserve(rows * cols);
  for (const auto& row : r) {
    if (row.size() != cols) throw UsageError("ragged matrix rows");
    for (const auto& p : row) flat.push_back(p);
  }
  return PolyMatrix(ctx, rows, cols, std::move(flat));
}

PolyMatrix PolyMatrix::identity(const FieldContext& ctx, std::size_t n) {
  std::vector<Polynomial> e(n * n, Polynomial(ctx));
  for (std::size_t i = 0; i < n; ++i)
    e[i * n + i] = Polynomial::constant(ctx, ctx.one());
  return PolyMatrix(ctx, n, n, std::move(e));
}

PolyMatrix PolyMatrix::transpose() const {
  std::vector<Polynomial> e(e_.size(), Polynomial(ctx_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      e[j * rows_ + i] = e_[i * cols_ + j];
  return PolyMatrix(ctx_, cols_, rows_, std::move(e));
}

ConstMatrix PolyMatrix::constant_term() const {
  ConstMatrix c(ctx_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      c.set(i, j, at(i, j).constant_term());
  return c;
}

DegreeProfile cdeg_shifted(const PolyMatrix& m, const Shift& s) {
  if (s.size() != m.rows())
    throw UsageError("shift length " + std::to_string(s.size()) +
                     " does not match row count " + std::to_string(m.rows()));
  DegreeProfile d(m.cols(), Degree::neg_inf());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      d[j] = std::max(d[j], m.at(i, j).degree() + s[i]);
  return d;
}

Degree sum_cdeg(const DegreeProfile& d) {
  Degree s(0);
  for (Degree x : d) s = s + x;
  return s;
}

ConstMatrix lcoeff_shifted(const PolyMatrix& m, const Shift& s) {
  DegreeProfile d = cdeg_shifted(m, s);
  for (Degree x : d)
    if (x.is_neg_inf())
      throw UsageError("shifted leading coefficient of a zero column");
  ConstMatrix lc(m.ctx(), m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const long e = d[j].value() - s[i];
      if (e < 0) continue;
      lc.set(i, j, m.at(i, j).coeff(static_cast<std::size_t>(e)));
    }
  }
  return lc;
}

bool is_column_reduced_shifted(const PolyMatrix& m, const Shift& s) {
  if (s.size() != m.rows())
    throw UsageError("shift length does not match row count");
  if (m.cols() == 0) return true;
  if (m.cols() > m.rows()) return false;
  for (Degree x : cdeg_shifted(m, s))
    if (x.is_neg_inf()) return false;
  return rank(lcoeff_shifted(m, s)) == m.cols();
}

PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b) {
  require_mul_shapes(a, b);
  if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0)
    return PolyMatrix(a.ctx(), a.rows(), b.cols());
  const long da = max_plain_degree(a), db = max_plain_degree(b);
  if (da >= 0 && db >= 0) {
    const std::size_t rl = static_cast<std::size_t>(da + db) + 1;
    if (rl >= kNttMatMinResultLen &&
        detail::ntt_available(a.ctx(), detail::next_pow2(rl)))
      return mul_ntt(a, b, detail::next_pow2(rl));
  }
  return mul_direct(a, b);
}

PolyMatrix mul_unbalanced(const PolyMatrix& a, const PolyMatrix& b,
                          const Shift& s) {
  require_mul_shapes(a, b);
  if (s.size() != a.cols())
    throw UsageError("unbalanced product: shift length must equal the inner "
                     "dimension");
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 0)
      throw UsageError("unbalanced product: shift entries must be >= 0");
  const DegreeProfile& ca = a.cdeg();
  for (std::size_t i = 0; i < s.size(); ++i)
    if (Degree(s[i]) < ca[i])
      throw UsageError("unbalanced product: shift does not dominate cdeg of "
                       "the left factor");
  const DegreeProfile db = cdeg_shifted(b, s);
  Degree total = sum_cdeg(db);
  if (total.finite() && total.value() > s.sum())
    throw UsageError("unbalanced product: sum of shifted column degrees of "
                     "the right factor exceeds the shift sum");
  if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0)
    return PolyMatrix(a.ctx(), a.rows(), b.cols());

  // Bucket B's columns by shifted column degree at thresholds avg * 2^i.
  const long n = static_cast<long>(s.size());
  const long avg = (s.sum() + n - 1) / std::max(1L, n);
  auto bucket_of = [&](Degree d) {
    if (d.is_neg_inf() || d.value() <= std::max(1L, avg)) return 0;
    int i = 0;
    long bound = std::max(1L, avg);
    while (d.value() > bound) {
      bound *= 2;
      ++i;
    }
    return i;
  };
  std::vector<std::vector<std::size_t>> buckets;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    const int bi = bucket_of(db[j]);
    if (static_cast<std::size_t>(bi) >= buckets.size())
      buckets.resize(static_cast<std::size_t>(bi) + 1);
    buckets[static_cast<std::size_t>(bi)].push_back(j);
  }

  std::vector<Polynomial> out(a.rows() * b.cols(), Polynomial(a.ctx()));
  for (const auto& cols : buckets) {
    if (cols.empty()) continue;
    // Rows of the bucket that are identically zero contribute nothing, and
    // dropping them also drops the corresponding high-degree columns of A,
    // keeping the per-bucket product sized by the bucket's degree bound.
    const PolyMatrix bsub = select_columns(b, cols);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < bsub.rows(); ++i)
      for (std::size_t j = 0; j < bsub.cols(); ++j)
        if (!bsub.at(i, j).is_zero()) {
          keep.push_back(i);
          break;
        }
    const PolyMatrix prod =
        mul(select_columns(a, keep), select_rows(bsub, keep));
    for (std::size_t jj = 0; jj < cols.size(); ++jj)
      for (std::size_t i = 0; i < a.rows(); ++i)
        out[i * b.cols() + cols[jj]] = prod.at(i, jj);
  }
  return PolyMatrix(a.ctx(), a.rows(), b.cols(), std::move(out));
}

PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom) {
  if (!(top.ctx() == bottom.ctx()))
    throw UsageError("stacking matrices across different moduli");
  if (top.cols() != bottom.cols())
    throw UsageError("vstack column count mismatch");
  std::vector<Polynomial> e;
  e.reserve((top.rows() + bottom.rows()) * top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) e.push_back(top.at(i, j));
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < bottom.cols(); ++j)
      e.push_back(bottom.at(i, j));
  return PolyMatrix(top.ctx(), top.rows() + bottom.rows(), top.cols(),
                    std::move(e));
}

PolyMatrix hstack(const PolyMatrix& left, const PolyMatrix& right) {
  if (!(left.ctx() == right.ctx()))
    throw UsageError("stacking matrices across different moduli");
  if (left.rows() != right.rows())
    throw UsageError("hstack row count mismatch");
  std::vector<Polynomial> e;
  e.reserve(left.rows() * (left.cols() + right.cols()));
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) e.push_back(left.at(i, j));
    for (std::size_t j = 0; j < right.cols(); ++j) e.push_back(right.at(i, j));
  }
  return PolyMatrix(left.ctx(), left.rows(), left.cols() + right.cols(),
                    std::move(e));
}

std::pair<PolyMatrix, PolyMatrix> vsplit(const PolyMatrix& m, std::size_t k) {
  if (k > m.rows()) throw UsageError("vsplit index out of range");
  std::vector<Polynomial> top, bottom;
  top.reserve(k * m.cols());
  bottom.reserve((m.rows() - k) * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      (i < k ? top : bottom).push_back(m.at(i, j));
  return {PolyMatrix(m.ctx(), k, m.cols(), std::move(top)),
          PolyMatrix(m.ctx(), m.rows() - k, m.cols(), std::move(bottom))};
}

std::pair<PolyMatrix, PolyMatrix> hsplit(const PolyMatrix& m, std::size_t k) {
  if (k > m.cols()) throw UsageError("hsplit index out of range");
  std::vector<Polynomial> left, right;
  left.reserve(m.rows() * k);
  right.reserve(m.rows() * (m.cols() - k));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      (j < k ? left : right).push_back(m.at(i, j));
  return {PolyMatrix(m.ctx(), m.rows(), k, std::move(left)),
          PolyMatrix(m.ctx(), m.rows(), m.cols() - k, std::move(right))};
}

PolyMatrix select_columns(const PolyMatrix& m,
                          const std::vector<std::size_t>& idx) {
  std::vector<Polynomial> e;
  e.reserve(m.rows() * idx.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j : idx) {
      if (j >= m.cols()) throw UsageError("column index out of range");
      e.push_back(m.at(i, j));
    }
  return PolyMatrix(m.ctx(), m.rows(), idx.size(), std::move(e));
}

PolyMatrix select_rows(const PolyMatrix& m,
                       const std::vector<std::size_t>& idx) {
  std::vector<Polynomial> e;
  e.reserve(idx.size() * m.cols());
  for (std::size_t i : idx) {
    if (i >= m.rows()) throw UsageError("row index out of range");
    for (std::size_t j = 0; j < m.cols(); ++j) e.push_back(m.at(i, j));
  }
  return PolyMatrix(m.ctx(), idx.size(), m.cols(), std::move(e));
}

ConstMatrix eval_matrix(const PolyMatrix& m, FieldElement a) {
  ConstMatrix c(m.ctx(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      c.set(i, j, m.at(i, j).eval(a));
  return c;
}

} // namespace pmdet
