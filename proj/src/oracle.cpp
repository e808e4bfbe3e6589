#include "pmdet/oracle.hpp"

#include <cstdint>
#include <utility>
#include <vector>

#include "pmdet/errors.hpp"

namespace pmdet {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Raw coefficient vectors, ascending, trailing zeros trimmed; the zero
// polynomial is the empty vector.  All arithmetic is per-term modular.

using Coeffs = std::vector<u64>;

u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}

u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64 invmod(u64 a, u64 p) {
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw InternalError("oracle: inverse of a zero divisor");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<u64>(t);
}

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs conv(const Coeffs& a, const Coeffs& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Coeffs c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], p), p);
  }
  trim(c);
  return c;
}

Coeffs sub(Coeffs a, const Coeffs& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
  trim(a);
  return a;
}

Coeffs divexact(Coeffs num, const Coeffs& den, u64 p) {
  if (den.empty()) throw InternalError("oracle: division by zero polynomial");
  if (num.empty()) return {};
  if (num.size() < den.size())
    throw InternalError("oracle: division not exact");
  u64 dinv = invmod(den.back(), p);
  Coeffs q(num.size() - den.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    u64 c = mulmod(num[k + den.size() - 1], dinv, p);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[k + j] = submod(num[k + j], mulmod(c, den[j], p), p);
  }
  trim(num);
  if (!num.empty()) throw InternalError("oracle: division not exact");
  trim(q);
  return q;
}

Coeffs raw_coeffs(const Polynomial& f) {
  Coeffs c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeffs()[i].v;
  return c;
}

Polynomial to_poly(const FieldContext& ctx, const Coeffs& c) {
  std::vector<FieldElement> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = FieldElement{c[i]};
  return Polynomial(ctx, std::move(v));
}

u64 eval_at(const Coeffs& c, u64 x, u64 p) {
  u64 acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = addmod(mulmod(acc, x, p), c[i], p);
  return acc;
}

// Determinant of a constant grid by plain Gaussian elimination, destroying m.
u64 const_det(std::vector<std::vector<u64>>& m, u64 p) {
  const std::size_t n = m.size();
  u64 det = 1;
  bool neg = false;
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t piv = r;
    while (piv < n && m[piv][r] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      neg = !neg;
    }
    det = mulmod(det, m[r][r], p);
    u64 inv = invmod(m[r][r], p);
    for (std::size_t i = r + 1; i < n; ++i) {
      if (m[i][r] == 0) continue;
      u64 f = mulmod(m[i][r], inv, p);
      for (std::size_t j = r; j < n; ++j)
        m[i][j] = submod(m[i][j], mulmod(f, m[r][j], p), p);
    }
  }
  return neg ? (p - det) % p : det;
}

void require_square(const PolyMatrix& f) {
  if (f.rows() != f.cols())
    throw UsageError("oracle_det: matrix must be square");
}

// Gauss-Jordan to reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<u64>>& a,
                              std::size_t cols, u64 p) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[row]);
    u64 inv = invmod(a[row][col], p);
    for (std::size_t j = col; j < a[row].size(); ++j)
      a[row][j] = mulmod(a[row][j], inv, p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      u64 f = a[i][col];
      for (std::size_t j = col; j < a[i].size(); ++j)
        a[i][j] = submod(a[i][j], mulmod(f, a[row][j], p), p);
    }
    pivot_col.push_back(col);
    ++row;
  }
  return pivot_col;
}

} // namespace

Polynomial oracle_det_bareiss(const PolyMatrix& f) {
  require_square(f);
  const FieldContext& ctx = f.ctx();
  const u64 p = ctx.modulus();
  const std::size_t n = f.rows();
  if (n == 0) return Polynomial::constant(ctx, ctx.one());

  std::vector<std::vector<Coeffs>> m(n, std::vector<Coeffs>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = raw_coeffs(f.at(i, j));

  bool neg = false;
  Coeffs prev{1};
  for (std::size_t r = 0; r + 1 < n; ++r) {
    std::size_t piv = r;
    while (piv < n && m[piv][r].empty()) ++piv;
    if (piv == n) return Polynomial(ctx);
    if (piv != r) {
      std::swap(m[piv], m[r]);
      neg = !neg;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = r + 1; j < n; ++j)
        m[i][j] = divexact(
            sub(conv(m[r][r], m[i][j], p), conv(m[i][r], m[r][j], p), p), prev,
            p);
      m[i][r].clear();
    }
    prev = m[r][r];
  }
  Coeffs d = m[n - 1][n - 1];
  if (neg)
    for (u64& c : d) c = c == 0 ? 0 : p - c;
  return to_poly(ctx, d);
}

Polynomial oracle_det_eval_interp(const PolyMatrix& f) {
  require_square(f);
  const FieldContext& ctx = f.ctx();
  const u64 p = ctx.modulus();
  const std::size_t n = f.rows();
  if (n == 0) return Polynomial::constant(ctx, ctx.one());

  Degree bound = sum_cdeg(f.cdeg());
  if (!bound.finite()) return Polynomial(ctx); // zero column
  const std::size_t npts = static_cast<std::size_t>(bound.value()) + 1;
  if (p < npts)
    throw UsageError("oracle_det: field too small for interpolation");

  std::vector<std::vector<Coeffs>> entries(n, std::vector<Coeffs>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries[i][j] = raw_coeffs(f.at(i, j));

  // Values at x = 0, 1, ..., then Newton divided differences.
  std::vector<u64> dd(npts);
  std::vector<std::vector<u64>> grid(n, std::vector<u64>(n));
  for (std::size_t t = 0; t < npts; ++t) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        grid[i][j] = eval_at(entries[i][j], static_cast<u64>(t), p);
    dd[t] = const_det(grid, p);
  }
  for (std::size_t k = 1; k < npts; ++k) {
    u64 stepinv = invmod(static_cast<u64>(k) % p, p);
    for (std::size_t i = npts - 1; i >= k; --i)
      dd[i] = mulmod(submod(dd[i], dd[i - 1], p), stepinv, p);
  }

  // Expand the Newton form: sum_k dd[k] * prod_{j<k} (x - j).
  Coeffs result;
  Coeffs basis{1};
  for (std::size_t k = 0; k < npts; ++k) {
    if (dd[k] != 0) {
      if (result.size() < basis.size()) result.resize(basis.size(), 0);
      for (std::size_t i = 0; i < basis.size(); ++i)
        result[i] = addmod(result[i], mulmod(dd[k], basis[i], p), p);
    }
    if (k + 1 < npts) {
      u64 root = (p - static_cast<u64>(k) % p) % p; // times (x - k)
      basis.push_back(0);
      for (std::size_t i = basis.size() - 1; i > 0; --i)
        basis[i] = addmod(basis[i - 1], mulmod(basis[i], root, p), p);
      basis[0] = mulmod(basis[0], root, p);
    }
  }
  trim(result);
  return to_poly(ctx, result);
}

Polynomial oracle_det(const PolyMatrix& f) {
  require_square(f);
  Degree bound = sum_cdeg(f.cdeg());
  if (f.rows() > 0 && !bound.finite()) return Polynomial(f.ctx());
  if (f.rows() == 0 ||
      f.ctx().modulus() > static_cast<u64>(bound.value()))
    return oracle_det_eval_interp(f);
  return oracle_det_bareiss(f);
}

PolyMatrix coefficient_nullspace(const PolyMatrix& f, long bound) {
  if (bound < 0) throw UsageError("coefficient_nullspace: bound must be >= 0");
  const FieldContext& ctx = f.ctx();
  const u64 p = ctx.modulus();
  const std::size_t m = f.rows(), n = f.cols();
  const std::size_t width = static_cast<std::size_t>(bound) + 1;
  const std::size_t unknowns = n * width;

  long fdeg = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (Degree d = f.at(i, j).degree(); d.finite() && d.value() > fdeg)
        fdeg = d.value();
  const std::size_t outw = static_cast<std::size_t>(fdeg + bound) + 1;

  // Row (i, e): coefficient of x^e in row i of F*p.  Column (j, b): the
  // coefficient of x^b in entry j of the candidate vector.
  std::vector<std::vector<u64>> a(m * outw, std::vector<u64>(unknowns, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial& e = f.at(i, j);
      for (std::size_t d = 0; d < e.coeffs().size(); ++d) {
        u64 cv = e.coeffs()[d].v;
        if (cv == 0) continue;
        for (std::size_t b = 0; b < width; ++b)
          a[i * outw + d + b][j * width + b] = cv;
      }
    }

  std::vector<std::size_t> pivot_col = rref(a, unknowns, p);

  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<Polynomial> flat;
  std::size_t dim = 0;
  for (std::size_t fc = 0; fc < unknowns; ++fc)
    if (!is_pivot[fc]) ++dim;
  std::vector<std::vector<u64>> vecs;
  vecs.reserve(dim);
  for (std::size_t fc = 0; fc < unknowns; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<u64> v(unknowns, 0);
    v[fc] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = a[r][fc] == 0 ? 0 : p - a[r][fc];
    vecs.push_back(std::move(v));
  }

  std::vector<std::vector<Polynomial>> rows(
      n, std::vector<Polynomial>(dim, Polynomial(ctx)));
  for (std::size_t t = 0; t < dim; ++t)
    for (std::size_t j = 0; j < n; ++j) {
      Coeffs c(vecs[t].begin() + static_cast<long>(j * width),
               vecs[t].begin() + static_cast<long>((j + 1) * width));
      rows[j][t] = to_poly(ctx, c);
    }
  if (dim == 0) return PolyMatrix(ctx, n, 0);
  return PolyMatrix::from_rows(ctx, rows);
}

PolyMatrix naive_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows())
    throw UsageError("naive_mul: inner dimensions differ");
  if (!(a.ctx() == b.ctx()))
    throw UsageError("naive_mul: mixed field contexts");
  const FieldContext& ctx = a.ctx();
  const u64 p = ctx.modulus();
  std::vector<std::vector<Polynomial>> rows(
      a.rows(), std::vector<Polynomial>(b.cols(), Polynomial(ctx)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Coeffs acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        Coeffs term = conv(raw_coeffs(a.at(i, k)), raw_coeffs(b.at(k, j)), p);
        if (acc.size() < term.size()) acc.resize(term.size(), 0);
        for (std::size_t t = 0; t < term.size(); ++t)
          acc[t] = addmod(acc[t], term[t], p);
      }
      trim(acc);
      rows[i][j] = to_poly(ctx, acc);
    }
  if (a.rows() == 0 || b.cols() == 0) return PolyMatrix(ctx, a.rows(), b.cols());
  return PolyMatrix::from_rows(ctx, rows);
}

bool oracle_in_span(const PolyMatrix& basis, const PolyMatrix& targets,
                    const Shift& s) {
  if (basis.rows() != targets.rows())
    throw UsageError("oracle_in_span: row counts differ");
  if (s.size() != basis.rows())
    throw UsageError("oracle_in_span: shift length must equal the row count");
  const FieldContext& ctx = basis.ctx();
  const u64 p = ctx.modulus();
  const std::size_t n = basis.rows(), k = basis.cols();

  const bool reduced = is_column_reduced_shifted(basis, s);
  long bmax = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (Degree d = basis.at(i, j).degree(); d.finite())
        bmax = std::max(bmax, d.value());
  DegreeProfile bdeg = cdeg_shifted(basis, s);
  DegreeProfile tdeg = cdeg_shifted(targets, s);

  for (std::size_t vc = 0; vc < targets.cols(); ++vc) {
    if (tdeg[vc].is_neg_inf()) continue; // zero target
    if (k == 0) return false;
    long vmax = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (Degree d = targets.at(i, vc).degree(); d.finite())
        vmax = std::max(vmax, d.value());

    // Degree bound for the coefficient q_c of basis column c.
    std::vector<long> bounds(k);
    for (std::size_t c = 0; c < k; ++c)
      bounds[c] = reduced ? tdeg[vc].value() - bdeg[c].value()
                          : static_cast<long>(k) * bmax + vmax;

    std::size_t unknowns = 0;
    std::vector<std::size_t> offset(k, 0);
    for (std::size_t c = 0; c < k; ++c) {
      offset[c] = unknowns;
      if (bounds[c] >= 0) unknowns += static_cast<std::size_t>(bounds[c]) + 1;
    }
    if (unknowns == 0) return false; // nonzero target, no admissible columns

    long emax = vmax;
    for (std::size_t c = 0; c < k; ++c)
      if (bounds[c] >= 0) emax = std::max(emax, bmax + bounds[c]);
    const std::size_t outw = static_cast<std::size_t>(emax) + 1;

    // Augmented system: basis * q = target column, coefficient-wise.
    std::vector<std::vector<u64>> a(n * outw,
                                    std::vector<u64>(unknowns + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < k; ++c) {
        if (bounds[c] < 0) continue;
        const auto& cs = basis.at(i, c).coeffs();
        for (std::size_t d = 0; d < cs.size(); ++d) {
          if (cs[d].v == 0) continue;
          for (long b = 0; b <= bounds[c]; ++b)
            a[i * outw + d + static_cast<std::size_t>(b)]
             [offset[c] + static_cast<std::size_t>(b)] = cs[d].v;
        }
      }
      const auto& vs = targets.at(i, vc).coeffs();
      for (std::size_t d = 0; d < vs.size(); ++d)
        a[i * outw + d][unknowns] = vs[d].v;
    }
    std::vector<std::size_t> piv = rref(a, unknowns + 1, p);
    if (!piv.empty() && piv.back() == unknowns) return false; // inconsistent
  }
  return true;
}

} // namespace pmdet
