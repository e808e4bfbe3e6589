#include "pmdet/constmat.hpp"

#include "pmdet/errors.hpp"

namespace pmdet {

ConstMatrix mul(const ConstMatrix& a, const ConstMatrix& b) {
  if (!(a.ctx() == b.ctx()))
    throw UsageError("constant matrix product across different moduli");
  if (a.cols() != b.rows())
    throw UsageError("constant matrix product shape mismatch");
  const FieldContext& ctx = a.ctx();
  ConstMatrix c(ctx, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement aik = a.at(i, k);
      if (aik.v == 0) continue;
      const FieldElement* brow = b.row(k);
      FieldElement* crow = c.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j)
        crow[j] = ctx.add(crow[j], ctx.mul(aik, brow[j]));
    }
  }
  return c;
}

std::size_t rank(const ConstMatrix& m) {
  ConstMatrix w = m;
  const FieldContext& ctx = w.ctx();
  std::size_t r = 0;
  for (std::size_t col = 0; col < w.cols() && r < w.rows(); ++col) {
    std::size_t piv = r;
    while (piv < w.rows() && w.at(piv, col).v == 0) ++piv;
    if (piv == w.rows()) continue;
    for (std::size_t j = 0; j < w.cols(); ++j) {
      FieldElement t = w.at(r, j);
      w.set(r, j, w.at(piv, j));
      w.set(piv, j, t);
    }
    const FieldElement inv = ctx.inv(w.at(r, col));
    for (std::size_t i = r + 1; i < w.rows(); ++i) {
      FieldElement f = ctx.mul(w.at(i, col), inv);
      if (f.v == 0) continue;
      for (std::size_t j = col; j < w.cols(); ++j)
        w.set(i, j, ctx.sub(w.at(i, j), ctx.mul(f, w.at(r, j))));
    }
    ++r;
  }
  return r;
}

} // namespace pmdet
