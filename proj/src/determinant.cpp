#include "pmdet/determinant.hpp"

#include <cassert>
#include <chrono>
#include <utility>

#include "pmdet/colbasis.hpp"
#include "pmdet/detconst.hpp"
#include "pmdet/errors.hpp"

namespace pmdet {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void charge_level(DetReport& rep, std::size_t level, double dt) {
  if (rep.level_seconds.size() <= level) rep.level_seconds.resize(level + 1);
  rep.level_seconds[level] += dt;
}

Polynomial det_rec(const PolyMatrix& f, std::size_t level, DetReport& rep) {
  const FieldContext& ctx = f.ctx();
  const std::size_t n = f.rows();

  if (n == 1) {
    rep.nodes.push_back({level, 1, 0, sum_cdeg(f.cdeg()), ctx.one(),
                         f.cdeg(), {}, {}});
    rep.leaves.push_back(f.at(0, 0));
    return f.at(0, 0);
  }

  auto t0 = std::chrono::steady_clock::now();
  const std::size_t k = (n + 1) / 2;
  const Shift s = Shift::from_cdeg(f.cdeg());
  auto [f_u, f_d] = vsplit(f, k);

  ColBasisTriple cb = col_basis(f_u, s); // RankDeficientError when singular
  PolyMatrix g2 = mul_unbalanced(f_d, cb.n.basis(), s);
  FieldElement d_v = unimodular_det_contribution(
      cb.v_u.constant_term(), cb.n.basis().constant_term());
  assert(!(sum_cdeg(g2.cdeg()) > Degree(s.sum())));
  charge_level(rep, level, seconds_since(t0));

  rep.nodes.push_back({level, n, k, sum_cdeg(f.cdeg()), d_v, f.cdeg(),
                       cb.g1.cdeg(), g2.cdeg()});
  Polynomial dg1 = det_rec(cb.g1, level + 1, rep);
  Polynomial dg2 = det_rec(g2, level + 1, rep);

  t0 = std::chrono::steady_clock::now();
  Polynomial result = dg1.mul(dg2).scale(d_v);
  charge_level(rep, level, seconds_since(t0));
  if (level == 0) {
    rep.root_d_v = d_v;
    rep.root_det_g1 = dg1;
    rep.root_det_g2 = dg2;
  }
  return result;
}

} // namespace

DetReport determinant_with_report(const PolyMatrix& f) {
  if (f.rows() != f.cols())
    throw UsageError("determinant: matrix must be square");
  const FieldContext& ctx = f.ctx();
  DetReport rep{Polynomial(ctx),
                false,
                false,
                {},
                {},
                ctx.one(),
                Polynomial(ctx),
                Polynomial(ctx),
                {}};
  if (f.rows() == 0) {
    rep.det = Polynomial::constant(ctx, ctx.one());
    return rep;
  }
  try {
    rep.det = det_rec(f, 0, rep);
  } catch (const RankDeficientError&) {
    rep.det = Polynomial(ctx);
    rep.aborted = true;
  }
  rep.singular = rep.det.is_zero();
  return rep;
}

Polynomial determinant(const PolyMatrix& f) {
  return determinant_with_report(f).det;
}

Polynomial determinant_auto(const PolyMatrix& f) {
  if (f.rows() != f.cols())
    throw UsageError("determinant: matrix must be square");
  PolyMatrix t = f.transpose();
  if (sum_cdeg(t.cdeg()) < sum_cdeg(f.cdeg())) return determinant(t);
  return determinant(f);
}

Degree degree_certificate(const PolyMatrix& f) {
  if (f.rows() != f.cols())
    throw UsageError("determinant: matrix must be square");
  return sum_cdeg(f.cdeg());
}

} // namespace pmdet
