#include "pmdet/gen.hpp"

#include <random>
#include <vector>

#include "pmdet/detconst.hpp"
#include "pmdet/errors.hpp"
#include "pmdet/oracle.hpp"

namespace pmdet {

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

Polynomial random_poly(const FieldContext& ctx, long max_deg,
                       std::mt19937_64& rng) {
  std::vector<FieldElement> c(static_cast<std::size_t>(max_deg) + 1);
  for (auto& x : c) x = FieldElement{below(rng, ctx.modulus())};
  return Polynomial(ctx, std::move(c));
}

PolyMatrix draw(const FieldContext& ctx, std::size_t n, long max_deg,
                GenProfile profile, std::mt19937_64& rng) {
  std::vector<Polynomial> e;
  e.reserve(n * n);
  std::size_t heavy = profile == GenProfile::kSkewed ? below(rng, n) : 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long d = max_deg;
      if (profile == GenProfile::kSkewed)
        d = j == heavy ? max_deg * static_cast<long>(n) : 0;
      e.push_back(random_poly(ctx, d, rng));
    }
  return PolyMatrix(ctx, n, n, std::move(e));
}

bool certified_nonsingular(const PolyMatrix& f, std::mt19937_64& rng) {
  const FieldContext& ctx = f.ctx();
  const std::size_t n = f.rows();
  Degree bound = sum_cdeg(f.cdeg());
  if (bound.is_neg_inf()) return false;
  // A nonzero evaluation of the determinant certifies nonsingularity; when
  // the field is too small for that to be likely (the determinant may have
  // as many roots as its degree), fall back on the exact reference.
  if (n > 8 && ctx.modulus() > 4 * static_cast<std::uint64_t>(bound.value())) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      FieldElement pt{below(rng, ctx.modulus())};
      if (!ctx.is_zero(det_const(eval_matrix(f, pt)))) return true;
    }
    return false;
  }
  return !oracle_det(f).is_zero();
}

} // namespace

PolyMatrix generate_matrix(std::uint64_t p, std::size_t n, long max_deg,
                           GenProfile profile, std::uint64_t seed) {
  if (profile == GenProfile::kExample) return worked_example_matrix();
  if (n == 0) throw UsageError("generate_matrix: dimension must be positive");
  if (max_deg < 0) throw UsageError("generate_matrix: negative degree bound");
  FieldContext ctx(p);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PolyMatrix f = draw(ctx, n, max_deg, profile, rng);
    if (certified_nonsingular(f, rng)) return f;
  }
  throw InternalError("generate_matrix: no nonsingular draw in 1000 tries");
}

PolyMatrix worked_example_matrix() {
  FieldContext c(7);
  auto p = [&](std::vector<long long> v) {
    return Polynomial::from_ints(c, std::move(v));
  };
  std::vector<Polynomial> e = {
      p({0, 1}), p({0, 0, 0, -1}), p({0, 0, 0, 0, -2}), p({0, 2}),
      p({0, 0, -1}),
      p({1}), p({-1}), p({0, -2}), p({2}), p({0, -1}),
      p({-3}), p({0, 1, 3}), p({0, 0, 2}), p({1, 0, 0, 0, -1}), p({0, 3}),
      p({}), p({1}), p({-2, 2, 1}), p({-2, 2, 0, 1}), p({}),
      p({1}), p({2, 0, -1}), p({3, -3, 0, -2}), p({2, 2}), p({}),
  };
  return PolyMatrix(c, 5, 5, std::move(e));
}

} // namespace pmdet
