#include "ntt.hpp"

#include "pmdet/errors.hpp"

namespace pmdet::detail {

int two_adic_valuation(std::uint64_t p) {
  std::uint64_t m = p - 1;
  int k = 0;
  while ((m & 1) == 0) {
    m >>= 1;
    ++k;
  }
  return k;
}

bool ntt_available(const FieldContext& ctx, std::size_t size) {
  if (size == 0 || (size & (size - 1)) != 0) return false;
  if (ctx.modulus() == 2) return size == 1;
  int need = 0;
  for (std::size_t s = size; s > 1; s >>= 1) ++need;
  return two_adic_valuation(ctx.modulus()) >= need;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t r = 1;
  while (r < n) r <<= 1;
  return r;
}

namespace {

/// Primitive size-th root of unity mod p.  Scans small bases a and takes
/// g = a^((p-1)/size); g is primitive iff g^(size/2) != 1, which happens for
/// roughly half of all bases, so the scan terminates quickly and needs no
/// factorization of p-1.
std::uint64_t primitive_root_of_unity(const FieldContext& ctx,
                                      std::size_t size) {
  const std::uint64_t p = ctx.modulus();
  const std::uint64_t exp = (p - 1) / size;
  for (std::uint64_t a = 2; a < p; ++a) {
    FieldElement g = ctx.pow(FieldElement{a}, exp);
    if (size == 1) return g.v; // any nonzero value works, g = a^(p-1) = 1
    if (ctx.pow(g, size / 2).v != 1) return g.v;
  }
  throw InternalError("no primitive root found; modulus is not prime?");
}

} // namespace

NttPlan make_ntt_plan(const FieldContext& ctx, std::size_t size) {
  if (!ntt_available(ctx, size))
    throw InternalError("NTT size " + std::to_string(size) +
                        " unavailable mod " + std::to_string(ctx.modulus()));
  NttPlan plan{ctx};
  plan.n = size;
  const std::uint64_t p = ctx.modulus();
  const std::size_t half = size / 2;
  plan.w.resize(half ? half : 1);
  plan.iw.resize(half ? half : 1);
  plan.w_shoup.resize(plan.w.size());
  plan.iw_shoup.resize(plan.iw.size());

  std::uint64_t g = primitive_root_of_unity(ctx, size);
  std::uint64_t gi = ctx.inv(FieldElement{g}).v;
  std::uint64_t acc = 1, acci = 1;
  for (std::size_t j = 0; j < plan.w.size(); ++j) {
    plan.w[j] = acc;
    plan.iw[j] = acci;
    plan.w_shoup[j] = shoup_precompute(acc, p);
    plan.iw_shoup[j] = shoup_precompute(acci, p);
    acc = ctx.mul_raw(acc, g);
    acci = ctx.mul_raw(acci, gi);
  }
  plan.n_inv = ctx.inv(ctx.from_int(static_cast<long long>(size))).v;
  plan.n_inv_shoup = shoup_precompute(plan.n_inv, p);

  plan.rev.resize(size);
  for (std::size_t i = 0, j = 0; i < size; ++i) {
    plan.rev[i] = static_cast<std::uint32_t>(j);
    std::size_t bit = size >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j |= bit;
  }
  return plan;
}

namespace {

void transform(const NttPlan& plan, std::uint64_t* a,
               const std::vector<std::uint64_t>& w,
               const std::vector<std::uint64_t>& w_shoup) {
  const std::size_t n = plan.n;
  const std::uint64_t p = plan.ctx.modulus();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = plan.rev[i];
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 1; len < n; len <<= 1) {
    const std::size_t step = n / (2 * len);
    for (std::size_t i = 0; i < n; i += 2 * len) {
      for (std::size_t j = 0; j < len; ++j) {
        const std::size_t k = j * step;
        std::uint64_t u = a[i + j];
        std::uint64_t v = mul_shoup(a[i + j + len], w[k], w_shoup[k], p);
        std::uint64_t s = u + v;
        a[i + j] = s >= p ? s - p : s;
        a[i + j + len] = u >= v ? u - v : u + p - v;
      }
    }
  }
}

} // namespace

void ntt_forward(const NttPlan& plan, std::uint64_t* a) {
  transform(plan, a, plan.w, plan.w_shoup);
}

void ntt_inverse(const NttPlan& plan, std::uint64_t* a) {
  transform(plan, a, plan.iw, plan.iw_shoup);
  const std::uint64_t p = plan.ctx.modulus();
  for (std::size_t i = 0; i < plan.n; ++i)
    a[i] = mul_shoup(a[i], plan.n_inv, plan.n_inv_shoup, p);
}

std::vector<std::uint64_t> poly_mul_ntt(const FieldContext& ctx,
                                        const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t rl = a.size() + b.size() - 1;
  const std::size_t n = next_pow2(rl);
  NttPlan plan = make_ntt_plan(ctx, n);
  std::vector<std::uint64_t> fa(n, 0), fb(n, 0);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  ntt_forward(plan, fa.data());
  ntt_forward(plan, fb.data());
  for (std::size_t i = 0; i < n; ++i) fa[i] = ctx.mul_raw(fa[i], fb[i]);
  ntt_inverse(plan, fa.data());
  fa.resize(rl);
  return fa;
}

} // namespace pmdet::detail
