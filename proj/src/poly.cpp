#include "pmdet/poly.hpp"

#include <algorithm>

#include "ntt.hpp"

namespace pmdet {

namespace {

// Dispatch thresholds for mul: schoolbook below degree 32, Karatsuba above,
// NTT once the result is long enough to amortize the transforms (and the
// modulus supports it).
constexpr std::size_t kKaratsubaMinDegree = 32;
constexpr std::size_t kNttMinResultLen = 128;

using U64Vec = std::vector<std::uint64_t>;

void schoolbook_into(const FieldContext& ctx, const std::uint64_t* a,
                     std::size_t la, const std::uint64_t* b, std::size_t lb,
                     std::uint64_t* out /* la+lb-1 zeroed words */) {
  if (ctx.small_modulus()) {
    // Products are < 2^62, so a 128-bit accumulator absorbs any practical
    // number of terms with a single reduction per output coefficient.
    for (std::size_t t = 0; t + 1 < la + lb; ++t) {
      unsigned __int128 acc = 0;
      const std::size_t ilo = t >= lb ? t - lb + 1 : 0;
      const std::size_t ihi = std::min(t + 1, la);
      for (std::size_t i = ilo; i < ihi; ++i)
        acc += static_cast<unsigned __int128>(a[i]) * b[t - i];
      out[t] = ctx.reduce128(acc);
    }
    return;
  }
  for (std::size_t i = 0; i < la; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < lb; ++j)
      out[i + j] = ctx.add_raw(out[i + j], ctx.mul_raw(a[i], b[j]));
  }
}

void add_into(const FieldContext& ctx, std::uint64_t* dst,
              const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = ctx.add_raw(dst[i], src[i]);
}

void sub_into(const FieldContext& ctx, std::uint64_t* dst,
              const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = ctx.sub_raw(dst[i], src[i]);
}

// out (zeroed, size la+lb-1) += a * b, recursive Karatsuba.
void karatsuba_into(const FieldContext& ctx, const std::uint64_t* a,
                    std::size_t la, const std::uint64_t* b, std::size_t lb,
                    std::uint64_t* out) {
  if (la == 0 || lb == 0) return;
  if (std::min(la, lb) <= kKaratsubaMinDegree) {
    U64Vec tmp(la + lb - 1, 0);
    schoolbook_into(ctx, a, la, b, lb, tmp.data());
    add_into(ctx, out, tmp.data(), tmp.size());
    return;
  }
  const std::size_t h = (std::max(la, lb) + 1) / 2;
  const std::size_t la0 = std::min(la, h), lb0 = std::min(lb, h);
  const std::size_t la1 = la - la0, lb1 = lb - lb0;
  // a = a0 + x^h a1, b = b0 + x^h b1
  // ab = a0 b0 + x^h [(a0+a1)(b0+b1) - a0 b0 - a1 b1] + x^{2h} a1 b1
  U64Vec z0(la0 + lb0 - 1, 0);
  karatsuba_into(ctx, a, la0, b, lb0, z0.data());
  U64Vec z2;
  if (la1 > 0 && lb1 > 0) {
    z2.assign(la1 + lb1 - 1, 0);
    karatsuba_into(ctx, a + la0, la1, b + lb0, lb1, z2.data());
  }
  U64Vec as(std::max(la0, la1), 0), bs(std::max(lb0, lb1), 0);
  std::copy(a, a + la0, as.begin());
  for (std::size_t i = 0; i < la1; ++i)
    as[i] = ctx.add_raw(as[i], a[la0 + i]);
  std::copy(b, b + lb0, bs.begin());
  for (std::size_t i = 0; i < lb1; ++i)
    bs[i] = ctx.add_raw(bs[i], b[lb0 + i]);
  U64Vec z1(as.size() + bs.size() - 1, 0);
  karatsuba_into(ctx, as.data(), as.size(), bs.data(), bs.size(), z1.data());
  sub_into(ctx, z1.data(), z0.data(), z0.size());
  if (!z2.empty()) sub_into(ctx, z1.data(), z2.data(), z2.size());

  add_into(ctx, out, z0.data(), z0.size());
  add_into(ctx, out + h, z1.data(), z1.size());
  if (!z2.empty()) add_into(ctx, out + 2 * h, z2.data(), z2.size());
}

} // namespace

Polynomial Polynomial::from_ints(const FieldContext& ctx,
                                 const std::vector<long long>& coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (long long a : coeffs) c.push_back(ctx.from_int(a));
  return Polynomial(ctx, std::move(c));
}

Polynomial Polynomial::constant(const FieldContext& ctx, FieldElement c) {
  return Polynomial(ctx, std::vector<FieldElement>{c});
}

Polynomial Polynomial::x_power(const FieldContext& ctx, std::size_t k) {
  std::vector<FieldElement> c(k + 1, FieldElement{0});
  c[k] = ctx.one();
  return Polynomial(ctx, std::move(c));
}

void Polynomial::require_same_ctx(const Polynomial& b) const {
  if (!(ctx_ == b.ctx_))
    throw UsageError("polynomial arithmetic across different moduli: " +
                     std::to_string(ctx_.modulus()) + " vs " +
                     std::to_string(b.ctx_.modulus()));
}

Polynomial Polynomial::add(const Polynomial& b) const {
  require_same_ctx(b);
  std::vector<FieldElement> r(std::max(c_.size(), b.c_.size()),
                              FieldElement{0});
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i)
    r[i] = ctx_.add(r[i], b.c_[i]);
  return Polynomial(ctx_, std::move(r));
}

Polynomial Polynomial::sub(const Polynomial& b) const {
  require_same_ctx(b);
  std::vector<FieldElement> r(std::max(c_.size(), b.c_.size()),
                              FieldElement{0});
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i)
    r[i] = ctx_.sub(r[i], b.c_[i]);
  return Polynomial(ctx_, std::move(r));
}

Polynomial Polynomial::neg() const {
  std::vector<FieldElement> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ctx_.neg(c_[i]);
  return Polynomial(ctx_, std::move(r));
}

Polynomial Polynomial::scale(FieldElement c) const {
  std::vector<FieldElement> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ctx_.mul(c_[i], c);
  return Polynomial(ctx_, std::move(r));
}

Polynomial Polynomial::times_x(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<FieldElement> r(c_.size() + k, FieldElement{0});
  std::copy(c_.begin(), c_.end(), r.begin() + static_cast<long>(k));
  return Polynomial(ctx_, std::move(r));
}

Polynomial Polynomial::truncated(std::size_t k) const {
  if (c_.size() <= k) return *this;
  return Polynomial(ctx_,
                    std::vector<FieldElement>(c_.begin(), c_.begin() + k));
}

Polynomial Polynomial::mul(const Polynomial& b) const {
  require_same_ctx(b);
  if (is_zero() || b.is_zero()) return Polynomial(ctx_);
  const std::size_t la = c_.size(), lb = b.c_.size();
  const std::size_t rl = la + lb - 1;

  U64Vec av(la), bv(lb);
  for (std::size_t i = 0; i < la; ++i) av[i] = c_[i].v;
  for (std::size_t i = 0; i < lb; ++i) bv[i] = b.c_[i].v;

  U64Vec out;
  if (std::min(la, lb) <= kKaratsubaMinDegree) {
    out.assign(rl, 0);
    schoolbook_into(ctx_, av.data(), la, bv.data(), lb, out.data());
  } else if (rl >= kNttMinResultLen &&
             detail::ntt_available(ctx_, detail::next_pow2(rl))) {
    out = detail::poly_mul_ntt(ctx_, av, bv);
  } else {
    out.assign(rl, 0);
    karatsuba_into(ctx_, av.data(), la, bv.data(), lb, out.data());
  }

  std::vector<FieldElement> r(rl);
  for (std::size_t i = 0; i < rl; ++i) r[i] = FieldElement{out[i]};
  return Polynomial(ctx_, std::move(r));
}

FieldElement Polynomial::eval(FieldElement a) const {
  FieldElement acc{0};
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = ctx_.add(ctx_.mul(acc, a), c_[i]);
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(
    const Polynomial& b) const {
  require_same_ctx(b);
  if (b.is_zero()) throw UsageError("division by the zero polynomial");
  if (c_.size() < b.c_.size()) return {Polynomial(ctx_), *this};

  const std::size_t db = b.c_.size() - 1;
  const FieldElement lb_inv = ctx_.inv(b.leading_coeff());
  std::vector<FieldElement> rem = c_;
  std::vector<FieldElement> quo(c_.size() - db, FieldElement{0});
  for (std::size_t i = quo.size(); i-- > 0;) {
    FieldElement c = ctx_.mul(rem[i + db], lb_inv);
    if (c.v == 0) continue;
    quo[i] = c;
    for (std::size_t j = 0; j <= db; ++j)
      rem[i + j] = ctx_.sub(rem[i + j], ctx_.mul(c, b.c_[j]));
  }
  return {Polynomial(ctx_, std::move(quo)), Polynomial(ctx_, std::move(rem))};
}

Polynomial Polynomial::divexact(const Polynomial& b) const {
  auto [q, r] = divmod(b);
  if (!r.is_zero())
    throw InternalError("inexact polynomial division where exactness was "
                        "guaranteed (remainder degree " +
                        r.degree().str() + ")");
  return q;
}

} // namespace pmdet
