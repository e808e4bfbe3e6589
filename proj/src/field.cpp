#include "pmdet/field.hpp"

namespace pmdet {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set decides primality for all n < 3.3 * 10^24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldContext::FieldContext(std::uint64_t p) : p_(p) {
  if (p >= (1ull << 62))
    throw UsageError("modulus too large: need p < 2^62, got " +
                     std::to_string(p));
  if (!is_prime_u64(p))
    throw UsageError("modulus must be prime, got " + std::to_string(p));
  small_ = p < (1ull << 32);
  if (small_) {
    // floor(2^64 / p) without 128-bit division.
    magic_ = static_cast<std::uint64_t>(~0ull) / p_;
    // ~0ull = 2^64 - 1, so (2^64-1)/p == floor(2^64/p) unless p | 2^64,
    // impossible for odd p; for p = 2 adjust explicitly.
    if (p_ == 2) magic_ = 1ull << 63;
  }
}

FieldElement FieldContext::inv(FieldElement a) const {
  if (a.v == 0) throw UsageError("inverse of zero in Z_p");
  // Iterative extended Euclid on (p, a); p prime makes the gcd 1.
  long long t0 = 0, t1 = 1;
  long long r0 = static_cast<long long>(p_), r1 = static_cast<long long>(a.v);
  while (r1 != 0) {
    long long q = r0 / r1;
    long long tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
  }
  if (t0 < 0) t0 += static_cast<long long>(p_);
  return {static_cast<std::uint64_t>(t0)};
}

FieldElement FieldContext::pow(FieldElement a, std::uint64_t e) const noexcept {
  FieldElement r = one(), base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

} // namespace pmdet
