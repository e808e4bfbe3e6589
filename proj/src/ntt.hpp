#pragma once

// Number-theoretic transform over Z_p for NTT-friendly primes
// (p = c * 2^k + 1 with enough 2-adic room for the transform size).
// Internal to the library; results are exact mod p, hence bit-identical
// to schoolbook multiplication whenever the transform fits.

#include <cstdint>
#include <vector>

#include "pmdet/field.hpp"

namespace pmdet::detail {

/// Largest k with 2^k dividing p-1.
int two_adic_valuation(std::uint64_t p);

/// True when a length-`size` transform exists mod ctx (size a power of two).
bool ntt_available(const FieldContext& ctx, std::size_t size);

/// Smallest power of two >= n.
std::size_t next_pow2(std::size_t n);

/// Precomputed twiddle tables for one (modulus, size) pair.  Roots carry
/// Shoup companions (floor(w * 2^64 / p)) so butterflies need no division.
struct NttPlan {
  FieldContext ctx;
  std::size_t n = 0;
  std::vector<std::uint64_t> w, w_shoup;   // forward twiddles, n/2 entries
  std::vector<std::uint64_t> iw, iw_shoup; // inverse twiddles
  std::uint64_t n_inv = 0, n_inv_shoup = 0;
  std::vector<std::uint32_t> rev; // bit-reversal permutation
};

NttPlan make_ntt_plan(const FieldContext& ctx, std::size_t size);

/// In-place transforms; a.size() must equal plan.n.
void ntt_forward(const NttPlan& plan, std::uint64_t* a);
void ntt_inverse(const NttPlan& plan, std::uint64_t* a);

/// Full product of two coefficient vectors (sizes la, lb; result la+lb-1),
/// or empty if either input is empty.
std::vector<std::uint64_t> poly_mul_ntt(const FieldContext& ctx,
                                        const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b);

inline std::uint64_t mul_shoup(std::uint64_t a, std::uint64_t w,
                               std::uint64_t w_shoup, std::uint64_t p) {
  std::uint64_t q = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * w_shoup) >> 64);
  std::uint64_t r = a * w - q * p;
  return r >= p ? r - p : r;
}

inline std::uint64_t shoup_precompute(std::uint64_t w, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(w) << 64) /
                                    p);
}

} // namespace pmdet::detail
