#pragma once

#include <cstdint>
#include <vector>

#include "pmdet/errors.hpp"

namespace pmdet {

/// One element of Z_p, stored as the canonical residue in [0, p).
/// Deliberately a bare word: arithmetic lives on FieldContext, so containers
/// of elements stay flat and mismatched-context checks happen where two
/// containers actually meet.
struct FieldElement {
  std::uint64_t v = 0;
  bool operator==(const FieldElement&) const = default;
};

/// Arithmetic context for Z_p with a runtime prime modulus p, 2 <= p < 2^62.
/// The constructor proves primality (deterministic Miller-Rabin), so any
/// live context is a field.  Copies are cheap; equality means equal moduli.
class FieldContext {
public:
  explicit FieldContext(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }
  bool operator==(const FieldContext& o) const noexcept { return p_ == o.p_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {p_ > 1 ? 1u : 0u}; }

  /// Canonical residue of any signed integer (negatives wrap mod p).
  FieldElement from_int(long long a) const noexcept {
    long long m = static_cast<long long>(p_);
    long long r = a % m;
    if (r < 0) r += m;
    return {static_cast<std::uint64_t>(r)};
  }

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    return {add_raw(a.v, b.v)};
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept {
    return {sub_raw(a.v, b.v)};
  }
  FieldElement neg(FieldElement a) const noexcept {
    return {a.v == 0 ? 0 : p_ - a.v};
  }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    return {mul_raw(a.v, b.v)};
  }
  /// Multiplicative inverse by extended Euclid; inv(0) is a usage error.
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;

  static bool is_zero(FieldElement a) noexcept { return a.v == 0; }

  // Raw-word variants used by inner loops.
  std::uint64_t add_raw(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub_raw(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const noexcept {
    if (small_) {
      // Barrett: products fit in 64 bits when p < 2^32.
      std::uint64_t r = a * b;
      std::uint64_t q = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(r) * magic_) >> 64);
      r -= q * p_;
      if (r >= p_) r -= p_;
      return r;
    }
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t reduce128(unsigned __int128 acc) const noexcept {
    return static_cast<std::uint64_t>(acc % p_);
  }

  /// True when p < 2^31: products fit comfortably in 64 bits and 128-bit
  /// accumulators can absorb ~2^66 terms before any reduction.
  bool small_modulus() const noexcept { return p_ < (1ull << 31); }

private:
  std::uint64_t p_;
  std::uint64_t magic_ = 0; // floor(2^64 / p), valid when small_
  bool small_ = false;      // p < 2^32, Barrett path usable
};

/// Deterministic primality test for 64-bit integers (Miller-Rabin with a
/// fixed witness set that is exact for this range).
bool is_prime_u64(std::uint64_t n);

} // namespace pmdet
