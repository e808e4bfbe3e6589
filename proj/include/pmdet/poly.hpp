#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "pmdet/field.hpp"

namespace pmdet {

/// Degree of a polynomial: a finite integer, or "minus infinity" for the
/// zero polynomial.  Minus infinity compares below every finite degree and
/// is absorbing under addition, so degree arithmetic needs no special cases
/// at call sites.
class Degree {
public:
  constexpr Degree() : v_(kNegInf) {}
  constexpr Degree(long v) : v_(v) {}
  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const { return v_ == kNegInf; }
  constexpr bool finite() const { return v_ != kNegInf; }
  /// Finite value; only meaningful when finite().
  constexpr long value() const { return v_; }

  friend constexpr bool operator==(Degree a, Degree b) = default;
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    return a.v_ <=> b.v_;
  }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return Degree(a.v_ + b.v_);
  }
  friend constexpr Degree operator+(Degree a, long s) {
    return a.is_neg_inf() ? a : Degree(a.v_ + s);
  }

  std::string str() const {
    return is_neg_inf() ? std::string("-inf") : std::to_string(v_);
  }

private:
  static constexpr long kNegInf = std::numeric_limits<long>::min();
  long v_;
};

/// Dense univariate polynomial over Z_p.  Coefficients are stored ascending
/// with trailing zeros trimmed, so the zero polynomial is the empty vector
/// and degree() is exactly coeffs().size() - 1 (or -infinity).
class Polynomial {
public:
  explicit Polynomial(const FieldContext& ctx) : ctx_(ctx) {}
  Polynomial(const FieldContext& ctx, std::vector<FieldElement> coeffs)
      : ctx_(ctx), c_(std::move(coeffs)) {
    trim();
  }

  static Polynomial from_ints(const FieldContext& ctx,
                              const std::vector<long long>& coeffs);
  static Polynomial constant(const FieldContext& ctx, FieldElement c);
  static Polynomial x_power(const FieldContext& ctx, std::size_t k);

  const FieldContext& ctx() const noexcept { return ctx_; }
  const std::vector<FieldElement>& coeffs() const noexcept { return c_; }

  Degree degree() const noexcept {
    return c_.empty() ? Degree::neg_inf()
                      : Degree(static_cast<long>(c_.size()) - 1);
  }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Coefficient of x^i, zero beyond the stored range.
  FieldElement coeff(std::size_t i) const noexcept {
    return i < c_.size() ? c_[i] : FieldElement{0};
  }
  FieldElement leading_coeff() const noexcept {
    return c_.empty() ? FieldElement{0} : c_.back();
  }
  FieldElement constant_term() const noexcept { return coeff(0); }

  Polynomial add(const Polynomial& b) const;
  Polynomial sub(const Polynomial& b) const;
  Polynomial neg() const;
  Polynomial mul(const Polynomial& b) const;
  Polynomial scale(FieldElement c) const;
  /// Multiply by x^k.
  Polynomial times_x(std::size_t k) const;
  /// Drop coefficients of degree >= k (reduce mod x^k).
  Polynomial truncated(std::size_t k) const;

  FieldElement eval(FieldElement a) const;

  /// Euclidean division: returns (quotient, remainder), deg r < deg b.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& b) const;
  /// Exact division; a nonzero remainder is an internal-consistency error.
  Polynomial divexact(const Polynomial& b) const;

  bool operator==(const Polynomial& o) const noexcept {
    return ctx_ == o.ctx_ && c_ == o.c_;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return a.add(b);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a.sub(b);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return a.mul(b);
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
  }
  void require_same_ctx(const Polynomial& b) const;

  FieldContext ctx_;
  std::vector<FieldElement> c_;
};

} // namespace pmdet
