#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "circlesym/rational.hpp"

namespace circlesym {

/// Formal power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
///
/// Arithmetic never looks past the truncation order N; combining series of
/// different orders is an error rather than an implicit truncation.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  TruncatedSeries(std::size_t order, std::span<const Rational> coeffs);

  static TruncatedSeries constant(std::size_t order, const Rational& c);
  /// c * x^k (zero when k > order).
  static TruncatedSeries monomial(std::size_t order, std::size_t k, const Rational& c);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  Rational& operator[](std::size_t k) { return coeffs_.at(k); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^k, zero beyond the truncation order.
  Rational coeff(std::size_t k) const { return k <= order() ? coeffs_[k] : Rational(); }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& s);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// f(s x): rescales coefficient k by s^k.
  TruncatedSeries rescaled(const Rational& s) const;

 private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at the common order. Throws OrderMismatch.
TruncatedSeries series_product(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse. Throws NonUnit when the constant term is zero.
TruncatedSeries series_inverse(const TruncatedSeries& a);

/// a^k for any integer k; negative exponents go through series_inverse.
TruncatedSeries series_power(const TruncatedSeries& a, long k);

enum class GenusKind { chern, pontrjagin, a_hat, l_genus };

/// The one-root factor of a multiplicative class, evaluated at the root d*x:
///   chern      -> 1 + d x
///   pontrjagin -> 1 + d^2 x^2
///   a_hat      -> (d x / 2) / sinh(d x / 2)
///   l_genus    -> d x / tanh(d x)
TruncatedSeries genus_line_factor(GenusKind kind, long scale, std::size_t order);

}  // namespace circlesym
