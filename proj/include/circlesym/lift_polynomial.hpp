#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "circlesym/rational.hpp"

namespace circlesym {

/// Polynomial with rational coefficients in the lift parameter l.
/// Trailing zero coefficients are always trimmed, so the zero polynomial
/// has no coefficients and equality is coefficient-wise.
class LiftPolynomial {
 public:
  LiftPolynomial() = default;
  LiftPolynomial(std::initializer_list<Rational> coeffs);
  explicit LiftPolynomial(std::vector<Rational> coeffs);

  static LiftPolynomial constant(const Rational& c);
  /// (a + l)^k
  static LiftPolynomial shifted_power(const Rational& a, unsigned k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  Rational evaluate(const Rational& l) const;
  /// p(l + delta)
  LiftPolynomial shifted(const Rational& delta) const;

  LiftPolynomial& operator+=(const LiftPolynomial& o);
  LiftPolynomial& operator-=(const LiftPolynomial& o);
  LiftPolynomial& operator*=(const Rational& s);

  friend LiftPolynomial operator+(LiftPolynomial a, const LiftPolynomial& b) { return a += b; }
  friend LiftPolynomial operator-(LiftPolynomial a, const LiftPolynomial& b) { return a -= b; }
  friend LiftPolynomial operator*(LiftPolynomial a, const Rational& s) { return a *= s; }
  friend LiftPolynomial operator*(const LiftPolynomial& a, const LiftPolynomial& b);

  friend bool operator==(const LiftPolynomial&, const LiftPolynomial&) = default;

  /// Human-readable form, highest power first: "l^3 + 3*l^2 - 1/2".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

bool lift_poly_equal(const LiftPolynomial& p, const LiftPolynomial& q);

std::ostream& operator<<(std::ostream& os, const LiftPolynomial& p);

}  // namespace circlesym
