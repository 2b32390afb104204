#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circlesym/rational.hpp"

namespace circlesym {

/// Dense polynomial in λ with arbitrary-precision integer coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial constant(const Integer& c);
  /// c * λ^k
  static IntPolynomial monomial(std::size_t k, const Integer& c);

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Integer& lead() const { return c_.back(); }
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  std::span<const Integer> coeffs() const noexcept { return c_; }
  /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
  std::size_t valuation() const;

  /// gcd of the coefficients (non-negative).
  Integer content() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const Integer& s);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Divides every coefficient by d, which must divide all of them.
  IntPolynomial divided_exactly(const Integer& d) const;
  /// Drops the lowest k coefficients (division by λ^k, exact by precondition).
  IntPolynomial shifted_down(std::size_t k) const;
  IntPolynomial shifted_up(std::size_t k) const;

  std::string str(const std::string& var = "λ") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// gcd in Z[λ], primitive with positive leading coefficient.
IntPolynomial polynomial_gcd(IntPolynomial a, IntPolynomial b);
/// Exact quotient a / b; throws std::domain_error if b does not divide a over Z.
IntPolynomial polynomial_divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// λ^low * body, a finite Laurent polynomial.
struct LaurentPolynomial {
  long low = 0;
  IntPolynomial body;

  static LaurentPolynomial monomial(long exponent, const Integer& c) {
    return {exponent, IntPolynomial::constant(c)};
  }
  /// 1 + sign * λ^exponent
  static LaurentPolynomial one_plus(long exponent, int sign);
};

/// Rational function in the character variable λ with integer coefficients.
///
/// Stored in canonical form: numerator and denominator are ordinary
/// polynomials with no common factor (the common Laurent monomial is pulled
/// out first), the joint content is 1 and the denominator's leading
/// coefficient is positive. Two functions are equal iff their stored forms
/// agree.
class CharacterFunction {
 public:
  CharacterFunction() : den_(IntPolynomial::constant(1)) {}
  CharacterFunction(const LaurentPolynomial& num, const LaurentPolynomial& den);
  static CharacterFunction constant(const Rational& c);

  const IntPolynomial& numerator() const noexcept { return num_; }
  const IntPolynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  CharacterFunction operator-() const;
  friend CharacterFunction operator+(const CharacterFunction& a, const CharacterFunction& b);
  friend CharacterFunction operator-(const CharacterFunction& a, const CharacterFunction& b) {
    return a + (-b);
  }
  friend CharacterFunction operator*(const CharacterFunction& a, const CharacterFunction& b);
  friend CharacterFunction operator*(const CharacterFunction& a, const Integer& s);

  friend bool operator==(const CharacterFunction&, const CharacterFunction&) = default;

  std::string str() const;

 private:
  CharacterFunction(IntPolynomial num, IntPolynomial den, long lambda_shift);
  void normalize(long lambda_shift);
  IntPolynomial num_;
  IntPolynomial den_;
};

/// Exact sum over a common denominator.
CharacterFunction character_sum(std::span<const CharacterFunction> fs);

/// The constant c when numerator = c * denominator as polynomials.
std::optional<Rational> character_is_constant(const CharacterFunction& f);

/// lim_{λ→∞} f, or empty when the numerator has the larger degree.
std::optional<Rational> character_limit_at_infinity(const CharacterFunction& f);

std::ostream& operator<<(std::ostream& os, const CharacterFunction& f);

}  // namespace circlesym
