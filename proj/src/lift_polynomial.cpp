#include "circlesym/lift_polynomial.hpp"

#include <ostream>
#include <sstream>

namespace circlesym {

LiftPolynomial::LiftPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

LiftPolynomial::LiftPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

LiftPolynomial LiftPolynomial::constant(const Rational& c) { return LiftPolynomial({c}); }

LiftPolynomial LiftPolynomial::shifted_power(const Rational& a, unsigned k) {
  std::vector<Rational> c(k + 1);
  Integer binom(1);
  for (unsigned j = 0; j <= k; ++j) {
    // coefficient of l^j is C(k, j) a^{k-j}
    c[j] = Rational(binom) * pow(a, k - j);
    binom = binom * (k - j) / (j + 1);
  }
  return LiftPolynomial(std::move(c));
}

void LiftPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational LiftPolynomial::evaluate(const Rational& l) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * l + *it;
  return acc;
}

LiftPolynomial LiftPolynomial::shifted(const Rational& delta) const {
  LiftPolynomial out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    out += shifted_power(delta, static_cast<unsigned>(k)) * coeffs_[k];
  return out;
}

LiftPolynomial& LiftPolynomial::operator+=(const LiftPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

LiftPolynomial& LiftPolynomial::operator-=(const LiftPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

LiftPolynomial& LiftPolynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

LiftPolynomial operator*(const LiftPolynomial& a, const LiftPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LiftPolynomial(std::move(c));
}

std::string LiftPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) os << mag;
    if (k > 0) {
      if (!unit) os << "*";
      os << "l";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

bool lift_poly_equal(const LiftPolynomial& p, const LiftPolynomial& q) { return p == q; }

std::ostream& operator<<(std::ostream& os, const LiftPolynomial& p) { return os << p.str(); }

}  // namespace circlesym
