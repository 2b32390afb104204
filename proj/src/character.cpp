#include "circlesym/character.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace circlesym {

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(std::size_t k, const Integer& c) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t IntPolynomial::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return k;
  return 0;
}

Integer IntPolynomial::content() const {
  Integer g(0);
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPolynomial IntPolynomial::divided_exactly(const Integer& d) const {
  IntPolynomial r = *this;
  for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return r;
}

IntPolynomial IntPolynomial::shifted_down(std::size_t k) const {
  if (k >= c_.size()) return {};
  return IntPolynomial(std::vector<Integer>(c_.begin() + static_cast<long>(k), c_.end()));
}

IntPolynomial IntPolynomial::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Integer> v(k, Integer(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const Integer& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k > 0) {
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

namespace {

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  IntPolynomial r = p.divided_exactly(p.content());
  return r.lead() < 0 ? -r : r;
}

IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const Integer lc = b.lead();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
    const Integer la = a.lead();
    a = a * lc - b.shifted_up(shift) * la;
  }
  return a;
}

}  // namespace

IntPolynomial polynomial_gcd(IntPolynomial a, IntPolynomial b) {
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IntPolynomial polynomial_divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  IntPolynomial r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    if (!mpz_divisible_p(r.lead().get_mpz_t(), b.lead().get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    Integer c;
    mpz_divexact(c.get_mpz_t(), r.lead().get_mpz_t(), b.lead().get_mpz_t());
    q[shift] = c;
    r -= b.shifted_up(shift) * c;
  }
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return IntPolynomial(std::move(q));
}

LaurentPolynomial LaurentPolynomial::one_plus(long exponent, int sign) {
  // 1 + sign * λ^e, stored with the lower exponent first
  if (exponent >= 0) {
    std::vector<Integer> c(static_cast<std::size_t>(exponent) + 1, Integer(0));
    c[0] += 1;
    c[static_cast<std::size_t>(exponent)] += sign;
    return {0, IntPolynomial(std::move(c))};
  }
  std::vector<Integer> c(static_cast<std::size_t>(-exponent) + 1, Integer(0));
  c[0] += sign;
  c[static_cast<std::size_t>(-exponent)] += 1;
  return {exponent, IntPolynomial(std::move(c))};
}

CharacterFunction::CharacterFunction(const LaurentPolynomial& num, const LaurentPolynomial& den)
    : num_(num.body), den_(den.body) {
  normalize(num.low - den.low);
}

CharacterFunction::CharacterFunction(IntPolynomial num, IntPolynomial den, long lambda_shift)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize(lambda_shift);
}

CharacterFunction CharacterFunction::constant(const Rational& c) {
  return CharacterFunction(IntPolynomial::constant(c.numerator()),
                           IntPolynomial::constant(c.denominator()), 0);
}

void CharacterFunction::normalize(long lambda_shift) {
  if (den_.is_zero()) throw std::domain_error("character function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPolynomial::constant(1);
    return;
  }
  const std::size_t vn = num_.valuation();
  const std::size_t vd = den_.valuation();
  num_ = num_.shifted_down(vn);
  den_ = den_.shifted_down(vd);
  const long k = lambda_shift + static_cast<long>(vn) - static_cast<long>(vd);

  const IntPolynomial g = polynomial_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = polynomial_divide_exact(num_, g);
    den_ = polynomial_divide_exact(den_, g);
  }
  if (k > 0) num_ = num_.shifted_up(static_cast<std::size_t>(k));
  if (k < 0) den_ = den_.shifted_up(static_cast<std::size_t>(-k));

  Integer c = num_.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), den_.content().get_mpz_t());
  if (c != 1) {
    num_ = num_.divided_exactly(c);
    den_ = den_.divided_exactly(c);
  }
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

CharacterFunction CharacterFunction::operator-() const {
  CharacterFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

CharacterFunction operator+(const CharacterFunction& a, const CharacterFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return CharacterFunction(a.num_ + b.num_, a.den_, 0);
  return CharacterFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, 0);
}

CharacterFunction operator*(const CharacterFunction& a, const CharacterFunction& b) {
  return CharacterFunction(a.num_ * b.num_, a.den_ * b.den_, 0);
}

CharacterFunction operator*(const CharacterFunction& a, const Integer& s) {
  return CharacterFunction(a.num_ * s, a.den_, 0);
}

std::string CharacterFunction::str() const {
  if (den_ == IntPolynomial::constant(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

CharacterFunction character_sum(std::span<const CharacterFunction> fs) {
  CharacterFunction acc;
  for (const auto& f : fs) acc = acc + f;
  return acc;
}

std::optional<Rational> character_is_constant(const CharacterFunction& f) {
  const IntPolynomial& num = f.numerator();
  const IntPolynomial& den = f.denominator();
  if (num.is_zero()) return Rational(0);
  // num * lead(den) == den * lead(num) exactly iff num = c * den
  if (num * den.lead() != den * num.lead()) return std::nullopt;
  return Rational(num.lead(), den.lead());
}

std::optional<Rational> character_limit_at_infinity(const CharacterFunction& f) {
  const IntPolynomial& num = f.numerator();
  const IntPolynomial& den = f.denominator();
  if (num.is_zero() || num.degree() < den.degree()) return Rational(0);
  if (num.degree() > den.degree()) return std::nullopt;
  return Rational(num.lead(), den.lead());
}

std::ostream& operator<<(std::ostream& os, const CharacterFunction& f) { return os << f.str(); }

}  // namespace circlesym
