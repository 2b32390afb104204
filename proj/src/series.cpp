#include "circlesym/series.hpp"

#include <algorithm>
#include <string>

#include "circlesym/errors.hpp"

namespace circlesym {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw OrderMismatch("series orders differ: " + std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()));
}

Integer factorial(unsigned k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

// sinh(y)/y = sum y^{2k} / (2k+1)!
TruncatedSeries sinh_over_arg(std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t k = 0; k <= order; k += 2)
    s[k] = Rational(Integer(1), factorial(static_cast<unsigned>(k + 1)));
  return s;
}

// cosh(y) = sum y^{2k} / (2k)!
TruncatedSeries cosh_series(std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t k = 0; k <= order; k += 2)
    s[k] = Rational(Integer(1), factorial(static_cast<unsigned>(k)));
  return s;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order, std::span<const Rational> coeffs)
    : coeffs_(order + 1) {
  const std::size_t n = std::min(coeffs.size(), coeffs_.size());
  std::copy_n(coeffs.begin(), n, coeffs_.begin());
}

TruncatedSeries TruncatedSeries::constant(std::size_t order, const Rational& c) {
  TruncatedSeries s(order);
  s[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t k, const Rational& c) {
  TruncatedSeries s(order);
  if (k <= order) s[k] = c;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_order(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_order(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TruncatedSeries TruncatedSeries::rescaled(const Rational& s) const {
  TruncatedSeries out(order());
  Rational power(1);
  for (std::size_t k = 0; k <= order(); ++k) {
    out[k] = coeffs_[k] * power;
    power *= s;
  }
  return out;
}

TruncatedSeries series_product(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  TruncatedSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  if (a[0].is_zero()) throw NonUnit("series with zero constant term has no inverse");
  const std::size_t n = a.order();
  TruncatedSeries inv(n);
  const Rational c0_inv = Rational(1) / a[0];
  inv[0] = c0_inv;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * inv[k - j];
    inv[k] = -acc * c0_inv;
  }
  return inv;
}

TruncatedSeries series_power(const TruncatedSeries& a, long k) {
  TruncatedSeries base = k < 0 ? series_inverse(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  TruncatedSeries result = TruncatedSeries::constant(a.order(), Rational(1));
  while (e != 0) {
    if (e & 1UL) result = series_product(result, base);
    e >>= 1;
    if (e != 0) base = series_product(base, base);
  }
  return result;
}

TruncatedSeries genus_line_factor(GenusKind kind, long scale, std::size_t order) {
  const Rational d(scale);
  switch (kind) {
    case GenusKind::chern: {
      TruncatedSeries s = TruncatedSeries::constant(order, Rational(1));
      if (order >= 1) s[1] = d;
      return s;
    }
    case GenusKind::pontrjagin: {
      TruncatedSeries s = TruncatedSeries::constant(order, Rational(1));
      if (order >= 2) s[2] = d * d;
      return s;
    }
    case GenusKind::a_hat:
      // y / sinh(y) at y = d x / 2
      return series_inverse(sinh_over_arg(order)).rescaled(d / Rational(2));
    case GenusKind::l_genus:
      // y / tanh(y) = cosh(y) * (sinh(y)/y)^{-1} at y = d x
      return series_product(cosh_series(order), series_inverse(sinh_over_arg(order)))
          .rescaled(d);
  }
  return TruncatedSeries(order);
}

}  // namespace circlesym
