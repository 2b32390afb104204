#include "circlesym/localization/local_data.hpp"

#include <vector>

#include "circlesym/errors.hpp"

namespace circlesym::localization {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational q(std::int64_t v) { return Rational(static_cast<long>(v)); }

LiftPolynomial power(std::int64_t a, unsigned k) { return LiftPolynomial::shifted_power(q(a), k); }

/// (1 + λ^e) / (1 - λ^e)
CharacterFunction cot_factor(long e) {
  return {LaurentPolynomial::one_plus(e, 1), LaurentPolynomial::one_plus(e, -1)};
}

/// λ^e / (1 - λ^e)^2
CharacterFunction euler_factor(long e) {
  const LaurentPolynomial d = LaurentPolynomial::one_plus(e, -1);
  return {LaurentPolynomial::monomial(e, 1), {2 * d.low, d.body * d.body}};
}

}  // namespace

LiftPolynomial x3_local_datum(const Component& c) {
  return std::visit(
      overloaded{
          [](const PointComponent& p) {
            const Rational n = q(p.weights[0] * p.weights[1] * p.weights[2]);
            return power(p.a, 3) * (Rational(p.eps) / n);
          },
          [](const SurfaceComponent& s) {
            const Rational n1 = q(s.weights[0]), n2 = q(s.weights[1]);
            const Rational y = q(s.ev_y1) / n1 + q(s.ev_y2) / n2;
            const LiftPolynomial sum = power(s.a, 2) * (Rational(3) * q(s.ev_x)) - power(s.a, 3) * y;
            return sum * (Rational(1) / (n1 * n2));
          },
          [](const FourComponent& f) {
            const Rational n = q(f.weight);
            return power(f.a, 1) * (Rational(3) * q(f.ev_x2) / n) -
                   power(f.a, 2) * (Rational(3) * q(f.ev_xy) / (n * n)) +
                   power(f.a, 3) * (q(f.ev_y2) / (n * n * n));
          }},
      c);
}

LiftPolynomial p1x_local_datum(const Component& c) {
  return std::visit(
      overloaded{
          [](const PointComponent& p) {
            const auto [n1, n2, n3] = p.weights;
            return power(p.a, 1) * (Rational(p.eps) * q(n1 * n1 + n2 * n2 + n3 * n3) / q(n1 * n2 * n3));
          },
          [](const SurfaceComponent& s) {
            const Rational n1 = q(s.weights[0]), n2 = q(s.weights[1]);
            const Rational sq = n1 * n1 + n2 * n2;
            const Rational inv = Rational(1) / (n1 * n2);
            const Rational y = q(s.ev_y1) / n1 + q(s.ev_y2) / n2;
            const Rational linear = -inv * sq * y + Rational(2) * inv * (n1 * q(s.ev_y1) + n2 * q(s.ev_y2));
            return power(s.a, 1) * linear + LiftPolynomial::constant(sq * inv * q(s.ev_x));
          },
          [](const FourComponent& f) {
            return LiftPolynomial::constant(q(f.ev_xy)) + power(f.a, 1) * (q(f.ev_p1) / q(f.weight));
          }},
      c);
}

CharacterFunction signature_local_datum(const Component& c) {
  return std::visit(
      overloaded{
          [](const PointComponent& p) {
            CharacterFunction f = CharacterFunction::constant(Rational(p.eps));
            for (auto n : p.weights) f = f * cot_factor(-static_cast<long>(n));
            return f;
          },
          [](const SurfaceComponent& s) {
            const long n1 = static_cast<long>(s.weights[0]), n2 = static_cast<long>(s.weights[1]);
            const CharacterFunction first = cot_factor(n2) * euler_factor(n1) * Integer(s.ev_y1);
            const CharacterFunction second = cot_factor(n1) * euler_factor(n2) * Integer(s.ev_y2);
            return (first + second) * Integer(4);
          },
          [](const FourComponent&) -> CharacterFunction {
            throw UnsupportedComponent("no equivariant signature datum for 4-dimensional components");
          }},
      c);
}

LiftPolynomial sum_x3(const Configuration& cfg) {
  LiftPolynomial s;
  for (const auto& c : cfg.components()) s += x3_local_datum(c);
  return s;
}

LiftPolynomial sum_p1x(const Configuration& cfg) {
  LiftPolynomial s;
  for (const auto& c : cfg.components()) s += p1x_local_datum(c);
  return s;
}

CharacterFunction sum_signature(const Configuration& cfg) {
  std::vector<CharacterFunction> data;
  for (const auto& c : cfg.components()) data.push_back(signature_local_datum(c));
  return character_sum(data);
}

}  // namespace circlesym::localization
