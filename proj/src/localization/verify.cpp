#include "circlesym/localization/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "circlesym/localization/local_data.hpp"

namespace circlesym::localization {

namespace {

Rational q(std::int64_t v) { return Rational(static_cast<long>(v)); }

template <class T>
std::vector<const T*> all_of_kind(const Configuration& cfg) {
  std::vector<const T*> out;
  for (const auto& c : cfg.components())
    if (const auto* p = std::get_if<T>(&c)) out.push_back(p);
  return out;
}

bool is_shape(const Configuration& cfg, Template t) { return cfg.shape() && *cfg.shape() == t; }

std::array<std::int64_t, 3> sorted_weights(const PointComponent& p) {
  auto w = p.weights;
  std::sort(w.begin(), w.end());
  return w;
}

std::string x3_citation(const Configuration& cfg) {
  if (!cfg.shape()) return "x^3 localization: the sum of local data equals t for every lift";
  switch (*cfg.shape()) {
    case Template::two_fours:
      return "x^3 localization: the data of fixed 4-manifolds with b2 = 0 vanish for every lift, "
             "so t = 0";
    case Template::four_plus_surface:
      return "x^3 localization at the lift with a_X + l = 0: the surface datum and the b2 = 0 "
             "4-manifold datum both vanish, so t = 0";
    case Template::four_plus_two_points:
      return "x^3 localization: identity of polynomials in l over two isolated points "
             "(b2 = 0 4-manifold datum vanishes) forces t = 0";
    case Template::cp2like_plus_point:
      return "x^3 localization over a b2 = 1 fixed 4-manifold and one isolated point";
    case Template::single_four_b2_2:
      return "x^3 localization at the lift with a_N + l = 0: the only datum vanishes, so t = 0";
    case Template::two_surfaces:
      return "x^3 localization over two fixed surfaces: coefficient comparison in l";
    case Template::surface_plus_two_points:
      return "x^3 localization over a fixed surface and two isolated points: coefficient "
             "comparison in l";
  }
  return {};
}

std::string p1x_citation(const Configuration& cfg) {
  if (is_shape(cfg, Template::two_surfaces))
    return "p1(M) x localization over two fixed surfaces: coefficient comparison in l";
  if (is_shape(cfg, Template::surface_plus_two_points))
    return "p1(M) x localization: with equal weights at the isolated points the right-hand side "
           "is positive";
  return "p1(M) x localization: the sum of local data equals rho t for every lift";
}

/// Collects checks; in fast mode it stops at the first failure.
class Collector {
 public:
  explicit Collector(bool fast) : fast_(fast) {}

  /// Returns false when the caller should stop.
  bool add(CheckResult r) {
    if (!r.applicable) r.passed = true;
    failed_ = failed_ || !r.passed;
    if (!fast_) checks_.push_back(std::move(r));
    return !(fast_ && failed_);
  }

  bool fast() const { return fast_; }
  bool failed() const { return failed_; }
  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  bool fast_;
  bool failed_ = false;
  std::vector<CheckResult> checks_;
};

CheckResult not_applicable(std::string name, std::string citation) {
  CheckResult r;
  r.name = std::move(name);
  r.applicable = false;
  r.citation = std::move(citation);
  return r;
}

CheckResult rational_check(std::string name, const Rational& residual, std::string citation) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = residual.is_zero();
  r.residual = residual;
  r.citation = std::move(citation);
  return r;
}

CheckResult check_betti(const Configuration& cfg) {
  long b = 0;
  for (const auto& c : cfg.components()) b += component_b_ev(c);
  return rational_check("betti-sum", Rational(b - 4),
                        "even Betti numbers of the fixed set sum to b_ev(M) = 4");
}

CheckResult check_euler_bound(const Configuration& cfg) {
  const std::int64_t e = cfg.ambient().euler;
  CheckResult r;
  r.name = "ambient-euler-bound";
  r.passed = e < 4 && e % 2 == 0;
  r.residual = q(e);
  r.citation = "chi(M) = 4 - b3(M) with b3 even, and chi(M) < 4 for the configurations considered";
  return r;
}

CheckResult check_signature_sum(const Configuration& cfg) {
  std::int64_t s = 0;
  for (const auto& c : cfg.components()) s += component_sign(c);
  return rational_check("signature-sum", q(s - cfg.ambient().sign),
                        "limit of the equivariant signature at infinity: sign(M) = sum of sign(Z)");
}

CheckResult check_effectiveness(const Configuration& cfg) {
  const char* cite = "effective action: coprime normal weights";
  if (!cfg.flags().effectiveness) return not_applicable("effectiveness", cite);
  std::int64_t all = 0;
  bool per_point = true;
  for (const auto& c : cfg.components()) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PointComponent>) {
            std::int64_t g = 0;
            for (auto w : x.weights) g = std::gcd(g, w), all = std::gcd(all, w);
            per_point = per_point && g == 1;
          } else if constexpr (std::is_same_v<T, SurfaceComponent>) {
            for (auto w : x.weights) all = std::gcd(all, w);
          } else {
            all = std::gcd(all, x.weight);
          }
        },
        c);
  }
  CheckResult r;
  r.name = "effectiveness";
  r.passed = all == 1 && per_point;
  r.residual = q(all);
  r.citation = cite;
  if (!per_point) r.detail = "an isolated point has non-coprime weights";
  return r;
}

CheckResult check_orientation(const Configuration& cfg) {
  const char* cite = "orientation convention: the chosen isolated point pt is positively oriented";
  const auto i = first_point(cfg);
  if (!cfg.flags().convention35 || !i) return not_applicable("orientation-convention", cite);
  const int eps = std::get<PointComponent>(cfg.components()[*i]).eps;
  CheckResult r;
  r.name = "orientation-convention";
  r.passed = eps == 1;
  r.residual = Rational(eps - 1);
  r.citation = cite;
  return r;
}

CheckResult check_weight_matching(const Configuration& cfg) {
  const char* cite = "normal weights at pt and q agree up to ordering";
  const auto pts = all_of_kind<PointComponent>(cfg);
  if (!cfg.flags().lemma64 || !is_shape(cfg, Template::surface_plus_two_points) || pts.size() != 2)
    return not_applicable("isolated-weight-matching", cite);
  CheckResult r;
  r.name = "isolated-weight-matching";
  r.passed = sorted_weights(*pts[0]) == sorted_weights(*pts[1]);
  r.residual = Rational(r.passed ? 0 : 1);
  r.citation = cite;
  return r;
}

CheckResult check_divisibility(const Configuration& cfg) {
  const char* cite =
      "the Z/n-fixed component through X (n a weight at X) contains both isolated points, so "
      "its dimension 2 + 2 #{weights at X divisible by n} is seen at pt and q";
  const auto pts = all_of_kind<PointComponent>(cfg);
  const auto surf = all_of_kind<SurfaceComponent>(cfg);
  if (!cfg.flags().lemma64 || !is_shape(cfg, Template::surface_plus_two_points) ||
      pts.size() != 2 || surf.size() != 1)
    return not_applicable("fixed-set-divisibility", cite);
  long violations = 0;
  std::ostringstream detail;
  for (auto n : surf[0]->weights) {
    if (n < 2) continue;
    const auto at_x = std::count_if(surf[0]->weights.begin(), surf[0]->weights.end(),
                                    [n](std::int64_t w) { return w % n == 0; });
    for (const auto* p : pts) {
      const auto at_p = std::count_if(p->weights.begin(), p->weights.end(),
                                      [n](std::int64_t w) { return w % n == 0; });
      if (at_p != at_x + 1) {
        ++violations;
        detail << "n=" << n << ": " << at_p << " point weights divisible, expected " << at_x + 1
               << "; ";
      }
    }
  }
  CheckResult r;
  r.name = "fixed-set-divisibility";
  r.passed = violations == 0;
  r.residual = Rational(violations);
  r.citation = cite;
  r.detail = detail.str();
  return r;
}

CheckResult check_normal_splitting(const Configuration& cfg) {
  const char* cite =
      "both normal bundles split off the same weight-n2 line with vanishing Euler class "
      "(y_X2 = y_Y2 = 0, n_X2 = n_Y2)";
  const auto s = all_of_kind<SurfaceComponent>(cfg);
  if (!is_shape(cfg, Template::two_surfaces) || s.size() != 2)
    return not_applicable("normal-splitting", cite);
  CheckResult r;
  r.name = "normal-splitting";
  r.passed = s[0]->ev_y2 == 0 && s[1]->ev_y2 == 0 && s[0]->weights[1] == s[1]->weights[1];
  r.residual = q(std::abs(s[0]->ev_y2) + std::abs(s[1]->ev_y2) +
                 std::abs(s[0]->weights[1] - s[1]->weights[1]));
  r.citation = cite;
  return r;
}

CheckResult check_restriction(const Configuration& cfg) {
  const char* cite = "x restricts non-trivially to every fixed surface ([x|Z]_Z != 0)";
  if (!is_shape(cfg, Template::two_surfaces) && !is_shape(cfg, Template::surface_plus_two_points))
    return not_applicable("restriction-nonzero", cite);
  long zero = 0;
  for (const auto* s : all_of_kind<SurfaceComponent>(cfg)) zero += s->ev_x == 0;
  CheckResult r;
  r.name = "restriction-nonzero";
  r.passed = zero == 0;
  r.residual = Rational(zero);
  r.citation = cite;
  return r;
}

CheckResult check_point_pair_chain(const Configuration& cfg) {
  const char* cite =
      "coefficients of l^3, l^2, l^1 give sum eps/N = 0, a_pt = a_q, and then t = "
      "sum eps a^3/N = 0";
  const auto pts = all_of_kind<PointComponent>(cfg);
  if (!is_shape(cfg, Template::four_plus_two_points) || pts.size() != 2)
    return not_applicable("x3-point-pair-chain", cite);
  Rational c[4];
  for (const auto* p : pts) {
    const Rational w = Rational(p->eps) / q(p->weights[0] * p->weights[1] * p->weights[2]);
    for (unsigned k = 0; k < 4; ++k) c[k] += w * pow(q(p->a), k);
  }
  CheckResult r;
  r.name = "x3-point-pair-chain";
  r.passed = cfg.ambient().t == 0;
  r.residual = q(cfg.ambient().t);
  r.citation = cite;
  std::ostringstream d;
  d << "sum eps/N = " << c[0] << "; sum eps a/N = " << c[1] << "; sum eps a^2/N = " << c[2]
    << "; t - sum eps a^3/N = " << q(cfg.ambient().t) - c[3] << "; forced t = 0";
  r.detail = d.str();
  return r;
}

/// Two surfaces in slot order X, Y with the normal-splitting form.
struct SurfacePair {
  const SurfaceComponent* x = nullptr;
  const SurfaceComponent* y = nullptr;
};

std::optional<SurfacePair> surface_pair(const Configuration& cfg) {
  const auto s = all_of_kind<SurfaceComponent>(cfg);
  if (!is_shape(cfg, Template::two_surfaces) || s.size() != 2) return std::nullopt;
  return SurfacePair{s[0], s[1]};
}

CheckResult check_semifree(const Configuration& cfg) {
  const char* cite =
      "semifree pair of surfaces: the x^3 and p1(M) x relations combine to t = a^2 rho t / 4";
  const auto pr = surface_pair(cfg);
  const auto ones = [](const SurfaceComponent* s) { return s->weights[0] == 1 && s->weights[1] == 1; };
  if (!pr || !ones(pr->x) || !ones(pr->y)) return not_applicable("semifree-relation", cite);
  const Rational a = q(pr->x->a - pr->y->a);
  const Rational t = q(cfg.ambient().t);
  CheckResult r = rational_check("semifree-relation",
                                 t * (Rational(1) - q(cfg.ambient().rho) * a * a / Rational(4)), cite);
  r.detail = "residual t (1 - rho a^2 / 4) with a = a_X - a_Y";
  return r;
}

void rigid_pair_checks(const Configuration& cfg, Collector& out) {
  const char* names[] = {"rigid-pair-restriction", "rigid-pair-normal", "rigid-pair-volume",
                         "rigid-pair-pontrjagin"};
  const char* cites[] = {
      "surfaces with opposite [y_1] and equal n_1: [x|X] = [x|Y]",
      "surfaces with opposite [y_1] and equal n_1: a [y_X1] / n_1 = 2 [x|X]",
      "surfaces with opposite [y_1] and equal n_1: t = a^2 [x|X] / (n_1 n_2)",
      "surfaces with opposite [y_1] and equal n_1: rho t = 4 n_1 [x|X] / n_2, positive"};
  const auto pr = surface_pair(cfg);
  const bool premise = pr && pr->x->ev_y2 == 0 && pr->y->ev_y2 == 0 &&
                       pr->x->weights == pr->y->weights && pr->x->ev_y1 != 0 &&
                       pr->y->ev_y1 == -pr->x->ev_y1;
  if (!premise) {
    for (int i = 0; i < 4; ++i)
      if (!out.add(not_applicable(names[i], cites[i]))) return;
    return;
  }
  const SurfaceComponent& X = *pr->x;
  const Rational n1 = q(X.weights[0]), n2 = q(X.weights[1]);
  const Rational a = q(X.a - pr->y->a), x = q(X.ev_x), t = q(cfg.ambient().t);
  const Rational res[] = {x - q(pr->y->ev_x), a * q(X.ev_y1) / n1 - Rational(2) * x,
                          t - a * a * x / (n1 * n2),
                          q(cfg.ambient().rho) * t - Rational(4) * n1 * x / n2};
  for (int i = 0; i < 4; ++i)
    if (!out.add(rational_check(names[i], res[i], cites[i]))) return;
}

CheckResult check_equal_weights(const Configuration& cfg) {
  const char* cite =
      "equal weights at pt and q: rho t = (n1^2 + n2^2)/(n1 n2) [x|X] + (a_pt - a_q) S/N, "
      "positive under the divisibility of the weights";
  const auto pts = all_of_kind<PointComponent>(cfg);
  const auto surf = all_of_kind<SurfaceComponent>(cfg);
  if (!is_shape(cfg, Template::surface_plus_two_points) || pts.size() != 2 || surf.size() != 1 ||
      sorted_weights(*pts[0]) != sorted_weights(*pts[1]) || pts[0]->eps != -pts[1]->eps)
    return not_applicable("equal-weight-pontrjagin", cite);
  const auto& X = *surf[0];
  const auto [m1, m2, m3] = pts[0]->weights;
  const Rational n1 = q(X.weights[0]), n2 = q(X.weights[1]);
  const Rational rhs = (n1 * n1 + n2 * n2) / (n1 * n2) * q(X.ev_x) +
                       Rational(pts[0]->eps) * q(pts[0]->a - pts[1]->a) *
                           q(m1 * m1 + m2 * m2 + m3 * m3) / q(m1 * m2 * m3);
  CheckResult r = rational_check(
      "equal-weight-pontrjagin", q(cfg.ambient().rho) * q(cfg.ambient().t) - rhs, cite);
  r.detail = "right-hand side = " + rhs.str();
  return r;
}

bool run(const Configuration& cfg, Collector& out) {
  const bool has_four = !all_of_kind<FourComponent>(cfg).empty();
  if (!out.add(check_betti(cfg))) return false;
  if (!out.add(check_euler(cfg))) return false;
  if (!out.add(check_euler_bound(cfg))) return false;
  if (!out.add(check_signature_sum(cfg))) return false;
  if (!out.add(check_effectiveness(cfg))) return false;
  if (!out.add(check_orientation(cfg))) return false;
  if (!out.add(check_weight_matching(cfg))) return false;
  if (!out.add(check_divisibility(cfg))) return false;
  if (!out.add(check_normal_splitting(cfg))) return false;
  for (const auto* f : all_of_kind<FourComponent>(cfg)) {
    const Rational gamma = q(f->ev_x2) / q(cfg.ambient().t);
    if (!out.add(check_lemma41(*f, gamma, cfg.ambient()))) return false;
  }
  if (!out.add(check_restriction(cfg))) return false;
  if (!out.add(check_x3(cfg))) return false;
  if (!out.add(check_p1x(cfg))) return false;
  if (!out.add(check_point_pair_chain(cfg))) return false;
  if (!out.add(check_semifree(cfg))) return false;
  rigid_pair_checks(cfg, out);
  if (out.fast() && out.failed()) return false;
  if (!out.add(check_equal_weights(cfg))) return false;
  if (!has_four)
    for (auto& r : check_signature_rigidity(cfg))
      if (!out.add(std::move(r))) return false;
  return true;
}

}  // namespace

bool VerificationReport::consistent() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

std::string residual_str(const Residual& r) {
  return std::visit([](const auto& v) { return v.str(); }, r);
}

CheckResult check_x3(const Configuration& cfg) {
  CheckResult r;
  r.name = "x3-localization";
  const LiftPolynomial res = sum_x3(cfg) - LiftPolynomial::constant(q(cfg.ambient().t));
  r.passed = res.is_zero();
  r.residual = res;
  r.citation = x3_citation(cfg);
  return r;
}

CheckResult check_p1x(const Configuration& cfg) {
  CheckResult r;
  r.name = "p1x-localization";
  const LiftPolynomial res =
      sum_p1x(cfg) - LiftPolynomial::constant(q(cfg.ambient().rho) * q(cfg.ambient().t));
  r.passed = res.is_zero();
  r.residual = res;
  r.citation = p1x_citation(cfg);
  return r;
}

CheckResult check_euler(const Configuration& cfg) {
  std::int64_t chi = 0;
  for (const auto& c : cfg.components()) chi += component_chi(c);
  return rational_check("euler", q(chi - cfg.ambient().euler),
                        "Lefschetz: chi(M) equals the Euler characteristic of the fixed set");
}

std::vector<CheckResult> check_signature_rigidity(const Configuration& cfg) {
  std::vector<CheckResult> out;
  std::int64_t sum_sign = 0;
  bool has_four = false;
  for (const auto& c : cfg.components()) {
    sum_sign += component_sign(c);
    has_four = has_four || std::holds_alternative<FourComponent>(c);
  }
  if (has_four) {
    out.push_back(check_signature_sum(cfg));
    return out;
  }
  const CharacterFunction total = sum_signature(cfg);
  const auto constant = character_is_constant(total);
  CheckResult rigid;
  rigid.name = "signature-rigidity";
  rigid.passed = constant.has_value();
  rigid.residual = total;
  rigid.citation = "the equivariant signature is rigid: the sum of local data is constant in lambda";
  out.push_back(rigid);

  const char* value_cite = "the constant value of the equivariant signature is sign(M)";
  if (constant) {
    out.push_back(rational_check("signature-value", *constant - q(cfg.ambient().sign), value_cite));
  } else {
    out.push_back(not_applicable("signature-value", value_cite));
  }

  const auto limit = character_limit_at_infinity(total);
  CheckResult lim;
  lim.name = "signature-limit";
  lim.citation = "limit lambda -> infinity of the local data equals the sum of sign(Z)";
  lim.passed = limit.has_value() && *limit == q(sum_sign);
  lim.residual = limit ? *limit - q(sum_sign) : Rational(1);
  if (!limit) lim.detail = "limit diverges";
  out.push_back(lim);
  return out;
}

CheckResult check_lemma41(const FourComponent& f, const Rational& gamma, const AmbientData& ambient) {
  CheckResult r;
  r.name = "codim2-pontrjagin";
  r.citation =
      "codimension-2 submanifold dual to gamma x: p1(F) = (rho - gamma^2)(x|F)^2 and "
      "[(x|F)^2]_F = t gamma";
  const Rational t = q(ambient.t), rho = q(ambient.rho), x2 = q(f.ev_x2);
  const Rational dual = x2 - t * gamma;
  const Rational pont = q(f.ev_p1) - (rho - gamma * gamma) * x2;
  if (!gamma.is_integer()) {
    r.passed = false;
    r.residual = gamma;
    r.detail = "gamma = [(x|F)^2]_F / t is not an integer";
  } else if (!dual.is_zero()) {
    r.passed = false;
    r.residual = dual;
    r.detail = "[(x|F)^2]_F - t gamma";
  } else if (!pont.is_zero()) {
    r.passed = false;
    r.residual = pont;
    r.detail = "[p1(F)]_F - (rho - gamma^2) [(x|F)^2]_F";
  } else if (f.sign == 0 && ambient.rho <= 0 && f.ev_x2 != 0) {
    r.passed = false;
    r.residual = x2;
    r.detail = "sign(F) = 0 with rho <= 0 forces (x|F)^2 = 0";
  } else {
    r.passed = true;
    r.residual = Rational();
  }
  return r;
}

VerificationReport verify_case(const Configuration& cfg) {
  Collector c(false);
  run(cfg, c);
  return {c.take()};
}

bool is_consistent(const Configuration& cfg) {
  Collector c(true);
  run(cfg, c);
  return !c.failed();
}

bool is_canonical(const Configuration& cfg) {
  const bool pair_form = is_shape(cfg, Template::two_surfaces);
  for (const auto& c : cfg.components()) {
    if (const auto* p = std::get_if<PointComponent>(&c)) {
      if (!std::is_sorted(p->weights.begin(), p->weights.end())) return false;
    } else if (const auto* s = std::get_if<SurfaceComponent>(&c); s && !pair_form) {
      if (std::pair(s->weights[1], s->ev_y2) < std::pair(s->weights[0], s->ev_y1)) return false;
    }
  }
  return true;
}

}  // namespace circlesym::localization
