#include "circlesym/complete_intersection.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "circlesym/errors.hpp"

namespace circlesym {

CompleteIntersection::CompleteIntersection(int n, std::vector<long> degrees)
    : n_(n), degrees_(std::move(degrees)) {
  if (n_ < 1) throw InvariantError("complex dimension must be >= 1");
  if (degrees_.empty()) throw InvariantError("multidegree must have at least one entry");
  for (long d : degrees_)
    if (d < 1) throw InvariantError("degrees must be >= 1, got " + std::to_string(d));
  std::sort(degrees_.begin(), degrees_.end());
}

bool CompleteIntersection::within_caps() const {
  return degrees_.size() <= kMaxCodimension && degrees_.back() <= kMaxDegree;
}

std::string CompleteIntersection::name() const {
  std::ostringstream os;
  os << "X_" << n_ << "(";
  for (std::size_t j = 0; j < degrees_.size(); ++j) os << (j ? "," : "") << degrees_[j];
  os << ")";
  return os.str();
}

CompleteIntersection normalize(const CompleteIntersection& ci) {
  std::vector<long> kept;
  std::copy_if(ci.degrees().begin(), ci.degrees().end(), std::back_inserter(kept),
               [](long d) { return d != 1; });
  if (kept.empty()) kept.push_back(1);
  return CompleteIntersection(ci.n(), std::move(kept));
}

Integer top_self_intersection(const CompleteIntersection& ci) {
  Integer t(1);
  for (long d : ci.degrees()) t *= d;
  return t;
}

Rational evaluate_top(const CompleteIntersection& ci, const TruncatedSeries& f) {
  const auto n = static_cast<std::size_t>(ci.n());
  if (f.order() < n)
    throw OrderMismatch("series of order " + std::to_string(f.order()) +
                        " cannot be evaluated on a manifold of complex dimension " +
                        std::to_string(n));
  return Rational(top_self_intersection(ci)) * f[n];
}

namespace {

std::size_t order_of(const CompleteIntersection& ci) { return static_cast<std::size_t>(ci.n()); }

long ambient_rank(const CompleteIntersection& ci) {
  return ci.n() + static_cast<long>(ci.r()) + 1;
}

// Multiplicative class of the stable tangent bundle (n+r+1)L - sum L^{d_j}:
// factor(1)^{n+r+1} * prod factor(d_j)^{-1}
TruncatedSeries virtual_bundle_class(const CompleteIntersection& ci, GenusKind kind) {
  const std::size_t order = order_of(ci);
  TruncatedSeries acc = series_power(genus_line_factor(kind, 1, order), ambient_rank(ci));
  TruncatedSeries normal = TruncatedSeries::constant(order, Rational(1));
  for (long d : ci.degrees()) normal = series_product(normal, genus_line_factor(kind, d, order));
  return series_product(acc, series_inverse(normal));
}

void require_even(const CompleteIntersection& ci, const char* what) {
  if (ci.n() % 2 != 0)
    throw ParityError(std::string(what) + " is only defined here for even complex dimension");
}

}  // namespace

TruncatedSeries chern_series(const CompleteIntersection& ci) {
  return virtual_bundle_class(ci, GenusKind::chern);
}

TruncatedSeries pontrjagin_series(const CompleteIntersection& ci) {
  return virtual_bundle_class(ci, GenusKind::pontrjagin);
}

long c1_coeff(const CompleteIntersection& ci) {
  return ambient_rank(ci) - std::accumulate(ci.degrees().begin(), ci.degrees().end(), 0L);
}

long pontrjagin_coeff(const CompleteIntersection& ci) {
  long sum_sq = 0;
  for (long d : ci.degrees()) sum_sq += d * d;
  return ambient_rank(ci) - sum_sq;
}

Integer euler_characteristic(const CompleteIntersection& ci) {
  return evaluate_top(ci, chern_series(ci)).numerator();
}

Integer signature(const CompleteIntersection& ci) {
  require_even(ci, "signature");
  const Rational s = evaluate_top(ci, virtual_bundle_class(ci, GenusKind::l_genus));
  if (!s.is_integer()) throw std::logic_error("non-integral signature " + s.str());
  return s.numerator();
}

Rational a_hat_genus(const CompleteIntersection& ci) {
  require_even(ci, "A-hat genus");
  return evaluate_top(ci, virtual_bundle_class(ci, GenusKind::a_hat));
}

bool is_spin(const CompleteIntersection& ci) { return c1_coeff(ci) % 2 == 0; }

InvariantReport invariants(const CompleteIntersection& ci) {
  InvariantReport rep{ci, top_self_intersection(ci), c1_coeff(ci), pontrjagin_coeff(ci),
                      euler_characteristic(ci), {}, {}, is_spin(ci), {}};
  if (ci.n() % 2 == 0) {
    rep.signature = signature(ci);
    rep.a_hat = a_hat_genus(ci);
  }
  if (ci.n() == 3) rep.b3 = Integer(4) - rep.euler;
  return rep;
}

namespace {

void extend(std::vector<long>& prefix, long min_part, long remaining,
            std::vector<std::vector<long>>& out) {
  for (long d = min_part; d <= remaining; ++d) {
    prefix.push_back(d);
    out.push_back(prefix);
    extend(prefix, d, remaining - d, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long>> normalized_multidegrees(long max_sum) {
  std::vector<std::vector<long>> out;
  if (max_sum >= 1) out.push_back({1});
  std::vector<long> prefix;
  std::vector<std::vector<long>> tuples;
  extend(prefix, 2, max_sum, tuples);
  std::sort(tuples.begin(), tuples.end());
  out.insert(out.end(), tuples.begin(), tuples.end());
  return out;
}

}  // namespace circlesym
