#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circlesym/rational.hpp"
#include "circlesym/series.hpp"

namespace circlesym {

/// X_n(d_1, ..., d_r): the multidegree is unordered, so it is kept sorted.
class CompleteIntersection {
 public:
  static constexpr long kMaxDegree = 1'000'000;
  static constexpr std::size_t kMaxCodimension = 64;

  /// Throws InvariantError for n < 1, an empty multidegree or a degree < 1.
  CompleteIntersection(int n, std::vector<long> degrees);

  int n() const noexcept { return n_; }
  const std::vector<long>& degrees() const noexcept { return degrees_; }
  std::size_t r() const noexcept { return degrees_.size(); }

  /// Within the caps the CLI accepts (degrees <= 10^6, r <= 64).
  bool within_caps() const;

  /// "X_3(2,2)"
  std::string name() const;

  friend bool operator==(const CompleteIntersection&, const CompleteIntersection&) = default;

 private:
  int n_;
  std::vector<long> degrees_;
};

/// Drops degree-one entries; the empty multidegree becomes (1), i.e. CP^n.
CompleteIntersection normalize(const CompleteIntersection& ci);

/// (prod d_j) * [x^n] f: the degree-2n part of f(x) evaluated on the
/// fundamental cycle, using [x^n]_M = prod d_j.
Rational evaluate_top(const CompleteIntersection& ci, const TruncatedSeries& f);

/// Total Chern class (1+x)^{n+r+1} prod (1+d_j x)^{-1}, truncated at x^n.
TruncatedSeries chern_series(const CompleteIntersection& ci);
/// Total Pontrjagin class (1+x^2)^{n+r+1} prod (1+d_j^2 x^2)^{-1}.
TruncatedSeries pontrjagin_series(const CompleteIntersection& ci);

/// n + r + 1 - sum d_j
long c1_coeff(const CompleteIntersection& ci);
/// rho with p_1 = rho x^2: n + r + 1 - sum d_j^2
long pontrjagin_coeff(const CompleteIntersection& ci);

Integer top_self_intersection(const CompleteIntersection& ci);
Integer euler_characteristic(const CompleteIntersection& ci);
/// Throws ParityError when n is odd.
Integer signature(const CompleteIntersection& ci);
/// Throws ParityError when n is odd.
Rational a_hat_genus(const CompleteIntersection& ci);
bool is_spin(const CompleteIntersection& ci);

struct InvariantReport {
  CompleteIntersection ci;
  Integer t;
  long c1_coeff = 0;
  long rho = 0;
  Integer euler;
  std::optional<Integer> signature;  // n even
  std::optional<Rational> a_hat;     // n even
  bool spin = false;
  std::optional<Integer> b3;         // n == 3
};

InvariantReport invariants(const CompleteIntersection& ci);

/// Normalized multidegrees with degree sum <= max_sum: (1) followed by all
/// ascending tuples of degrees >= 2, in lexicographic order.
std::vector<std::vector<long>> normalized_multidegrees(long max_sum);

}  // namespace circlesym
