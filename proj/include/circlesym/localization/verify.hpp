#pragma once

#include <string>
#include <variant>
#include <vector>

#include "circlesym/character.hpp"
#include "circlesym/lift_polynomial.hpp"
#include "circlesym/localization/configuration.hpp"
#include "circlesym/rational.hpp"

namespace circlesym::localization {

using Residual = std::variant<LiftPolynomial, CharacterFunction, Rational>;

struct CheckResult {
  std::string name;
  bool passed = true;
  /// False when the premise of a diagnostic check does not hold; such a
  /// check always counts as passed.
  bool applicable = true;
  Residual residual = Rational();
  std::string citation;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool consistent() const;
  /// First failing check, or nullptr.
  const CheckResult* first_failure() const;
};

std::string residual_str(const Residual& r);

/// Residual sum_x3 - t; passes iff it is the zero polynomial.
CheckResult check_x3(const Configuration& cfg);
/// Residual sum_p1x - rho t.
CheckResult check_p1x(const Configuration& cfg);
/// Residual sum chi(Z) - chi(M).
CheckResult check_euler(const Configuration& cfg);

/// For point/surface-only configurations: rigidity, value and limit of the
/// equivariant signature. Otherwise only sum sign(Z) = sign(M).
std::vector<CheckResult> check_signature_rigidity(const Configuration& cfg);

/// p_1(F) = (rho - gamma^2) (x|F)^2 and [(x|F)^2]_F = t gamma for a
/// codimension-2 component with Poincare dual gamma x.
CheckResult check_lemma41(const FourComponent& f, const Rational& gamma, const AmbientData& ambient);

/// Every constraint for the configuration, itemized.
VerificationReport verify_case(const Configuration& cfg);

/// Same verdict as verify_case(cfg).consistent(), stopping at the first
/// failure and building no residual text.
bool is_consistent(const Configuration& cfg);

/// Canonical representative used by the search: point weights
/// non-decreasing, surface slots ordered by (n, [y]) except in the
/// two-surface template (normal-splitting form instead).
bool is_canonical(const Configuration& cfg);

}  // namespace circlesym::localization
