#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circlesym/complete_intersection.hpp"

namespace circlesym {

enum class VerdictReason {
  torus_or_sphere,        // n = 1
  positive_c1_list,       // n = 2
  projective_or_quadric,  // n = 3
  out_of_scope,           // n >= 4
};

std::string to_string(VerdictReason r);

struct SymmetryVerdict {
  /// Empty for n >= 4: no claim either way.
  std::optional<bool> admits;
  int dimension_n = 0;
  VerdictReason reason = VerdictReason::out_of_scope;
  std::string citation;
  InvariantReport evidence;
};

/// Whether X_n(d) carries a smooth non-trivial circle action, for n <= 3.
SymmetryVerdict s1_verdict(const CompleteIntersection& ci);

struct HypothesisItem {
  std::string name;
  bool holds = false;
  std::string note;
};

/// Checklist of the hypotheses of the 6-manifold non-existence theorem
/// (torsion-free homology, b1 = 0, b2 = 1, rho <= 0, x^3 != 0, chi < 4).
struct HypothesisChecklist {
  std::vector<HypothesisItem> items;
  bool all_hold() const;
};

/// Throws DimensionError unless n = 3.
HypothesisChecklist theorem25_hypotheses(const CompleteIntersection& ci);

}  // namespace circlesym
