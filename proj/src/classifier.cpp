#include "circlesym/classifier.hpp"

#include <algorithm>

#include "circlesym/errors.hpp"

namespace circlesym {

std::string to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::torus_or_sphere: return "torus_or_sphere";
    case VerdictReason::positive_c1_list: return "positive_c1_list";
    case VerdictReason::projective_or_quadric: return "projective_or_quadric";
    case VerdictReason::out_of_scope: return "out_of_scope";
  }
  return "out_of_scope";
}

namespace {

using Multidegree = std::vector<long>;

bool one_of(const Multidegree& d, std::initializer_list<Multidegree> models) {
  return std::find(models.begin(), models.end(), d) != models.end();
}

}  // namespace

SymmetryVerdict s1_verdict(const CompleteIntersection& ci) {
  const CompleteIntersection canon = normalize(ci);
  const Multidegree& d = canon.degrees();
  SymmetryVerdict v{.admits = {}, .dimension_n = ci.n(), .reason = VerdictReason::out_of_scope,
                    .citation = {}, .evidence = invariants(canon)};
  switch (ci.n()) {
    case 1:
      // X_1(1) = X_1(2) = S^2 and X_1(3) = X_1(2,2) = T^2 are the only
      // surfaces with chi >= 0 among complete intersections.
      v.admits = one_of(d, {{1}, {2}, {3}, {2, 2}});
      v.reason = VerdictReason::torus_or_sphere;
      v.citation =
          "curves: only the sphere X_1(1) = X_1(2) and the torus X_1(3) = X_1(2,2) carry a "
          "circle action (Lefschetz: chi(M) = chi(M^S1) >= 0)";
      break;
    case 2:
      v.admits = one_of(d, {{1}, {2}, {3}, {2, 2}});
      v.reason = VerdictReason::positive_c1_list;
      v.citation =
          "surfaces: exactly the positive-c1 models X_2(1), X_2(2), X_2(3), X_2(2,2) "
          "(Seiberg-Witten obstruction for b2+ > 1)";
      break;
    case 3:
      v.admits = one_of(d, {{1}, {2}});
      v.reason = VerdictReason::projective_or_quadric;
      v.citation =
          "threefolds: complex projective space X_3(1) or quadric X_3(2) only "
          "(all others satisfy the rho <= 0, chi < 4 non-existence hypotheses)";
      break;
    default:
      v.admits.reset();
      v.reason = VerdictReason::out_of_scope;
      v.citation = "dimension >= 8: no classification of circle actions is known";
      break;
  }
  return v;
}

bool HypothesisChecklist::all_hold() const {
  return std::all_of(items.begin(), items.end(), [](const auto& i) { return i.holds; });
}

HypothesisChecklist theorem25_hypotheses(const CompleteIntersection& ci) {
  if (ci.n() != 3) throw DimensionError("hypothesis checklist needs complex dimension 3");
  const InvariantReport inv = invariants(ci);
  HypothesisChecklist c;
  const char* lefschetz = "Lefschetz hyperplane theorem: homology torsion-free, equal to CP^3 "
                          "outside the middle dimension";
  c.items.push_back({"torsion_free_homology", true, lefschetz});
  c.items.push_back({"b1_zero", true, lefschetz});
  c.items.push_back({"b2_one_generated_by_x", true, lefschetz});
  c.items.push_back({"rho_nonpositive", inv.rho <= 0, "rho = " + std::to_string(inv.rho)});
  c.items.push_back({"x3_nonzero", inv.t != 0, "t = " + inv.t.get_str()});
  c.items.push_back({"euler_below_four", inv.euler < 4, "chi = " + inv.euler.get_str()});
  return c;
}

}  // namespace circlesym
