#pragma once

// Hand-rolled random generators for property tests. Every generator takes
// the engine by reference so a failing seed reproduces the whole run.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "circlesym/localization/configuration.hpp"
#include "circlesym/rational.hpp"
#include "circlesym/series.hpp"

namespace gen {

namespace loc = circlesym::localization;
using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

inline circlesym::Rational rational(Rng& rng, std::int64_t bound = 9) {
  const auto p = uniform(rng, -bound, bound);
  const auto q = uniform(rng, 1, bound);
  return {p, q};
}

inline circlesym::TruncatedSeries series(Rng& rng, std::size_t order, bool unit) {
  circlesym::TruncatedSeries s(order);
  for (std::size_t k = 0; k <= order; ++k) s[k] = rational(rng);
  if (unit && s[0].is_zero()) s[0] = 1;
  return s;
}

inline loc::PointComponent point(Rng& rng, std::int64_t max_weight = 5, std::int64_t max_a = 5) {
  loc::PointComponent p;
  p.eps = coin(rng) ? 1 : -1;
  for (auto& w : p.weights) w = uniform(rng, 1, max_weight);
  p.a = uniform(rng, -max_a, max_a);
  return p;
}

inline loc::SurfaceComponent surface(Rng& rng, std::int64_t max_weight = 5, std::int64_t max_a = 5,
                                     std::int64_t max_eval = 10) {
  loc::SurfaceComponent s;
  for (auto& w : s.weights) w = uniform(rng, 1, max_weight);
  s.a = uniform(rng, -max_a, max_a);
  s.ev_x = uniform(rng, -max_eval, max_eval);
  s.ev_y1 = uniform(rng, -max_eval, max_eval);
  s.ev_y2 = uniform(rng, -max_eval, max_eval);
  s.chi = 2 - 2 * uniform(rng, 0, 2);
  return s;
}

// A 4-dimensional fixed component satisfying the per-component invariants
// for the requested b2.
inline loc::FourComponent four(Rng& rng, int b2, std::int64_t max_weight = 5,
                               std::int64_t max_a = 5, std::int64_t max_eval = 10) {
  loc::FourComponent f;
  f.weight = uniform(rng, 1, max_weight);
  f.a = uniform(rng, -max_a, max_a);
  f.b2 = b2;
  if (b2 == 0) {
    f.sign = 0;
  } else if (b2 == 1) {
    f.sign = coin(rng) ? 1 : -1;
    // rank one form: x = u g, y = v g with [g^2] = sign
    const auto u = uniform(rng, -3, 3);
    const auto v = uniform(rng, -3, 3);
    f.ev_x2 = f.sign * u * u;
    f.ev_xy = f.sign * u * v;
    f.ev_y2 = f.sign * v * v;
  } else {
    f.sign = 2 * uniform(rng, -1, 1);
    f.ev_x2 = uniform(rng, -max_eval, max_eval);
    f.ev_xy = uniform(rng, -max_eval, max_eval);
    f.ev_y2 = uniform(rng, -max_eval, max_eval);
  }
  f.ev_p1 = 3 * f.sign;
  f.chi = 2 + b2 - 2 * uniform(rng, 0, 2);
  return f;
}

inline loc::Component slot_component(Rng& rng, const loc::Slot& slot) {
  switch (slot.kind) {
    case loc::SlotKind::point: return point(rng);
    case loc::SlotKind::surface: return surface(rng);
    case loc::SlotKind::four: return four(rng, slot.b2);
  }
  return point(rng);
}

inline loc::Template any_template(Rng& rng) {
  return loc::kAllTemplates[static_cast<std::size_t>(uniform(rng, 0, 6))];
}

inline loc::AmbientData ambient(Rng& rng) {
  loc::AmbientData a;
  a.t = uniform(rng, 1, 10);
  a.rho = uniform(rng, -10, 10);
  a.euler = 2 - 2 * uniform(rng, 0, 3);
  a.sign = 0;
  return a;
}

inline loc::Flags flags(Rng& rng) { return {coin(rng), coin(rng), coin(rng)}; }

// Random configuration for a random template (no convention normalization,
// so a lift shift moves every weight).
inline loc::Configuration configuration(Rng& rng) {
  const auto t = any_template(rng);
  std::vector<loc::Component> comps;
  for (const auto& slot : loc::template_slots(t)) comps.push_back(slot_component(rng, slot));
  loc::Flags f = flags(rng);
  f.convention35 = false;
  return loc::Configuration::make(ambient(rng), t, std::move(comps), f);
}

}  // namespace gen
