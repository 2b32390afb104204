#include "circlesym/localization/search.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>

#include "circlesym/errors.hpp"
#include "circlesym/localization/local_data.hpp"
#include "circlesym/localization/verify.hpp"

namespace circlesym::localization {

namespace {

using i128 = __int128;
using u64 = std::uint64_t;

constexpr u64 kSaturated = std::numeric_limits<u64>::max();

u64 sat_mul(u64 a, u64 b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}
u64 sat_add(u64 a, u64 b) { return b > kSaturated - a ? kSaturated : a + b; }

std::int64_t effective_weight(const SearchOptions& opt) {
  return opt.semifree ? 1 : opt.bounds.max_weight;
}

bool needs_restriction(Template t) {
  return t == Template::two_surfaces || t == Template::surface_plus_two_points;
}

// ---------------------------------------------------------------------------
// Exact coefficients scaled by D = lcm(1..W)^3, so every local datum has
// integer coefficients.

struct Coeffs {
  std::array<i128, 4> x3{};   // l^0..l^3
  std::array<i128, 2> p1x{};  // l^0..l^1

  Coeffs& operator+=(const Coeffs& o) {
    for (int k = 0; k < 4; ++k) x3[k] += o.x3[k];
    for (int k = 0; k < 2; ++k) p1x[k] += o.p1x[k];
    return *this;
  }
};

/// The l-dependent part: what has to cancel in a consistent configuration.
using Key = std::array<i128, 4>;

Key key_of(const Coeffs& c) { return {c.x3[1], c.x3[2], c.x3[3], c.p1x[1]}; }
Key negated(Key k) {
  for (auto& v : k) v = -v;
  return k;
}

Coeffs coeffs_of(const Component& comp, i128 D) {
  Coeffs c;
  std::visit(
      [&](const auto& z) {
        using T = std::decay_t<decltype(z)>;
        const i128 a = z.a;
        if constexpr (std::is_same_v<T, PointComponent>) {
          const auto [n1, n2, n3] = z.weights;
          const i128 u = D / (n1 * n2 * n3) * z.eps;
          c.x3 = {u * a * a * a, 3 * u * a * a, 3 * u * a, u};
          const i128 v = u * (n1 * n1 + n2 * n2 + n3 * n3);
          c.p1x = {v * a, v};
        } else if constexpr (std::is_same_v<T, SurfaceComponent>) {
          const i128 n1 = z.weights[0], n2 = z.weights[1];
          const i128 Y = D / (n1 * n1 * n2) * z.ev_y1 + D / (n1 * n2 * n2) * z.ev_y2;
          const i128 X = D / (n1 * n2) * z.ev_x;
          c.x3 = {-a * a * a * Y + 3 * a * a * X, -3 * a * a * Y + 6 * a * X, -3 * a * Y + 3 * X, -Y};
          const i128 Q = -(n1 * n1 + n2 * n2) * Y + 2 * (D / (n1 * n2)) * (n1 * z.ev_y1 + n2 * z.ev_y2);
          const i128 R = (n1 * n1 + n2 * n2) * X;
          c.p1x = {a * Q + R, Q};
        } else {
          const i128 n = z.weight;
          const i128 U = 3 * (D / n) * z.ev_x2;
          const i128 V = 3 * (D / (n * n)) * z.ev_xy;
          const i128 W = D / (n * n * n) * z.ev_y2;
          c.x3 = {a * U - a * a * V + a * a * a * W, U - 2 * a * V + 3 * a * a * W, -V + 3 * a * W, W};
          const i128 P = D / n * z.ev_p1;
          c.p1x = {D * z.ev_xy + a * P, P};
        }
      },
      comp);
  return c;
}

i128 scale_for(std::int64_t w) {
  i128 l = 1;
  for (std::int64_t k = 2; k <= w; ++k) l = l / std::gcd(static_cast<std::int64_t>(l), k) * k;
  return l * l * l;
}

// ---------------------------------------------------------------------------
// Slot enumeration for the joined search (lift weight 0, largest chi).

std::vector<std::array<std::int64_t, 3>> sorted_triples(std::int64_t w) {
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::int64_t a = 1; a <= w; ++a)
    for (std::int64_t b = a; b <= w; ++b)
      for (std::int64_t c = b; c <= w; ++c) out.push_back({a, b, c});
  return out;
}

std::vector<std::int64_t> signs_for(int b2) {
  std::vector<std::int64_t> s;
  for (std::int64_t v = -b2; v <= b2; v += 2) s.push_back(v);
  return s;
}

std::vector<Component> slot_shapes(const SearchOptions& opt, const Slot& slot, bool first_point) {
  const std::int64_t W = effective_weight(opt), E = opt.bounds.max_abs_eval;
  const Template t = opt.shape;
  std::vector<Component> out;
  switch (slot.kind) {
    case SlotKind::point:
      for (int eps : {-1, 1}) {
        if (first_point && opt.flags.convention35 && eps != 1) continue;
        for (const auto& w : sorted_triples(W)) {
          if (opt.flags.effectiveness && std::gcd(std::gcd(w[0], w[1]), w[2]) != 1) continue;
          out.push_back(PointComponent{eps, w, 0});
        }
      }
      break;
    case SlotKind::surface: {
      const bool split = t == Template::two_surfaces;
      for (std::int64_t n1 = 1; n1 <= W; ++n1)
        for (std::int64_t n2 = 1; n2 <= W; ++n2)
          for (std::int64_t x = -E; x <= E; ++x) {
            if (x == 0 && needs_restriction(t)) continue;
            for (std::int64_t y1 = -E; y1 <= E; ++y1)
              for (std::int64_t y2 = split ? 0 : -E; y2 <= (split ? 0 : E); ++y2) {
                if (!split && std::pair(n2, y2) < std::pair(n1, y1)) continue;
                out.push_back(SurfaceComponent{{n1, n2}, 0, x, y1, y2, 2});
              }
          }
      break;
    }
    case SlotKind::four: {
      const std::int64_t R = slot.b2 > 0 ? E : 0;
      for (std::int64_t n = 1; n <= W; ++n)
        for (std::int64_t s : signs_for(slot.b2)) {
          if (3 * std::abs(s) > E) continue;
          for (std::int64_t x2 = -R; x2 <= R; ++x2)
            for (std::int64_t xy = -R; xy <= R; ++xy)
              for (std::int64_t y2 = -R; y2 <= R; ++y2) {
                FourComponent f{n, 0, x2, xy, y2, 3 * s, slot.b2, s, 2 + slot.b2};
                try {
                  validate_component(f);
                } catch (const InvariantError&) {
                  continue;
                }
                out.push_back(f);
              }
        }
      break;
    }
  }
  return out;
}

/// Upper bound on slot_shapes(...).size(), independent of filtering.
u64 slot_count(const SearchOptions& opt, const Slot& slot) {
  const u64 W = static_cast<u64>(effective_weight(opt));
  const u64 E = 2 * static_cast<u64>(opt.bounds.max_abs_eval) + 1;
  switch (slot.kind) {
    case SlotKind::point: return 2 * (W * (W + 1) * (W + 2) / 6);
    case SlotKind::surface:
      return sat_mul(sat_mul(W * W, E * E), opt.shape == Template::two_surfaces ? 1 : E);
    case SlotKind::four:
      return sat_mul(W * signs_for(slot.b2).size(), slot.b2 > 0 ? sat_mul(E * E, E) : 1);
  }
  return 0;
}

std::size_t anchor_index(Template t) { return t == Template::four_plus_surface ? 1 : 0; }

/// chi values a component may take for genus / b1 in [0, G].
std::vector<std::int64_t> chi_choices(const Component& c, std::int64_t G) {
  std::vector<std::int64_t> out;
  if (std::holds_alternative<PointComponent>(c)) return {1};
  const std::int64_t top = std::holds_alternative<SurfaceComponent>(c)
                               ? 2
                               : 2 + std::get<FourComponent>(c).b2;
  for (std::int64_t g = 0; g <= G; ++g) out.push_back(top - 2 * g);
  return out;
}

void set_chi(Component& c, std::int64_t chi) {
  if (auto* s = std::get_if<SurfaceComponent>(&c)) s->chi = chi;
  if (auto* f = std::get_if<FourComponent>(&c)) f->chi = chi;
}

/// Calls f(components) for every assignment of chi values.
template <class F>
void for_each_genus(std::vector<Component> comps, std::int64_t G, F&& f) {
  std::vector<std::vector<std::int64_t>> choices;
  for (const auto& c : comps) choices.push_back(chi_choices(c, G));
  std::vector<std::size_t> idx(comps.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < comps.size(); ++i) set_chi(comps[i], choices[i][idx[i]]);
    f(comps);
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) return;
  }
}

std::int64_t total_chi(const std::vector<Component>& comps) {
  std::int64_t e = 0;
  for (const auto& c : comps) e += component_chi(c);
  return e;
}

bool euler_admissible(std::int64_t e) { return e < 4 && e % 2 == 0; }

/// Expands a matched candidate (lift weights relative to the anchor) over
/// genera and lift shifts and appends every consistent configuration.
void expand_match(const SearchOptions& opt, const std::vector<Component>& comps, AmbientData amb,
                  std::vector<Configuration>& hits) {
  const std::int64_t A = opt.bounds.max_abs_a;
  std::int64_t lo = 0, hi = 0;
  for (const auto& c : comps) lo = std::min(lo, lift_weight(c)), hi = std::max(hi, lift_weight(c));

  // Genus only enters the Euler checks, so one verification decides the
  // whole family once chi(M) is admissible.
  bool decided = false;
  bool consistent = false;
  for_each_genus(comps, opt.bounds.max_genus, [&](const std::vector<Component>& with_chi) {
    amb.euler = total_chi(with_chi);
    if (!euler_admissible(amb.euler)) return;
    const Configuration base = Configuration::make(amb, opt.shape, with_chi, opt.flags);
    if (!decided) {
      consistent = is_canonical(base) && is_consistent(base);
      decided = true;
    }
    if (!consistent) return;
    for (std::int64_t s = -A - lo; s <= A - hi; ++s) {
      Configuration cfg = shift_lift(base, s);
      if (is_consistent(cfg)) hits.push_back(std::move(cfg));
    }
  });
}

void sort_unique(std::vector<Configuration>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

void validate_options(const SearchOptions& opt) {
  const auto& b = opt.bounds;
  if (b.max_weight < 1 || b.max_abs_a < 1 || b.max_abs_eval < 1)
    throw UsageError("search bounds must be >= 1");
  if (b.max_genus < 0) throw UsageError("genus bound must be >= 0");
  if (b.max_weight > kMaxSearchWeight) throw UsageError("weight bound above 16");
  if (b.max_abs_a > kMaxSearchLift) throw UsageError("lift bound above 1000");
  if (b.max_abs_eval > kMaxSearchEval) throw UsageError("evaluation bound above 10^6");
  if (b.max_genus > 1000) throw UsageError("genus bound above 1000");
  const auto& r = opt.ranges;
  if (r.t_min < 1 || r.t_min > r.t_max) throw UsageError("t range must satisfy 1 <= t-min <= t-max");
  if (r.rho_min > r.rho_max) throw UsageError("rho range is empty");
  if (opt.workers < 1) throw UsageError("workers must be >= 1");
}

std::uint64_t search_nodes(const SearchOptions& opt) {
  validate_options(opt);
  const auto slots = template_slots(opt.shape);
  const std::size_t anchor = anchor_index(opt.shape);
  const u64 lifts = 4 * static_cast<u64>(opt.bounds.max_abs_a) + 1;
  u64 rest = 1;
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (i != anchor) rest = sat_mul(rest, sat_mul(slot_count(opt, slots[i]), lifts));
  return sat_add(slot_count(opt, slots[anchor]), rest);
}

SearchResult search_case(const SearchOptions& opt) {
  SearchResult result;
  result.nodes = search_nodes(opt);
  if (result.nodes > opt.budget)
    throw BudgetError("search needs " + std::to_string(result.nodes) + " nodes, budget is " +
                      std::to_string(opt.budget));

  const auto slots = template_slots(opt.shape);
  const std::size_t anchor = anchor_index(opt.shape);
  const i128 D = scale_for(effective_weight(opt));
  const std::int64_t A = opt.bounds.max_abs_a;
  const std::int64_t lifts = 4 * A + 1;

  // Anchor index: key -> anchor shapes, sorted for equal_range lookups.
  const std::vector<Component> anchors = slot_shapes(opt, slots[anchor], false);
  std::vector<Coeffs> anchor_coeffs;
  std::vector<std::pair<Key, std::uint32_t>> index;
  anchor_coeffs.reserve(anchors.size());
  for (std::uint32_t i = 0; i < anchors.size(); ++i) {
    anchor_coeffs.push_back(coeffs_of(anchors[i], D));
    index.emplace_back(key_of(anchor_coeffs.back()), i);
  }
  std::sort(index.begin(), index.end());

  std::vector<std::size_t> rest_slot;
  std::vector<std::vector<Component>> rest_shapes;
  bool seen_point = slots[anchor].kind == SlotKind::point;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i == anchor) continue;
    const bool first_point = slots[i].kind == SlotKind::point && !seen_point;
    seen_point = seen_point || slots[i].kind == SlotKind::point;
    rest_slot.push_back(i);
    rest_shapes.push_back(slot_shapes(opt, slots[i], first_point));
  }
  std::int64_t total = 1;
  for (const auto& s : rest_shapes) total *= static_cast<std::int64_t>(s.size()) * lifts;

  std::vector<Configuration> hits;
  std::mutex merge;
  std::exception_ptr failure;

#pragma omp parallel num_threads(opt.workers)
  {
    std::vector<Configuration> local;
    std::vector<Component> rest(rest_shapes.size());
#pragma omp for schedule(dynamic, 1024)
    for (std::int64_t item = 0; item < total; ++item) {
      try {
        std::int64_t code = item, lo = 0, hi = 0;
        for (std::size_t j = 0; j < rest_shapes.size(); ++j) {
          const std::int64_t radix = static_cast<std::int64_t>(rest_shapes[j].size()) * lifts;
          const std::int64_t d = code % radix;
          code /= radix;
          rest[j] = rest_shapes[j][static_cast<std::size_t>(d / lifts)];
          const std::int64_t a = d % lifts - 2 * A;
          lift_weight(rest[j]) = a;
          lo = std::min(lo, a);
          hi = std::max(hi, a);
        }
        if (hi - lo > 2 * A) continue;
        Coeffs sum;
        for (const auto& c : rest) sum += coeffs_of(c, D);
        const Key want = negated(key_of(sum));
        auto it = std::lower_bound(index.begin(), index.end(), std::pair(want, std::uint32_t{0}));
        for (; it != index.end() && it->first == want; ++it) {
          const Coeffs& ac = anchor_coeffs[it->second];
          const i128 tD = ac.x3[0] + sum.x3[0];
          if (tD <= 0 || tD % D != 0) continue;
          const i128 t = tD / D;
          if (t < opt.ranges.t_min || t > opt.ranges.t_max) continue;
          const i128 rtD = ac.p1x[0] + sum.p1x[0];
          if (rtD % tD != 0) continue;
          const i128 rho = rtD / tD;
          if (rho < opt.ranges.rho_min || rho > opt.ranges.rho_max) continue;
          std::vector<Component> comps(slots.size());
          comps[anchor] = anchors[it->second];
          for (std::size_t j = 0; j < rest.size(); ++j) comps[rest_slot[j]] = rest[j];
          expand_match(opt, comps,
                       AmbientData{static_cast<std::int64_t>(t), static_cast<std::int64_t>(rho), 0, 0},
                       local);
        }
      } catch (...) {
        std::lock_guard lock(merge);
        if (!failure) failure = std::current_exception();
      }
    }
    std::lock_guard lock(merge);
    hits.insert(hits.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  }
  if (failure) std::rethrow_exception(failure);
  sort_unique(hits);
  result.hits = std::move(hits);
  return result;
}

// ---------------------------------------------------------------------------
// Reference: nested enumeration of raw data.

namespace {

std::vector<Component> raw_slot(const SearchOptions& opt, const Slot& slot) {
  const std::int64_t W = effective_weight(opt), E = opt.bounds.max_abs_eval, A = opt.bounds.max_abs_a;
  std::vector<Component> out;
  for (std::int64_t a = -A; a <= A; ++a) {
    switch (slot.kind) {
      case SlotKind::point:
        for (int eps : {-1, 1})
          for (std::int64_t n1 = 1; n1 <= W; ++n1)
            for (std::int64_t n2 = 1; n2 <= W; ++n2)
              for (std::int64_t n3 = 1; n3 <= W; ++n3)
                out.push_back(PointComponent{eps, {n1, n2, n3}, a});
        break;
      case SlotKind::surface:
        for (std::int64_t n1 = 1; n1 <= W; ++n1)
          for (std::int64_t n2 = 1; n2 <= W; ++n2)
            for (std::int64_t x = -E; x <= E; ++x)
              for (std::int64_t y1 = -E; y1 <= E; ++y1)
                for (std::int64_t y2 = -E; y2 <= E; ++y2)
                  out.push_back(SurfaceComponent{{n1, n2}, a, x, y1, y2, 2});
        break;
      case SlotKind::four: {
        const std::int64_t R = slot.b2 > 0 ? E : 0;
        for (std::int64_t n = 1; n <= W; ++n)
          for (std::int64_t s = -slot.b2; s <= slot.b2; ++s)
            for (std::int64_t p1 = -E; p1 <= E; ++p1)
              for (std::int64_t x2 = -R; x2 <= R; ++x2)
                for (std::int64_t xy = -R; xy <= R; ++xy)
                  for (std::int64_t y2 = -R; y2 <= R; ++y2) {
                    FourComponent f{n, a, x2, xy, y2, p1, slot.b2, s, 2 + slot.b2};
                    try {
                      validate_component(f);
                    } catch (const InvariantError&) {
                      continue;
                    }
                    out.push_back(f);
                  }
        break;
      }
    }
  }
  return out;
}

u64 raw_count(const SearchOptions& opt, const Slot& slot) {
  const u64 W = static_cast<u64>(effective_weight(opt));
  const u64 E = 2 * static_cast<u64>(opt.bounds.max_abs_eval) + 1;
  const u64 A = 2 * static_cast<u64>(opt.bounds.max_abs_a) + 1;
  switch (slot.kind) {
    case SlotKind::point: return sat_mul(2 * W * W * W, A);
    case SlotKind::surface: return sat_mul(sat_mul(W * W, sat_mul(E * E, E)), A);
    case SlotKind::four:
      return sat_mul(sat_mul(W * (2 * static_cast<u64>(slot.b2) + 1), E),
                     sat_mul(slot.b2 > 0 ? sat_mul(E * E, E) : 1, A));
  }
  return 0;
}

}  // namespace

SearchResult search_case_reference(const SearchOptions& opt) {
  validate_options(opt);
  const auto slots = template_slots(opt.shape);
  SearchResult result;
  result.nodes = 1;
  for (const auto& s : slots) result.nodes = sat_mul(result.nodes, raw_count(opt, s));
  if (result.nodes > opt.budget)
    throw BudgetError("reference search needs " + std::to_string(result.nodes) +
                      " nodes, budget is " + std::to_string(opt.budget));

  std::vector<std::vector<Component>> lists;
  for (const auto& s : slots) lists.push_back(raw_slot(opt, s));
  std::vector<std::size_t> idx(slots.size(), 0);
  std::vector<Component> comps(slots.size());
  std::vector<Configuration> hits;
  while (true) {
    for (std::size_t i = 0; i < slots.size(); ++i) comps[i] = lists[i][idx[i]];
    // x^3 must localize to a constant; everything else is left to the verifier
    LiftPolynomial x3;
    for (const auto& c : comps) x3 += x3_local_datum(c);
    if (x3.is_constant()) {
      for_each_genus(comps, opt.bounds.max_genus, [&](const std::vector<Component>& with_chi) {
        const std::int64_t euler = total_chi(with_chi);
        for (std::int64_t t = opt.ranges.t_min; t <= opt.ranges.t_max; ++t)
          for (std::int64_t rho = opt.ranges.rho_min; rho <= opt.ranges.rho_max; ++rho) {
            const Configuration cfg =
                Configuration::make({t, rho, euler, 0}, opt.shape, with_chi, opt.flags);
            if (is_canonical(cfg) && is_consistent(cfg)) hits.push_back(cfg);
          }
      });
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == lists[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  sort_unique(hits);
  result.hits = std::move(hits);
  return result;
}

}  // namespace circlesym::localization
