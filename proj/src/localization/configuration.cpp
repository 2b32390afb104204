#include "circlesym/localization/configuration.hpp"

#include <algorithm>
#include <string>

#include "circlesym/errors.hpp"

namespace circlesym::localization {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int kind_rank(const Component& c) {
  return std::visit(overloaded{[](const FourComponent&) { return 0; },
                               [](const SurfaceComponent&) { return 1; },
                               [](const PointComponent&) { return 2; }},
                    c);
}

SlotKind kind_of(const Component& c) {
  return std::visit(overloaded{[](const FourComponent&) { return SlotKind::four; },
                               [](const SurfaceComponent&) { return SlotKind::surface; },
                               [](const PointComponent&) { return SlotKind::point; }},
                    c);
}

void check_structure(Template shape, const std::vector<Component>& comps) {
  const std::vector<Slot> slots = template_slots(shape);
  const std::string name(to_string(shape));
  if (slots.size() != comps.size())
    throw StructuralError("template " + name + " needs " + std::to_string(slots.size()) +
                          " components, got " + std::to_string(comps.size()));
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (kind_of(comps[i]) != slots[i].kind)
      throw StructuralError("template " + name + ": component " + std::to_string(i) +
                            " has the wrong kind");
    if (const auto* f = std::get_if<FourComponent>(&comps[i]); f && f->b2 != slots[i].b2)
      throw StructuralError("template " + name + ": 4-dimensional component needs b2 = " +
                            std::to_string(slots[i].b2));
  }
  int b_ev = 0;
  for (const auto& c : comps) b_ev += component_b_ev(c);
  if (b_ev != 4) throw StructuralError("even Betti sum of the fixed set must be 4");
}

Component inverted(const Component& c) {
  return std::visit(overloaded{[](PointComponent p) -> Component {
                                 p.eps = -p.eps;
                                 p.a = -p.a;
                                 return p;
                               },
                               [](SurfaceComponent s) -> Component {
                                 s.a = -s.a;
                                 s.ev_y1 = -s.ev_y1;
                                 s.ev_y2 = -s.ev_y2;
                                 return s;
                               },
                               [](FourComponent f) -> Component {
                                 // orientation of N flips and y -> -y
                                 f.a = -f.a;
                                 f.ev_x2 = -f.ev_x2;
                                 f.ev_y2 = -f.ev_y2;
                                 f.ev_p1 = -f.ev_p1;
                                 f.sign = -f.sign;
                                 return f;
                               }},
                    c);
}

}  // namespace

std::int64_t component_chi(const Component& c) {
  return std::visit(overloaded{[](const PointComponent& p) { return p.chi(); },
                               [](const SurfaceComponent& s) { return s.chi; },
                               [](const FourComponent& f) { return f.chi; }},
                    c);
}

std::int64_t component_sign(const Component& c) {
  return std::visit(overloaded{[](const PointComponent& p) { return p.sign(); },
                               [](const SurfaceComponent& s) { return s.sign(); },
                               [](const FourComponent& f) { return f.sign; }},
                    c);
}

int component_b_ev(const Component& c) {
  return std::visit(overloaded{[](const PointComponent&) { return 1; },
                               [](const SurfaceComponent&) { return 2; },
                               [](const FourComponent& f) { return 2 + f.b2; }},
                    c);
}

std::int64_t& lift_weight(Component& c) {
  return std::visit([](auto& x) -> std::int64_t& { return x.a; }, c);
}

std::int64_t lift_weight(const Component& c) {
  return std::visit([](const auto& x) { return x.a; }, c);
}

std::string_view to_string(Template t) {
  switch (t) {
    case Template::two_fours: return "two_fours";
    case Template::four_plus_surface: return "four_plus_surface";
    case Template::four_plus_two_points: return "four_plus_two_points";
    case Template::cp2like_plus_point: return "cp2like_plus_point";
    case Template::single_four_b2_2: return "single_four_b2_2";
    case Template::two_surfaces: return "two_surfaces";
    case Template::surface_plus_two_points: return "surface_plus_two_points";
  }
  return "?";
}

std::optional<Template> template_from_string(std::string_view s) {
  for (Template t : kAllTemplates)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

std::vector<Slot> template_slots(Template t) {
  using K = SlotKind;
  switch (t) {
    case Template::two_fours: return {{K::four, 0}, {K::four, 0}};
    case Template::four_plus_surface: return {{K::four, 0}, {K::surface}};
    case Template::four_plus_two_points: return {{K::four, 0}, {K::point}, {K::point}};
    case Template::cp2like_plus_point: return {{K::four, 1}, {K::point}};
    case Template::single_four_b2_2: return {{K::four, 2}};
    case Template::two_surfaces: return {{K::surface}, {K::surface}};
    case Template::surface_plus_two_points: return {{K::surface}, {K::point}, {K::point}};
  }
  return {};
}

void validate_component(const Component& c) {
  std::visit(
      overloaded{
          [](const PointComponent& p) {
            if (p.eps != 1 && p.eps != -1) throw InvariantError("point orientation must be +1 or -1");
            for (auto w : p.weights)
              if (w < 1) throw InvariantError("normal weights must be positive");
          },
          [](const SurfaceComponent& s) {
            for (auto w : s.weights)
              if (w < 1) throw InvariantError("normal weights must be positive");
            if (s.chi > 2 || s.chi % 2 != 0)
              throw InvariantError("surface Euler characteristic must be even and <= 2");
          },
          [](const FourComponent& f) {
            if (f.weight < 1) throw InvariantError("normal weight must be positive");
            if (f.b2 < 0 || f.b2 > 2) throw InvariantError("b2 of a 4-dimensional component must be 0, 1 or 2");
            if (f.sign > f.b2 || -f.sign > f.b2 || (f.b2 - f.sign) % 2 != 0)
              throw InvariantError("signature must satisfy |sign| <= b2 and sign = b2 mod 2");
            if (f.chi > 2 + f.b2 || (f.chi - f.b2) % 2 != 0)
              throw InvariantError("4-manifold Euler characteristic must be 2 + b2 - 2 b1");
            if (f.ev_p1 != 3 * f.sign)
              throw InvariantError("signature theorem: [p1(N)] must equal 3 sign(N)");
            if (f.b2 == 0 && (f.ev_x2 != 0 || f.ev_xy != 0 || f.ev_y2 != 0))
              throw InvariantError("evaluations of degree-2 classes vanish when b2 = 0");
            if (f.b2 == 1) {
              // rank-one definite form: x = alpha e, y = beta e with e^2 = sign
              if (f.sign * f.ev_x2 < 0 || f.sign * f.ev_y2 < 0 ||
                  f.ev_xy * f.ev_xy != f.ev_x2 * f.ev_y2)
                throw InvariantError("b2 = 1: evaluations must come from a definite rank-one form");
            }
          }},
      c);
}

Configuration Configuration::make(AmbientData ambient, std::optional<Template> shape,
                                  std::vector<Component> components, Flags flags) {
  if (ambient.t <= 0) throw InvariantError("orientation convention requires t = [x^3]_M > 0");
  if (ambient.sign != 0) throw InvariantError("a 6-manifold has signature 0");
  for (const auto& c : components) validate_component(c);
  std::stable_sort(components.begin(), components.end(),
                   [](const Component& x, const Component& y) { return kind_rank(x) < kind_rank(y); });
  if (shape) check_structure(*shape, components);

  Configuration cfg;
  cfg.ambient_ = ambient;
  cfg.shape_ = shape;
  cfg.components_ = std::move(components);
  cfg.flags_ = flags;

  if (flags.convention35 && first_point(cfg)) {
    auto positive = [](const Component& c) {
      const auto* p = std::get_if<PointComponent>(&c);
      return p && p->eps == 1;
    };
    if (std::none_of(cfg.components_.begin(), cfg.components_.end(), positive))
      cfg = invert_action(cfg);
    // the chosen positive point becomes the first point
    const auto first = cfg.components_.begin() + static_cast<long>(*first_point(cfg));
    const auto chosen = std::find_if(first, cfg.components_.end(), positive);
    std::rotate(first, chosen, chosen + 1);
  }
  return cfg;
}

Configuration shift_lift(const Configuration& cfg, std::int64_t delta) {
  Configuration out = cfg;
  for (auto& c : out.components_) lift_weight(c) += delta;
  return out;
}

Configuration invert_action(const Configuration& cfg) {
  Configuration out = cfg;
  for (auto& c : out.components_) c = inverted(c);
  return out;
}

Configuration with_ambient(const Configuration& cfg, AmbientData ambient) {
  if (ambient.t <= 0) throw InvariantError("orientation convention requires t = [x^3]_M > 0");
  if (ambient.sign != 0) throw InvariantError("a 6-manifold has signature 0");
  Configuration out = cfg;
  out.ambient_ = ambient;
  return out;
}

std::optional<std::size_t> first_point(const Configuration& cfg) {
  for (std::size_t i = 0; i < cfg.components().size(); ++i)
    if (std::holds_alternative<PointComponent>(cfg.components()[i])) return i;
  return std::nullopt;
}

}  // namespace circlesym::localization
