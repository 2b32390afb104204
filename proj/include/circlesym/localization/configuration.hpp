#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace circlesym::localization {

/// Global data of the 6-manifold M: t = [x^3]_M > 0, p_1(M) = rho x^2,
/// chi(M) and sign(M) (always 0 in dimension 6).
struct AmbientData {
  std::int64_t t = 1;
  std::int64_t rho = 0;
  std::int64_t euler = 0;
  std::int64_t sign = 0;

  friend bool operator==(const AmbientData&, const AmbientData&) = default;
  friend auto operator<=>(const AmbientData&, const AmbientData&) = default;
};

/// Isolated fixed point with orientation eps and positive normal weights.
struct PointComponent {
  int eps = 1;
  std::array<std::int64_t, 3> weights{1, 1, 1};
  std::int64_t a = 0;  // lift weight

  std::int64_t chi() const noexcept { return 1; }
  std::int64_t sign() const noexcept { return eps; }

  friend bool operator==(const PointComponent&, const PointComponent&) = default;
  friend auto operator<=>(const PointComponent&, const PointComponent&) = default;
};

/// Fixed surface Z with normal roots y_{Z,i} + n_i z.
struct SurfaceComponent {
  std::array<std::int64_t, 2> weights{1, 1};
  std::int64_t a = 0;
  std::int64_t ev_x = 0;   // [x|_Z]_Z
  std::int64_t ev_y1 = 0;  // [y_{Z,1}]_Z
  std::int64_t ev_y2 = 0;  // [y_{Z,2}]_Z
  std::int64_t chi = 2;    // 2 - 2g

  std::int64_t sign() const noexcept { return 0; }

  friend bool operator==(const SurfaceComponent&, const SurfaceComponent&) = default;
  friend auto operator<=>(const SurfaceComponent&, const SurfaceComponent&) = default;
};

/// Fixed 4-manifold N with normal root y_{N,1} + n z.
struct FourComponent {
  std::int64_t weight = 1;
  std::int64_t a = 0;
  std::int64_t ev_x2 = 0;  // [x|_N^2]_N
  std::int64_t ev_xy = 0;  // [x|_N y_{N,1}]_N
  std::int64_t ev_y2 = 0;  // [y_{N,1}^2]_N
  std::int64_t ev_p1 = 0;  // [p_1(N)]_N
  int b2 = 0;
  std::int64_t sign = 0;
  std::int64_t chi = 2;

  friend bool operator==(const FourComponent&, const FourComponent&) = default;
  friend auto operator<=>(const FourComponent&, const FourComponent&) = default;
};

using Component = std::variant<PointComponent, SurfaceComponent, FourComponent>;

std::int64_t component_chi(const Component& c);
std::int64_t component_sign(const Component& c);
/// Even Betti sum: point 1, surface 2, 4-manifold 2 + b2.
int component_b_ev(const Component& c);
std::int64_t& lift_weight(Component& c);
std::int64_t lift_weight(const Component& c);

/// The seven fixed-point shapes compatible with b_ev(M^S1) = 4 and chi(M) < 4.
enum class Template {
  two_fours,
  four_plus_surface,
  four_plus_two_points,
  cp2like_plus_point,
  single_four_b2_2,
  two_surfaces,
  surface_plus_two_points,
};

inline constexpr std::array<Template, 7> kAllTemplates{
    Template::two_fours,         Template::four_plus_surface, Template::four_plus_two_points,
    Template::cp2like_plus_point, Template::single_four_b2_2, Template::two_surfaces,
    Template::surface_plus_two_points};

std::string_view to_string(Template t);
std::optional<Template> template_from_string(std::string_view s);

enum class SlotKind { point, surface, four };

/// Component kinds (and, for 4-manifolds, b2) a template prescribes, in order.
struct Slot {
  SlotKind kind;
  int b2 = 0;
};
std::vector<Slot> template_slots(Template t);

struct Flags {
  bool effectiveness = false;
  bool convention35 = false;
  bool lemma64 = false;

  friend bool operator==(const Flags&, const Flags&) = default;
  friend auto operator<=>(const Flags&, const Flags&) = default;
};

/// Ambient data plus a list of fixed components.
///
/// `make` validates every component invariant (InvariantError) and, when a
/// template is given, that the components fill its slots (StructuralError).
/// With the convention35 flag and isolated points present, the first point
/// is made positively oriented by passing to the inverse action.
class Configuration {
 public:
  static Configuration make(AmbientData ambient, std::optional<Template> shape,
                            std::vector<Component> components, Flags flags = {});

  const AmbientData& ambient() const noexcept { return ambient_; }
  const std::optional<Template>& shape() const noexcept { return shape_; }
  const std::vector<Component>& components() const noexcept { return components_; }
  const Flags& flags() const noexcept { return flags_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;

  friend Configuration shift_lift(const Configuration& cfg, std::int64_t delta);
  friend Configuration invert_action(const Configuration& cfg);
  friend Configuration with_ambient(const Configuration& cfg, AmbientData ambient);

 private:
  Configuration() = default;
  AmbientData ambient_;
  std::optional<Template> shape_;
  std::vector<Component> components_;
  Flags flags_;
};

/// Throws InvariantError when a component violates its type invariants.
void validate_component(const Component& c);

/// Every lift weight incremented by delta.
Configuration shift_lift(const Configuration& cfg, std::int64_t delta);

/// Same manifold with the inverse circle action: points and 4-manifolds
/// reverse orientation, normal complex structures are conjugated (y -> -y)
/// and lift weights change sign.
Configuration invert_action(const Configuration& cfg);

/// Same components and flags, different ambient data (no re-validation of
/// the components is needed).
Configuration with_ambient(const Configuration& cfg, AmbientData ambient);

/// Index of the first isolated point, if any.
std::optional<std::size_t> first_point(const Configuration& cfg);

}  // namespace circlesym::localization
