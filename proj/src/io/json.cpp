#include "circlesym/io/json.hpp"

#include <limits>
#include <set>

#include "circlesym/errors.hpp"

namespace circlesym::io {

namespace loc = circlesym::localization;

namespace {

void require_object(const Json& j, const std::string& path, const std::set<std::string>& allowed,
                    const std::set<std::string>& required) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "$" : path, "expected an object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw SchemaError(path.empty() ? key : path + "." + key, "unknown key");
  for (const auto& key : required)
    if (!j.contains(key)) throw SchemaError(path.empty() ? key : path + "." + key, "missing key");
}

std::int64_t get_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  if (j.is_number_unsigned() &&
      j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw SchemaError(path, "integer out of range");
  return j.get<std::int64_t>();
}

bool get_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw SchemaError(path, "expected a boolean");
  return j.get<bool>();
}

template <std::size_t N>
std::array<std::int64_t, N> get_weights(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != N)
    throw SchemaError(path, "expected an array of " + std::to_string(N) + " integers");
  std::array<std::int64_t, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = get_int(j[i], path + "[" + std::to_string(i) + "]");
  return out;
}

loc::Component component_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  if (!j.contains("kind")) throw SchemaError(path + ".kind", "missing key");
  if (!j["kind"].is_string()) throw SchemaError(path + ".kind", "expected a string");
  const std::string kind = j["kind"].get<std::string>();
  const auto field = [&](const char* key) { return get_int(j.at(key), path + "." + key); };
  loc::Component c;
  if (kind == "point") {
    require_object(j, path, {"kind", "eps", "weights", "a", "chi", "sign"}, {"eps", "weights", "a"});
    loc::PointComponent p;
    p.eps = static_cast<int>(field("eps"));
    if (p.eps != 1 && p.eps != -1) throw SchemaError(path + ".eps", "must be 1 or -1");
    p.weights = get_weights<3>(j["weights"], path + ".weights");
    p.a = field("a");
    if (j.contains("chi") && field("chi") != 1) throw SchemaError(path + ".chi", "a point has chi 1");
    if (j.contains("sign") && field("sign") != p.eps)
      throw SchemaError(path + ".sign", "a point has signature eps");
    c = p;
  } else if (kind == "surface") {
    require_object(j, path, {"kind", "weights", "a", "ev_x", "ev_y1", "ev_y2", "chi", "sign"},
                   {"weights", "a", "ev_x", "ev_y1", "ev_y2", "chi"});
    loc::SurfaceComponent s;
    s.weights = get_weights<2>(j["weights"], path + ".weights");
    s.a = field("a");
    s.ev_x = field("ev_x");
    s.ev_y1 = field("ev_y1");
    s.ev_y2 = field("ev_y2");
    s.chi = field("chi");
    if (j.contains("sign") && field("sign") != 0)
      throw SchemaError(path + ".sign", "a surface has signature 0");
    c = s;
  } else if (kind == "four") {
    require_object(j, path,
                   {"kind", "weight", "a", "ev_x2", "ev_xy", "ev_y2", "ev_p1", "b2", "sign", "chi"},
                   {"weight", "a", "ev_x2", "ev_xy", "ev_y2", "ev_p1", "b2", "sign", "chi"});
    loc::FourComponent f;
    f.weight = field("weight");
    f.a = field("a");
    f.ev_x2 = field("ev_x2");
    f.ev_xy = field("ev_xy");
    f.ev_y2 = field("ev_y2");
    f.ev_p1 = field("ev_p1");
    const std::int64_t b2 = field("b2");
    if (b2 < 0 || b2 > 2) throw SchemaError(path + ".b2", "must be 0, 1 or 2");
    f.b2 = static_cast<int>(b2);
    f.sign = field("sign");
    f.chi = field("chi");
    c = f;
  } else {
    throw SchemaError(path + ".kind", "must be point, surface or four");
  }
  try {
    loc::validate_component(c);
  } catch (const InvariantError& e) {
    throw SchemaError(path, e.what());
  }
  return c;
}

Json flags_to_json(const loc::Flags& f) {
  return {{"effectiveness", f.effectiveness}, {"convention35", f.convention35}, {"lemma64", f.lemma64}};
}

Json component_to_json(const loc::Component& c) {
  return std::visit(
      [](const auto& z) -> Json {
        using T = std::decay_t<decltype(z)>;
        if constexpr (std::is_same_v<T, loc::PointComponent>) {
          return {{"kind", "point"}, {"eps", z.eps}, {"weights", z.weights}, {"a", z.a},
                  {"chi", z.chi()}, {"sign", z.sign()}};
        } else if constexpr (std::is_same_v<T, loc::SurfaceComponent>) {
          return {{"kind", "surface"}, {"weights", z.weights}, {"a", z.a},
                  {"ev_x", z.ev_x},   {"ev_y1", z.ev_y1},     {"ev_y2", z.ev_y2},
                  {"chi", z.chi},     {"sign", z.sign()}};
        } else {
          return {{"kind", "four"}, {"weight", z.weight}, {"a", z.a},       {"ev_x2", z.ev_x2},
                  {"ev_xy", z.ev_xy}, {"ev_y2", z.ev_y2}, {"ev_p1", z.ev_p1}, {"b2", z.b2},
                  {"sign", z.sign},   {"chi", z.chi}};
        }
      },
      c);
}

}  // namespace

loc::Configuration config_from_json(const Json& doc) {
  require_object(doc, "", {"ambient", "template", "flags", "components"},
                 {"ambient", "template", "components"});
  const Json& amb = doc["ambient"];
  require_object(amb, "ambient", {"t", "rho", "euler", "sign"}, {"t", "rho", "euler", "sign"});
  loc::AmbientData ambient{get_int(amb["t"], "ambient.t"), get_int(amb["rho"], "ambient.rho"),
                           get_int(amb["euler"], "ambient.euler"), get_int(amb["sign"], "ambient.sign")};
  if (ambient.t <= 0) throw SchemaError("ambient.t", "must be positive");
  if (ambient.sign != 0) throw SchemaError("ambient.sign", "must be 0");

  if (!doc["template"].is_string()) throw SchemaError("template", "expected a string");
  const auto shape = loc::template_from_string(doc["template"].get<std::string>());
  if (!shape) throw SchemaError("template", "unknown template");

  loc::Flags flags;
  if (doc.contains("flags")) {
    const Json& f = doc["flags"];
    require_object(f, "flags", {"effectiveness", "convention35", "lemma64"}, {});
    if (f.contains("effectiveness")) flags.effectiveness = get_bool(f["effectiveness"], "flags.effectiveness");
    if (f.contains("convention35")) flags.convention35 = get_bool(f["convention35"], "flags.convention35");
    if (f.contains("lemma64")) flags.lemma64 = get_bool(f["lemma64"], "flags.lemma64");
  }

  const Json& comps = doc["components"];
  if (!comps.is_array()) throw SchemaError("components", "expected an array");
  std::vector<loc::Component> components;
  for (std::size_t i = 0; i < comps.size(); ++i)
    components.push_back(component_from_json(comps[i], "components[" + std::to_string(i) + "]"));
  try {
    return loc::Configuration::make(ambient, shape, std::move(components), flags);
  } catch (const StructuralError& e) {
    throw SchemaError("components", e.what());
  }
}

loc::Configuration config_from_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("$", e.what());
  }
  return config_from_json(doc);
}

Json config_to_json(const loc::Configuration& cfg) {
  Json comps = Json::array();
  for (const auto& c : cfg.components()) comps.push_back(component_to_json(c));
  const auto& a = cfg.ambient();
  Json doc = {{"ambient", {{"t", a.t}, {"rho", a.rho}, {"euler", a.euler}, {"sign", a.sign}}},
              {"flags", flags_to_json(cfg.flags())},
              {"components", comps}};
  if (cfg.shape()) doc["template"] = std::string(loc::to_string(*cfg.shape()));
  return doc;
}

Json residual_to_json(const loc::Residual& r) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LiftPolynomial>) {
          Json coeffs = Json::array();
          for (const auto& c : v.coeffs()) coeffs.push_back(c.str());
          return {{"kind", "lift_polynomial"}, {"coefficients", coeffs}, {"text", v.str()}};
        } else if constexpr (std::is_same_v<T, CharacterFunction>) {
          return {{"kind", "character_function"}, {"text", v.str()}};
        } else {
          return {{"kind", "rational"}, {"text", v.str()}};
        }
      },
      r);
}

Json report_to_json(const loc::VerificationReport& report, const loc::Configuration& cfg) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json item = {{"name", c.name},
                 {"passed", c.passed},
                 {"applicable", c.applicable},
                 {"residual", residual_to_json(c.residual)},
                 {"citation", c.citation}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(item);
  }
  return {{"consistent", report.consistent()}, {"configuration", config_to_json(cfg)}, {"checks", checks}};
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json invariants_to_json(const InvariantReport& inv) {
  Json j = {{"manifold", inv.ci.name()},
            {"n", inv.ci.n()},
            {"degrees", inv.ci.degrees()},
            {"t", integer_to_json(inv.t)},
            {"c1_coeff", inv.c1_coeff},
            {"rho", inv.rho},
            {"euler", integer_to_json(inv.euler)},
            {"spin", inv.spin},
            {"signature", nullptr},
            {"a_hat", nullptr},
            {"b3", nullptr}};
  if (inv.signature) j["signature"] = integer_to_json(*inv.signature);
  if (inv.a_hat) j["a_hat"] = inv.a_hat->str();
  if (inv.b3) j["b3"] = integer_to_json(*inv.b3);
  j["citations"] = {
      {"t", "[x^n] = product of the degrees"},
      {"c1_coeff", "c(M) = (1+x)^(n+r+1) / prod (1 + d_j x)"},
      {"rho", "p(M) = (1+x^2)^(n+r+1) / prod (1 + d_j^2 x^2)"},
      {"euler", "chi(M) = [c_n(M)]"},
      {"signature", "Hirzebruch L-genus of the virtual tangent bundle"},
      {"a_hat", "A-hat genus of the virtual tangent bundle"},
      {"spin", "w2 = c1 mod 2"},
      {"b3", "b3 = 4 - chi, homology of CP^3 outside the middle dimension"}};
  return j;
}

Json verdict_to_json(const SymmetryVerdict& v) {
  Json j = {{"n", v.dimension_n},
            {"manifold", v.evidence.ci.name()},
            {"reason", to_string(v.reason)},
            {"citation", v.citation},
            {"evidence", invariants_to_json(v.evidence)},
            {"admits", nullptr}};
  if (v.admits) j["admits"] = *v.admits;
  return j;
}

Json search_to_json(const loc::SearchOptions& opt, const loc::SearchResult& r) {
  Json hits = Json::array();
  for (const auto& c : r.hits) hits.push_back(config_to_json(c));
  return {{"template", std::string(loc::to_string(opt.shape))},
          {"ranges",
           {{"t_min", opt.ranges.t_min},
            {"t_max", opt.ranges.t_max},
            {"rho_min", opt.ranges.rho_min},
            {"rho_max", opt.ranges.rho_max}}},
          {"bounds",
           {{"max_weight", opt.bounds.max_weight},
            {"max_abs_a", opt.bounds.max_abs_a},
            {"max_abs_eval", opt.bounds.max_abs_eval},
            {"max_genus", opt.bounds.max_genus}}},
          {"flags", flags_to_json(opt.flags)},
          {"semifree", opt.semifree},
          {"nodes", r.nodes},
          {"count", r.hits.size()},
          {"hits", hits}};
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace circlesym::io
