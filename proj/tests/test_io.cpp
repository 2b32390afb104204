#include <doctest.h>

#include "circlesym/classifier.hpp"
#include "circlesym/errors.hpp"
#include "circlesym/io/json.hpp"
#include "circlesym/localization/search.hpp"
#include "circlesym/localization/verify.hpp"
#include "generators.hpp"

using namespace circlesym;
using namespace circlesym::localization;
using io::Json;

namespace {

std::string schema_path(const std::string& text) {
  try {
    io::config_from_text(text);
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<accepted>";
}

const char* kPoint = R"({"kind": "point", "eps": 1, "weights": [1, 1, 1], "a": 0})";
const char* kFour =
    R"({"kind": "four", "weight": 1, "a": 0, "ev_x2": -1, "ev_xy": 1, "ev_y2": -1, "ev_p1": -3, "b2": 1, "sign": -1, "chi": 1})";

std::string doc(const std::string& components, const std::string& extra = "") {
  return R"({"ambient": {"t": 1, "rho": -1, "euler": 2, "sign": 0}, "template": "cp2like_plus_point", )" +
         extra + R"("components": [)" + components + "]}";
}

}  // namespace

TEST_CASE("a well-formed document parses") {
  const auto cfg = io::config_from_text(doc(std::string(kFour) + ", " + kPoint));
  CHECK(cfg.shape() == Template::cp2like_plus_point);
  CHECK(cfg.ambient().t == 1);
  CHECK(cfg.flags() == Flags{});
}

TEST_CASE("schema errors name the first offending key") {
  CHECK(schema_path("{") == "$");
  CHECK(schema_path("[]") == "$");
  CHECK(schema_path(doc(std::string(kFour) + ", " +
                        R"({"kind": "point", "eps": 1, "weights": [1, 1.5, 1], "a": 0})")) ==
        "components[1].weights[1]");
  CHECK(schema_path(doc(std::string(kFour) + ", " +
                        R"({"kind": "point", "eps": 1, "weights": [1, 1, 1], "a": 0, "b": 1})")) ==
        "components[1].b");
  CHECK(schema_path(doc(std::string(kFour) + ", " + R"({"kind": "point", "eps": 1, "a": 0})")) ==
        "components[1].weights");
  CHECK(schema_path(doc(std::string(kFour) + ", " +
                        R"({"kind": "blob", "eps": 1, "weights": [1, 1, 1], "a": 0})")) ==
        "components[1].kind");
  CHECK(schema_path(doc(std::string(kFour) + ", " +
                        R"({"kind": "point", "eps": 2, "weights": [1, 1, 1], "a": 0})")) ==
        "components[1].eps");
  // 4-manifold with b2 = 1 and an even Euler characteristic
  CHECK(schema_path(doc(
            R"({"kind": "four", "weight": 1, "a": 0, "ev_x2": -1, "ev_xy": 1, "ev_y2": -1, "ev_p1": -3, "b2": 1, "sign": -1, "chi": 2}, )" +
            std::string(kPoint))) == "components[0]");
  CHECK(schema_path(doc(kPoint)) == "components");
  CHECK(schema_path(doc(std::string(kFour) + ", " + kPoint, R"("flags": {"lemma64": 1}, )")) ==
        "flags.lemma64");
  CHECK(schema_path(doc(std::string(kFour) + ", " + kPoint, R"("extra": 0, )")) == "extra");
  CHECK(schema_path(R"({"ambient": {"t": 1, "rho": -1, "euler": 2, "sign": 0}, "template": "six", "components": []})") ==
        "template");
  CHECK(schema_path(R"({"ambient": {"t": 1.0, "rho": -1, "euler": 2, "sign": 0}, "template": "two_fours", "components": []})") ==
        "ambient.t");
}

TEST_CASE("property: configuration JSON round trip") {
  gen::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto cfg = gen::configuration(rng);
    const Json j = io::config_to_json(cfg);
    CHECK(io::config_from_json(j) == cfg);
    CHECK(io::config_from_text(io::render(j)) == cfg);
  }
}

TEST_CASE("property: report and search JSON re-render to identical bytes") {
  gen::Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto cfg = gen::configuration(rng);
    const std::string text = io::render(io::report_to_json(verify_case(cfg), cfg));
    CHECK(io::render(Json::parse(text)) == text);
  }
  SearchOptions opt;
  opt.shape = Template::two_surfaces;
  opt.semifree = true;
  opt.ranges.rho_max = 4;
  opt.bounds.max_abs_a = 2;
  const std::string text = io::render(io::search_to_json(opt, search_case(opt)));
  CHECK(io::render(Json::parse(text)) == text);
  const Json parsed = Json::parse(text);
  CHECK(parsed["count"].get<std::size_t>() == parsed["hits"].size());
  for (const auto& h : parsed["hits"]) CHECK(is_consistent(io::config_from_json(h)));
}

TEST_CASE("rational values render as strings, integers as integers") {
  CHECK(io::residual_to_json(Residual(Rational(-3, 4)))["text"] == "-3/4");
  CHECK(io::integer_to_json(Integer(5)) == 5);
  CHECK(io::integer_to_json(Integer("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
  const Json inv = io::invariants_to_json(invariants({2, {4}}));
  CHECK(inv["a_hat"] == "2");
  CHECK(inv["signature"] == -16);
  CHECK(inv["b3"].is_null());
  const Json v = io::verdict_to_json(s1_verdict({4, {2}}));
  CHECK(v["admits"].is_null());
}
