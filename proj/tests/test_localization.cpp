#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "circlesym/errors.hpp"
#include "circlesym/io/json.hpp"
#include "circlesym/localization/local_data.hpp"
#include "circlesym/localization/search.hpp"
#include "circlesym/localization/verify.hpp"
#include "generators.hpp"

using namespace circlesym;
using namespace circlesym::localization;

namespace {

Configuration load(const std::string& name) {
  std::ifstream in(std::string(CIRCLESYM_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  std::stringstream s;
  s << in.rdbuf();
  return io::config_from_text(s.str());
}

const CheckResult& check_named(const VerificationReport& r, const std::string& name) {
  const auto it = std::find_if(r.checks.begin(), r.checks.end(),
                               [&](const CheckResult& c) { return c.name == name; });
  REQUIRE(it != r.checks.end());
  return *it;
}

Rational as_rational(const Residual& r) {
  REQUIRE(std::holds_alternative<Rational>(r));
  return std::get<Rational>(r);
}

PointComponent pt(int eps, std::array<std::int64_t, 3> w, std::int64_t a) {
  PointComponent p;
  p.eps = eps;
  p.weights = w;
  p.a = a;
  return p;
}

SurfaceComponent surf(std::array<std::int64_t, 2> w, std::int64_t a, std::int64_t x,
                      std::int64_t y1, std::int64_t y2, std::int64_t chi = 2) {
  SurfaceComponent s;
  s.weights = w;
  s.a = a;
  s.ev_x = x;
  s.ev_y1 = y1;
  s.ev_y2 = y2;
  s.chi = chi;
  return s;
}

AmbientData amb(std::int64_t t, std::int64_t rho, std::int64_t euler = 2) {
  return {.t = t, .rho = rho, .euler = euler, .sign = 0};
}

}  // namespace

TEST_CASE("point local data") {
  const Component p = pt(-1, {1, 2, 3}, 2);
  // -(2 + l)^3 / 6
  const auto x3 = x3_local_datum(p);
  CHECK(x3 == LiftPolynomial::shifted_power(Rational(2), 3) * Rational(-1, 6));
  // -(2 + l) * 14 / 6
  CHECK(p1x_local_datum(p) == LiftPolynomial{Rational(-14, 3), Rational(-7, 3)});
  CHECK(character_limit_at_infinity(signature_local_datum(p)) == Rational(-1));
}

TEST_CASE("surface local data") {
  const Component s = surf({1, 2}, 0, 3, 2, -4);
  // (1/2)(-l^3 (2 - 2) + 3 l^2 * 3)
  CHECK(x3_local_datum(s) == LiftPolynomial{0, 0, Rational(9, 2)});
  // -l (5/2)(0) + 5*3/2 + 2 l (2 - 8)/2
  CHECK(p1x_local_datum(s) == LiftPolynomial{Rational(15, 2), Rational(-6)});
}

TEST_CASE("four-dimensional local data") {
  FourComponent f;
  f.weight = 2;
  f.a = 1;
  f.b2 = 2;
  f.ev_x2 = 4;
  f.ev_xy = 2;
  f.ev_y2 = -8;
  const Component c = f;
  // 3 L 4/2 - 3 L^2 2/4 + L^3 (-8)/8 at L = 1 + l
  const Rational l(3);
  const Rational L = l + 1;
  CHECK(x3_local_datum(c).evaluate(l) == Rational(6) * L - Rational(3, 2) * L * L - L * L * L);
  CHECK(p1x_local_datum(c).evaluate(l) == Rational(2));
  CHECK_THROWS_AS(signature_local_datum(c), UnsupportedComponent);
}

TEST_CASE("component validation") {
  CHECK_THROWS_AS(validate_component(pt(0, {1, 1, 1}, 0)), InvariantError);
  CHECK_THROWS_AS(validate_component(pt(1, {0, 1, 1}, 0)), InvariantError);
  CHECK_THROWS_AS(validate_component(surf({1, 1}, 0, 0, 0, 0, 3)), InvariantError);
  CHECK_THROWS_AS(validate_component(surf({1, -1}, 0, 0, 0, 0)), InvariantError);
  FourComponent f;
  f.b2 = 0;
  f.ev_x2 = 1;
  CHECK_THROWS_AS(validate_component(f), InvariantError);
  f = {};
  f.b2 = 1;
  f.chi = 3;
  f.sign = 1;
  f.ev_p1 = 2;
  CHECK_THROWS_AS(validate_component(f), InvariantError);
  f.ev_p1 = 3;
  CHECK_NOTHROW(validate_component(f));
}

TEST_CASE("configuration construction") {
  CHECK_THROWS_AS(Configuration::make(amb(0, 0), std::nullopt, {pt(1, {1, 1, 1}, 0)}),
                  InvariantError);
  CHECK_THROWS_AS(Configuration::make({.t = 1, .rho = 0, .euler = 1, .sign = 1}, std::nullopt,
                                      {pt(1, {1, 1, 1}, 0)}),
                  InvariantError);
  CHECK_THROWS_AS(Configuration::make(amb(1, 0), Template::two_surfaces, {pt(1, {1, 1, 1}, 0)}),
                  StructuralError);
  // components are reordered into template slot order
  const auto c = Configuration::make(amb(1, 0), Template::surface_plus_two_points,
                                     {pt(1, {1, 1, 1}, 0), surf({1, 1}, 0, 1, 0, 0), pt(-1, {1, 1, 1}, 0)});
  CHECK(std::holds_alternative<SurfaceComponent>(c.components()[0]));
}

TEST_CASE("orientation convention normalizes via the inverse action") {
  const Flags f{.effectiveness = false, .convention35 = true, .lemma64 = false};
  const auto c = Configuration::make(amb(1, 0), Template::surface_plus_two_points,
                                     {surf({1, 1}, 2, 1, 1, 0), pt(-1, {1, 2, 3}, 1), pt(-1, {1, 1, 1}, 0)}, f);
  const auto& p0 = std::get<PointComponent>(c.components()[1]);
  CHECK(p0.eps == 1);
  CHECK(p0.a == -1);
  CHECK(std::get<SurfaceComponent>(c.components()[0]).a == -2);
  CHECK(std::get<SurfaceComponent>(c.components()[0]).ev_y1 == -1);
  // a positive point is rotated to the front
  const auto d = Configuration::make(amb(1, 0), Template::surface_plus_two_points,
                                     {surf({1, 1}, 0, 1, 1, 0), pt(-1, {1, 2, 3}, 1), pt(1, {1, 1, 1}, 0)}, f);
  CHECK(std::get<PointComponent>(d.components()[1]).eps == 1);
  CHECK(std::get<PointComponent>(d.components()[2]).eps == -1);
}

TEST_CASE("canned contradictions") {
  struct Canned {
    const char* file;
    const char* check;
    const char* cite_fragment;
  };
  const Canned cases[] = {
      {"case1_two_fours.json", "x3-localization", "b2 = 0 vanish for every lift"},
      {"case2_four_plus_surface.json", "x3-localization", "a_X + l = 0"},
      {"case3_four_plus_two_points.json", "x3-point-pair-chain", "t = sum eps a^3/N = 0"},
      {"case4_cp2like_plus_point.json", "codim2-pontrjagin", "p1(F) = (rho - gamma^2)"},
      {"case5_single_four_b2_2.json", "x3-localization", "a_N + l = 0"},
      {"semifree_two_surfaces.json", "semifree-relation", "t = a^2 rho t / 4"},
      {"nonsemifree_two_surfaces.json", "rigid-pair-pontrjagin", "rho t = 4 n_1 [x|X] / n_2"},
      {"equal_weights_surface_two_points.json", "equal-weight-pontrjagin", "equal weights at pt and q"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.file);
    const auto report = verify_case(load(c.file));
    CHECK_FALSE(report.consistent());
    const auto& r = check_named(report, c.check);
    CHECK(r.applicable);
    CHECK_FALSE(r.passed);
    CHECK(r.citation.find(c.cite_fragment) != std::string::npos);
  }
}

TEST_CASE("case 3 chain forces t = 0") {
  const auto r = check_named(verify_case(load("case3_four_plus_two_points.json")), "x3-point-pair-chain");
  CHECK(as_rational(r.residual) == Rational(1));
  CHECK(r.detail.find("forced t = 0") != std::string::npos);
}

TEST_CASE("semifree residual is t (1 - rho a^2 / 4)") {
  for (std::int64_t t : {1, 3, 7}) {
    for (std::int64_t rho : {-10, -1, 0, 1, 2, 4, 9}) {
      for (std::int64_t a : {1, 2, -3}) {
        // x3 relations: a y = 2x, t = a^2 (-a y + 3x) = a^2 x
        if (t % (a * a) != 0) continue;
        const std::int64_t x = t / (a * a);
        const std::int64_t y = 2 * x / a;
        if (y * a != 2 * x) continue;
        const auto cfg = Configuration::make(amb(t, rho), Template::two_surfaces,
                                             {surf({1, 1}, a, x, y, 0), surf({1, 1}, 0, x, -y, 0, 0)});
        const auto r = check_named(verify_case(cfg), "semifree-relation");
        const Rational expected = Rational(t) * (Rational(1) - Rational(rho * a * a, 4));
        CAPTURE(t);
        CAPTURE(rho);
        CAPTURE(a);
        CHECK(as_rational(r.residual) == expected);
        CHECK(r.passed == expected.is_zero());
        CHECK(check_x3(cfg).passed);
        CHECK(is_consistent(cfg) == expected.is_zero());
      }
    }
  }
}

TEST_CASE("planted rho = 4 witness is consistent") {
  const auto cfg = load("semifree_witness_rho4.json");
  const auto report = verify_case(cfg);
  CHECK(report.consistent());
  CHECK(report.first_failure() == nullptr);
  CHECK(is_consistent(cfg));
}

TEST_CASE("property: lift shift commutes with the localization sums") {
  gen::Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto cfg = gen::configuration(rng);
    const std::int64_t delta = gen::uniform(rng, -20, 20);
    const auto moved = shift_lift(cfg, delta);
    CHECK(sum_x3(moved) == sum_x3(cfg).shifted(delta));
    CHECK(sum_p1x(moved) == sum_p1x(cfg).shifted(delta));
    CHECK(is_consistent(moved) == is_consistent(cfg));
  }
}

TEST_CASE("property: inverse action mirrors the lift variable") {
  gen::Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto cfg = gen::configuration(rng);
    const auto inv = invert_action(cfg);
    const Rational l = gen::rational(rng);
    CHECK(sum_x3(inv).evaluate(l) == sum_x3(cfg).evaluate(-l));
    CHECK(sum_p1x(inv).evaluate(l) == sum_p1x(cfg).evaluate(-l));
    CHECK(invert_action(inv) == cfg);
    CHECK(is_consistent(inv) == is_consistent(cfg));
  }
  const auto w = load("semifree_witness_rho4.json");
  CHECK(is_consistent(invert_action(w)));
}

TEST_CASE("search: bad options") {
  SearchOptions opt;
  opt.bounds.max_weight = kMaxSearchWeight + 1;
  CHECK_THROWS_AS(search_case(opt), UsageError);
  opt = {};
  opt.ranges.t_min = 0;
  CHECK_THROWS_AS(search_case(opt), UsageError);
  opt = {};
  opt.budget = 10;
  CHECK_THROWS_AS(search_case(opt), BudgetError);
  CHECK_THROWS_AS(search_case_reference(opt), BudgetError);
}

TEST_CASE("search retrieves the planted witness") {
  const auto witness = load("semifree_witness_rho4.json");
  SearchOptions opt;
  opt.shape = Template::two_surfaces;
  opt.semifree = true;
  opt.ranges = {.t_min = 3, .t_max = 3, .rho_min = 4, .rho_max = 4};
  opt.bounds = {.max_weight = 1, .max_abs_a = 1, .max_abs_eval = 6, .max_genus = 1};
  const auto r = search_case(opt);
  CHECK(witness.ambient().euler == 2);
  CHECK(std::find(r.hits.begin(), r.hits.end(), witness) != r.hits.end());
  for (const auto& h : r.hits) {
    CHECK(h.ambient().euler < 4);
    CHECK(h.ambient().euler % 2 == 0);
    CHECK(is_consistent(h));
  }
}

TEST_CASE("search: parallel join matches the serial brute force") {
  struct Small {
    Template shape;
    SearchBounds bounds;
    bool semifree;
  };
  const Small cases[] = {
      {Template::two_fours, {2, 1, 2, 0}, false},
      {Template::four_plus_surface, {2, 1, 2, 0}, false},
      {Template::four_plus_two_points, {2, 1, 1, 0}, false},
      {Template::cp2like_plus_point, {2, 1, 3, 0}, false},
      {Template::single_four_b2_2, {2, 2, 3, 0}, false},
      {Template::two_surfaces, {1, 1, 2, 0}, true},
      {Template::surface_plus_two_points, {1, 1, 2, 0}, false},
  };
  for (const auto& c : cases) {
    for (const bool flagged : {false, true}) {
      CAPTURE(to_string(c.shape));
      CAPTURE(flagged);
      SearchOptions opt;
      opt.shape = c.shape;
      opt.bounds = c.bounds;
      opt.semifree = c.semifree;
      opt.ranges = {.t_min = 1, .t_max = 6, .rho_min = -6, .rho_max = 8};
      if (flagged) opt.flags = {true, true, true};
      const auto fast = search_case(opt);
      const auto ref = search_case_reference(opt);
      CHECK(fast.hits == ref.hits);
    }
  }
}

TEST_CASE("search is deterministic across worker counts") {
  SearchOptions opt;
  opt.shape = Template::two_surfaces;
  opt.semifree = true;
  opt.ranges.rho_max = 10;
  const auto one = search_case(opt);
  opt.workers = 3;
  const auto three = search_case(opt);
  CHECK(one.hits == three.hits);
  CHECK(one.nodes == three.nodes);
  CHECK_FALSE(one.hits.empty());
}
