// circlesym: invariants, classification, verification and search from the
// command line. Exit codes: 0 ok, 2 contradiction, 64 usage, 65 schema,
// 66 budget.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "circlesym/classifier.hpp"
#include "circlesym/complete_intersection.hpp"
#include "circlesym/errors.hpp"
#include "circlesym/io/json.hpp"
#include "circlesym/localization/search.hpp"
#include "circlesym/localization/verify.hpp"

namespace {

namespace cs = circlesym;
namespace loc = circlesym::localization;
using cs::io::Json;

constexpr int kOk = 0;
constexpr int kContradiction = 2;
constexpr int kUsage = 64;
constexpr int kSchema = 65;
constexpr int kBudget = 66;

struct Global {
  bool json = false;
  int workers = 1;
  std::uint64_t budget = 100'000'000;
};

cs::CompleteIntersection make_ci(int n, const std::vector<long>& degrees) {
  if (n < 1 || n > 6) throw cs::UsageError("complex dimension n must be in 1..6");
  if (degrees.empty()) throw cs::UsageError("at least one degree is required");
  cs::CompleteIntersection ci(n, degrees);
  if (!ci.within_caps()) throw cs::UsageError("degrees are capped at 10^6 and r at 64");
  return ci;
}

std::string optional_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_invariants(const cs::InvariantReport& inv) {
  const Json j = cs::io::invariants_to_json(inv);
  std::cout << inv.ci.name() << "\n";
  for (const char* key : {"t", "c1_coeff", "rho", "euler", "signature", "a_hat", "spin", "b3"}) {
    if (j[key].is_null()) continue;
    std::cout << "  " << std::left << std::setw(10) << key << std::setw(12) << optional_text(j[key])
              << j["citations"][key].get<std::string>() << "\n";
  }
}

std::string verdict_line(const cs::SymmetryVerdict& v) {
  std::string head = v.evidence.ci.name() + ": ";
  if (!v.admits) return head + "out of scope (" + v.citation + ")";
  return head + (*v.admits ? "admits" : "does NOT admit") +
         " a smooth non-trivial circle action (" + v.citation + ")";
}

std::string compact(const loc::Configuration& cfg) {
  std::ostringstream os;
  const auto& a = cfg.ambient();
  os << "t=" << a.t << " rho=" << a.rho << " chi=" << a.euler << " |";
  for (const auto& c : cfg.components()) {
    std::visit(
        [&](const auto& z) {
          using T = std::decay_t<decltype(z)>;
          if constexpr (std::is_same_v<T, loc::PointComponent>) {
            os << " pt(eps=" << z.eps << " n=" << z.weights[0] << "," << z.weights[1] << ","
               << z.weights[2] << " a=" << z.a << ")";
          } else if constexpr (std::is_same_v<T, loc::SurfaceComponent>) {
            os << " surf(n=" << z.weights[0] << "," << z.weights[1] << " a=" << z.a
               << " x=" << z.ev_x << " y=" << z.ev_y1 << "," << z.ev_y2 << " chi=" << z.chi << ")";
          } else {
            os << " four(n=" << z.weight << " a=" << z.a << " x2=" << z.ev_x2 << " xy=" << z.ev_xy
               << " y2=" << z.ev_y2 << " p1=" << z.ev_p1 << " b2=" << z.b2 << " sign=" << z.sign
               << " chi=" << z.chi << ")";
          }
        },
        c);
  }
  return os.str();
}

int cmd_invariants(const Global& g, int n, const std::vector<long>& degrees) {
  const auto inv = cs::invariants(make_ci(n, degrees));
  if (g.json)
    std::cout << cs::io::render(cs::io::invariants_to_json(inv));
  else
    print_invariants(inv);
  return kOk;
}

int cmd_classify(const Global& g, int n, const std::vector<long>& degrees) {
  const auto v = cs::s1_verdict(make_ci(n, degrees));
  if (g.json)
    std::cout << cs::io::render(cs::io::verdict_to_json(v));
  else
    std::cout << verdict_line(v) << "\n";
  return kOk;
}

int cmd_table(const Global& g, int n, long max_sum) {
  if (max_sum < 1) throw cs::UsageError("maximal degree sum must be >= 1");
  if (max_sum > 40) throw cs::UsageError("maximal degree sum is capped at 40");
  Json rows = Json::array();
  for (const auto& d : cs::normalized_multidegrees(max_sum)) {
    const auto v = cs::s1_verdict(make_ci(n, d));
    if (g.json)
      rows.push_back(cs::io::verdict_to_json(v));
    else
      std::cout << verdict_line(v) << "\n";
  }
  if (g.json) std::cout << cs::io::render(Json{{"n", n}, {"max_degree_sum", max_sum}, {"rows", rows}});
  return kOk;
}

int cmd_verify(const Global& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cs::UsageError("cannot read " + path);
  std::stringstream text;
  text << in.rdbuf();
  const loc::Configuration cfg = cs::io::config_from_text(text.str());
  const auto report = loc::verify_case(cfg);
  if (g.json) {
    std::cout << cs::io::render(cs::io::report_to_json(report, cfg));
  } else {
    for (const auto& c : report.checks) {
      const char* status = !c.applicable ? "n/a " : c.passed ? "PASS" : "FAIL";
      std::cout << status << "  " << std::left << std::setw(26) << c.name;
      if (c.applicable) std::cout << "residual " << loc::residual_str(c.residual) << "  ";
      std::cout << "[" << c.citation << "]";
      if (!c.detail.empty()) std::cout << " " << c.detail;
      std::cout << "\n";
    }
    std::cout << (report.consistent() ? "consistent" : "contradiction") << "\n";
  }
  return report.consistent() ? kOk : kContradiction;
}

int cmd_search(const Global& g, loc::SearchOptions opt, const std::string& shape) {
  const auto t = loc::template_from_string(shape);
  if (!t) throw cs::UsageError("unknown template " + shape);
  opt.shape = *t;
  opt.workers = g.workers;
  opt.budget = g.budget;
  const auto result = loc::search_case(opt);
  if (g.json) {
    std::cout << cs::io::render(cs::io::search_to_json(opt, result));
  } else {
    for (const auto& c : result.hits) std::cout << compact(c) << "\n";
    std::cout << "hits: " << result.hits.size() << " (" << result.nodes << " nodes)\n";
  }
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Circle actions on complete intersections: invariants, classification, "
               "localization checks and bounded search"};
  app.require_subcommand(1);
  Global g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--workers", g.workers, "search worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "search node budget");

  int n = 0;
  std::vector<long> degrees;
  auto* inv = app.add_subcommand("invariants", "invariants of X_n(d_1,...,d_r)");
  inv->add_option("n", n)->required();
  inv->add_option("degrees", degrees)->required();
  auto* cls = app.add_subcommand("classify", "circle-action verdict for X_n(d_1,...,d_r)");
  cls->add_option("n", n)->required();
  cls->add_option("degrees", degrees)->required();

  long max_sum = 0;
  auto* tab = app.add_subcommand("table", "verdicts for all multidegrees up to a degree sum");
  tab->add_option("n", n)->required();
  tab->add_option("max_degree_sum", max_sum)->required();

  std::string path;
  auto* ver = app.add_subcommand("verify", "check a fixed-point configuration (JSON)");
  ver->add_option("config", path)->required();

  std::string shape;
  loc::SearchOptions opt;
  bool all_flags = false;
  auto* sea = app.add_subcommand("search", "bounded search over one fixed-point template");
  sea->add_option("template", shape)->required();
  sea->add_option("--rho-min", opt.ranges.rho_min);
  sea->add_option("--rho-max", opt.ranges.rho_max);
  sea->add_option("--t-min", opt.ranges.t_min);
  sea->add_option("--t-max", opt.ranges.t_max);
  sea->add_option("--bound-weight", opt.bounds.max_weight);
  sea->add_option("--bound-a", opt.bounds.max_abs_a);
  sea->add_option("--bound-eval", opt.bounds.max_abs_eval);
  sea->add_option("--bound-genus", opt.bounds.max_genus);
  sea->add_flag("--semifree", opt.semifree, "all normal weights 1");
  sea->add_flag("--effectiveness", opt.flags.effectiveness);
  sea->add_flag("--convention35", opt.flags.convention35);
  sea->add_flag("--lemma64", opt.flags.lemma64);
  sea->add_flag("--all-flags", all_flags, "effectiveness, convention35 and lemma64");

  for (auto* sub : {inv, cls, tab, ver, sea}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*inv) return cmd_invariants(g, n, degrees);
    if (*cls) return cmd_classify(g, n, degrees);
    if (*tab) return cmd_table(g, n, max_sum);
    if (*ver) return cmd_verify(g, path);
    if (all_flags) opt.flags = {true, true, true};
    return cmd_search(g, opt, shape);
  } catch (const cs::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kSchema;
  } catch (const cs::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
