// Command-line front end.  Five subcommands over the scenario format; all
// arithmetic is exact, all output is deterministic.

#include <filesystem>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "cxs/diagonal.hpp"
#include "cxs/scenario.hpp"

using namespace cxs;

namespace {

// Exit codes: 0 ok, 1 domain error, 2 parse or validation error.
constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kParse = 2;

struct Options {
  std::string scenario;
  std::string cycle = "Gamma";
  std::string format = "text";
  unsigned seed = 1;
  bool all = false;
  std::string corpus = "scenarios";
  bool inject_route_error = false;
};

bool machine(const Options& o) { return o.format == "machine"; }

Scenario load(const Options& o) {
  if (o.scenario.empty()) throw Error(Errc::Validation, "--scenario is required");
  return load_scenario(o.scenario);
}

const GeometryContext& geometry(const Scenario& sc) {
  if (!sc.geometry) throw Error(Errc::Validation, "scenario has no geometry block");
  return *sc.geometry;
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (machine(o))
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

CycleExpr named_cycle(const std::string& name, const GeometryContext& ctx) {
  if (name == "Gamma" || name == "graph") return graph_cycle(ctx.f().name);
  if (name == "gamma" || name == "diagonal") return arithmetic_diagonal(ctx);
  if (name == "zero" || name == "0") return CycleExpr::zero(2);
  throw Error(Errc::Validation, "unknown cycle name '" + name +
                                    "' (expected Gamma, gamma, or zero)");
}

int cmd_decompose(const Options& o) {
  Scenario sc = load(o);
  const GeometryContext& ctx = geometry(sc);
  CycleExpr x = named_cycle(o.cycle, ctx);
  DecompositionReport rep = project_A(x, 2, ctx);

  Json j;
  j["scenario"] = sc.name;
  j["cycle"] = o.cycle;
  j["input"] = x.str();
  for (const auto& [name, e] : rep.components) j["components"][name] = e.str();
  j["residual"] = rep.residual.str();

  std::ostringstream t;
  t << "decomposition of " << o.cycle << " in " << sc.name << "\n";
  t << "  input     | " << x.str() << "\n";
  for (const auto& [name, e] : rep.components)
    t << "  " << name << std::string(name.size() < 10 ? 10 - name.size() : 0, ' ')
      << "| " << e.str() << "\n";
  t << "  residual  | " << rep.residual.str() << "\n";
  emit(o, j, t.str());
  return kOk;
}

int cmd_diagonal(const Options& o) {
  Scenario sc = load(o);
  const GeometryContext& ctx = geometry(sc);
  CycleExpr gamma = arithmetic_diagonal(ctx);
  CycleExpr expanded = expand_graph(gamma, ctx);
  BiprimitivityResult bp = biprimitivity_test(gamma, ctx);

  Json j;
  j["scenario"] = sc.name;
  j["gamma"] = gamma.str();
  j["gamma_expanded"] = expanded.str();
  j["biprimitive"] = bp.all_zero();
  j["tests"]["upper_xi"] = bp.upper_xi.str();
  j["tests"]["lower_eta"] = bp.lower_eta.str();
  j["tests"]["lower_c"] = bp.lower_c.str();

  std::ostringstream t;
  t << "arithmetic diagonal of " << sc.name << "\n";
  t << "  gamma          | " << gamma.str() << "\n";
  t << "  expanded       | " << expanded.str() << "\n";
  t << "  alpha^*(xi)    | " << bp.upper_xi.str() << "\n";
  t << "  alpha_*(eta)   | " << bp.lower_eta.str() << "\n";
  t << "  alpha_*(C)     | " << bp.lower_c.str() << "\n";
  t << "  bi-primitive   | " << (bp.all_zero() ? "yes" : "NO") << "\n";
  emit(o, j, t.str());
  return bp.all_zero() ? kOk : kDomain;
}

int cmd_height_ff(const Options& o) {
  Scenario sc = load(o);
  if (!sc.heights) throw Error(Errc::Validation, "scenario has no heights block");
  const ArithSurfaceData& t = *sc.heights;
  HeightResult r = height_unramified(t);
  if (o.inject_route_error) r.proof_route += LinPoly(1);
  bool agree = r.closed_form == r.proof_route;

  Json j;
  j["scenario"] = sc.name;
  j["genus"] = t.genus;
  j["d"] = rat_str(t.d());
  j["closed_form"] = r.closed_form.str();
  j["expansion_route"] = r.proof_route.str();
  j["routes_agree"] = agree;

  std::ostringstream out;
  out << "unramified height for " << sc.name << " (g = " << t.genus
      << ", d = " << rat_str(t.d()) << ")\n";
  out << "  closed form      | " << r.closed_form.str() << "\n";
  out << "  expansion route  | " << r.proof_route.str() << "\n";
  out << "  routes agree     | " << (agree ? "yes" : "NO") << "\n";
  if (t.ss.is_zero() && t.fs == 0) {
    // K3 pencil shape: s^2 = F.s = 0, w.s = (2g-2) h.
    LinPoly bound = t.ws * (Rat(2 * t.genus) / Rat(2 * t.genus - 1));
    j["k3"]["applicable"] = true;
    j["k3"]["bound"] = bound.str();
    out << "  K3 pencil bound  | " << bound.str() << "\n";
  } else {
    j["k3"]["applicable"] = false;
  }
  emit(o, j, out.str());
  if (!agree) {
    std::cerr << "error: the two evaluation routes disagree\n";
    return kDomain;
  }
  return kOk;
}

// Deterministic fuzz configuration, shared with nothing: small chains with
// random double curves and supported triple points.
void fuzz_config(unsigned seed, SpecialFiberCurve& curve, SpecialFiberSurface& surf,
                 Schedule& sched) {
  std::mt19937 gen(seed);
  auto pick = [&](long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen);
  };
  long nc = pick(1, 4);
  for (long i = 1; i <= nc; ++i) curve.components.push_back("A" + std::to_string(i));
  for (long i = 1; i < nc; ++i)
    if (pick(0, 1)) curve.nodes.push_back({curve.components[i - 1], curve.components[i]});
  long ns = pick(1, 5);
  for (long i = 1; i <= ns; ++i) surf.components.push_back("B" + std::to_string(i));
  for (long i = 0; i < ns; ++i)
    for (long j = i + 1; j < ns; ++j)
      if (pick(0, 2) != 0) surf.double_curves.push_back({surf.components[i], surf.components[j]});
  for (long i = 0; i < ns; ++i)
    for (long j = i + 1; j < ns; ++j)
      for (long k = j + 1; k < ns; ++k)
        if (surf.adjacent(surf.components[i], surf.components[j]) &&
            surf.adjacent(surf.components[i], surf.components[k]) &&
            surf.adjacent(surf.components[j], surf.components[k]) && pick(0, 1))
          surf.triple_points.push_back(
              {surf.components[i], surf.components[j], surf.components[k]});
  for (const auto& a : curve.components)
    for (const auto& b : surf.components) sched.push_back({a, b});
  std::shuffle(sched.begin(), sched.end(), gen);
}

int cmd_semistable(const Options& o) {
  SpecialFiberCurve curve;
  SpecialFiberSurface surf;
  Schedule sched;
  std::string label;
  if (!o.scenario.empty()) {
    Scenario sc = load(o);
    if (!sc.semistable) throw Error(Errc::Validation, "scenario has no semistable block");
    curve = sc.semistable->curve;
    surf = sc.semistable->surface;
    sched = sc.semistable->schedule;
    label = sc.name;
  } else {
    fuzz_config(o.seed, curve, surf, sched);
    label = "fuzz seed " + std::to_string(o.seed);
  }
  FinalModel fm = run_schedule(curve, surf, sched);

  Json j;
  j["input"] = label;
  for (const auto& c : sched) j["schedule"].push_back(comp_str(c));
  for (const auto& p : fm.points) {
    Json pj;
    pj["label"] = p.label;
    pj["semistable"] = p.semistable;
    for (const auto& ch : p.final_charts) pj["charts"].push_back(ch.str());
    j["points"].push_back(pj);
  }
  for (const auto& [c, tr] : fm.recorded) {
    Json list = Json::array();
    for (const auto& d : tr) list.push_back(comp_str(d));
    j["traces"][comp_str(c)] = list;
  }
  j["semistable"] = fm.semistable;
  j["traces_match"] = fm.traces_match;

  std::ostringstream t;
  t << "semistable simulation: " << label << "\n";
  t << "  schedule:";
  for (const auto& c : sched) t << " " << comp_str(c);
  t << "\n";
  for (const auto& p : fm.points) {
    t << "  point " << p.label << " -> " << (p.semistable ? "semistable" : "NOT semistable")
      << "\n";
    for (const auto& ch : p.final_charts) t << "    chart " << ch.str() << "\n";
  }
  t << "  traces:\n";
  for (const auto& [c, tr] : fm.recorded) {
    t << "    " << comp_str(c) << " :";
    for (const auto& d : tr) t << " " << comp_str(d);
    t << "\n";
  }
  t << "  verdict: " << (fm.semistable ? "semistable" : "NOT semistable") << ", traces "
    << (fm.traces_match ? "match" : "MISMATCH") << "\n";
  emit(o, j, t.str());
  return (fm.semistable && fm.traces_match) ? kOk : kDomain;
}

struct Verdicts {
  Json checks = Json::object();
  bool ok = true;
  void record(const std::string& name, bool pass, const std::string& detail = "") {
    Json c;
    c["pass"] = pass;
    if (!detail.empty()) c["detail"] = detail;
    checks[name] = c;
    ok = ok && pass;
  }
};

Verdicts verify_one(const Scenario& sc) {
  Verdicts v;
  auto guard = [&](const std::string& name, const std::function<bool()>& body) {
    try {
      v.record(name, body());
    } catch (const Error& e) {
      v.record(name, false, e.what());
    }
  };
  guard("round-trip", [&] { return write_scenario(read_scenario(write_scenario(sc))) ==
                                   write_scenario(sc); });
  if (sc.geometry) {
    const GeometryContext& ctx = *sc.geometry;
    if (ctx.has_mu())
      guard("mu-identities", [&] {
        check_mu_identities(ctx, ctx.mu_name());
        return true;
      });
    if (ctx.morphism)
      guard("bi-primitivity", [&] {
        return biprimitivity_test(arithmetic_diagonal(ctx), ctx).all_zero();
      });
  }
  if (sc.heights && sc.heights->d() != 0)
    guard("height-routes", [&] {
      HeightResult r = height_unramified(*sc.heights);
      return r.closed_form == r.proof_route;
    });
  if (sc.semistable)
    guard("semistable", [&] {
      FinalModel fm = run_schedule(sc.semistable->curve, sc.semistable->surface,
                                   sc.semistable->schedule);
      return fm.semistable && fm.traces_match;
    });
  return v;
}

int cmd_verify(const Options& o) {
  std::vector<std::pair<std::string, Scenario>> targets;
  if (o.all) {
    std::vector<std::filesystem::path> paths;
    if (std::filesystem::is_directory(o.corpus))
      for (const auto& e : std::filesystem::directory_iterator(o.corpus))
        if (e.path().extension() == ".scn") paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    if (paths.empty()) {
      std::cout << "warning: no scenarios found under " << o.corpus << "; nothing to verify\n";
      return kOk;
    }
    for (const auto& p : paths) targets.emplace_back(p.filename().string(), load_scenario(p.string()));
  } else {
    Scenario sc = load(o);
    targets.emplace_back(sc.name, std::move(sc));
  }

  Json j = Json::object();
  std::ostringstream t;
  bool all_ok = true;
  for (const auto& [name, sc] : targets) {
    Verdicts v = verify_one(sc);
    j[name] = v.checks;
    t << name << (v.ok ? "  ok" : "  FAIL") << "\n";
    for (const auto& [check, res] : v.checks.items()) {
      t << "  " << check << ": " << (res.at("pass").get<bool>() ? "pass" : "FAIL");
      if (res.contains("detail")) t << "  (" << res.at("detail").get<std::string>() << ")";
      t << "\n";
    }
    all_ok = all_ok && v.ok;
  }
  emit(o, j, t.str());
  return all_ok ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cycle-class and height calculator for curve-times-surface products"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd, bool scenario_required) {
    auto* s = cmd->add_option("--scenario", o.scenario, "scenario file (.scn)");
    if (scenario_required) s->required();
    cmd->add_option("--format", o.format, "text|machine")
        ->check(CLI::IsMember({"text", "machine"}));
    return cmd;
  };

  auto* decompose = add_common(app.add_subcommand("decompose", "component table for a cycle"), true);
  decompose->add_option("--cycle", o.cycle, "Gamma|gamma|zero");
  add_common(app.add_subcommand("diagonal", "arithmetic diagonal and bi-primitivity verdict"),
             true);
  auto* hff = add_common(app.add_subcommand("height-ff", "function-field height, both routes"),
                         true);
  hff->add_flag("--inject-route-error", o.inject_route_error)->group("");
  auto* ss = add_common(app.add_subcommand("semistable-sim", "blow-up schedule simulation"),
                        false);
  ss->add_option("--seed", o.seed, "fuzz seed when no scenario is given");
  auto* verify = add_common(app.add_subcommand("verify", "run the invariant suite"), false);
  verify->add_flag("--all", o.all, "verify every scenario in the corpus directory");
  verify->add_option("--corpus", o.corpus, "corpus directory for --all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kParse;
  }

  try {
    if (app.got_subcommand("decompose")) return cmd_decompose(o);
    if (app.got_subcommand("diagonal")) return cmd_diagonal(o);
    if (app.got_subcommand("height-ff")) return cmd_height_ff(o);
    if (app.got_subcommand("semistable-sim")) return cmd_semistable(o);
    if (app.got_subcommand("verify")) return cmd_verify(o);
  } catch (const Json::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    if (e.code() == Errc::Validation) {
      std::cerr << "validation error: " << e.what() << "\n";
      return kParse;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kParse;
}
