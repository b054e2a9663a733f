#pragma once

#include <fstream>
#include <optional>

#include "json.hpp"

#include "cxs/context.hpp"
#include "cxs/heights.hpp"
#include "cxs/semistable.hpp"

namespace cxs {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Readers.  Rationals are strings ("p/q"); symbolic linear values are either
// a plain string (one rational or one symbol name) or an object
// {"const": "...", "terms": {"name": "coeff"}}.

inline Error parse_error(const std::string& what) { return Error(Errc::Validation, what); }

inline Rat read_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) throw parse_error("expected a rational string, got " + j.dump());
  return parse_rat(j.get<std::string>());
}

inline LinPoly read_lin(const Json& j) {
  if (j.is_number_integer()) return LinPoly(Rat(j.get<long long>()));
  if (j.is_string()) return LinPoly::parse(j.get<std::string>());
  if (!j.is_object()) throw parse_error("expected a linear value, got " + j.dump());
  LinPoly out;
  if (j.contains("const")) out += LinPoly(read_rat(j.at("const")));
  if (j.contains("terms"))
    for (const auto& [k, v] : j.at("terms").items()) out += LinPoly::symbol(k, read_rat(v));
  return out;
}

inline FormalVec read_fv(const Json& j) {
  if (!j.is_object()) throw parse_error("expected an object of coefficients, got " + j.dump());
  FormalVec out;
  for (const auto& [k, v] : j.items()) fv_add(out, FormalVec{{k, read_rat(v)}});
  return out;
}

inline std::vector<std::string> read_names(const Json& j) {
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(v.get<std::string>());
  return out;
}

inline RatMat read_mat(const Json& j) {
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  RatMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols) throw parse_error("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = read_rat(j.at(i).at(k));
  }
  return m;
}

inline CurveClass read_curve_class(const Json& j) {
  int codim = j.value("codim", 1);
  if (codim == 0) return CurveClass::fundamental(read_rat(j.value("fund", Json("1"))));
  if (codim >= 2) return CurveClass::zero(codim);
  return CurveClass::divisor(j.contains("deg") ? read_rat(j.at("deg")) : Rat(0),
                             j.contains("pic0") ? read_fv(j.at("pic0")) : FormalVec{});
}

inline SurfaceClass read_surface_class(const Json& j) {
  int codim = j.value("codim", 1);
  if (codim == 0) return SurfaceClass::fundamental(read_rat(j.value("fund", Json("1"))));
  if (codim >= 3) return SurfaceClass::zero(codim);
  if (codim == 1)
    return SurfaceClass::divisor(j.contains("ns") ? read_fv(j.at("ns")) : FormalVec{},
                                 j.contains("pic0s") ? read_fv(j.at("pic0s")) : FormalVec{});
  return SurfaceClass::point(j.contains("deg") ? read_rat(j.at("deg")) : Rat(0),
                             j.contains("alb") ? read_fv(j.at("alb")) : FormalVec{});
}

// ---------------------------------------------------------------------------
// Writers (canonical form; maps keep a stable key order).

inline Json write_rat(const Rat& r) { return Json(rat_str(r)); }

inline Json write_lin(const LinPoly& p) {
  if (p.is_constant()) return write_rat(p.constant());
  Json j = Json::object();
  if (p.constant() != 0) j["const"] = write_rat(p.constant());
  Json t = Json::object();
  for (const auto& [k, c] : p.terms()) t[k] = write_rat(c);
  j["terms"] = t;
  return j;
}

inline Json write_fv(const FormalVec& v) {
  Json j = Json::object();
  for (const auto& [k, c] : v) j[k] = write_rat(c);
  return j;
}

inline Json write_mat(const RatMat& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(write_rat(m(i, k)));
    j.push_back(row);
  }
  return j;
}

inline Json write_curve_class(const CurveClass& c) {
  Json j = Json::object();
  j["codim"] = c.codim;
  if (c.codim == 0) {
    j["fund"] = write_rat(c.fund);
    return j;
  }
  if (c.codim >= 2) return j;
  if (c.deg != 0) j["deg"] = write_rat(c.deg);
  if (!fv_zero(c.pic0)) j["pic0"] = write_fv(c.pic0);
  return j;
}

inline Json write_surface_class(const SurfaceClass& s) {
  Json j = Json::object();
  j["codim"] = s.codim;
  if (s.codim == 0) {
    j["fund"] = write_rat(s.fund);
    return j;
  }
  if (s.codim >= 3) return j;
  if (s.codim == 1) {
    if (!fv_zero(s.ns)) j["ns"] = write_fv(s.ns);
    if (!fv_zero(s.pic0s)) j["pic0s"] = write_fv(s.pic0s);
    return j;
  }
  if (s.deg != 0) j["deg"] = write_rat(s.deg);
  if (!fv_zero(s.alb)) j["alb"] = write_fv(s.alb);
  return j;
}

// ---------------------------------------------------------------------------
// Scenario.

struct SemistableScenario {
  SpecialFiberCurve curve;
  SpecialFiberSurface surface;
  Schedule schedule;
};

struct GrossSchoenInputs {
  long genus = 2;
  Rat w2 = 0;
  Rat nt_xe = 0;
  Rat local_terms = 0;
  bool hyperelliptic = false;
};

struct Scenario {
  std::string name;
  std::string description;
  std::optional<GeometryContext> geometry;
  std::optional<ArithSurfaceData> heights;
  std::optional<SemistableScenario> semistable;
  std::optional<GrossSchoenInputs> gross_schoen;
};

inline GeometryContext read_geometry(const Json& j) {
  GeometryContext ctx;
  if (j.contains("curve")) {
    const Json& c = j.at("curve");
    if (c.contains("pic0_gens")) ctx.pic0_gens = read_names(c.at("pic0_gens"));
    if (c.contains("nt_gram"))
      for (const auto& [k, v] : c.at("nt_gram").items()) {
        auto sep = k.find('|');
        if (sep == std::string::npos) throw parse_error("nt_gram key must be 'a|b': " + k);
        ctx.nt_gram[GeometryContext::nt_key(k.substr(0, sep), k.substr(sep + 1))] = read_lin(v);
      }
  }
  const Json& s = j.at("surface");
  ctx.ns_basis = read_names(s.at("ns_basis"));
  ctx.ns_gram = read_mat(s.at("ns_gram"));
  ctx.xi = read_fv(s.at("xi"));
  ctx.h1s_zero = s.value("h1s_zero", true);
  if (s.contains("pic0s_gens")) ctx.pic0s_gens = read_names(s.at("pic0s_gens"));
  if (s.contains("alb_gens")) ctx.alb_gens = read_names(s.at("alb_gens"));
  if (s.contains("pic0s_ns_action"))
    for (const auto& [q, row] : s.at("pic0s_ns_action").items())
      for (const auto& [h, v] : row.items()) ctx.pic0s_ns_action[q][h] = read_fv(v);
  if (s.contains("omega_s")) ctx.omega_s = read_fv(s.at("omega_s"));
  if (j.contains("morphism")) {
    const Json& m = j.at("morphism");
    MorphismData md;
    md.name = m.value("name", std::string("f"));
    md.genus = m.value("genus", 0);
    md.image_class = read_fv(m.at("image_class"));
    if (m.contains("pullback_ns"))
      for (const auto& [h, v] : m.at("pullback_ns").items())
        md.pullback_ns[h] = read_curve_class(v);
    if (m.contains("pushforward_pic0"))
      for (const auto& [g, v] : m.at("pushforward_pic0").items())
        md.pushforward_pic0[g] = read_fv(v);
    if (m.contains("pullback_pic0s"))
      for (const auto& [q, v] : m.at("pullback_pic0s").items())
        md.pullback_pic0s[q] = read_fv(v);
    md.birational = m.value("birational", true);
    ctx.morphism = std::move(md);
  }
  if (j.contains("opaque"))
    for (const auto& [name, t] : j.at("opaque").items()) {
      OpaqueTable tab;
      tab.codim = t.value("codim", 1);
      if (t.contains("lower"))
        for (const auto& [k, v] : t.at("lower").items()) tab.lower[k] = read_surface_class(v);
      if (t.contains("upper"))
        for (const auto& [k, v] : t.at("upper").items()) tab.upper[k] = read_curve_class(v);
      ctx.opaque[name] = std::move(tab);
    }
  if (j.contains("mu_for_graph"))
    for (const auto& [f, mu] : j.at("mu_for_graph").items())
      ctx.mu_for_graph[f] = mu.get<std::string>();
  if (j.contains("graph_expansion"))
    for (const auto& t : j.at("graph_expansion"))
      ctx.graph_expansion.push_back({read_rat(t.at("coeff")), read_curve_class(t.at("a")),
                                     read_surface_class(t.at("b"))});
  ctx.validate();
  return ctx;
}

inline Json write_geometry(const GeometryContext& ctx) {
  Json j = Json::object();
  if (!ctx.pic0_gens.empty() || !ctx.nt_gram.empty()) {
    Json c = Json::object();
    c["pic0_gens"] = ctx.pic0_gens;
    Json g = Json::object();
    for (const auto& [k, v] : ctx.nt_gram) g[k] = write_lin(v);
    c["nt_gram"] = g;
    j["curve"] = c;
  }
  Json s = Json::object();
  s["ns_basis"] = ctx.ns_basis;
  s["ns_gram"] = write_mat(ctx.ns_gram);
  s["xi"] = write_fv(ctx.xi);
  s["h1s_zero"] = ctx.h1s_zero;
  if (!ctx.pic0s_gens.empty()) s["pic0s_gens"] = ctx.pic0s_gens;
  if (!ctx.alb_gens.empty()) s["alb_gens"] = ctx.alb_gens;
  if (!ctx.pic0s_ns_action.empty()) {
    Json a = Json::object();
    for (const auto& [q, row] : ctx.pic0s_ns_action) {
      Json r = Json::object();
      for (const auto& [h, v] : row) r[h] = write_fv(v);
      a[q] = r;
    }
    s["pic0s_ns_action"] = a;
  }
  if (ctx.omega_s) s["omega_s"] = write_fv(*ctx.omega_s);
  j["surface"] = s;
  if (ctx.morphism) {
    const MorphismData& md = *ctx.morphism;
    Json m = Json::object();
    m["name"] = md.name;
    m["genus"] = md.genus;
    m["image_class"] = write_fv(md.image_class);
    if (!md.pullback_ns.empty()) {
      Json p = Json::object();
      for (const auto& [h, v] : md.pullback_ns) p[h] = write_curve_class(v);
      m["pullback_ns"] = p;
    }
    if (!md.pushforward_pic0.empty()) {
      Json p = Json::object();
      for (const auto& [g, v] : md.pushforward_pic0) p[g] = write_fv(v);
      m["pushforward_pic0"] = p;
    }
    if (!md.pullback_pic0s.empty()) {
      Json p = Json::object();
      for (const auto& [q, v] : md.pullback_pic0s) p[q] = write_fv(v);
      m["pullback_pic0s"] = p;
    }
    m["birational"] = md.birational;
    j["morphism"] = m;
  }
  if (!ctx.opaque.empty()) {
    Json o = Json::object();
    for (const auto& [name, t] : ctx.opaque) {
      Json tj = Json::object();
      tj["codim"] = t.codim;
      Json lo = Json::object(), up = Json::object();
      for (const auto& [k, v] : t.lower) lo[k] = write_surface_class(v);
      for (const auto& [k, v] : t.upper) up[k] = write_curve_class(v);
      if (!t.lower.empty()) tj["lower"] = lo;
      if (!t.upper.empty()) tj["upper"] = up;
      o[name] = tj;
    }
    j["opaque"] = o;
  }
  if (!ctx.mu_for_graph.empty()) {
    Json m = Json::object();
    for (const auto& [f, mu] : ctx.mu_for_graph) m[f] = mu;
    j["mu_for_graph"] = m;
  }
  if (!ctx.graph_expansion.empty()) {
    Json e = Json::array();
    for (const auto& t : ctx.graph_expansion) {
      Json tj = Json::object();
      tj["coeff"] = write_rat(t.coeff);
      tj["a"] = write_curve_class(t.a);
      tj["b"] = write_surface_class(t.b);
      e.push_back(tj);
    }
    j["graph_expansion"] = e;
  }
  return j;
}

inline Scenario read_scenario(const Json& j) {
  Scenario sc;
  sc.name = j.value("name", std::string());
  sc.description = j.value("description", std::string());
  if (j.contains("geometry")) sc.geometry = read_geometry(j.at("geometry"));
  if (j.contains("heights")) {
    const Json& h = j.at("heights");
    ArithSurfaceData t;
    t.genus = h.at("genus").get<long>();
    t.w2 = read_lin(h.at("w2"));
    t.ws = read_lin(h.at("ws"));
    t.ss = read_lin(h.at("ss"));
    t.fs = h.contains("fs") ? read_rat(h.at("fs")) : Rat(0);
    sc.heights = t;
  }
  if (j.contains("semistable")) {
    const Json& s = j.at("semistable");
    SemistableScenario ss;
    ss.curve.components = read_names(s.at("curve").at("components"));
    for (const auto& n : s.at("curve").value("nodes", Json::array()))
      ss.curve.nodes.push_back({n.at(0).get<std::string>(), n.at(1).get<std::string>()});
    ss.surface.components = read_names(s.at("surface").at("components"));
    for (const auto& d : s.at("surface").value("double_curves", Json::array()))
      ss.surface.double_curves.push_back({d.at(0).get<std::string>(), d.at(1).get<std::string>()});
    for (const auto& t : s.at("surface").value("triple_points", Json::array()))
      ss.surface.triple_points.push_back({t.at(0).get<std::string>(), t.at(1).get<std::string>(),
                                          t.at(2).get<std::string>()});
    for (const auto& e : s.at("schedule"))
      ss.schedule.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
    sc.semistable = std::move(ss);
  }
  if (j.contains("gross_schoen")) {
    const Json& g = j.at("gross_schoen");
    GrossSchoenInputs gs;
    gs.genus = g.at("genus").get<long>();
    if (g.contains("w2")) gs.w2 = read_rat(g.at("w2"));
    if (g.contains("nt_xe")) gs.nt_xe = read_rat(g.at("nt_xe"));
    if (g.contains("local_terms")) gs.local_terms = read_rat(g.at("local_terms"));
    gs.hyperelliptic = g.value("hyperelliptic", false);
    sc.gross_schoen = gs;
  }
  return sc;
}

inline Json write_scenario(const Scenario& sc) {
  Json j = Json::object();
  j["name"] = sc.name;
  if (!sc.description.empty()) j["description"] = sc.description;
  if (sc.geometry) j["geometry"] = write_geometry(*sc.geometry);
  if (sc.heights) {
    Json h = Json::object();
    h["genus"] = sc.heights->genus;
    h["w2"] = write_lin(sc.heights->w2);
    h["ws"] = write_lin(sc.heights->ws);
    h["ss"] = write_lin(sc.heights->ss);
    h["fs"] = write_rat(sc.heights->fs);
    j["heights"] = h;
  }
  if (sc.semistable) {
    const SemistableScenario& ss = *sc.semistable;
    Json s = Json::object();
    Json c = Json::object();
    c["components"] = ss.curve.components;
    Json nodes = Json::array();
    for (const auto& [a, b] : ss.curve.nodes) nodes.push_back(Json::array({a, b}));
    c["nodes"] = nodes;
    s["curve"] = c;
    Json sf = Json::object();
    sf["components"] = ss.surface.components;
    Json dcs = Json::array();
    for (const auto& [a, b] : ss.surface.double_curves) dcs.push_back(Json::array({a, b}));
    sf["double_curves"] = dcs;
    Json tps = Json::array();
    for (const auto& t : ss.surface.triple_points)
      tps.push_back(Json::array({t[0], t[1], t[2]}));
    sf["triple_points"] = tps;
    s["surface"] = sf;
    Json sch = Json::array();
    for (const auto& e : ss.schedule) sch.push_back(Json::array({e.first, e.second}));
    s["schedule"] = sch;
    j["semistable"] = s;
  }
  if (sc.gross_schoen) {
    Json g = Json::object();
    g["genus"] = sc.gross_schoen->genus;
    g["w2"] = write_rat(sc.gross_schoen->w2);
    g["nt_xe"] = write_rat(sc.gross_schoen->nt_xe);
    g["local_terms"] = write_rat(sc.gross_schoen->local_terms);
    g["hyperelliptic"] = sc.gross_schoen->hyperelliptic;
    j["gross_schoen"] = g;
  }
  return j;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open scenario file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw parse_error(std::string("invalid scenario file ") + path + ": " + e.what());
  }
  return read_scenario(j);
}

}  // namespace cxs
