#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "cxs/common.hpp"

namespace cxs {

/// Monomial in the chart variables: a sorted multiset of names.
using Mon = std::vector<std::string>;

inline Mon mon(std::initializer_list<std::string> vs) {
  Mon m(vs);
  std::sort(m.begin(), m.end());
  return m;
}

inline std::string mon_str(const Mon& m) {
  if (m.empty()) return "1";
  std::string s;
  for (const auto& v : m) {
    if (!s.empty()) s += "*";
    s += v;
  }
  return s;
}

inline bool mon_contains(const Mon& m, const std::string& v) {
  return std::find(m.begin(), m.end(), v) != m.end();
}

/// Replace every copy of v by the monomial r.
inline Mon mon_subst(const Mon& m, const std::string& v, const Mon& r) {
  Mon out;
  for (const auto& x : m) {
    if (x == v) out.insert(out.end(), r.begin(), r.end());
    else out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Remove every copy of v (saturation by the exceptional variable).
inline Mon mon_strip(const Mon& m, const std::string& v) {
  Mon out;
  for (const auto& x : m)
    if (x != v) out.push_back(x);
  return out;
}

inline Mon mon_gcd(const Mon& a, const Mon& b) {
  Mon out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Mon mon_sub(const Mon& a, const Mon& g) {
  Mon out;
  std::set_difference(a.begin(), a.end(), g.begin(), g.end(), std::back_inserter(out));
  return out;
}

inline bool mon_divides(const Mon& a, const Mon& b) { return mon_gcd(a, b) == a; }

/// One relation of a monomial chart presentation: lhs = rhs, or lhs = pi.
struct Relation {
  Mon lhs;
  Mon rhs;
  bool rhs_pi = false;

  void canonicalize() {
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (!rhs_pi && rhs < lhs) std::swap(lhs, rhs);
  }
  auto tie() const { return std::tie(rhs_pi, lhs, rhs); }
  friend bool operator<(const Relation& a, const Relation& b) { return a.tie() < b.tie(); }
  friend bool operator==(const Relation& a, const Relation& b) { return a.tie() == b.tie(); }

  std::string str() const { return mon_str(lhs) + " = " + (rhs_pi ? "pi" : mon_str(rhs)); }
};

/// Affine chart of a formal R-scheme: R[[vars]] modulo monomial relations.
struct LocalChart {
  std::vector<std::string> vars;
  std::vector<Relation> rels;

  bool has_var(const std::string& v) const {
    return std::find(vars.begin(), vars.end(), v) != vars.end();
  }
  void drop_var(const std::string& v) {
    vars.erase(std::remove(vars.begin(), vars.end(), v), vars.end());
  }

  std::string str() const {
    std::ostringstream os;
    os << "R[";
    for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? "," : "") << vars[i];
    os << "] / (";
    for (std::size_t i = 0; i < rels.size(); ++i) os << (i ? "; " : "") << rels[i].str();
    os << ")";
    return os.str();
  }
};

/// Rewrites a chart to normal form.  Rules, applied to a fixed point:
///   - cancel a variable appearing on both sides of a monomial relation
///     (the strict-transform division by an exceptional factor);
///   - drop trivial relations;
///   - a relation v = m with v a single variable not in m eliminates v.
/// A relation forcing a unit to vanish (or pi to be a unit) throws
/// Errc::Normalization: the chart has no point with the given center.
/// Returns the eliminations performed, in order.
inline std::vector<std::pair<std::string, Mon>> normalize(LocalChart& c) {
  std::vector<std::pair<std::string, Mon>> elims;
  for (int guard = 0; guard < 1000; ++guard) {
    bool changed = false;
    for (auto& r : c.rels) {
      r.canonicalize();
      if (r.rhs_pi) continue;
      Mon g = mon_gcd(r.lhs, r.rhs);
      if (!g.empty()) {
        r.lhs = mon_sub(r.lhs, g);
        r.rhs = mon_sub(r.rhs, g);
        changed = true;
      }
    }
    // Drop trivial relations, detect contradictions.
    std::vector<Relation> kept;
    for (auto& r : c.rels) {
      if (r.rhs_pi) {
        if (r.lhs.empty()) throw Error(Errc::Normalization, "relation forces pi to be a unit");
        kept.push_back(r);
        continue;
      }
      if (r.lhs == r.rhs) {
        changed = true;
        continue;
      }
      if (r.lhs.empty() || r.rhs.empty())
        throw Error(Errc::Normalization, "relation forces a unit to vanish");
      kept.push_back(r);
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.size() != c.rels.size()) changed = true;
    c.rels = kept;

    // Eliminate v = m.
    for (std::size_t i = 0; i < c.rels.size(); ++i) {
      const Relation& r = c.rels[i];
      if (r.rhs_pi) continue;
      std::string v;
      Mon m;
      if (r.lhs.size() == 1 && !mon_contains(r.rhs, r.lhs[0])) {
        v = r.lhs[0];
        m = r.rhs;
      } else if (r.rhs.size() == 1 && !mon_contains(r.lhs, r.rhs[0])) {
        v = r.rhs[0];
        m = r.lhs;
      } else {
        continue;
      }
      c.rels.erase(c.rels.begin() + static_cast<long>(i));
      for (auto& o : c.rels) {
        o.lhs = mon_subst(o.lhs, v, m);
        o.rhs = mon_subst(o.rhs, v, m);
      }
      c.drop_var(v);
      elims.push_back({v, m});
      changed = true;
      break;
    }
    if (!changed) return elims;
  }
  throw Error(Errc::Normalization, "chart normalization did not terminate");
}

/// Strict semistability at the chart origin: normal form is a single
/// relation t1...tq = pi with 1 <= q <= 4 distinct variables (or no
/// relation at all in a smooth-fiber chart).
inline bool is_standard(const LocalChart& c) {
  if (c.rels.empty()) return true;
  if (c.rels.size() != 1) return false;
  const Relation& r = c.rels[0];
  if (!r.rhs_pi) return false;
  if (r.lhs.empty() || r.lhs.size() > 4) return false;
  for (std::size_t i = 0; i + 1 < r.lhs.size(); ++i)
    if (r.lhs[i] == r.lhs[i + 1]) return false;
  return true;
}

inline bool semistable_at_origin(LocalChart c) {
  normalize(c);
  return is_standard(c);
}

/// Semistability at every point of the chart.  Points away from the origin
/// have some coordinates invertible; specializing a subset of variables to
/// units and renormalizing covers all of them.  Specializations whose locus
/// is empty (pi or a vanishing monomial forced to be a unit) are skipped.
inline bool semistable_everywhere(const LocalChart& c) {
  std::size_t n = c.vars.size();
  if (n > 20) throw Error(Errc::Validation, "chart too large");
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    LocalChart spec = c;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (std::size_t(1) << i))) continue;
      const std::string& v = c.vars[i];
      for (auto& r : spec.rels) {
        r.lhs = mon_strip(r.lhs, v);
        r.rhs = mon_strip(r.rhs, v);
      }
      spec.drop_var(v);
    }
    try {
      normalize(spec);
    } catch (const Error& e) {
      if (e.code() == Errc::Normalization) continue;  // empty locus
      throw;
    }
    if (!is_standard(spec)) return false;
  }
  return true;
}

/// Chart isomorphism up to renaming of variables (brute force; charts here
/// have at most six variables).
inline bool charts_isomorphic(LocalChart a, LocalChart b) {
  normalize(a);
  normalize(b);
  if (a.vars.size() != b.vars.size() || a.rels.size() != b.rels.size()) return false;
  std::vector<std::string> perm = b.vars;
  std::sort(perm.begin(), perm.end());
  do {
    std::map<std::string, std::string> ren;
    for (std::size_t i = 0; i < a.vars.size(); ++i) ren[a.vars[i]] = perm[i];
    std::vector<Relation> image;
    for (const auto& r : a.rels) {
      Relation s;
      s.rhs_pi = r.rhs_pi;
      for (const auto& v : r.lhs) s.lhs.push_back(ren[v]);
      for (const auto& v : r.rhs) s.rhs.push_back(ren[v]);
      s.canonicalize();
      image.push_back(s);
    }
    std::sort(image.begin(), image.end());
    std::vector<Relation> target = b.rels;
    for (auto& r : target) r.canonicalize();
    std::sort(target.begin(), target.end());
    if (image == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

struct BlowupResult {
  LocalChart chart;
  std::string divided_var;  // variable that was substituted away
  std::string new_var;      // its quotient coordinate
  std::string exc_var;      // local equation of the exceptional divisor
  std::vector<std::pair<std::string, Mon>> elims;
};

inline std::string fresh_var(const LocalChart& c, std::string base) {
  while (c.has_var(base)) base += "'";
  return base;
}

/// Blow-up of the chart along the ideal (u, v): the two affine charts
/// obtained by adjoining u/v and v/u.  A center missing from the chart
/// (not through the origin) leaves the chart unchanged.
inline std::vector<BlowupResult> blowup_charts(const LocalChart& c, const std::string& u,
                                               const std::string& v) {
  if (!c.has_var(u) || !c.has_var(v)) return {BlowupResult{c, "", "", "", {}}};
  std::vector<BlowupResult> out;
  auto make = [&](const std::string& divided, const std::string& other) {
    BlowupResult r;
    r.chart = c;
    r.divided_var = divided;
    r.new_var = fresh_var(c, divided + "'");
    r.exc_var = other;
    r.chart.drop_var(divided);
    r.chart.vars.push_back(r.new_var);
    Mon repl = mon({r.new_var, other});
    for (auto& rel : r.chart.rels) {
      rel.lhs = mon_subst(rel.lhs, divided, repl);
      rel.rhs = mon_subst(rel.rhs, divided, repl);
    }
    r.elims = normalize(r.chart);
    out.push_back(std::move(r));
  };
  make(u, v);
  make(v, u);
  return out;
}

inline std::vector<LocalChart> blowup_chart(const LocalChart& c, const std::string& u,
                                            const std::string& v) {
  std::vector<LocalChart> out;
  for (auto& r : blowup_charts(c, u, v)) out.push_back(std::move(r.chart));
  return out;
}

// ---------------------------------------------------------------------------
// Special fibers and the product model.

struct SpecialFiberCurve {
  std::vector<std::string> components;
  std::vector<std::pair<std::string, std::string>> nodes;

  bool has_component(const std::string& a) const {
    return std::find(components.begin(), components.end(), a) != components.end();
  }
  void validate() const {
    if (components.empty()) throw Error(Errc::Validation, "curve fiber has no components");
    for (const auto& [a, b] : nodes) {
      if (a == b) throw Error(Errc::Validation, "node joins a component to itself");
      if (!has_component(a) || !has_component(b))
        throw Error(Errc::Validation, "node references an unknown component");
    }
  }
  bool adjacent(const std::string& a, const std::string& b) const {
    for (const auto& [x, y] : nodes)
      if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
  }
};

struct SpecialFiberSurface {
  std::vector<std::string> components;
  std::vector<std::pair<std::string, std::string>> double_curves;
  std::vector<std::array<std::string, 3>> triple_points;

  bool has_component(const std::string& b) const {
    return std::find(components.begin(), components.end(), b) != components.end();
  }
  bool adjacent(const std::string& a, const std::string& b) const {
    for (const auto& [x, y] : double_curves)
      if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
  }
  void validate() const {
    if (components.empty()) throw Error(Errc::Validation, "surface fiber has no components");
    for (const auto& [a, b] : double_curves) {
      if (a == b) throw Error(Errc::Validation, "double curve joins a component to itself");
      if (!has_component(a) || !has_component(b))
        throw Error(Errc::Validation, "double curve references an unknown component");
    }
    for (const auto& t : triple_points) {
      if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
        throw Error(Errc::Validation, "triple point with repeated components");
      if (!adjacent(t[0], t[1]) || !adjacent(t[0], t[2]) || !adjacent(t[1], t[2]))
        throw Error(Errc::Validation,
                    "triple point not supported by its three double curves");
    }
  }
};

/// Product component A x B of the special fiber of C x_R S.
using CompId = std::pair<std::string, std::string>;

inline std::string comp_str(const CompId& c) { return c.first + "x" + c.second; }

enum class ZKind { Empty, Cartier, Smooth };

struct ZEntry {
  CompId a, b;
  ZKind kind = ZKind::Empty;
};

struct ProductComponents {
  std::vector<CompId> components;
  std::vector<ZEntry> intersections;  // one entry per unordered pair
};

inline ZKind classify_z(const CompId& i, const CompId& j, const SpecialFiberCurve& c,
                        const SpecialFiberSurface& s) {
  bool curve_meets = (i.first == j.first) || c.adjacent(i.first, j.first);
  bool surf_meets = (i.second == j.second) || s.adjacent(i.second, j.second);
  if (!curve_meets || !surf_meets) return ZKind::Empty;
  if (i.first == j.first || i.second == j.second) return ZKind::Cartier;
  return ZKind::Smooth;
}

inline ProductComponents product_components(const SpecialFiberCurve& c,
                                            const SpecialFiberSurface& s) {
  c.validate();
  s.validate();
  ProductComponents out;
  for (const auto& a : c.components)
    for (const auto& b : s.components) out.components.push_back({a, b});
  for (std::size_t i = 0; i < out.components.size(); ++i)
    for (std::size_t j = i + 1; j < out.components.size(); ++j)
      out.intersections.push_back({out.components[i], out.components[j],
                                   classify_z(out.components[i], out.components[j], c, s)});
  return out;
}

enum class CurvePoint { Smooth, Node };
enum class SurfPoint { Smooth, DoubleCurve, TriplePoint };

/// The case table from the semistability proof.  Only node x double-curve
/// and node x triple-point need simulation; everything else is already
/// standard.
inline LocalChart local_models_at(CurvePoint p, SurfPoint q) {
  LocalChart c;
  if (p == CurvePoint::Smooth && q == SurfPoint::Smooth) {
    c.vars = {"x1"};
    c.rels = {Relation{mon({"x1"}), {}, true}};
    return c;
  }
  if (p == CurvePoint::Smooth) {
    c.vars = q == SurfPoint::DoubleCurve ? std::vector<std::string>{"y1", "y2"}
                                         : std::vector<std::string>{"y1", "y2", "y3"};
    c.rels = {Relation{c.vars == std::vector<std::string>{"y1", "y2"} ? mon({"y1", "y2"})
                                                                      : mon({"y1", "y2", "y3"}),
                       {}, true}};
    return c;
  }
  if (q == SurfPoint::Smooth) {
    c.vars = {"x1", "x2"};
    c.rels = {Relation{mon({"x1", "x2"}), {}, true}};
    return c;
  }
  if (q == SurfPoint::DoubleCurve) {
    c.vars = {"x1", "x2", "y1", "y2", "y3"};
    c.rels = {Relation{mon({"y1", "y2"}), {}, true},
              Relation{mon({"x1", "x2"}), mon({"y1", "y2"}), false}};
    return c;
  }
  c.vars = {"x1", "x2", "y1", "y2", "y3"};
  c.rels = {Relation{mon({"y1", "y2", "y3"}), {}, true},
            Relation{mon({"x1", "x2"}), mon({"y1", "y2", "y3"}), false}};
  return c;
}

// ---------------------------------------------------------------------------
// Schedule simulation.

using Schedule = std::vector<CompId>;

namespace detail {

/// Chart plus the strict-transform ideals of the product components through
/// the point.  An ideal with an empty generator contains a unit: the
/// component has left the chart.
struct SimChart {
  LocalChart chart;
  std::map<CompId, std::vector<Mon>> comp;

  static bool invisible(const std::vector<Mon>& gens) {
    for (const auto& g : gens)
      if (g.empty()) return true;
    return false;
  }
  /// Generators with their common monomial factor removed.  A resulting
  /// empty generator means the ideal is principal (Cartier).
  static std::vector<Mon> reduced(std::vector<Mon> gens) {
    if (gens.size() == 2) {
      Mon g = mon_gcd(gens[0], gens[1]);
      gens[0] = mon_sub(gens[0], g);
      gens[1] = mon_sub(gens[1], g);
    }
    return gens;
  }
  static bool cartier(const std::vector<Mon>& gens) {
    if (gens.size() < 2) return true;
    auto r = reduced(gens);
    return r[0].empty() || r[1].empty() || r[0] == r[1];
  }
};

struct DeepPoint {
  std::string label;
  std::array<std::string, 2> curve_comps;
  std::vector<std::string> surf_comps;  // 2 or 3
  std::vector<SimChart> charts;
};

inline DeepPoint make_deep_point(const std::string& a1, const std::string& a2,
                                 const std::vector<std::string>& bs) {
  DeepPoint p;
  p.curve_comps = {a1, a2};
  p.surf_comps = bs;
  p.label = a1 + "." + a2 + " x ";
  for (std::size_t j = 0; j < bs.size(); ++j) p.label += (j ? "." : "") + bs[j];
  SimChart sc;
  sc.chart = local_models_at(CurvePoint::Node, bs.size() == 2 ? SurfPoint::DoubleCurve
                                                              : SurfPoint::TriplePoint);
  for (int i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < bs.size(); ++j) {
      std::string xv = "x" + std::to_string(i + 1);
      std::string yv = "y" + std::to_string(j + 1);
      sc.comp[{i == 0 ? a1 : a2, bs[j]}] = {mon({xv}), mon({yv})};
    }
  p.charts = {sc};
  return p;
}

}  // namespace detail

struct PointReport {
  std::string label;
  std::vector<LocalChart> final_charts;
  bool semistable = true;
};

/// Per-component blow-up traces.  `recorded` is read off the chart
/// simulation; `expected` is derived independently from the schedule by the
/// proof's case analysis; `naive` is the full smooth-intersection list.
/// Entries of the naive list whose centers have become Cartier by their
/// turn are the ones the comparison skips; `naive_matches` flags where this
/// mattered.
struct FinalModel {
  std::vector<CompId> components;
  std::vector<PointReport> points;
  std::map<CompId, std::vector<CompId>> recorded;
  std::map<CompId, std::vector<CompId>> expected;
  std::map<CompId, std::vector<CompId>> naive;
  bool semistable = true;
  bool traces_match = true;
  bool naive_matches = true;
};

inline FinalModel run_schedule(const SpecialFiberCurve& curve, const SpecialFiberSurface& surf,
                               const Schedule& schedule) {
  ProductComponents pc = product_components(curve, surf);
  if (schedule.size() != pc.components.size())
    throw Error(Errc::Validation, "schedule must cover every product component exactly once");
  std::map<CompId, std::size_t> pos;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (std::find(pc.components.begin(), pc.components.end(), schedule[i]) ==
        pc.components.end())
      throw Error(Errc::Validation, "schedule entry is not a product component: " +
                                        comp_str(schedule[i]));
    if (!pos.emplace(schedule[i], i).second)
      throw Error(Errc::Validation, "schedule repeats component " + comp_str(schedule[i]));
  }

  FinalModel out;
  out.components = pc.components;

  std::set<std::pair<CompId, CompId>> rec_events, exp_events;

  // Deep points: one per (node, double curve) and (node, triple point).
  std::vector<detail::DeepPoint> points;
  for (const auto& [a1, a2] : curve.nodes) {
    for (const auto& [b1, b2] : surf.double_curves)
      points.push_back(detail::make_deep_point(a1, a2, {b1, b2}));
    for (const auto& t : surf.triple_points)
      points.push_back(detail::make_deep_point(a1, a2, {t[0], t[1], t[2]}));
  }

  for (auto& pt : points) {
    // Chart simulation through the schedule.
    for (const auto& e : schedule) {
      std::vector<detail::SimChart> next;
      for (auto& sc : pt.charts) {
        auto it = sc.comp.find(e);
        if (it == sc.comp.end() || detail::SimChart::invisible(it->second) ||
            detail::SimChart::cartier(it->second)) {
          next.push_back(std::move(sc));
          continue;
        }
        auto gens = detail::SimChart::reduced(it->second);
        if (gens[0].size() != 1 || gens[1].size() != 1 || gens[0] == gens[1])
          throw Error(Errc::Normalization, "blow-up center " + comp_str(e) +
                                               " is not in simulable form at " + pt.label);
        // Trace events: the center is blown along its intersection with each
        // transversal component, and vice versa.
        for (const auto& [i, igens] : sc.comp) {
          if (i == e || detail::SimChart::invisible(igens) ||
              detail::SimChart::cartier(igens))
            continue;
          if (i.first == e.first || i.second == e.second) continue;
          rec_events.insert({i, e});
          rec_events.insert({e, i});
        }
        std::string u = gens[0][0], v = gens[1][0];
        for (auto& br : blowup_charts(sc.chart, u, v)) {
          detail::SimChart child;
          child.chart = std::move(br.chart);
          for (const auto& [i, igens] : sc.comp) {
            if (i == e) continue;
            std::vector<Mon> g = igens;
            for (auto& m : g) {
              m = mon_subst(m, br.divided_var, mon({br.new_var, br.exc_var}));
              m = mon_strip(m, br.exc_var);
            }
            for (auto& m : g)
              for (const auto& [ev, em] : br.elims) m = mon_subst(m, ev, em);
            child.comp[i] = std::move(g);
          }
          child.comp[e] = {mon({br.exc_var})};  // now a Cartier exceptional
          next.push_back(std::move(child));
        }
      }
      pt.charts = std::move(next);
    }

    PointReport rep;
    rep.label = pt.label;
    for (const auto& sc : pt.charts) {
      rep.final_charts.push_back(sc.chart);
      if (!semistable_everywhere(sc.chart)) rep.semistable = false;
    }
    if (!rep.semistable) out.semistable = false;
    out.points.push_back(std::move(rep));

    // Independent trace oracle from the proof's case analysis.
    auto first_of = [&](const std::vector<CompId>& cands) {
      CompId best;
      std::size_t bp = schedule.size();
      for (const auto& c : cands)
        if (pos.at(c) < bp) {
          bp = pos.at(c);
          best = c;
        }
      return best;
    };
    const auto& A = pt.curve_comps;
    const auto& B = pt.surf_comps;
    std::vector<CompId> visible;
    for (int i = 0; i < 2; ++i)
      for (const auto& b : B) visible.push_back({A[i], b});
    CompId e1 = first_of(visible);
    std::string otherA = e1.first == A[0] ? A[1] : A[0];
    if (B.size() == 2) {
      CompId opp{otherA, e1.second == B[0] ? B[1] : B[0]};
      exp_events.insert({e1, opp});
      exp_events.insert({opp, e1});
    } else {
      for (const auto& b : B)
        if (b != e1.second) {
          exp_events.insert({e1, {otherA, b}});
          exp_events.insert({{otherA, b}, e1});
        }
      std::vector<CompId> survivors;
      for (int i = 0; i < 2; ++i)
        for (const auto& b : B)
          if (b != e1.second) survivors.push_back({A[i], b});
      CompId e2 = first_of(survivors);
      CompId opp2;
      for (const auto& s : survivors)
        if (s.first != e2.first && s.second != e2.second) opp2 = s;
      exp_events.insert({e2, opp2});
      exp_events.insert({opp2, e2});
    }
  }

  // Assemble traces ordered by the partner's schedule position.
  auto assemble = [&](const std::set<std::pair<CompId, CompId>>& ev) {
    std::map<CompId, std::vector<CompId>> tr;
    for (const auto& c : pc.components) tr[c] = {};
    for (const auto& c : pc.components)
      for (const auto& j : schedule)
        if (ev.count({c, j})) tr[c].push_back(j);
    return tr;
  };
  out.recorded = assemble(rec_events);
  out.expected = assemble(exp_events);

  std::set<std::pair<CompId, CompId>> naive_events;
  for (const auto& z : pc.intersections)
    if (z.kind == ZKind::Smooth) {
      naive_events.insert({z.a, z.b});
      naive_events.insert({z.b, z.a});
    }
  out.naive = assemble(naive_events);

  out.traces_match = (out.recorded == out.expected);
  out.naive_matches = (out.recorded == out.naive);
  return out;
}

}  // namespace cxs
