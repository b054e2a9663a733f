#pragma once

#include <sstream>
#include <tuple>
#include <vector>

#include "cxs/context.hpp"

namespace cxs {

/// Primitive generators of the curve factor: [C], the degree-1 reference
/// point class, and the named Pic0(C) generators.
struct CurvePrim {
  enum Kind { Fund = 0, Pt = 1, Pic0 = 2 };
  Kind kind = Pt;
  std::string name;  // Pic0 generator name

  int codim() const { return kind == Fund ? 0 : 1; }
  auto tie() const { return std::tie(kind, name); }
  friend bool operator<(const CurvePrim& a, const CurvePrim& b) { return a.tie() < b.tie(); }
  friend bool operator==(const CurvePrim& a, const CurvePrim& b) { return a.tie() == b.tie(); }

  CurveClass to_class(const Rat& c = Rat(1)) const {
    switch (kind) {
      case Fund: return CurveClass::fundamental(c);
      case Pt: return CurveClass::divisor(c);
      default: return CurveClass::divisor(Rat(0), FormalVec{{name, c}});
    }
  }
  std::string str() const {
    switch (kind) {
      case Fund: return "[C]";
      case Pt: return "pt";
      default: return name;
    }
  }
};

inline std::vector<std::pair<CurvePrim, Rat>> curve_prims(const CurveClass& c) {
  std::vector<std::pair<CurvePrim, Rat>> out;
  if (c.codim == 0) {
    if (c.fund != 0) out.push_back({CurvePrim{CurvePrim::Fund, ""}, c.fund});
    return out;
  }
  if (c.codim >= 2) return out;  // identically zero
  if (c.deg != 0) out.push_back({CurvePrim{CurvePrim::Pt, ""}, c.deg});
  for (const auto& [g, x] : c.pic0)
    if (x != 0) out.push_back({CurvePrim{CurvePrim::Pic0, g}, x});
  return out;
}

/// Primitive generators of the surface factor.
struct SurfPrim {
  enum Kind { Fund = 0, NS = 1, Pic0S = 2, PtS = 3, Alb = 4 };
  Kind kind = NS;
  std::string name;

  int codim() const {
    switch (kind) {
      case Fund: return 0;
      case NS:
      case Pic0S: return 1;
      default: return 2;
    }
  }
  auto tie() const { return std::tie(kind, name); }
  friend bool operator<(const SurfPrim& a, const SurfPrim& b) { return a.tie() < b.tie(); }
  friend bool operator==(const SurfPrim& a, const SurfPrim& b) { return a.tie() == b.tie(); }

  SurfaceClass to_class(const Rat& c = Rat(1)) const {
    switch (kind) {
      case Fund: return SurfaceClass::fundamental(c);
      case NS: return SurfaceClass::divisor(FormalVec{{name, c}});
      case Pic0S: return SurfaceClass::divisor({}, FormalVec{{name, c}});
      case PtS: return SurfaceClass::point(c);
      default: return SurfaceClass::point(Rat(0), FormalVec{{name, c}});
    }
  }
  std::string str() const {
    switch (kind) {
      case Fund: return "[S]";
      case PtS: return "ptS";
      default: return name;
    }
  }
};

inline std::vector<std::pair<SurfPrim, Rat>> surf_prims(const SurfaceClass& s) {
  std::vector<std::pair<SurfPrim, Rat>> out;
  if (s.codim >= 3) return out;
  if (s.codim == 0) {
    if (s.fund != 0) out.push_back({SurfPrim{SurfPrim::Fund, ""}, s.fund});
    return out;
  }
  if (s.codim == 1) {
    for (const auto& [h, x] : s.ns)
      if (x != 0) out.push_back({SurfPrim{SurfPrim::NS, h}, x});
    for (const auto& [q, x] : s.pic0s)
      if (x != 0) out.push_back({SurfPrim{SurfPrim::Pic0S, q}, x});
    return out;
  }
  if (s.deg != 0) out.push_back({SurfPrim{SurfPrim::PtS, ""}, s.deg});
  for (const auto& [a, x] : s.alb)
    if (x != 0) out.push_back({SurfPrim{SurfPrim::Alb, a}, x});
  return out;
}

/// One primitive term on X = C x S.
///
/// Tensor:       c (.) s                       codim c + s
/// Graph:        the graph of the named morphism, codim 2
/// GraphSlice:   (id,f)_* c  — a graph intersected with pulled-back classes,
///               retained with enough data to push and take degrees
/// OpaqueTensor: (opaque generator) . (c (.) s)
struct TermKey {
  enum Kind { Tensor = 0, Graph = 1, GraphSlice = 2, OpaqueTensor = 3 };
  Kind kind = Tensor;
  CurvePrim c;
  SurfPrim s;
  std::string name;   // morphism or opaque generator name
  int op_codim = 0;   // codim of the opaque generator

  int codim() const {
    switch (kind) {
      case Tensor: return c.codim() + s.codim();
      case Graph: return 2;
      case GraphSlice: return 2 + c.codim();
      default: return op_codim + c.codim() + s.codim();
    }
  }
  auto tie() const { return std::tie(kind, name, op_codim, c, s); }
  friend bool operator<(const TermKey& a, const TermKey& b) { return a.tie() < b.tie(); }
  friend bool operator==(const TermKey& a, const TermKey& b) { return a.tie() == b.tie(); }

  std::string str() const {
    switch (kind) {
      case Tensor: return c.str() + "(.)" + s.str();
      case Graph: return "Graph(" + name + ")";
      case GraphSlice: return "Graph(" + name + ")|" + c.str();
      default: return name + "." + c.str() + "(.)" + s.str();
    }
  }
};

/// Homogeneous formal sum of primitive terms on X with exact rational
/// coefficients.
class CycleExpr {
 public:
  CycleExpr() = default;
  explicit CycleExpr(int codim) : codim_(codim) {}

  static CycleExpr zero(int codim) { return CycleExpr(codim); }

  int codim() const { return codim_; }
  const std::map<TermKey, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const TermKey& k, const Rat& c) {
    if (c == 0) return;
    if (terms_.empty() && codim_ < 0) codim_ = k.codim();
    if (k.codim() != codim_)
      throw Error(Errc::Grading, "mixed codimension in expression: term " + k.str() +
                                     " has codim " + std::to_string(k.codim()) +
                                     ", expression has codim " + std::to_string(codim_));
    Rat& slot = terms_[k];
    slot += c;
    if (slot == 0) terms_.erase(k);
  }

  CycleExpr& operator+=(const CycleExpr& o) {
    if (is_zero() && codim_ < 0) codim_ = o.codim_;
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  friend CycleExpr operator+(CycleExpr a, const CycleExpr& b) { return a += b; }
  friend CycleExpr operator-(CycleExpr a, const CycleExpr& b) { return a += b * Rat(-1); }
  friend CycleExpr operator*(const CycleExpr& a, const Rat& c) {
    CycleExpr r(a.codim_);
    if (c != 0)
      for (const auto& [k, x] : a.terms_) r.terms_[k] = x * c;
    return r;
  }
  friend CycleExpr operator*(const Rat& c, const CycleExpr& a) { return a * c; }
  friend bool operator==(const CycleExpr& a, const CycleExpr& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.codim_ == b.codim_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      Rat a = abs(c);
      if (a != 1) os << rat_str(a) << "*";
      os << k.str();
    }
    return os.str();
  }

 private:
  int codim_ = -1;  // -1: undetermined (zero expression)
  std::map<TermKey, Rat> terms_;
};

/// a (.) b = pi_C^* a . pi_S^* b.
inline CycleExpr tensor(const CurveClass& a, const SurfaceClass& b) {
  int cd = a.codim + b.codim;
  if (cd > 3) throw Error(Errc::Grading, "tensor codimension " + std::to_string(cd) + " > 3");
  CycleExpr out(cd);
  for (const auto& [cp, cc] : curve_prims(a))
    for (const auto& [sp, sc] : surf_prims(b))
      out.add_term(TermKey{TermKey::Tensor, cp, sp, "", 0}, cc * sc);
  return out;
}

inline CycleExpr graph_cycle(const std::string& morphism_name) {
  CycleExpr out(2);
  out.add_term(TermKey{TermKey::Graph, {}, {}, morphism_name, 0}, Rat(1));
  return out;
}

/// (id,f)_* c, expanded over curve primitives.  The fundamental slice is the
/// graph itself and is normalized to the Graph term.
inline CycleExpr graph_slice(const std::string& morphism_name, const CurveClass& c) {
  CycleExpr out(2 + c.codim);
  for (const auto& [cp, cc] : curve_prims(c)) {
    if (cp.kind == CurvePrim::Fund)
      out.add_term(TermKey{TermKey::Graph, {}, {}, morphism_name, 0}, cc);
    else
      out.add_term(TermKey{TermKey::GraphSlice, cp, {}, morphism_name, 0}, cc);
  }
  return out;
}

/// (opaque) . (a (.) b).
inline CycleExpr opaque_tensor(const std::string& name, int op_codim, const CurveClass& a,
                               const SurfaceClass& b) {
  int cd = op_codim + a.codim + b.codim;
  if (cd > 3) return CycleExpr::zero(cd > 4 ? 4 : cd);
  CycleExpr out(cd);
  for (const auto& [cp, cc] : curve_prims(a))
    for (const auto& [sp, sc] : surf_prims(b))
      out.add_term(TermKey{TermKey::OpaqueTensor, cp, sp, name, op_codim}, cc * sc);
  return out;
}

inline CycleExpr opaque_cycle(const std::string& name, int op_codim = 1) {
  return opaque_tensor(name, op_codim, CurveClass::fundamental(), SurfaceClass::fundamental());
}

}  // namespace cxs
