#pragma once

#include "cxs/expr.hpp"

namespace cxs {

namespace detail {

inline CurveClass opaque_upper(const OpaqueTable& t, const SurfPrim& s, const Rat& c) {
  // mu^*(s) = pi_{C*}(mu . pi_S^* s); absent entries are declared-zero actions.
  std::string key;
  int result_codim;
  switch (s.kind) {
    case SurfPrim::Fund: key = kFundS; result_codim = 0; break;
    case SurfPrim::NS:
    case SurfPrim::Pic0S: key = s.name; result_codim = 0; break;
    case SurfPrim::PtS: key = kPointS; result_codim = 1; break;
    default: key = s.name; result_codim = 1; break;
  }
  auto it = t.upper.find(key);
  if (it == t.upper.end()) return CurveClass::zero(result_codim);
  return it->second * c;
}

inline SurfaceClass opaque_lower(const OpaqueTable& t, const CurvePrim& c, const Rat& x) {
  std::string key;
  int result_codim;
  switch (c.kind) {
    case CurvePrim::Fund: key = kFund; result_codim = 0; break;
    case CurvePrim::Pt: key = kPoint; result_codim = 1; break;
    default: key = c.name; result_codim = 1; break;
  }
  auto it = t.lower.find(key);
  if (it == t.lower.end()) return SurfaceClass::zero(result_codim);
  return it->second * x;
}

}  // namespace detail

/// Intersection product on X.  Bilinear extension of the primitive rule
/// table; pairs with no applicable rule raise a partial-product error naming
/// the offending terms.  Products past the graded bound are exactly zero.
inline CycleExpr intersect(const CycleExpr& x, const CycleExpr& y, const GeometryContext& ctx) {
  if (x.is_zero() || y.is_zero())
    return CycleExpr::zero(std::max(x.codim() + y.codim(), 0));
  CycleExpr out(x.codim() + y.codim());
  auto emit = [&](const CycleExpr& e, const Rat& c) { out += e * c; };

  for (const auto& [k1, c1] : x.terms()) {
    for (const auto& [k2, c2] : y.terms()) {
      if (k1.codim() + k2.codim() > 3) continue;  // graded vanishing
      const TermKey* a = &k1;
      const TermKey* b = &k2;
      if (a->kind > b->kind) std::swap(a, b);
      Rat c = c1 * c2;

      if (a->kind == TermKey::Tensor && b->kind == TermKey::Tensor) {
        CurveClass cc = curve_intersect(a->c.to_class(), b->c.to_class());
        SurfaceClass ss = surface_intersect(a->s.to_class(), b->s.to_class(), ctx);
        int cd = cc.codim + ss.codim;
        if (cd > 3 || cc.is_zero() || ss.is_zero()) continue;
        emit(tensor(cc, ss), c);
        continue;
      }
      if (a->kind == TermKey::Tensor && b->kind == TermKey::Graph) {
        // Graph(f) . (a (.) b) = (id,f)_*(a . f^* b).
        CurveClass pulled = curve_intersect(a->c.to_class(), ctx.f_upper(a->s.to_class()));
        if (pulled.codim > 1 || pulled.is_zero()) continue;
        emit(graph_slice(b->name, pulled), c);
        continue;
      }
      if (a->kind == TermKey::Tensor && b->kind == TermKey::GraphSlice) {
        CurveClass pulled = curve_intersect(b->c.to_class(),
                                            curve_intersect(a->c.to_class(),
                                                            ctx.f_upper(a->s.to_class())));
        if (pulled.codim > 1 || pulled.is_zero()) continue;
        emit(graph_slice(b->name, pulled), c);
        continue;
      }
      if (a->kind == TermKey::Tensor && b->kind == TermKey::OpaqueTensor) {
        CurveClass cc = curve_intersect(a->c.to_class(), b->c.to_class());
        SurfaceClass ss = surface_intersect(a->s.to_class(), b->s.to_class(), ctx);
        if (cc.codim > 1 || ss.codim > 2 || cc.is_zero() || ss.is_zero()) continue;
        emit(opaque_tensor(b->name, b->op_codim, cc, ss), c);
        continue;
      }
      throw Error(Errc::PartialProduct,
                  "no rewrite rule for the product " + a->str() + " . " + b->str());
    }
  }
  return out;
}

/// pi_{C*}.  Kills terms whose surface factor is not top codimension.
inline CurveClass push_C(const CycleExpr& x, const GeometryContext& ctx) {
  if (x.codim() < 2 && !x.is_zero())
    throw Error(Errc::Grading, "push_C needs codim >= 2 (image vanishes below)");
  CurveClass out = CurveClass::zero(std::max(x.codim() - 2, 0));
  for (const auto& [k, c] : x.terms()) {
    switch (k.kind) {
      case TermKey::Tensor:
        if (k.s.kind == SurfPrim::PtS) out += k.c.to_class(c);
        break;
      case TermKey::Graph:
        out += CurveClass::fundamental(c);
        break;
      case TermKey::GraphSlice:
        out += k.c.to_class(c);
        break;
      case TermKey::OpaqueTensor: {
        CurveClass up = detail::opaque_upper(ctx.opaque_table(k.name), k.s, c);
        CurveClass v = curve_intersect(k.c.to_class(), up);
        if (v.codim <= 1) out += v;
        break;
      }
    }
  }
  return out;
}

/// pi_{S*}.
inline SurfaceClass push_S(const CycleExpr& x, const GeometryContext& ctx) {
  if (x.codim() < 1 && !x.is_zero())
    throw Error(Errc::Grading, "push_S needs codim >= 1 (image vanishes below)");
  SurfaceClass out = SurfaceClass::zero(std::max(x.codim() - 1, 0));
  for (const auto& [k, c] : x.terms()) {
    switch (k.kind) {
      case TermKey::Tensor:
        if (k.c.kind == CurvePrim::Pt) out += k.s.to_class(c);
        break;
      case TermKey::Graph:
        out += SurfaceClass::divisor(ctx.f().image_class) * c;
        break;
      case TermKey::GraphSlice:
        out += ctx.f_lower(k.c.to_class()) * c;
        break;
      case TermKey::OpaqueTensor: {
        SurfaceClass lo = detail::opaque_lower(ctx.opaque_table(k.name), k.c, c);
        SurfaceClass v = surface_intersect(lo, k.s.to_class(), ctx);
        if (v.codim <= 2) out += v;
        break;
      }
    }
  }
  return out;
}

/// alpha_*(beta) = pi_{S*}(alpha . pi_C^* beta).
inline SurfaceClass apply_lower(const CycleExpr& alpha, const CurveClass& beta,
                                const GeometryContext& ctx) {
  return push_S(intersect(alpha, tensor(beta, SurfaceClass::fundamental()), ctx), ctx);
}

/// alpha^*(gamma) = pi_{C*}(alpha . pi_S^* gamma).
inline CurveClass apply_upper(const CycleExpr& alpha, const SurfaceClass& gamma,
                              const GeometryContext& ctx) {
  return push_C(intersect(alpha, tensor(CurveClass::fundamental(), gamma), ctx), ctx);
}

/// Top-degree evaluation against the context's Gram data.
inline Rat degree(const CycleExpr& x, const GeometryContext& ctx) {
  if (x.is_zero()) return Rat(0);
  if (x.codim() != 3) throw Error(Errc::Grading, "degree needs a codim-3 expression");
  return push_C(x, ctx).deg;
}

/// Substitutes the declared Chow-level expansion for every Graph term; a
/// no-op when the context declares none.
inline CycleExpr expand_graph(const CycleExpr& x, const GeometryContext& ctx) {
  if (ctx.graph_expansion.empty()) return x;
  CycleExpr out(x.codim());
  for (const auto& [k, c] : x.terms()) {
    if (k.kind == TermKey::Graph) {
      for (const auto& t : ctx.graph_expansion) out += tensor(t.a, t.b) * (c * t.coeff);
    } else {
      out.add_term(k, c);
    }
  }
  return out;
}

}  // namespace cxs
