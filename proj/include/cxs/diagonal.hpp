#pragma once

#include "cxs/decompose.hpp"

namespace cxs {

/// gamma = Gamma - C (.) f_* eta - eta (.) f_* C - mu_f . xi.
///
/// This is exactly the bi-primitive retraction of the graph: the extra
/// retraction term vanishes because Gamma^*(xi) = eta.  Requires the
/// normalization deg eta = 1.
inline CycleExpr arithmetic_diagonal(const GeometryContext& ctx) {
  const MorphismData& m = ctx.f();
  (void)m;
  CurveClass eta = ctx.eta();
  if (eta.deg != 1)
    throw Error(Errc::Normalization,
                "deg eta = " + rat_str(eta.deg) + "; rescale xi so that deg(xi . f_*C) = 1");
  return retract_biprimitive(graph_cycle(ctx.f().name), ctx);
}

/// gamma_e = Gamma - C (.) f_* e - e (.) f_* C, valid only when H1(S) = 0.
inline CycleExpr gamma_e(const CurveClass& e, const GeometryContext& ctx) {
  if (!ctx.h1s_zero)
    throw Error(Errc::Domain, "gamma_e requires H1(S) = 0 (otherwise the mu term is missing)");
  if (e.codim != 1 || e.deg != 1)
    throw Error(Errc::Domain, "gamma_e requires a degree-1 divisor class e");
  CycleExpr g = graph_cycle(ctx.f().name);
  g = g - tensor(CurveClass::fundamental(), ctx.f_lower(e));
  g = g - tensor(e, SurfaceClass::divisor(ctx.f().image_class));
  return g;
}

/// Offset <gamma_{e2}, gamma_{e2}> - <gamma_{e1}, gamma_{e1}>
///   = -2 <phi - d e1, e1 - e2>_NT - d <e1 - e2, e1 - e2>_NT
/// with phi = f^* f_* C of degree d.  Both pairing arguments are degree 0,
/// so everything reads through the Neron-Tate Gram.
inline LinPoly height_difference(const CurveClass& e1, const CurveClass& e2,
                                 const CurveClass& phi, const Rat& d,
                                 const GeometryContext& ctx) {
  if (e1.codim != 1 || e2.codim != 1 || phi.codim != 1)
    throw Error(Errc::Domain, "height_difference needs divisor classes");
  if (e1.deg != 1 || e2.deg != 1)
    throw Error(Errc::Domain, "height_difference requires deg e1 = deg e2 = 1");
  if (phi.deg != d)
    throw Error(Errc::Domain, "deg phi = " + rat_str(phi.deg) + " does not match d = " + rat_str(d));
  FormalVec lin = fv_sum(phi.pic0, e1.pic0, -d);  // phi - d e1, degree 0
  FormalVec dif = fv_sum(e1.pic0, e2.pic0, Rat(-1));  // e1 - e2, degree 0
  return ctx.nt_pair(lin, dif) * Rat(-2) - ctx.nt_pair(dif, dif) * d;
}

/// e0 = phi / d, the critical point of e -> <gamma_e, gamma_e>.
inline CurveClass optimal_e(const CurveClass& phi, const Rat& d) {
  if (d == 0) throw Error(Errc::Domain, "optimal_e undefined for d = 0");
  if (phi.codim != 1 || phi.deg != d)
    throw Error(Errc::Domain, "optimal_e needs phi of degree d");
  return phi * (Rat(1) / d);
}

/// Height pairing on the bi-primitive tensor part: the expressions must be
/// sums of (degree-0 curve class) (.) (NS element) terms, and
///   < p (.) h, p' (.) h' > = - <p, p'>_NT <h, h'>_NS.
inline LinPoly bb_pair_biprimitive(const CycleExpr& x, const CycleExpr& y,
                                   const GeometryContext& ctx) {
  auto split = [](const CycleExpr& e) {
    std::map<std::string, CurveClass> by_ns;  // NS basis name -> curve factor
    for (const auto& [k, c] : e.terms()) {
      if (k.kind != TermKey::Tensor || k.s.kind != SurfPrim::NS ||
          k.c.kind == CurvePrim::Fund)
        throw Error(Errc::PartialProduct,
                    "height pairing defined only on Pic0 (.) NS_0 expressions; term " + k.str());
      CurveClass& slot = by_ns[k.s.name];
      if (slot.is_zero()) slot = CurveClass::zero(1);
      slot += k.c.to_class(c);
    }
    for (const auto& [h, c] : by_ns)
      if (c.deg != 0)
        throw Error(Errc::Validation,
                    "curve factor paired with " + h + " has nonzero degree; not bi-primitive");
    return by_ns;
  };
  auto ax = split(x);
  auto ay = split(y);
  LinPoly out;
  for (const auto& [h, ch] : ax)
    for (const auto& [k, ck] : ay) {
      Rat ns = ctx.ns_entry(h, k);
      if (ns == 0) continue;
      out += ctx.nt_pair(ch.pic0, ck.pic0) * (-ns);
    }
  return out;
}

/// Hodge-index lower bound for <gamma, gamma>:
///   - sum_{ij} (G0^{-1})_{ij} <f_eta^* h_i, f_eta^* h_j>_NT
/// over any basis {h_i} of NS(S)_0, with f_eta^* h = f^* h - (deg f^* h) eta.
/// The dual-basis form replaces the paper's orthonormalization with
/// <h_i, h_j> = -delta_ij, which would leave the rationals; both give the
/// same value and this one is basis-invariant.
inline LinPoly hodge_lower_bound(const std::vector<FormalVec>& ns0_basis,
                                 const GeometryContext& ctx) {
  for (const auto& h : ns0_basis)
    if (ctx.ns_pair(h, ctx.xi) != 0)
      throw Error(Errc::Validation, "NS0 basis element is not orthogonal to xi");
  std::size_t n = ns0_basis.size();
  RatMat g0(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g0(i, j) = ctx.ns_pair(ns0_basis[i], ns0_basis[j]);
  RatMat inv = g0.inverse();

  CurveClass eta = ctx.eta();
  std::vector<FormalVec> pulled;  // pic0 part of f_eta^* h_i
  for (const auto& h : ns0_basis) {
    CurveClass fh = ctx.f_upper(SurfaceClass::divisor(h));
    CurveClass red = fh - eta * fh.deg;
    pulled.push_back(red.pic0);
  }
  LinPoly out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (inv(i, j) == 0) continue;
      out += ctx.nt_pair(pulled[i], pulled[j]) * (-inv(i, j));
    }
  return out;
}

}  // namespace cxs
