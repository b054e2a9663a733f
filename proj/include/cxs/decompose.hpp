#pragma once

#include "cxs/intersect.hpp"

namespace cxs {

/// Named components of a projection.  Components plus residual always sum
/// back to the input expression exactly.
struct DecompositionReport {
  CycleExpr input;
  std::map<std::string, CycleExpr> components;
  CycleExpr residual;

  CycleExpr component(const std::string& name) const {
    auto it = components.find(name);
    return it == components.end() ? CycleExpr::zero(input.codim()) : it->second;
  }

  CycleExpr sum() const {
    CycleExpr s = residual;
    for (const auto& [n, e] : components) {
      (void)n;
      s += e;
    }
    return s;
  }
};

/// Reads off mu_alpha, the rigidified codim-1 class with alpha_rigid =
/// mu_alpha . xi.  The inverse polarization is never computed: graphs resolve
/// through the registered mu table, and mu . xi terms resolve by recognizing
/// the xi direction.  Tensor terms and hom-trivial opaque terms carry no
/// rigid part and contribute zero.
inline CycleExpr mu_of(const CycleExpr& alpha, const GeometryContext& ctx) {
  if (alpha.is_zero()) return CycleExpr::zero(1);
  if (alpha.codim() != 2) throw Error(Errc::Grading, "mu_of needs a codim-2 expression");
  CycleExpr out(1);
  // NS vector of the surface factor, accumulated per opaque generator.
  std::map<std::string, FormalVec> opaque_ns;
  for (const auto& [k, c] : alpha.terms()) {
    switch (k.kind) {
      case TermKey::Tensor:
        break;  // no rigid part
      case TermKey::Graph: {
        auto it = ctx.mu_for_graph.find(k.name);
        if (it != ctx.mu_for_graph.end()) {
          out += opaque_cycle(it->second) * c;
        } else if (!ctx.h1s_zero && !ctx.pic0_gens.empty()) {
          throw Error(Errc::MissingRule, "no mu table registered for morphism " + k.name);
        }
        // H1(S) = 0 or Pic0(C) = 0: the rigid group is trivial.
        break;
      }
      case TermKey::GraphSlice:
        throw Error(Errc::Grading, "unexpected graph slice in codim 2");
      case TermKey::OpaqueTensor: {
        if (k.op_codim != 1)
          throw Error(Errc::MissingRule,
                      "cannot read off mu from opaque term " + k.str());
        if (k.c.kind != CurvePrim::Fund) break;      // hom-trivial, no rigid part
        if (k.s.kind == SurfPrim::Pic0S) break;      // hom-trivial factor
        if (k.s.kind != SurfPrim::NS)
          throw Error(Errc::Grading, "unexpected opaque term in codim 2: " + k.str());
        fv_add(opaque_ns[k.name], FormalVec{{k.s.name, c}});
        break;
      }
    }
  }
  for (const auto& [name, v] : opaque_ns) {
    if (fv_zero(v)) continue;
    // v must be a rational multiple of xi; the quotient is the mu coefficient.
    Rat lambda = 0;
    for (const auto& [h, x] : ctx.xi) {
      if (x != 0) {
        auto it = v.find(h);
        lambda = (it == v.end() ? Rat(0) : it->second) / x;
        break;
      }
    }
    if (!(v == fv_scale(ctx.xi, lambda)))
      throw Error(Errc::MissingRule, "opaque term " + name +
                                         " is not paired against a multiple of xi");
    out += opaque_cycle(name) * lambda;
  }
  return out;
}

/// Projection of an algebraic-cohomology class onto the product components:
/// C (.) alpha_*(eta), eta (.) alpha_*(C), and in codim 2 the mu_alpha . xi
/// part.  The remainder is the rigid component.
inline DecompositionReport project_A(const CycleExpr& alpha, int i, const GeometryContext& ctx) {
  if (i != 1 && i != 2) throw Error(Errc::Domain, "project_A defined for codim 1 and 2 only");
  if (!alpha.is_zero() && alpha.codim() != i)
    throw Error(Errc::Grading, "expression codim does not match the requested projection");
  DecompositionReport rep;
  rep.input = alpha;
  CurveClass eta = ctx.eta();
  CycleExpr c_part = tensor(CurveClass::fundamental(), apply_lower(alpha, eta, ctx));
  CycleExpr e_part = tensor(eta, apply_lower(alpha, CurveClass::fundamental(), ctx));
  rep.components["C-part"] = c_part;
  rep.components["eta-part"] = e_part;
  CycleExpr rest = alpha - c_part - e_part;
  if (i == 2) {
    CycleExpr mu = mu_of(alpha, ctx);
    CycleExpr mu_part = intersect(mu, tensor(CurveClass::fundamental(), ctx.xi_class()), ctx);
    rep.components["mu-part"] = mu_part;
    rest = rest - mu_part;
  }
  rep.components["rigid"] = rest;
  rep.residual = CycleExpr::zero(i);
  return rep;
}

struct BiprimitivityResult {
  CurveClass upper_xi;    // alpha^*(xi)
  SurfaceClass lower_eta; // alpha_*(eta)
  SurfaceClass lower_c;   // alpha_*(C)

  bool all_zero() const {
    return upper_xi.is_zero() && lower_eta.is_zero() && lower_c.is_zero();
  }
};

inline BiprimitivityResult biprimitivity_test(const CycleExpr& alpha, const GeometryContext& ctx) {
  BiprimitivityResult r;
  r.upper_xi = apply_upper(alpha, ctx.xi_class(), ctx);
  r.lower_eta = apply_lower(alpha, ctx.eta(), ctx);
  r.lower_c = apply_lower(alpha, CurveClass::fundamental(), ctx);
  return r;
}

/// Retraction of Ch^2(X) onto the bi-primitive subgroup:
///   alpha - C (.) alpha_*(eta) - eta (.) alpha_*(C) - mu_alpha . xi
///         - (alpha^*(xi) - (deg alpha^*xi) eta) (.) xi-vee.
inline CycleExpr retract_biprimitive(const CycleExpr& alpha, const GeometryContext& ctx) {
  if (alpha.is_zero()) return alpha;
  if (alpha.codim() != 2)
    throw Error(Errc::Grading, "retract_biprimitive needs a codim-2 expression");
  SurfaceClass xi_vee = ctx.xi_dual();
  CurveClass eta = ctx.eta();
  CycleExpr r = alpha;
  r = r - tensor(CurveClass::fundamental(), apply_lower(alpha, eta, ctx));
  r = r - tensor(eta, apply_lower(alpha, CurveClass::fundamental(), ctx));
  CycleExpr mu = mu_of(alpha, ctx);
  r = r - intersect(mu, tensor(CurveClass::fundamental(), ctx.xi_class()), ctx);
  CurveClass up = apply_upper(alpha, ctx.xi_class(), ctx);
  r = r - tensor(up - eta * up.deg, xi_vee);
  return r;
}

struct Ns0Projection {
  std::vector<FormalVec> basis;          // the supplied NS(S)_0 basis
  std::vector<CurveClass> coefficients;  // alpha^*(h_i)
  std::vector<CycleExpr> components;     // alpha^*(h_i) (.) h_i-vee
  CycleExpr component_sum;
  CycleExpr remainder;
};

/// Projection of a bi-primitive class onto the NS(S)_0 tensor part:
/// alpha -> sum_i alpha^*(h_i) (.) h_i-vee, with the dual basis taken under
/// the restricted Gram form.
inline Ns0Projection project_ns0(const CycleExpr& alpha, const std::vector<FormalVec>& basis,
                                 const GeometryContext& ctx) {
  if (!alpha.is_zero() && alpha.codim() != 2)
    throw Error(Errc::Grading, "project_ns0 needs a codim-2 expression");
  for (const auto& h : basis)
    if (ctx.ns_pair(h, ctx.xi) != 0)
      throw Error(Errc::Validation, "NS0 basis element is not orthogonal to xi");
  std::size_t n = basis.size();
  RatMat g0(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g0(i, j) = ctx.ns_pair(basis[i], basis[j]);
  RatMat inv = g0.inverse();  // Polarization error when the restriction degenerates

  Ns0Projection out;
  out.basis = basis;
  out.component_sum = CycleExpr::zero(2);
  for (std::size_t j = 0; j < n; ++j) {
    CurveClass coeff = apply_upper(alpha, SurfaceClass::divisor(basis[j]), ctx);
    FormalVec dual;  // h_j-vee = sum_k inv(k,j) h_k
    for (std::size_t k = 0; k < n; ++k) fv_add(dual, basis[k], inv(k, j));
    CycleExpr comp = tensor(coeff, SurfaceClass::divisor(dual));
    out.coefficients.push_back(coeff);
    out.components.push_back(comp);
    out.component_sum += comp;
  }
  out.remainder = alpha - out.component_sum;
  return out;
}

/// Product morphism (f_C, f_S): C' x S' -> C x S given by its action
/// matrices.  Pullback is termwise on tensor expressions; graph and opaque
/// terms have no transported rule table and are rejected.
struct ProductMorphism {
  CurveClass curve_pt;                          // f_C^* of the reference point
  std::map<std::string, FormalVec> curve_pic0;  // Pic0(C) gen -> Pic0(C') vector
  std::map<std::string, SurfaceClass> surf_ns;     // NS gen -> f_S^* class
  std::map<std::string, SurfaceClass> surf_pic0s;  // Pic0(S) gen -> f_S^* class
  SurfaceClass surf_pt;                            // f_S^* of the reference point
  std::map<std::string, SurfaceClass> surf_alb;    // Alb gen -> f_S^* class

  CurveClass pull_curve(const CurvePrim& p) const {
    switch (p.kind) {
      case CurvePrim::Fund: return CurveClass::fundamental();
      case CurvePrim::Pt: return curve_pt;
      default: {
        auto it = curve_pic0.find(p.name);
        if (it == curve_pic0.end())
          throw Error(Errc::MissingRule, "no pullback for Pic0 generator " + p.name);
        return CurveClass::divisor(Rat(0), it->second);
      }
    }
  }

  SurfaceClass pull_surf(const SurfPrim& p) const {
    auto find = [](const std::map<std::string, SurfaceClass>& m, const std::string& k,
                   const char* what) -> const SurfaceClass& {
      auto it = m.find(k);
      if (it == m.end()) throw Error(Errc::MissingRule, std::string("no pullback for ") + what + " " + k);
      return it->second;
    };
    switch (p.kind) {
      case SurfPrim::Fund: return SurfaceClass::fundamental();
      case SurfPrim::NS: return find(surf_ns, p.name, "NS element");
      case SurfPrim::Pic0S: return find(surf_pic0s, p.name, "Pic0(S) generator");
      case SurfPrim::PtS: return surf_pt;
      default: return find(surf_alb, p.name, "Alb generator");
    }
  }

  CycleExpr pull(const CycleExpr& x) const {
    CycleExpr out(x.codim());
    for (const auto& [k, c] : x.terms()) {
      if (k.kind != TermKey::Tensor)
        throw Error(Errc::PartialProduct, "pullback undefined for term " + k.str());
      out += tensor(pull_curve(k.c), pull_surf(k.s)) * c;
    }
    return out;
  }
};

}  // namespace cxs
