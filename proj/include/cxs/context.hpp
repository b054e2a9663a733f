#pragma once

#include <optional>
#include <vector>

#include "cxs/classes.hpp"
#include "cxs/linpoly.hpp"
#include "cxs/ratmat.hpp"

namespace cxs {

// Names for the distinguished curve/surface primitives inside rule tables.
inline constexpr const char* kFund = "[C]";
inline constexpr const char* kPoint = "pt";
inline constexpr const char* kFundS = "[S]";
inline constexpr const char* kPointS = "ptS";

/// Rule table for an opaque codim-1 generator on X (mu_f and friends).  The
/// tables are supplied as data, never derived: the inverse polarization they
/// encode lives outside the rule system.
struct OpaqueTable {
  int codim = 1;
  // alpha_* = pi_{S*}(alpha . pi_C^* -): curve primitive -> surface class.
  // Keys: kFund, kPoint, and Pic0(C) generator names.
  std::map<std::string, SurfaceClass> lower;
  // alpha^* = pi_{C*}(alpha . pi_S^* -): surface primitive -> curve class.
  // Keys: NS basis names, kPointS, and Alb(S) generator names.
  std::map<std::string, CurveClass> upper;
};

/// One term of a declared Chow-level expansion of the graph of f into tensor
/// classes (valid for special surfaces such as P^2 and P^1 x P^1).
struct GraphExpansionTerm {
  Rat coeff = 1;
  CurveClass a;
  SurfaceClass b;
};

/// f: C -> S given by its action matrices.  [C : f(C)] = 1 throughout.
struct MorphismData {
  std::string name = "f";
  long genus = 0;
  FormalVec image_class;                         // f_*C in the NS basis
  std::map<std::string, CurveClass> pullback_ns;     // NS basis name -> f^*h
  std::map<std::string, FormalVec> pushforward_pic0; // Pic0(C) gen -> Alb(S) vector
  std::map<std::string, FormalVec> pullback_pic0s;   // Pic0(S) gen -> Pic0(C) vector
  bool birational = true;
};

/// All numeric pairing data: NS Gram, xi, Neron-Tate Gram, opaque rule
/// tables.  Immutable after construction; shared read-only between threads.
struct GeometryContext {
  // Curve side.
  std::vector<std::string> pic0_gens;
  std::map<std::string, LinPoly> nt_gram;  // key "g1|g2" with g1 <= g2

  // Surface side.
  std::vector<std::string> ns_basis;
  RatMat ns_gram;
  FormalVec xi;
  bool h1s_zero = true;
  std::vector<std::string> pic0s_gens;
  std::vector<std::string> alb_gens;
  // (pic0S gen, NS basis name) -> Alb vector of the product cycle.  The
  // polarization data behind Prop 2.3(3); supplied, never computed.
  std::map<std::string, std::map<std::string, FormalVec>> pic0s_ns_action;
  std::optional<FormalVec> omega_s;  // canonical class of S in the NS basis

  // X side.
  std::map<std::string, OpaqueTable> opaque;
  std::optional<MorphismData> morphism;
  std::map<std::string, std::string> mu_for_graph;  // morphism name -> opaque name
  std::vector<GraphExpansionTerm> graph_expansion;

  // ---- lookups -----------------------------------------------------------

  static std::string nt_key(const std::string& a, const std::string& b) {
    return a <= b ? a + "|" + b : b + "|" + a;
  }

  LinPoly nt_entry(const std::string& a, const std::string& b) const {
    auto it = nt_gram.find(nt_key(a, b));
    if (it == nt_gram.end())
      throw Error(Errc::MissingRule, "no Neron-Tate entry for (" + a + ", " + b + ")");
    return it->second;
  }

  /// <u, v>_NT for Pic0(C) vectors.
  LinPoly nt_pair(const FormalVec& u, const FormalVec& v) const {
    LinPoly out;
    for (const auto& [a, ca] : u)
      for (const auto& [b, cb] : v) {
        if (ca == 0 || cb == 0) continue;
        out += nt_entry(a, b) * (ca * cb);
      }
    return out;
  }

  std::size_t ns_index(const std::string& name) const {
    for (std::size_t i = 0; i < ns_basis.size(); ++i)
      if (ns_basis[i] == name) return i;
    throw Error(Errc::Validation, "unknown NS basis element: " + name);
  }

  Rat ns_entry(const std::string& a, const std::string& b) const {
    return ns_gram(ns_index(a), ns_index(b));
  }

  /// <u, v>_NS for NS vectors.
  Rat ns_pair(const FormalVec& u, const FormalVec& v) const {
    Rat out = 0;
    for (const auto& [a, ca] : u)
      for (const auto& [b, cb] : v) out += ns_entry(a, b) * ca * cb;
    return out;
  }

  Rat deg_xi2() const { return ns_pair(xi, xi); }

  SurfaceClass xi_class() const { return SurfaceClass::divisor(xi); }

  /// xi-vee = xi / deg xi^2.
  SurfaceClass xi_dual() const {
    Rat d = deg_xi2();
    if (d == 0) throw Error(Errc::Polarization, "deg xi^2 = 0");
    return SurfaceClass::divisor(fv_scale(xi, Rat(1) / d));
  }

  const MorphismData& f() const {
    if (!morphism) throw Error(Errc::MissingRule, "no morphism registered in context");
    return *morphism;
  }

  const OpaqueTable& opaque_table(const std::string& name) const {
    auto it = opaque.find(name);
    if (it == opaque.end())
      throw Error(Errc::MissingRule, "no rule table registered for opaque generator " + name);
    return it->second;
  }

  const std::string& mu_name() const {
    auto it = mu_for_graph.find(f().name);
    if (it == mu_for_graph.end())
      throw Error(Errc::MissingRule, "no mu table registered for morphism " + f().name);
    return it->second;
  }

  bool has_mu() const {
    return morphism && mu_for_graph.count(morphism->name) > 0;
  }

  // ---- morphism actions --------------------------------------------------

  /// f_*: Ch^i(C) -> Ch^{i+1}(S).
  SurfaceClass f_lower(const CurveClass& c) const {
    const MorphismData& m = f();
    if (c.codim == 0) return SurfaceClass::divisor(fv_scale(m.image_class, c.fund));
    if (c.codim == 1) {
      FormalVec alb;
      for (const auto& [g, x] : c.pic0) {
        auto it = m.pushforward_pic0.find(g);
        if (it == m.pushforward_pic0.end()) {
          if (alb_gens.empty()) continue;  // Alb(S) = 0
          throw Error(Errc::MissingRule, "no f_* action for Pic0 generator " + g);
        }
        fv_add(alb, it->second, x);
      }
      return SurfaceClass::point(c.deg, alb);  // [C : f(C)] = 1
    }
    return SurfaceClass::zero(3);
  }

  /// f^*: Ch^i(S) -> Ch^i(C).
  CurveClass f_upper(const SurfaceClass& b) const {
    const MorphismData& m = f();
    if (b.codim == 0) return CurveClass::fundamental(b.fund);
    if (b.codim == 2) return CurveClass::zero(2);
    CurveClass out = CurveClass::zero(1);
    for (const auto& [h, x] : b.ns) {
      auto it = m.pullback_ns.find(h);
      if (it == m.pullback_ns.end())
        throw Error(Errc::MissingRule, "no f^* action for NS element " + h);
      out += it->second * x;
    }
    for (const auto& [q, x] : b.pic0s) {
      auto it = m.pullback_pic0s.find(q);
      if (it == m.pullback_pic0s.end())
        throw Error(Errc::MissingRule, "no f^* action for Pic0(S) generator " + q);
      out += CurveClass::divisor(Rat(0), fv_scale(it->second, x));
    }
    return out;
  }

  /// eta := f^* xi.
  CurveClass eta() const { return f_upper(xi_class()); }

  // ---- validation --------------------------------------------------------

  void validate() const {
    if (!ns_gram.is_symmetric()) throw Error(Errc::Validation, "NS Gram matrix is not symmetric");
    if (ns_gram.rows() != ns_basis.size())
      throw Error(Errc::Validation, "NS Gram size does not match basis");
    for (const auto& [k, v] : nt_gram) {
      (void)k;
      (void)v;  // symmetry is structural (canonical keys)
    }
    // NT PSD proxy via leading principal minors (numeric entries only).
    bool numeric = true;
    for (const auto& [k, v] : nt_gram)
      if (!v.is_constant()) numeric = false;
    if (numeric && !pic0_gens.empty()) {
      RatMat g(pic0_gens.size(), pic0_gens.size());
      for (std::size_t i = 0; i < pic0_gens.size(); ++i)
        for (std::size_t j = 0; j < pic0_gens.size(); ++j) {
          auto it = nt_gram.find(nt_key(pic0_gens[i], pic0_gens[j]));
          if (it != nt_gram.end()) g(i, j) = it->second.constant();
        }
      if (!g.psd_leading_minors())
        throw Error(Errc::Validation, "Neron-Tate Gram matrix is not positive semidefinite");
    }
    if (deg_xi2() <= 0) throw Error(Errc::Validation, "xi.xi <= 0: not an ample class");
    if (h1s_zero && !(pic0s_gens.empty() && alb_gens.empty()))
      throw Error(Errc::Validation, "H1(S)=0 flag set but Pic0(S)/Alb(S) generators declared");
    for (const auto& [h, x] : xi) {
      (void)x;
      ns_index(h);  // referential integrity
    }
    if (morphism) {
      for (const auto& [h, x] : morphism->image_class) {
        (void)x;
        ns_index(h);
      }
      // deg f^*h = h . f_*C for every declared pullback column.
      for (const auto& [h, c] : morphism->pullback_ns) {
        FormalVec e{{h, Rat(1)}};
        if (c.deg != ns_pair(e, morphism->image_class))
          throw Error(Errc::Validation, "deg f^*" + h + " does not match <" + h + ", f_*C>_NS");
      }
      // Adjunction cross-check when omega_S is known:
      //   (f_*C)^2 = (2g-2) - omega_S . f_*C.
      if (omega_s) {
        Rat lhs = ns_pair(morphism->image_class, morphism->image_class);
        Rat rhs = Rat(2 * morphism->genus - 2) - ns_pair(*omega_s, morphism->image_class);
        if (lhs != rhs)
          throw Error(Errc::Validation, "adjunction check failed: (f_*C)^2 != (2g-2) - omega_S.f_*C");
      }
    }
  }

  /// Alb vector of q . h for a Pic0(S) generator q and NS basis element h.
  FormalVec pic0s_ns(const std::string& q, const std::string& h) const {
    auto itq = pic0s_ns_action.find(q);
    if (itq != pic0s_ns_action.end()) {
      auto ith = itq->second.find(h);
      if (ith != itq->second.end()) return ith->second;
    }
    throw Error(Errc::PartialProduct,
                "no rule for the product " + q + " . " + h + " (Pic0(S) x NS)");
  }
};

/// Intersection on S.  NS x NS lands in pure degree; Pic0(S) x NS resolves
/// through the registered polarization data; Pic0(S) x Pic0(S) has trivial
/// Abel-Jacobi image (the cup product of two trivial cohomology classes) and
/// is rewritten to zero.
inline SurfaceClass surface_intersect(const SurfaceClass& a, const SurfaceClass& b,
                                      const GeometryContext& ctx) {
  int cd = a.codim + b.codim;
  if (cd >= 3) return SurfaceClass::zero(cd > 4 ? 4 : cd);
  if (a.codim == 0) return b * a.fund;
  if (b.codim == 0) return a * b.fund;
  // codim 1 x codim 1.
  Rat deg = ctx.ns_pair(a.ns, b.ns);
  FormalVec alb;
  for (const auto& [q, cq] : a.pic0s)
    for (const auto& [h, ch] : b.ns)
      if (cq != 0 && ch != 0) fv_add(alb, ctx.pic0s_ns(q, h), cq * ch);
  for (const auto& [q, cq] : b.pic0s)
    for (const auto& [h, ch] : a.ns)
      if (cq != 0 && ch != 0) fv_add(alb, ctx.pic0s_ns(q, h), cq * ch);
  // pic0s x pic0s: AJ = 0 (Lemma-level rewrite); contributes nothing.
  return SurfaceClass::point(deg, alb);
}

/// Checks the two defining identities of a mu table against the context:
///   mu^*(xi^2) = 0  and  mu_*(p) . xi = f_*(p) - f_* eta  in Alb(S).
inline void check_mu_identities(const GeometryContext& ctx, const std::string& mu) {
  const OpaqueTable& t = ctx.opaque_table(mu);
  auto lower = [&](const std::string& key, int codim) -> SurfaceClass {
    auto it = t.lower.find(key);
    return it == t.lower.end() ? SurfaceClass::zero(codim) : it->second;
  };
  // mu^*(xi^2) = 0: xi^2 is a pure-degree 0-cycle, so this reads through the
  // kPointS column of the upper table.
  auto itp = t.upper.find(kPointS);
  if (itp != t.upper.end() && !(itp->second * ctx.deg_xi2()).is_zero())
    throw Error(Errc::Validation, "mu table violates mu^*(xi^2) = 0");
  CurveClass eta = ctx.eta();
  // On Pic0(C): mu_*(v) . xi = f_*(v).
  for (const auto& g : ctx.pic0_gens) {
    SurfaceClass lhs = surface_intersect(lower(g, 1), ctx.xi_class(), ctx);
    SurfaceClass rhs = ctx.f_lower(CurveClass::divisor(Rat(0), FormalVec{{g, Rat(1)}}));
    if (!(lhs - rhs).is_zero())
      throw Error(Errc::Validation, "mu table violates mu_*(p).xi = f_*p - f_*eta at " + g);
  }
  // At the reference point: mu_*(eta) . xi = 0, i.e. mu_*(pt).xi = -f_*(pic0 eta).
  SurfaceClass at_pt = surface_intersect(lower(kPoint, 1), ctx.xi_class(), ctx);
  SurfaceClass want = ctx.f_lower(CurveClass::divisor(Rat(0), eta.pic0)) * Rat(-1);
  if (!(at_pt - want).is_zero())
    throw Error(Errc::Validation, "mu table violates mu_*(eta).xi = 0");
}

}  // namespace cxs
