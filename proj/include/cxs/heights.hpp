#pragma once

#include "cxs/linpoly.hpp"

namespace cxs {

/// Pairing data on the rank-3 lattice {w, F, s} of the relative curve, with
/// w the relative dualizing class, F the fiber class, and s the pulled-back
/// surface dualizing class.  w.F = 2g-2 and F.F = 0 are structural; the
/// remaining entries may stay symbolic.
struct ArithSurfaceData {
  long genus = 2;
  LinPoly w2;   // w . w
  LinPoly ws;   // w . s
  LinPoly ss;   // s . s
  Rat fs = 0;   // F . s

  Rat wF() const { return Rat(2 * genus - 2); }
  /// d = (w - s) . F.
  Rat d() const { return wF() - fs; }
};

/// Rational-linear combination of {w, F, s}.  The F coefficient may be
/// symbolic (kappa is); the w and s coefficients stay rational in every
/// computation path, which keeps all pairing products linear.
struct LatticeClass {
  LinPoly cw, cF, cs;

  friend LatticeClass operator+(const LatticeClass& a, const LatticeClass& b) {
    return {a.cw + b.cw, a.cF + b.cF, a.cs + b.cs};
  }
  friend LatticeClass operator-(const LatticeClass& a, const LatticeClass& b) {
    return {a.cw - b.cw, a.cF - b.cF, a.cs - b.cs};
  }
  friend LatticeClass operator*(const LatticeClass& a, const LinPoly& c) {
    return {a.cw * c, a.cF * c, a.cs * c};
  }
  friend bool operator==(const LatticeClass& a, const LatticeClass& b) {
    return a.cw == b.cw && a.cF == b.cF && a.cs == b.cs;
  }
  static LatticeClass w() { return {1, 0, 0}; }
  static LatticeClass F() { return {0, 1, 0}; }
  static LatticeClass s() { return {0, 0, 1}; }
  std::string str() const {
    return "(" + cw.str() + ")w + (" + cF.str() + ")F + (" + cs.str() + ")s";
  }
};

inline LinPoly lattice_pair(const LatticeClass& a, const LatticeClass& b,
                            const ArithSurfaceData& t) {
  // Gram rows ordered (w, F, s); zero entries are skipped before any product
  // so a symbolic F coefficient never multiplies a symbolic entry.
  const LinPoly* ca[3] = {&a.cw, &a.cF, &a.cs};
  const LinPoly* cb[3] = {&b.cw, &b.cF, &b.cs};
  LinPoly gram[3][3] = {{t.w2, t.wF(), t.ws}, {t.wF(), 0, t.fs}, {t.ws, t.fs, t.ss}};
  LinPoly out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (gram[i][j].is_zero() || ca[i]->is_zero() || cb[j]->is_zero()) continue;
      out += (*ca[i]) * (*cb[j]) * gram[i][j];
    }
  return out;
}

inline void require_d(const ArithSurfaceData& t) {
  if (t.d() == 0)
    throw Error(Errc::Domain, "deg f^* f_* C = 0; the unramified height formula assumes d != 0");
}

/// kappa = -(1/2d^2) (w - s)^2, the F correction making ebar^2 = 0.
inline LinPoly kappa(const ArithSurfaceData& t) {
  require_d(t);
  Rat d = t.d();
  LinPoly q = t.w2 - t.ws * Rat(2) + t.ss;  // (w - s)^2
  return q * (Rat(-1) / (2 * d * d));
}

/// ebar = (w - s)/d + kappa F; satisfies ebar^2 = 0 and ebar . F = 1.
inline LatticeClass ebar(const ArithSurfaceData& t) {
  require_d(t);
  Rat d = t.d();
  return {LinPoly(Rat(1) / d), kappa(t), LinPoly(Rat(-1) / d)};
}

/// p_{2*}(delta . delta) for delta = Diag - e (.) C - C (.) e, expanded with
/// the diagonal self-intersection axiom Diag^* Diag = -w:
///   -w - 4e + 2 (e.F) e + (e.e) F.
inline LatticeClass expand_delta_sq(const ArithSurfaceData& t, const LatticeClass& e) {
  LinPoly eF = lattice_pair(e, LatticeClass::F(), t);
  LinPoly ee = lattice_pair(e, e, t);
  LatticeClass out = LatticeClass::w() * Rat(-1);
  out = out + e * Rat(-4);
  out = out + e * (eF * Rat(2));
  out = out + LatticeClass::F() * ee;
  return out;
}

/// p_{2*}(delta . delta) = -w - 2 ebar.  Refuses a section class with
/// e^2 != 0 or e.F != 1 rather than silently drop the correction terms.
inline LatticeClass push_delta_sq(const ArithSurfaceData& t, const LatticeClass& e) {
  if (!lattice_pair(e, e, t).is_zero())
    throw Error(Errc::Domain, "push_delta_sq requires e^2 = 0");
  if (lattice_pair(e, LatticeClass::F(), t) != LinPoly(1))
    throw Error(Errc::Domain, "push_delta_sq requires e . F = 1");
  return expand_delta_sq(t, e);
}

inline LatticeClass push_delta_sq(const ArithSurfaceData& t) { return push_delta_sq(t, ebar(t)); }

struct HeightResult {
  LinPoly closed_form;  // -(1/d) ((d+1) w - s) . (w - s)
  LinPoly proof_route;  // p_{2*}(delta^2) . (w - s)
};

/// The unramified function-field height, computed twice: by the closed form
/// and by pairing the pushed diagonal square against w - s.  The two agree
/// identically; callers may assert it.
inline HeightResult height_unramified(const ArithSurfaceData& t) {
  require_d(t);
  Rat d = t.d();
  LatticeClass wms = LatticeClass::w() - LatticeClass::s();
  LatticeClass lead = LatticeClass::w() * Rat(d + 1) - LatticeClass::s();
  HeightResult r;
  r.closed_form = lattice_pair(lead, wms, t) * (Rat(-1) / d);
  r.proof_route = lattice_pair(push_delta_sq(t), wms, t);
  return r;
}

/// K3 pairing data: s = h F, so w.s = (2g-2) h, s^2 = 0, F.s = 0.
inline ArithSurfaceData k3_data(long genus, const LinPoly& h,
                                const LinPoly& w2 = LinPoly::symbol("w2")) {
  ArithSurfaceData t;
  t.genus = genus;
  t.w2 = w2;
  t.ws = h * Rat(2 * genus - 2);
  t.ss = 0;
  t.fs = 0;
  return t;
}

/// Conjectured bound w^2 <= 4g(g-1) h / (2g-1) for a K3 pencil.
inline Rat k3_bound(long g, const Rat& h) {
  if (g < 2) throw Error(Errc::Domain, "k3_bound assumes g >= 2");
  return Rat(4 * g * (g - 1)) * h / Rat(2 * g - 1);
}

struct GrossSchoenResult {
  Rat value = 0;
  std::string note;
};

/// <gamma, gamma> for the modified diagonal on a triple product:
/// (2g+2)/(2g-2) w^2 + <x_e, x_e>_NT + local terms.  The local terms are an
/// opaque rational input.  Rational, elliptic, and hyperelliptic curves have
/// gamma = 0; hyperellipticity is a caller-supplied flag.
inline GrossSchoenResult gross_schoen_height(long g, const Rat& w2, const Rat& nt_xe,
                                             const Rat& local_terms, bool hyperelliptic = false) {
  if (g <= 1 || hyperelliptic) {
    return {Rat(0), "gamma = 0: the curve is rational, elliptic, or hyperelliptic"};
  }
  GrossSchoenResult r;
  r.value = Rat(2 * g + 2) * w2 / Rat(2 * g - 2) + nt_xe + local_terms;
  return r;
}

}  // namespace cxs
