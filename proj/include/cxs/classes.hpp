#pragma once

#include <sstream>

#include "cxs/common.hpp"

namespace cxs {

/// Formal cycle class on the curve C, graded by codimension.
///
/// codim 0: rational multiple of [C].
/// codim 1: determined by (degree, Pic0 vector over named generators).
/// codim 2: identically zero (beyond the dimension of C); kept so graded
///          vanishing is an exact statement rather than an error.
struct CurveClass {
  int codim = 1;
  Rat fund = 0;    // codim 0
  Rat deg = 0;     // codim 1
  FormalVec pic0;  // codim 1

  static CurveClass fundamental(const Rat& c = Rat(1)) {
    CurveClass x;
    x.codim = 0;
    x.fund = c;
    return x;
  }
  static CurveClass divisor(const Rat& deg, FormalVec pic0 = {}) {
    CurveClass x;
    x.codim = 1;
    x.deg = deg;
    x.pic0 = std::move(pic0);
    return x;
  }
  static CurveClass point(const Rat& deg = Rat(1)) { return divisor(deg); }
  static CurveClass zero(int codim) {
    CurveClass x;
    x.codim = codim;
    return x;
  }

  bool is_zero() const { return fund == 0 && deg == 0 && fv_zero(pic0); }

  CurveClass& operator+=(const CurveClass& o) {
    if (is_zero()) codim = o.codim;
    else if (!o.is_zero() && codim != o.codim)
      throw Error(Errc::Grading, "adding curve classes of different codimension");
    fund += o.fund;
    deg += o.deg;
    fv_add(pic0, o.pic0);
    return *this;
  }
  friend CurveClass operator+(CurveClass a, const CurveClass& b) { return a += b; }
  friend CurveClass operator-(CurveClass a, const CurveClass& b) { return a += (b * Rat(-1)); }
  friend CurveClass operator*(const CurveClass& a, const Rat& c) {
    CurveClass r = a;
    r.fund *= c;
    r.deg *= c;
    r.pic0 = fv_scale(r.pic0, c);
    return r;
  }
  friend CurveClass operator*(const Rat& c, const CurveClass& a) { return a * c; }
  friend bool operator==(const CurveClass& a, const CurveClass& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.codim == b.codim && a.fund == b.fund && a.deg == b.deg && a.pic0 == b.pic0;
  }

  std::string str() const {
    std::ostringstream os;
    if (codim == 0) {
      os << rat_str(fund) << "*[C]";
      return os.str();
    }
    os << "(deg " << rat_str(deg);
    for (const auto& [g, c] : pic0) os << " + " << rat_str(c) << "*" << g;
    os << ")";
    return os.str();
  }
};

/// Intersection on C: dim C = 1, so anything past codim 1 is exactly zero.
inline CurveClass curve_intersect(const CurveClass& a, const CurveClass& b) {
  int cd = a.codim + b.codim;
  if (cd >= 2) return CurveClass::zero(2);
  if (a.codim == 0) return b * a.fund;
  return a * b.fund;
}

/// Top-degree evaluation on C (codim 1 only).
inline Rat curve_degree(const CurveClass& a) {
  if (a.codim == 0) throw Error(Errc::Grading, "degree of a codim-0 curve class");
  return a.deg;
}

/// Formal cycle class on the surface S.
///
/// codim 0: rational multiple of [S].
/// codim 1: NS vector over the named basis plus a Pic0(S) vector.
/// codim 2: (degree, Alb vector).
/// codim >= 3: identically zero.
struct SurfaceClass {
  int codim = 1;
  Rat fund = 0;     // codim 0
  FormalVec ns;     // codim 1
  FormalVec pic0s;  // codim 1
  Rat deg = 0;      // codim 2
  FormalVec alb;    // codim 2

  static SurfaceClass fundamental(const Rat& c = Rat(1)) {
    SurfaceClass x;
    x.codim = 0;
    x.fund = c;
    return x;
  }
  static SurfaceClass divisor(FormalVec ns, FormalVec pic0s = {}) {
    SurfaceClass x;
    x.codim = 1;
    x.ns = std::move(ns);
    x.pic0s = std::move(pic0s);
    return x;
  }
  static SurfaceClass point(const Rat& deg, FormalVec alb = {}) {
    SurfaceClass x;
    x.codim = 2;
    x.deg = deg;
    x.alb = std::move(alb);
    return x;
  }
  static SurfaceClass zero(int codim) {
    SurfaceClass x;
    x.codim = codim;
    return x;
  }

  bool is_zero() const {
    return fund == 0 && fv_zero(ns) && fv_zero(pic0s) && deg == 0 && fv_zero(alb);
  }

  SurfaceClass& operator+=(const SurfaceClass& o) {
    if (is_zero()) codim = o.codim;
    else if (!o.is_zero() && codim != o.codim)
      throw Error(Errc::Grading, "adding surface classes of different codimension");
    fund += o.fund;
    fv_add(ns, o.ns);
    fv_add(pic0s, o.pic0s);
    deg += o.deg;
    fv_add(alb, o.alb);
    return *this;
  }
  friend SurfaceClass operator+(SurfaceClass a, const SurfaceClass& b) { return a += b; }
  friend SurfaceClass operator-(SurfaceClass a, const SurfaceClass& b) { return a += (b * Rat(-1)); }
  friend SurfaceClass operator*(const SurfaceClass& a, const Rat& c) {
    SurfaceClass r = a;
    r.fund *= c;
    r.ns = fv_scale(r.ns, c);
    r.pic0s = fv_scale(r.pic0s, c);
    r.deg *= c;
    r.alb = fv_scale(r.alb, c);
    return r;
  }
  friend SurfaceClass operator*(const Rat& c, const SurfaceClass& a) { return a * c; }
  friend bool operator==(const SurfaceClass& a, const SurfaceClass& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.codim == b.codim && a.fund == b.fund && a.ns == b.ns && a.pic0s == b.pic0s &&
           a.deg == b.deg && a.alb == b.alb;
  }

  std::string str() const {
    std::ostringstream os;
    if (codim == 0) return rat_str(fund) + "*[S]";
    if (codim == 1) {
      os << "(";
      bool first = true;
      for (const auto& [g, c] : ns) {
        if (!first) os << " + ";
        os << rat_str(c) << "*" << g;
        first = false;
      }
      for (const auto& [g, c] : pic0s) {
        if (!first) os << " + ";
        os << rat_str(c) << "*" << g;
        first = false;
      }
      if (first) os << "0";
      os << ")";
      return os.str();
    }
    os << "(deg " << rat_str(deg);
    for (const auto& [g, c] : alb) os << " + " << rat_str(c) << "*" << g;
    os << ")";
    return os.str();
  }
};

inline Rat surface_degree(const SurfaceClass& a) {
  if (a.codim != 2) throw Error(Errc::Grading, "degree of a non-top surface class");
  return a.deg;
}

}  // namespace cxs
