#pragma once

#include <sstream>

#include "cxs/common.hpp"

namespace cxs {

/// Affine-linear combination of named symbols with exact rational
/// coefficients.  Used wherever a pairing value may stay symbolic (Neron-Tate
/// entries, omega^2, the K3 canonical height h).  Products are only defined
/// when one factor is constant; anything further would leave the linear
/// fragment and is rejected.
class LinPoly {
 public:
  LinPoly() = default;
  LinPoly(const Rat& c) : c0_(c) {}                // NOLINT: implicit on purpose
  LinPoly(long c) : c0_(c) {}                      // NOLINT
  static LinPoly symbol(const std::string& name, const Rat& coeff = Rat(1)) {
    LinPoly p;
    if (coeff != 0) p.terms_[name] = coeff;
    return p;
  }

  /// Accepts either a rational literal "p/q" or a bare symbol name.
  static LinPoly parse(const std::string& s) {
    if (s.empty()) throw Error(Errc::Validation, "empty value");
    char c = s[0];
    if (c == '-' || c == '+' || (c >= '0' && c <= '9')) return LinPoly(parse_rat(s));
    return symbol(s);
  }

  bool is_constant() const { return terms_.empty(); }
  bool is_zero() const { return c0_ == 0 && terms_.empty(); }
  const Rat& constant() const { return c0_; }
  const FormalVec& terms() const { return terms_; }

  Rat coeff(const std::string& name) const {
    auto it = terms_.find(name);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  LinPoly& operator+=(const LinPoly& o) {
    c0_ += o.c0_;
    fv_add(terms_, o.terms_);
    return *this;
  }
  LinPoly& operator-=(const LinPoly& o) {
    c0_ -= o.c0_;
    fv_add(terms_, o.terms_, Rat(-1));
    return *this;
  }
  LinPoly& operator*=(const Rat& c) {
    c0_ *= c;
    terms_ = fv_scale(terms_, c);
    return *this;
  }

  friend LinPoly operator+(LinPoly a, const LinPoly& b) { return a += b; }
  friend LinPoly operator-(LinPoly a, const LinPoly& b) { return a -= b; }
  friend LinPoly operator-(const LinPoly& a) {
    LinPoly r = a;
    r *= Rat(-1);
    return r;
  }
  friend LinPoly operator*(LinPoly a, const Rat& c) { return a *= c; }
  friend LinPoly operator*(const Rat& c, LinPoly a) { return a *= c; }

  friend LinPoly operator*(const LinPoly& a, const LinPoly& b) {
    if (a.is_constant()) {
      LinPoly r = b;
      r *= a.c0_;
      return r;
    }
    if (b.is_constant()) {
      LinPoly r = a;
      r *= b.c0_;
      return r;
    }
    throw Error(Errc::PartialProduct, "nonlinear symbol product: (" + a.str() + ") * (" + b.str() + ")");
  }

  friend LinPoly operator/(LinPoly a, const Rat& c) {
    if (c == 0) throw Error(Errc::Domain, "division by zero");
    a *= Rat(1) / c;
    return a;
  }

  friend bool operator==(const LinPoly& a, const LinPoly& b) {
    return a.c0_ == b.c0_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LinPoly& a, const LinPoly& b) { return !(a == b); }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (c0_ != 0) {
      os << rat_str(c0_);
      first = false;
    }
    for (const auto& [name, c] : terms_) {
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      Rat a = abs(c);
      if (a != 1) os << rat_str(a) << "*";
      os << name;
    }
    return os.str();
  }

 private:
  Rat c0_ = 0;
  FormalVec terms_;
};

}  // namespace cxs
