#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cxs {

/// Exact rational scalar. All arithmetic in the engine is exact; no floating
/// point appears anywhere in a computation path.
using Rat = boost::multiprecision::cpp_rational;

enum class Errc {
  Grading,         // codimension out of range for the ambient space
  PartialProduct,  // no rewrite rule applies to a term pair
  MissingRule,     // an opaque generator has no registered rule table
  Normalization,   // a polarization normalization (deg eta = 1, ...) fails
  Polarization,    // deg xi^2 = 0 or a degenerate Gram restriction
  Validation,      // malformed scenario / context data
  Domain,          // hypothesis violated (d = 0, g < 2, ...)
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline Rat parse_rat(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw Error(Errc::Validation, "cannot parse rational: '" + s + "'");
  }
}

inline std::string rat_str(const Rat& r) {
  return r.str();
}

/// Sparse formal vector over named generators.
using FormalVec = std::map<std::string, Rat>;

inline void fv_add(FormalVec& dst, const FormalVec& src, const Rat& c = Rat(1)) {
  for (const auto& [k, v] : src) {
    Rat& slot = dst[k];
    slot += c * v;
    if (slot == 0) dst.erase(k);
  }
}

inline FormalVec fv_scale(const FormalVec& v, const Rat& c) {
  FormalVec out;
  if (c == 0) return out;
  for (const auto& [k, x] : v) out[k] = c * x;
  return out;
}

inline bool fv_zero(const FormalVec& v) {
  for (const auto& [k, x] : v)
    if (x != 0) return false;
  return true;
}

inline FormalVec fv_sum(const FormalVec& a, const FormalVec& b, const Rat& cb = Rat(1)) {
  FormalVec out = a;
  fv_add(out, b, cb);
  return out;
}

}  // namespace cxs
