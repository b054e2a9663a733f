#pragma once

#include <vector>

#include "cxs/common.hpp"

namespace cxs {

/// Small dense matrix over exact rationals.  Just enough linear algebra for
/// Gram matrices and dual bases; nothing here is performance critical.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static RatMat identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const RatMat& a, const RatMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<Rat> mul(const std::vector<Rat>& v) const {
    std::vector<Rat> out(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  RatMat mul(const RatMat& o) const {
    RatMat out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k)
        if ((*this)(i, k) != 0)
          for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += (*this)(i, k) * o(k, j);
    return out;
  }

  Rat det() const {
    if (rows_ != cols_) throw Error(Errc::Validation, "det of non-square matrix");
    RatMat a = *this;
    Rat d = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t piv = col;
      while (piv < rows_ && a(piv, col) == 0) ++piv;
      if (piv == rows_) return Rat(0);
      if (piv != col) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(a(piv, j), a(col, j));
        d = -d;
      }
      d *= a(col, col);
      for (std::size_t i = col + 1; i < rows_; ++i) {
        if (a(i, col) == 0) continue;
        Rat f = a(i, col) / a(col, col);
        for (std::size_t j = col; j < cols_; ++j) a(i, j) -= f * a(col, j);
      }
    }
    return d;
  }

  /// Gauss-Jordan inverse; throws Errc::Polarization when singular.
  RatMat inverse() const {
    if (rows_ != cols_) throw Error(Errc::Validation, "inverse of non-square matrix");
    std::size_t n = rows_;
    RatMat a = *this;
    RatMat inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a(piv, col) == 0) ++piv;
      if (piv == n) throw Error(Errc::Polarization, "singular Gram matrix");
      if (piv != col)
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(piv, j), a(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      Rat p = a(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) /= p;
        inv(col, j) /= p;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a(i, col) == 0) continue;
        Rat f = a(i, col);
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) -= f * a(col, j);
          inv(i, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

  Rat leading_minor(std::size_t k) const {
    RatMat sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = (*this)(i, j);
    return sub.det();
  }

  /// PSD proxy via leading principal minors: all >= 0.
  bool psd_leading_minors() const {
    for (std::size_t k = 1; k <= rows_; ++k)
      if (leading_minor(k) < 0) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

}  // namespace cxs
