#pragma once

#include "euler_pencil/quadext.hpp"

namespace ep {

template <class T>
struct Matrix2 {
  T e11{}, e12{}, e21{}, e22{};

  static Matrix2 identity() { return {T(1), T(0), T(0), T(1)}; }
  static Matrix2 scalar(const T& s) { return {s, T(0), T(0), s}; }

  T trace() const { return e11 + e22; }
  T det() const { return e11 * e22 - e12 * e21; }
  Matrix2 adj() const { return {e22, -e12, -e21, e11}; }
  Matrix2 transpose() const { return {e11, e21, e12, e22}; }

  friend Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
    return {a.e11 + b.e11, a.e12 + b.e12, a.e21 + b.e21, a.e22 + b.e22};
  }
  friend Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
    return {a.e11 - b.e11, a.e12 - b.e12, a.e21 - b.e21, a.e22 - b.e22};
  }
  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
            a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
  }
  friend Matrix2 operator*(const T& s, const Matrix2& a) { return {s * a.e11, s * a.e12, s * a.e21, s * a.e22}; }
  friend bool operator==(const Matrix2& a, const Matrix2& b) {
    return a.e11 == b.e11 && a.e12 == b.e12 && a.e21 == b.e21 && a.e22 == b.e22;
  }
};

using CxMatrix2 = Matrix2<Cx>;

CxMatrix2 conj_transpose(const CxMatrix2& m);
double frobenius_norm(const CxMatrix2& m);

/// Moore-Penrose pseudoinverse; rank is decided with relative tolerance rank_tol on |det|/||M||_F^2.
CxMatrix2 pseudoinverse2(const CxMatrix2& m, double rank_tol = 1e-12);

/// Group (Drazin index-1) inverse of a rank-1 or invertible matrix.
CxMatrix2 group_inverse2(const CxMatrix2& m, double rank_tol = 1e-12);

/// Largest Frobenius residual over the four Penrose identities.
double penrose_residual(const CxMatrix2& m, const CxMatrix2& pinv);

}  // namespace ep
