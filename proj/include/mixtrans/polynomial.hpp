#pragma once

#include <vector>

#include "mixtrans/vec2.hpp"

namespace mixtrans {

// Dense bivariate polynomial sum_{i,j} c[i][j] x^i y^j.  Used for the shipped
// metric families and for manufacturing smooth test fields; products and
// derivatives stay exact so boundary-vanishing factors like (1 - |x|^2) do
// not introduce quadrature artifacts.
class Poly2 {
 public:
  Poly2() : deg_(0), c_(1, 0.0) {}

  static Poly2 constant(double v) {
    Poly2 p;
    p.c_[0] = v;
    return p;
  }

  // coeffs[i][j] multiplies x^i y^j; rows may be ragged.
  static Poly2 from_coeffs(const std::vector<std::vector<double>>& coeffs);

  double eval(Vec2 p) const;

  Poly2 dx() const;
  Poly2 dy() const;

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 scaled(double s) const;

  int degree() const { return deg_; }
  double coeff(int i, int j) const {
    return (i <= deg_ && j <= deg_) ? c_[static_cast<size_t>(i) * (deg_ + 1) + j] : 0.0;
  }
  std::vector<std::vector<double>> coeff_rows() const;

 private:
  explicit Poly2(int deg) : deg_(deg), c_(static_cast<size_t>(deg + 1) * (deg + 1), 0.0) {}

  double& at(int i, int j) { return c_[static_cast<size_t>(i) * (deg_ + 1) + j]; }

  int deg_;
  std::vector<double> c_;  // (deg+1) x (deg+1), row i = power of x
};

}  // namespace mixtrans
