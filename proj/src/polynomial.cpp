#include "mixtrans/polynomial.hpp"

#include <algorithm>

namespace mixtrans {

Poly2 Poly2::from_coeffs(const std::vector<std::vector<double>>& coeffs) {
  int deg = 0;
  for (size_t i = 0; i < coeffs.size(); ++i)
    for (size_t j = 0; j < coeffs[i].size(); ++j)
      if (coeffs[i][j] != 0.0) deg = std::max(deg, static_cast<int>(std::max(i, j)));
  Poly2 p(deg);
  for (size_t i = 0; i < coeffs.size(); ++i)
    for (size_t j = 0; j < coeffs[i].size(); ++j)
      if (coeffs[i][j] != 0.0) p.at(static_cast<int>(i), static_cast<int>(j)) = coeffs[i][j];
  return p;
}

double Poly2::eval(Vec2 p) const {
  // Horner in x, inner Horner in y.
  double acc = 0.0;
  for (int i = deg_; i >= 0; --i) {
    double row = 0.0;
    for (int j = deg_; j >= 0; --j) row = row * p.y + c_[static_cast<size_t>(i) * (deg_ + 1) + j];
    acc = acc * p.x + row;
  }
  return acc;
}

Poly2 Poly2::dx() const {
  if (deg_ == 0) return Poly2();
  Poly2 r(deg_ - 1);
  for (int i = 1; i <= deg_; ++i)
    for (int j = 0; j <= deg_ - 1; ++j) r.at(i - 1, j) = i * coeff(i, j);
  return r;
}

Poly2 Poly2::dy() const {
  if (deg_ == 0) return Poly2();
  Poly2 r(deg_ - 1);
  for (int i = 0; i <= deg_ - 1; ++i)
    for (int j = 1; j <= deg_; ++j) r.at(i, j - 1) = j * coeff(i, j);
  return r;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r(std::max(deg_, o.deg_));
  for (int i = 0; i <= r.deg_; ++i)
    for (int j = 0; j <= r.deg_; ++j) r.at(i, j) = coeff(i, j) + o.coeff(i, j);
  return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
  return *this + o.scaled(-1.0);
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r(deg_ + o.deg_);
  for (int i = 0; i <= deg_; ++i)
    for (int j = 0; j <= deg_; ++j) {
      double c = coeff(i, j);
      if (c == 0.0) continue;
      for (int p = 0; p <= o.deg_; ++p)
        for (int q = 0; q <= o.deg_; ++q) r.at(i + p, j + q) += c * o.coeff(p, q);
    }
  return r;
}

Poly2 Poly2::scaled(double s) const {
  Poly2 r = *this;
  for (double& c : r.c_) c *= s;
  return r;
}

std::vector<std::vector<double>> Poly2::coeff_rows() const {
  std::vector<std::vector<double>> rows(deg_ + 1, std::vector<double>(deg_ + 1, 0.0));
  for (int i = 0; i <= deg_; ++i)
    for (int j = 0; j <= deg_; ++j) rows[i][j] = coeff(i, j);
  return rows;
}

}  // namespace mixtrans
