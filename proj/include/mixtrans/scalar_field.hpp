#pragma once

#include <functional>
#include <utility>

#include "mixtrans/polynomial.hpp"
#include "mixtrans/vec2.hpp"

namespace mixtrans {

// Scalar function on the closed unit disk together with its spatial partials.
// Gradients are analytic closures when available and central finite
// differences (step 1e-5, one Richardson refinement) otherwise; the flag
// records which, so derivative-sensitive checks can pick their tolerance.
struct ScalarField {
  std::function<double(Vec2)> value;
  std::function<Vec2(Vec2)> gradient;
  bool analytic_gradient = false;

  ScalarField() = default;
  ScalarField(std::function<double(Vec2)> v, std::function<Vec2(Vec2)> g, bool analytic)
      : value(std::move(v)), gradient(std::move(g)), analytic_gradient(analytic) {}

  static ScalarField zero();
  static ScalarField constant(double c);
  static ScalarField from_poly(const Poly2& p);
  // Finite-difference gradient fallback.
  static ScalarField from_function(std::function<double(Vec2)> f);

  double operator()(Vec2 p) const { return value(p); }
};

// Central difference with one Richardson step: (4 D_h/2 - D_h) / 3.
Vec2 fd_gradient(const std::function<double(Vec2)>& f, Vec2 p, double h = 1e-5);

inline ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return {[av = a.value, bv = b.value](Vec2 p) { return av(p) + bv(p); },
          [ag = a.gradient, bg = b.gradient](Vec2 p) { return ag(p) + bg(p); },
          a.analytic_gradient && b.analytic_gradient};
}

inline ScalarField scaled(const ScalarField& a, double s) {
  return {[av = a.value, s](Vec2 p) { return s * av(p); },
          [ag = a.gradient, s](Vec2 p) { return s * ag(p); }, a.analytic_gradient};
}

}  // namespace mixtrans
