#pragma once

#include <cmath>
#include <utility>

#include "mixtrans/geometry.hpp"

// Shared fixed-step RK4 kernels for the geodesic equation, with and without
// an augmented quadrature state.  Real = double for transform evaluation,
// long double where the checks need rounding headroom below the h^4 signal.

namespace mixtrans::detail {

constexpr double kExitTol = 1e-12;       // tolerance in |x|^2 - 1 at the exit
constexpr double kTrappedLength = 20.0;  // 10 x Euclidean diameter of the disk

template <typename Real>
struct GeoState {
  Real x1, x2, v1, v2;
};

template <typename Real>
inline GeoState<Real> geo_rhs(const ConformalMetric& m, const GeoState<Real>& s) {
  Vec2 a = m.grad_alpha({static_cast<double>(s.x1), static_cast<double>(s.x2)});
  Real av = a.x * s.v1 + a.y * s.v2;
  Real vv = s.v1 * s.v1 + s.v2 * s.v2;
  return {s.v1, s.v2, -(2.0 * av * s.v1 - vv * a.x), -(2.0 * av * s.v2 - vv * a.y)};
}

template <typename Real>
inline GeoState<Real> axpy(const GeoState<Real>& s, Real c, const GeoState<Real>& d) {
  return {s.x1 + c * d.x1, s.x2 + c * d.x2, s.v1 + c * d.v1, s.v2 + c * d.v2};
}

template <typename Real>
inline GeoState<Real> rk4_step(const ConformalMetric& m, const GeoState<Real>& s, Real h) {
  GeoState<Real> k1 = geo_rhs(m, s);
  GeoState<Real> k2 = geo_rhs(m, axpy(s, h / 2, k1));
  GeoState<Real> k3 = geo_rhs(m, axpy(s, h / 2, k2));
  GeoState<Real> k4 = geo_rhs(m, axpy(s, h, k3));
  GeoState<Real> r = s;
  r.x1 += h / 6 * (k1.x1 + 2 * k2.x1 + 2 * k3.x1 + k4.x1);
  r.x2 += h / 6 * (k1.x2 + 2 * k2.x2 + 2 * k3.x2 + k4.x2);
  r.v1 += h / 6 * (k1.v1 + 2 * k2.v1 + 2 * k3.v1 + k4.v1);
  r.v2 += h / 6 * (k1.v2 + 2 * k2.v2 + 2 * k3.v2 + k4.v2);
  return r;
}

template <typename Real>
inline Real radius_excess(const GeoState<Real>& s) {
  return s.x1 * s.x1 + s.x2 * s.x2 - Real(1);
}

// Bisection in the step fraction over the crossing step; g(0) <= 0, g(h) > 0.
template <typename Real>
std::pair<Real, GeoState<Real>> refine_exit(const ConformalMetric& m, const GeoState<Real>& s0,
                                            Real h) {
  Real lo = 0, hi = h;
  Real mid = h;
  GeoState<Real> trial = rk4_step(m, s0, h);
  for (int it = 0; it < 120; ++it) {
    mid = (lo + hi) / 2;
    trial = rk4_step(m, s0, mid);
    Real g = radius_excess(trial);
    if (std::abs(static_cast<double>(g)) <= kExitTol) return {mid, trial};
    (g > 0 ? hi : lo) = mid;
  }
  return {mid, trial};
}

// Augmented step: integrates dq/dt = f(x, v) alongside the geodesic, so the
// quadrature inherits RK4's order and the exit refinement.
template <class F>
inline void rk4_step_quad(const ConformalMetric& m, const F& f, GeoState<double>& s, double& q,
                          double h) {
  auto eval = [&f](const GeoState<double>& g) {
    return f(Vec2{g.x1, g.x2}, Vec2{g.v1, g.v2});
  };
  GeoState<double> k1 = geo_rhs(m, s);
  double q1 = eval(s);
  GeoState<double> s2 = axpy(s, h / 2, k1);
  GeoState<double> k2 = geo_rhs(m, s2);
  double q2 = eval(s2);
  GeoState<double> s3 = axpy(s, h / 2, k2);
  GeoState<double> k3 = geo_rhs(m, s3);
  double q3 = eval(s3);
  GeoState<double> s4 = axpy(s, h, k3);
  GeoState<double> k4 = geo_rhs(m, s4);
  double q4 = eval(s4);
  s.x1 += h / 6 * (k1.x1 + 2 * k2.x1 + 2 * k3.x1 + k4.x1);
  s.x2 += h / 6 * (k1.x2 + 2 * k2.x2 + 2 * k3.x2 + k4.x2);
  s.v1 += h / 6 * (k1.v1 + 2 * k2.v1 + 2 * k3.v1 + k4.v1);
  s.v2 += h / 6 * (k1.v2 + 2 * k2.v2 + 2 * k3.v2 + k4.v2);
  q += h / 6 * (q1 + 2 * q2 + 2 * q3 + q4);
}

struct RayQuadResult {
  double value = 0.0;
  double tau = 0.0;
};

// Line integral of f(x, v) along the geodesic from entry until exit.
template <class F>
RayQuadResult integrate_along_geodesic(const ConformalMetric& metric,
                                       const InwardBoundaryPoint& entry, double step,
                                       const F& f) {
  GeoState<double> s{entry.x.x, entry.x.y, entry.v.x, entry.v.y};
  constexpr double kHalfPi = 1.57079632679489661923;
  if (std::abs(std::abs(entry.phi) - kHalfPi) < 1e-15) return {0.0, 0.0};
  double q = 0.0;
  const long max_steps = static_cast<long>(std::ceil(kTrappedLength / step)) + 1;
  for (long i = 1; i <= max_steps; ++i) {
    GeoState<double> s_prev = s;
    double q_prev = q;
    rk4_step_quad(metric, f, s, q, step);
    if (radius_excess(s) > 0) {
      auto [ds, exit_state] = refine_exit(metric, s_prev, step);
      (void)exit_state;
      s = s_prev;
      q = q_prev;
      rk4_step_quad(metric, f, s, q, ds);
      return {q, (i - 1) * step + static_cast<double>(ds)};
    }
  }
  throw TrappedRayError(entry.beta, entry.phi);
}

}  // namespace mixtrans::detail
