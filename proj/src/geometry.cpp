#include "mixtrans/geometry.hpp"

#include <cmath>

#include "mixtrans/detail/geodesic_ode.hpp"

namespace mixtrans {

namespace {

constexpr double kPi = 3.14159265358979323846;

using detail::axpy;
using detail::geo_rhs;
using detail::GeoState;
using detail::kTrappedLength;
using detail::radius_excess;
using detail::refine_exit;
using detail::rk4_step;

}  // namespace

// ---------------------------------------------------------------------------
// ConformalMetric

ConformalMetric ConformalMetric::flat() {
  ConformalMetric m(ScalarField::zero(), [](Vec2) { return 0.0; }, "flat");
  m.simplicity_hint = 0.0;
  return m;
}

ConformalMetric ConformalMetric::gaussian_bump(double amplitude, Vec2 center, double width) {
  const double w2 = width * width;
  auto val = [amplitude, center, w2](Vec2 p) {
    return amplitude * std::exp(-norm_sq(p - center) / w2);
  };
  auto grad = [amplitude, center, w2](Vec2 p) {
    double a = amplitude * std::exp(-norm_sq(p - center) / w2);
    return (-2.0 * a / w2) * (p - center);
  };
  auto lap = [amplitude, center, w2](Vec2 p) {
    double r2 = norm_sq(p - center);
    double a = amplitude * std::exp(-r2 / w2);
    return a * (4.0 * r2 / (w2 * w2) - 4.0 / w2);
  };
  ConformalMetric m(ScalarField(val, grad, true), lap, "gaussian_bump");
  // max of |grad| for the Gaussian profile: at r = width/sqrt(2)
  m.simplicity_hint = std::abs(amplitude) * std::sqrt(2.0 / w2) * std::exp(-0.5);
  return m;
}

ConformalMetric ConformalMetric::polynomial(const Poly2& alpha) {
  Poly2 axx = alpha.dx().dx();
  Poly2 ayy = alpha.dy().dy();
  auto lap = [axx, ayy](Vec2 p) { return axx.eval(p) + ayy.eval(p); };
  return ConformalMetric(ScalarField::from_poly(alpha), lap, "polynomial");
}

ConformalMetric ConformalMetric::from_function(std::function<double(Vec2)> alpha) {
  auto lap = [alpha](Vec2 p) {
    const double h = 1e-4;
    return (alpha({p.x + h, p.y}) + alpha({p.x - h, p.y}) + alpha({p.x, p.y + h}) +
            alpha({p.x, p.y - h}) - 4.0 * alpha(p)) /
           (h * h);
  };
  return ConformalMetric(ScalarField::from_function(std::move(alpha)), lap, "custom");
}

Christoffels ConformalMetric::christoffels(Vec2 p) const {
  if (norm_sq(p) > 1.0 + 1e-9)
    throw std::domain_error("christoffels: point outside the closed unit disk");
  Vec2 a = grad_alpha(p);
  double d[2] = {a.x, a.y};
  Christoffels c;
  for (int pp = 0; pp < 2; ++pp)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        c.gamma[pp][i][j] =
            (pp == j ? d[i] : 0.0) + (pp == i ? d[j] : 0.0) - (i == j ? d[pp] : 0.0);
  return c;
}

// ---------------------------------------------------------------------------
// Boundary entries and tracing

InwardBoundaryPoint boundary_entry(const ConformalMetric& metric, double beta, double phi,
                                   bool allow_tangential) {
  const double half_pi = kPi / 2.0;
  if (std::abs(phi) > half_pi)
    throw std::invalid_argument("boundary_entry: |phi| > pi/2");
  if (!allow_tangential && std::abs(phi) >= half_pi)
    throw std::invalid_argument("boundary_entry: tangential entry rejected (|phi| = pi/2)");
  InwardBoundaryPoint e;
  e.beta = beta;
  e.phi = phi;
  e.x = {std::cos(beta), std::sin(beta)};
  Vec2 tangent{-std::sin(beta), std::cos(beta)};
  Vec2 d = std::cos(phi) * (-1.0 * e.x) + std::sin(phi) * tangent;  // Euclidean unit
  e.v = std::exp(-metric.alpha(e.x)) * d;                           // g-unit
  return e;
}

GeodesicPath trace_geodesic(const ConformalMetric& metric, const InwardBoundaryPoint& entry,
                            double step) {
  if (step <= 0.0) throw std::invalid_argument("trace_geodesic: step must be positive");
  GeodesicPath path;
  path.step = step;
  using Real = long double;
  GeoState<Real> s{entry.x.x, entry.x.y, entry.v.x, entry.v.y};
  path.samples.push_back({0.0,
                          {static_cast<double>(s.x1), static_cast<double>(s.x2)},
                          {static_cast<double>(s.v1), static_cast<double>(s.v2)}});

  if (std::abs(std::abs(entry.phi) - kPi / 2.0) < 1e-15) {
    path.tau = 0.0;  // tangential: leaves immediately
    return path;
  }

  const long max_steps = static_cast<long>(std::ceil(kTrappedLength / step)) + 1;
  for (long i = 1; i <= max_steps; ++i) {
    GeoState<Real> next = rk4_step(metric, s, static_cast<Real>(step));
    if (radius_excess(next) > 0) {
      auto [ds, exit_state] = refine_exit(metric, s, static_cast<Real>(step));
      path.tau = static_cast<double>((i - 1) * static_cast<Real>(step) + ds);
      path.samples.push_back(
          {path.tau,
           {static_cast<double>(exit_state.x1), static_cast<double>(exit_state.x2)},
           {static_cast<double>(exit_state.v1), static_cast<double>(exit_state.v2)}});
      return path;
    }
    s = next;
    path.samples.push_back({static_cast<double>(i) * step,
                            {static_cast<double>(s.x1), static_cast<double>(s.x2)},
                            {static_cast<double>(s.v1), static_cast<double>(s.v2)}});
  }
  throw TrappedRayError(entry.beta, entry.phi);
}

// ---------------------------------------------------------------------------
// Parallel transport

namespace {

// B(x, v) eta = -( (a.v) eta + (a.eta) v - (v.eta) a ), a = grad alpha(x)
struct TransportCoeff {
  Vec2 a, v;
  template <typename Real>
  void apply(Real e1, Real e2, Real& d1, Real& d2) const {
    Real av = a.x * v.x + a.y * v.y;
    Real ae = a.x * e1 + a.y * e2;
    Real ve = v.x * e1 + v.y * e2;
    d1 = -(av * e1 + ae * v.x - ve * a.x);
    d2 = -(av * e2 + ae * v.y - ve * a.y);
  }
};

Vec2 geodesic_accel(const ConformalMetric& m, Vec2 x, Vec2 v) {
  Vec2 a = m.grad_alpha(x);
  double av = dot(a, v);
  double vv = dot(v, v);
  return {-(2.0 * av * v.x - vv * a.x), -(2.0 * av * v.y - vv * a.y)};
}

}  // namespace

std::vector<Vec2> parallel_transport(const ConformalMetric& metric, const GeodesicPath& path,
                                     Vec2 eta0) {
  std::vector<Vec2> eta;
  eta.reserve(path.samples.size());
  using Real = long double;
  Real e1 = eta0.x, e2 = eta0.y;
  eta.push_back(eta0);
  for (size_t i = 0; i + 1 < path.samples.size(); ++i) {
    const PathSample& s0 = path.samples[i];
    const PathSample& s1 = path.samples[i + 1];
    const Real h = static_cast<Real>(s1.t) - static_cast<Real>(s0.t);
    // Cubic Hermite midpoint values for the stage coefficients.
    Vec2 acc0 = geodesic_accel(metric, s0.x, s0.v);
    Vec2 acc1 = geodesic_accel(metric, s1.x, s1.v);
    const double hd = static_cast<double>(h);
    Vec2 xm = 0.5 * (s0.x + s1.x) + (hd / 8.0) * (s0.v - s1.v);
    Vec2 vm = 0.5 * (s0.v + s1.v) + (hd / 8.0) * (acc0 - acc1);
    TransportCoeff B0{metric.grad_alpha(s0.x), s0.v};
    TransportCoeff Bm{metric.grad_alpha(xm), vm};
    TransportCoeff B1{metric.grad_alpha(s1.x), s1.v};

    Real k11, k12, k21, k22, k31, k32, k41, k42;
    B0.apply(e1, e2, k11, k12);
    Bm.apply(e1 + h / 2 * k11, e2 + h / 2 * k12, k21, k22);
    Bm.apply(e1 + h / 2 * k21, e2 + h / 2 * k22, k31, k32);
    B1.apply(e1 + h * k31, e2 + h * k32, k41, k42);
    e1 += h / 6 * (k11 + 2 * k21 + 2 * k31 + k41);
    e2 += h / 6 * (k12 + 2 * k22 + 2 * k32 + k42);
    eta.push_back({static_cast<double>(e1), static_cast<double>(e2)});
  }
  return eta;
}

// ---------------------------------------------------------------------------
// Simplicity diagnostic

std::string SimplicityReport::summary() const {
  if (trapped_ray) return "trapped ray at beta=" + std::to_string(beta) + " phi=" + std::to_string(phi);
  if (conjugate_point)
    return "conjugate point at t=" + std::to_string(first_conjugate_t) + " on ray beta=" +
           std::to_string(beta) + " phi=" + std::to_string(phi);
  return "no conjugate point detected (" + std::to_string(rays_checked) + " rays)";
}

SimplicityReport simplicity_diagnostic(const ConformalMetric& metric, int n_beta, int n_phi,
                                       double step, double phi_max) {
  SimplicityReport rep;
  struct JState {
    GeoState<double> g;
    double j, jd;
  };
  auto rhs = [&](const JState& s) {
    JState d;
    d.g = geo_rhs(metric, s.g);
    double K = metric.gauss_curvature({s.g.x1, s.g.x2});
    d.j = s.jd;
    d.jd = -K * s.j;
    return d;
  };
  auto add = [](const JState& s, double c, const JState& d) {
    JState r;
    r.g = axpy(s.g, c, d.g);
    r.j = s.j + c * d.j;
    r.jd = s.jd + c * d.jd;
    return r;
  };
  const long max_steps = static_cast<long>(std::ceil(kTrappedLength / step)) + 1;
  for (int ib = 0; ib < n_beta; ++ib) {
    double beta = 2.0 * kPi * ib / n_beta;
    for (int ip = 0; ip < n_phi; ++ip) {
      double phi = n_phi == 1 ? 0.0 : -phi_max + 2.0 * phi_max * ip / (n_phi - 1);
      InwardBoundaryPoint e = boundary_entry(metric, beta, phi);
      JState s{{e.x.x, e.x.y, e.v.x, e.v.y}, 0.0, 1.0};
      rep.rays_checked++;
      bool exited = false;
      for (long i = 0; i < max_steps; ++i) {
        JState k1 = rhs(s);
        JState k2 = rhs(add(s, step / 2, k1));
        JState k3 = rhs(add(s, step / 2, k2));
        JState k4 = rhs(add(s, step, k3));
        JState next = s;
        next.g.x1 += step / 6 * (k1.g.x1 + 2 * k2.g.x1 + 2 * k3.g.x1 + k4.g.x1);
        next.g.x2 += step / 6 * (k1.g.x2 + 2 * k2.g.x2 + 2 * k3.g.x2 + k4.g.x2);
        next.g.v1 += step / 6 * (k1.g.v1 + 2 * k2.g.v1 + 2 * k3.g.v1 + k4.g.v1);
        next.g.v2 += step / 6 * (k1.g.v2 + 2 * k2.g.v2 + 2 * k3.g.v2 + k4.g.v2);
        next.j += step / 6 * (k1.j + 2 * k2.j + 2 * k3.j + k4.j);
        next.jd += step / 6 * (k1.jd + 2 * k2.jd + 2 * k3.jd + k4.jd);
        if (i > 0 && next.j <= 0.0) {
          rep.conjugate_point = true;
          rep.first_conjugate_t = (i + 1) * step;
          rep.beta = beta;
          rep.phi = phi;
          return rep;
        }
        s = next;
        if (radius_excess(s.g) > 0) {
          exited = true;
          break;
        }
      }
      if (!exited) {
        rep.trapped_ray = true;
        rep.beta = beta;
        rep.phi = phi;
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace mixtrans
