#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixtrans/polynomial.hpp"
#include "mixtrans/scalar_field.hpp"
#include "mixtrans/vec2.hpp"

namespace mixtrans {

// Thrown when a ray fails to leave the disk within the hard step cap; the
// metric is not simple (or the step is pathological).
class TrappedRayError : public std::runtime_error {
 public:
  TrappedRayError(double beta, double phi)
      : std::runtime_error("trapped ray at beta=" + std::to_string(beta) +
                           " phi=" + std::to_string(phi)),
        beta(beta),
        phi(phi) {}
  double beta;
  double phi;
};

struct Christoffels {
  // gamma[p][i][j], symmetric in (i, j)
  double gamma[2][2][2];
};

// Conformally Euclidean metric g = e^{2 alpha} (dx1^2 + dx2^2) on the closed
// unit disk.
class ConformalMetric {
 public:
  ConformalMetric() : ConformalMetric(flat()) {}

  static ConformalMetric flat();
  // alpha(x) = amplitude * exp(-|x - center|^2 / width^2)
  static ConformalMetric gaussian_bump(double amplitude, Vec2 center = {0.0, 0.0},
                                       double width = 1.0);
  static ConformalMetric polynomial(const Poly2& alpha);
  // Finite-difference gradients and Laplacian.
  static ConformalMetric from_function(std::function<double(Vec2)> alpha);

  double alpha(Vec2 p) const { return alpha_.value(p); }
  Vec2 grad_alpha(Vec2 p) const { return alpha_.gradient(p); }
  double laplacian_alpha(Vec2 p) const { return laplacian_(p); }
  bool analytic_gradient() const { return alpha_.analytic_gradient; }

  double conformal_factor(Vec2 p) const { return std::exp(2.0 * alpha(p)); }
  double inner(Vec2 p, Vec2 u, Vec2 v) const { return conformal_factor(p) * dot(u, v); }
  double norm(Vec2 p, Vec2 v) const { return std::sqrt(inner(p, v, v)); }

  // Gamma^p_ij = d_i(alpha) delta_pj + d_j(alpha) delta_pi - d_p(alpha) delta_ij.
  // Throws std::domain_error outside the closed disk.
  Christoffels christoffels(Vec2 p) const;

  // Gaussian curvature K = -e^{-2 alpha} Laplace(alpha).
  double gauss_curvature(Vec2 p) const {
    return -std::exp(-2.0 * alpha(p)) * laplacian_alpha(p);
  }

  const std::string& preset_name() const { return preset_; }
  std::optional<double> simplicity_hint;  // optional bound on |grad alpha|

 private:
  ConformalMetric(ScalarField alpha, std::function<double(Vec2)> laplacian, std::string preset)
      : alpha_(std::move(alpha)), laplacian_(std::move(laplacian)), preset_(std::move(preset)) {}

  ScalarField alpha_;
  std::function<double(Vec2)> laplacian_;
  std::string preset_;
};

// Point of the inward boundary bundle: x = (cos beta, sin beta) on the unit
// circle, incidence phi in (-pi/2, pi/2) measured from the inward Euclidean
// normal, v the g-unit inward direction.
struct InwardBoundaryPoint {
  double beta = 0.0;
  double phi = 0.0;
  Vec2 x;
  Vec2 v;
};

// Throws std::invalid_argument for |phi| >= pi/2 unless allow_tangential,
// in which case |phi| == pi/2 yields a tangential entry (tau = 0 rays).
InwardBoundaryPoint boundary_entry(const ConformalMetric& metric, double beta, double phi,
                                   bool allow_tangential = false);

struct PathSample {
  double t = 0.0;  // arclength parameter
  Vec2 x;
  Vec2 v;
};

struct GeodesicPath {
  std::vector<PathSample> samples;  // uniform step, final sample at t = tau
  double tau = 0.0;
  double step = 0.0;
};

// Classic fixed-step RK4 on the geodesic equation, exit located by bisection
// on the final step to |x|^2 - 1 within 1e-12.  Throws TrappedRayError after
// (10 * Euclidean diameter) / step steps without exit.
GeodesicPath trace_geodesic(const ConformalMetric& metric, const InwardBoundaryPoint& entry,
                            double step);

// Parallel transport of eta0 along a traced path.  Second integration pass
// over the stored samples; stage data at half steps comes from cubic Hermite
// interpolation of the samples, so the result converges at 4th order to the
// exact transport.  Returns one vector per path sample.
std::vector<Vec2> parallel_transport(const ConformalMetric& metric, const GeodesicPath& path,
                                     Vec2 eta0);

struct SimplicityReport {
  bool conjugate_point = false;
  bool trapped_ray = false;
  double first_conjugate_t = 0.0;
  double beta = 0.0, phi = 0.0;  // offending ray, if any
  int rays_checked = 0;
  bool ok() const { return !conjugate_point && !trapped_ray; }
  std::string summary() const;
};

// Scans a fan of geodesics and integrates the scalar Jacobi equation
// j'' + K j = 0, j(0)=0, j'(0)=1 along each; reports the first sign change
// if any.  Heuristic diagnostic, not a simplicity proof.
SimplicityReport simplicity_diagnostic(const ConformalMetric& metric, int n_beta, int n_phi,
                                       double step = 1e-3, double phi_max = 1.47);

}  // namespace mixtrans
