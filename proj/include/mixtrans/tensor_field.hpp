#pragma once

#include <memory>
#include <span>
#include <vector>

#include "mixtrans/canonical.hpp"
#include "mixtrans/geometry.hpp"
#include "mixtrans/scalar_field.hpp"

namespace mixtrans {

// Element of S^k M x S^l M: block-symmetric tensor field on the disk, stored
// as its (k+1)(l+1) canonical components c_{(h,a)}.  Full-index reads route
// through the canonical table, so block symmetry holds by construction.
class MixedField {
 public:
  MixedField(int k, int l, ConformalMetric metric, std::vector<ScalarField> comps);

  static MixedField zero(int k, int l, const ConformalMetric& metric);
  static MixedField from_polys(int k, int l, const ConformalMetric& metric,
                               const std::vector<Poly2>& comps);
  // Averaged symmetric-product basis element: value 1 / (C(k,h) C(l,a)) on
  // index tuples matching pattern (h, a), zero otherwise.
  static MixedField basis_element(int k, int l, int h, int a, const ConformalMetric& metric);
  // f_{H,h} family from the kernel analysis; f_{H,0} = basis_fHh(k,l,H,0).
  static MixedField basis_fHh(int k, int l, int H, int h, const ConformalMetric& metric);
  static MixedField basis_fH0(int k, int l, int H, const ConformalMetric& metric);

  int first_order() const { return k_; }
  int second_order() const { return l_; }
  const ConformalMetric& metric() const { return metric_; }

  double canonical(int h, int a, Vec2 x) const { return comps_[canon_index(l_, h, a)].value(x); }
  Vec2 canonical_gradient(int h, int a, Vec2 x) const {
    return comps_[canon_index(l_, h, a)].gradient(x);
  }
  const ScalarField& canonical_field(int h, int a) const {
    return comps_[canon_index(l_, h, a)];
  }
  std::vector<double> canonical_values(Vec2 x) const;
  bool analytic_partials() const;

  // Full-index access; index values in {1, 2}.
  double component(std::span<const int> first, std::span<const int> second, Vec2 x) const;

 private:
  int k_, l_;
  ConformalMetric metric_;
  std::vector<ScalarField> comps_;  // canonical order, index h*(l+1)+a
};

// ---------------------------------------------------------------------------
// Pointwise operator algebra

MixedField apply_operator(const RationalOpMatrix& op, int k_out, int l_out, const MixedField& f);

// A from the kernel analysis: (Af)_{(h,a)} = (-1)^{l-a} f_{(h, l-a)}.
// For l = 1 this is the Hodge star up to orientation; A o A = (-1)^l id.
MixedField apply_A(const MixedField& f);

enum class SymBlock { First, Last, All };

// Block symmetrization.  Canonical fields are already symmetric within each
// block, so First/Last return the input; All is the full symmetrization Sym.
MixedField sym_block(const MixedField& f, SymBlock which);

// Raw-component symmetrization over index positions [from, to) of a dense
// 2^n table (index i of the tuple = bit i, value 1 or 2).
std::vector<double> sym_dense(const std::vector<double>& values, int n, int from, int to);

// lambda: S^{k-1} x S^{l-1} -> S^k x S^l, metric insertion
// sym sym (g_{i1 j1} w_{rest}); its image is invisible to Phi.
MixedField lambda_op(const MixedField& w);

// cf * f + cg * g
MixedField add_fields(const MixedField& f, const MixedField& g, double cf = 1.0, double cg = 1.0);
MixedField scale_field(const MixedField& f, double c);

// Covariant derivative components u_{(h,a);m}, one extra unsymmetrized index.
struct CovDerivativeField {
  int k = 0, l = 0;  // orders of u
  std::vector<ScalarField> comps;  // index m * canon_dim + canon_index
  const ScalarField& field(int m, int h, int a) const {
    return comps[static_cast<size_t>(m) * canon_dim(k, l) + canon_index(l, h, a)];
  }
  double value(int m, int h, int a, Vec2 x) const { return field(m, h, a).value(x); }
};
CovDerivativeField cov_derivative(const MixedField& u);

// d': S^{k-1} x S^l -> S^k x S^l, first-block symmetrized covariant
// derivative; generates the potential part of the kernel.
MixedField d_prime(const MixedField& u);

// Inner derivative d^s extended to S^{k-1} x S^l: full symmetrization of
// grad u, read back as an element of S^k x S^l.
MixedField d_s_extended(const MixedField& u);

// Phi f (x, v) = f_{I,J} v^I sigma(v)^J via the canonical table with
// binomial weights.
double phi_evaluate(const MixedField& f, Vec2 x, Vec2 v);

// Reinterpret a fully symmetric (k,l) field (components depending on h+a
// only) as an element of S^{k+l} M x S^0 M.
MixedField as_fully_symmetric(const MixedField& f);

// The symmetric (k+l)-tensor R(f) with I_{k+l}(R(f)) = L_{k,l}(f) for the
// sigma convention fixed in vec2.hpp: R(f) = (-1)^l Sym(A f).
MixedField geodesic_equivalent(const MixedField& f);

// Euclidean distance (on canonical components) from f(x) to the pointwise
// image of lambda; <= ~1e-10 iff f(x) lies in Im(lambda) at x.
double im_lambda_residual(const MixedField& f, Vec2 x);
double im_lambda_residual_values(int k, int l, const std::vector<double>& values,
                                 double conformal_factor);

}  // namespace mixtrans
