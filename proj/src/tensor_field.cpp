#include "mixtrans/tensor_field.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace mixtrans {

MixedField::MixedField(int k, int l, ConformalMetric metric, std::vector<ScalarField> comps)
    : k_(k), l_(l), metric_(std::move(metric)), comps_(std::move(comps)) {
  if (k_ < 0 || l_ < 0) throw std::invalid_argument("MixedField: negative order");
  if (static_cast<int>(comps_.size()) != canon_dim(k_, l_))
    throw std::invalid_argument("MixedField: wrong number of canonical components");
}

MixedField MixedField::zero(int k, int l, const ConformalMetric& metric) {
  return MixedField(k, l, metric,
                    std::vector<ScalarField>(canon_dim(k, l), ScalarField::zero()));
}

MixedField MixedField::from_polys(int k, int l, const ConformalMetric& metric,
                                  const std::vector<Poly2>& comps) {
  std::vector<ScalarField> fields;
  fields.reserve(comps.size());
  for (const Poly2& p : comps) fields.push_back(ScalarField::from_poly(p));
  return MixedField(k, l, metric, std::move(fields));
}

MixedField MixedField::basis_element(int k, int l, int h, int a, const ConformalMetric& metric) {
  if (h < 0 || h > k || a < 0 || a > l)
    throw std::out_of_range("basis_element: pattern out of range");
  std::vector<ScalarField> comps(canon_dim(k, l), ScalarField::zero());
  double w = 1.0 / (static_cast<double>(binom(k, h)) * static_cast<double>(binom(l, a)));
  comps[canon_index(l, h, a)] = ScalarField::constant(w);
  return MixedField(k, l, metric, std::move(comps));
}

MixedField MixedField::basis_fHh(int k, int l, int H, int h, const ConformalMetric& metric) {
  if (H < 0 || H > k + l) throw std::out_of_range("basis_fHh: H out of range");
  if (H <= l) {
    // ((x1^h (x2)^{k-h})) x ((x1)^{l-H+h} (x2)^{H-h})
    if (h < 0 || h > std::min(k, H)) throw std::out_of_range("basis_fHh: h out of range");
    return basis_element(k, l, h, l - H + h, metric);
  }
  // l < H <= k + l: shifted family
  if (h < 0 || h > std::min(l, k + l - H)) throw std::out_of_range("basis_fHh: h out of range");
  return basis_element(k, l, H - l + h, h, metric);
}

MixedField MixedField::basis_fH0(int k, int l, int H, const ConformalMetric& metric) {
  return basis_fHh(k, l, H, 0, metric);
}

std::vector<double> MixedField::canonical_values(Vec2 x) const {
  std::vector<double> v(comps_.size());
  for (size_t i = 0; i < comps_.size(); ++i) v[i] = comps_[i].value(x);
  return v;
}

bool MixedField::analytic_partials() const {
  return std::all_of(comps_.begin(), comps_.end(),
                     [](const ScalarField& f) { return f.analytic_gradient; });
}

double MixedField::component(std::span<const int> first, std::span<const int> second,
                             Vec2 x) const {
  if (static_cast<int>(first.size()) != k_ || static_cast<int>(second.size()) != l_)
    throw std::invalid_argument("MixedField::component: index count mismatch");
  int h = 0, a = 0;
  for (int i : first) {
    if (i != 1 && i != 2) throw std::invalid_argument("MixedField::component: index not in {1,2}");
    h += (i == 1);
  }
  for (int j : second) {
    if (j != 1 && j != 2) throw std::invalid_argument("MixedField::component: index not in {1,2}");
    a += (j == 1);
  }
  return canonical(h, a, x);
}

// ---------------------------------------------------------------------------
// Operators

MixedField apply_operator(const RationalOpMatrix& op, int k_out, int l_out,
                          const MixedField& f) {
  if (op.cols() != canon_dim(f.first_order(), f.second_order()) ||
      op.rows() != canon_dim(k_out, l_out))
    throw std::invalid_argument("apply_operator: shape mismatch");
  auto src = std::make_shared<MixedField>(f);
  std::vector<ScalarField> comps;
  comps.reserve(op.rows());
  for (int i = 0; i < op.rows(); ++i) {
    std::vector<double> w = op.row_weights(i);
    auto value = [src, w](Vec2 x) {
      double acc = 0.0;
      const int k_src = src->first_order(), l_src = src->second_order();
      for (int h = 0; h <= k_src; ++h)
        for (int a = 0; a <= l_src; ++a) {
          double wj = w[canon_index(l_src, h, a)];
          if (wj != 0.0) acc += wj * src->canonical(h, a, x);
        }
      return acc;
    };
    auto gradient = [src, w](Vec2 x) {
      Vec2 acc{0.0, 0.0};
      const int k_src = src->first_order(), l_src = src->second_order();
      for (int h = 0; h <= k_src; ++h)
        for (int a = 0; a <= l_src; ++a) {
          double wj = w[canon_index(l_src, h, a)];
          if (wj != 0.0) acc = acc + wj * src->canonical_gradient(h, a, x);
        }
      return acc;
    };
    comps.emplace_back(value, gradient, f.analytic_partials());
  }
  return MixedField(k_out, l_out, f.metric(), std::move(comps));
}

MixedField apply_A(const MixedField& f) {
  return apply_operator(op_flip_last(f.first_order(), f.second_order()), f.first_order(),
                        f.second_order(), f);
}

MixedField sym_block(const MixedField& f, SymBlock which) {
  if (which == SymBlock::All)
    return apply_operator(op_full_sym(f.first_order(), f.second_order()), f.first_order(),
                          f.second_order(), f);
  return f;  // canonical storage is block-symmetric already
}

std::vector<double> sym_dense(const std::vector<double>& values, int n, int from, int to) {
  if (static_cast<int>(values.size()) != (1 << n))
    throw std::invalid_argument("sym_dense: wrong table size");
  std::vector<double> out(values.size(), 0.0);
  std::vector<int> positions;
  for (int p = from; p < to; ++p) positions.push_back(p);
  std::vector<int> perm = positions;
  long count = 0;
  std::sort(perm.begin(), perm.end());
  std::vector<double> acc(values.size(), 0.0);
  do {
    ++count;
    for (size_t t = 0; t < values.size(); ++t) {
      size_t src = t;
      // move bit at positions[i] to perm[i]
      size_t permuted = t;
      for (size_t i = 0; i < positions.size(); ++i) {
        size_t bit = (t >> positions[i]) & 1u;
        permuted &= ~(size_t(1) << perm[i]);
        permuted |= bit << perm[i];
      }
      acc[t] += values[permuted];
      (void)src;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (size_t t = 0; t < values.size(); ++t) out[t] = acc[t] / static_cast<double>(count);
  return out;
}

MixedField lambda_op(const MixedField& w) {
  const int k = w.first_order() + 1;
  const int l = w.second_order() + 1;
  MixedField bare = apply_operator(op_metric_insert(k, l), k, l, w);
  // multiply by the conformal factor e^{2 alpha}
  auto metric = w.metric();
  std::vector<ScalarField> comps;
  for (int h = 0; h <= k; ++h)
    for (int a = 0; a <= l; ++a) {
      ScalarField base = bare.canonical_field(h, a);
      auto value = [metric, base](Vec2 x) { return metric.conformal_factor(x) * base.value(x); };
      auto gradient = [metric, base](Vec2 x) {
        double e = metric.conformal_factor(x);
        return e * (base.gradient(x) + 2.0 * base.value(x) * metric.grad_alpha(x));
      };
      comps.emplace_back(value, gradient, base.analytic_gradient && metric.analytic_gradient());
    }
  return MixedField(k, l, w.metric(), std::move(comps));
}

MixedField add_fields(const MixedField& f, const MixedField& g, double cf, double cg) {
  if (f.first_order() != g.first_order() || f.second_order() != g.second_order())
    throw std::invalid_argument("add_fields: order mismatch");
  std::vector<ScalarField> comps;
  for (int h = 0; h <= f.first_order(); ++h)
    for (int a = 0; a <= f.second_order(); ++a) {
      ScalarField a1 = f.canonical_field(h, a);
      ScalarField a2 = g.canonical_field(h, a);
      comps.emplace_back(
          [a1, a2, cf, cg](Vec2 x) { return cf * a1.value(x) + cg * a2.value(x); },
          [a1, a2, cf, cg](Vec2 x) { return cf * a1.gradient(x) + cg * a2.gradient(x); },
          a1.analytic_gradient && a2.analytic_gradient);
    }
  return MixedField(f.first_order(), f.second_order(), f.metric(), std::move(comps));
}

MixedField scale_field(const MixedField& f, double c) {
  std::vector<ScalarField> comps;
  for (int h = 0; h <= f.first_order(); ++h)
    for (int a = 0; a <= f.second_order(); ++a)
      comps.push_back(scaled(f.canonical_field(h, a), c));
  return MixedField(f.first_order(), f.second_order(), f.metric(), std::move(comps));
}

CovDerivativeField cov_derivative(const MixedField& u) {
  CovDerivativeField d;
  d.k = u.first_order();
  d.l = u.second_order();
  auto src = std::make_shared<MixedField>(u);
  const int k = d.k, l = d.l;
  for (int m = 0; m < 2; ++m)
    for (int h = 0; h <= k; ++h)
      for (int a = 0; a <= l; ++a) {
        auto value = [src, m, h, a, k, l](Vec2 x) {
          if (norm_sq(x) > 1.0 + 1e-9)
            throw std::domain_error("cov_derivative: point outside the closed unit disk");
          const ConformalMetric& g = src->metric();
          Vec2 da = g.grad_alpha(x);
          double dm = (m == 0) ? da.x : da.y;
          // conformal Christoffels contracted with the fixed derivative index m
          // gamma[p][i]: Gamma^p_{m i}
          double gam[2][2];
          for (int p = 0; p < 2; ++p)
            for (int i = 0; i < 2; ++i)
              gam[p][i] = (p == m ? (i == 0 ? da.x : da.y) : 0.0) + (p == i ? dm : 0.0) -
                          (m == i ? (p == 0 ? da.x : da.y) : 0.0);
          Vec2 grad = src->canonical_gradient(h, a, x);
          double acc = (m == 0) ? grad.x : grad.y;
          double c_ha = src->canonical(h, a, x);
          if (h > 0)
            acc -= h * (gam[0][0] * c_ha + gam[1][0] * src->canonical(h - 1, a, x));
          if (k - h > 0)
            acc -= (k - h) * (gam[0][1] * src->canonical(h + 1, a, x) + gam[1][1] * c_ha);
          if (a > 0)
            acc -= a * (gam[0][0] * c_ha + gam[1][0] * src->canonical(h, a - 1, x));
          if (l - a > 0)
            acc -= (l - a) * (gam[0][1] * src->canonical(h, a + 1, x) + gam[1][1] * c_ha);
          return acc;
        };
        ScalarField sf;
        sf.value = value;
        sf.gradient = [value](Vec2 x) { return fd_gradient(value, x); };
        sf.analytic_gradient = false;
        d.comps.push_back(std::move(sf));
      }
  return d;
}

MixedField d_prime(const MixedField& u) {
  const int k = u.first_order() + 1;
  const int l = u.second_order();
  auto dd = std::make_shared<CovDerivativeField>(cov_derivative(u));
  std::vector<ScalarField> comps;
  for (int h = 0; h <= k; ++h)
    for (int a = 0; a <= l; ++a) {
      auto value = [dd, h, a, k](Vec2 x) {
        double acc = 0.0;
        if (h > 0) acc += static_cast<double>(h) / k * dd->value(0, h - 1, a, x);
        if (k - h > 0) acc += static_cast<double>(k - h) / k * dd->value(1, h, a, x);
        return acc;
      };
      ScalarField sf;
      sf.value = value;
      sf.gradient = [value](Vec2 x) { return fd_gradient(value, x); };
      sf.analytic_gradient = false;
      comps.push_back(std::move(sf));
    }
  return MixedField(k, l, u.metric(), std::move(comps));
}

MixedField d_s_extended(const MixedField& u) {
  const int kp = u.first_order();  // k - 1
  const int l = u.second_order();
  const int k = kp + 1;
  const int n = k + l;
  auto dd = std::make_shared<CovDerivativeField>(cov_derivative(u));
  // T_H = full symmetrization of grad u on tuples with H ones.
  auto t_value = [dd, kp, l, n](int H, Vec2 x) {
    double acc = 0.0;
    for (int hp = 0; hp <= kp; ++hp)
      for (int ap = 0; ap <= l; ++ap) {
        double cw = static_cast<double>(binom(kp, hp)) * static_cast<double>(binom(l, ap));
        if (hp + ap == H - 1) acc += cw * dd->value(0, hp, ap, x);
        if (hp + ap == H) acc += cw * dd->value(1, hp, ap, x);
      }
    return acc / static_cast<double>(binom(n, H));
  };
  std::vector<ScalarField> comps;
  for (int h = 0; h <= k; ++h)
    for (int a = 0; a <= l; ++a) {
      int H = h + a;
      auto value = [t_value, H](Vec2 x) { return t_value(H, x); };
      ScalarField sf;
      sf.value = value;
      sf.gradient = [value](Vec2 x) { return fd_gradient(value, x); };
      sf.analytic_gradient = false;
      comps.push_back(std::move(sf));
    }
  return MixedField(k, l, u.metric(), std::move(comps));
}

double phi_evaluate(const MixedField& f, Vec2 x, Vec2 v) {
  const int k = f.first_order(), l = f.second_order();
  Vec2 s = rotate(v);
  // powers of the direction components
  double pv1[9], pv2[9], ps1[9], ps2[9];
  pv1[0] = pv2[0] = ps1[0] = ps2[0] = 1.0;
  for (int i = 1; i <= k; ++i) {
    pv1[i] = pv1[i - 1] * v.x;
    pv2[i] = pv2[i - 1] * v.y;
  }
  for (int j = 1; j <= l; ++j) {
    ps1[j] = ps1[j - 1] * s.x;
    ps2[j] = ps2[j - 1] * s.y;
  }
  double acc = 0.0;
  for (int h = 0; h <= k; ++h)
    for (int a = 0; a <= l; ++a) {
      double c = f.canonical(h, a, x);
      if (c == 0.0) continue;
      acc += static_cast<double>(binom(k, h)) * static_cast<double>(binom(l, a)) * c *
             pv1[h] * pv2[k - h] * ps1[a] * ps2[l - a];
    }
  return acc;
}

MixedField as_fully_symmetric(const MixedField& f) {
  const int k = f.first_order(), l = f.second_order();
  const int n = k + l;
  std::vector<ScalarField> comps;
  comps.reserve(n + 1);
  for (int H = 0; H <= n; ++H) {
    int h = std::max(0, H - l);
    comps.push_back(f.canonical_field(h, H - h));
  }
  return MixedField(n, 0, f.metric(), std::move(comps));
}

MixedField geodesic_equivalent(const MixedField& f) {
  const int k = f.first_order(), l = f.second_order();
  RationalOpMatrix reduce = op_sym_compress(k, l) * op_flip_last(k, l);
  MixedField r = apply_operator(reduce, k + l, 0, f);
  return (l % 2 == 0) ? r : scale_field(r, -1.0);
}

double im_lambda_residual_values(int k, int l, const std::vector<double>& values,
                                 double conformal_factor) {
  if (k < 1 || l < 1)
    throw std::invalid_argument("im_lambda_residual: lambda undefined for k = 0 or l = 0");
  RationalOpMatrix lam = op_metric_insert(k, l);
  Eigen::MatrixXd M(lam.rows(), lam.cols());
  for (int i = 0; i < lam.rows(); ++i)
    for (int j = 0; j < lam.cols(); ++j)
      M(i, j) = conformal_factor * static_cast<double>(lam.num(i, j)) /
                static_cast<double>(lam.den());
  Eigen::VectorXd b(values.size());
  for (size_t i = 0; i < values.size(); ++i) b(static_cast<int>(i)) = values[i];
  Eigen::VectorXd sol = M.colPivHouseholderQr().solve(b);
  return (b - M * sol).norm();
}

double im_lambda_residual(const MixedField& f, Vec2 x) {
  return im_lambda_residual_values(f.first_order(), f.second_order(), f.canonical_values(x),
                                   f.metric().conformal_factor(x));
}

}  // namespace mixtrans
