#include "mixtrans/canonical.hpp"

#include <numeric>

namespace mixtrans {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

RationalOpMatrix RationalOpMatrix::identity(int n) {
  RationalOpMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.num(i, i) = 1;
  return m;
}

void RationalOpMatrix::reduce() {
  long long g = den_ < 0 ? -den_ : den_;
  for (long long v : num_) g = std::gcd(g, v < 0 ? -v : v);
  if (g > 1) {
    den_ /= g;
    for (long long& v : num_) v /= g;
  }
  if (den_ < 0) {
    den_ = -den_;
    for (long long& v : num_) v = -v;
  }
}

RationalOpMatrix RationalOpMatrix::operator*(const RationalOpMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("RationalOpMatrix: shape mismatch");
  RationalOpMatrix r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < other.cols_; ++j) {
      __int128 acc = 0;
      for (int m = 0; m < cols_; ++m)
        acc += static_cast<__int128>(num(i, m)) * other.num(m, j);
      r.num(i, j) = static_cast<long long>(acc);
    }
  r.den_ = den_ * other.den_;
  r.reduce();
  return r;
}

RationalOpMatrix RationalOpMatrix::add_scaled(const RationalOpMatrix& other, long long scale_num,
                                              long long scale_den) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("RationalOpMatrix: shape mismatch");
  RationalOpMatrix r(rows_, cols_);
  long long common = std::lcm(den_, other.den_ * scale_den);
  long long fa = common / den_;
  long long fb = common / (other.den_ * scale_den) * scale_num;
  for (size_t i = 0; i < num_.size(); ++i) r.num_[i] = num_[i] * fa + other.num_[i] * fb;
  r.den_ = common;
  r.reduce();
  return r;
}

std::vector<double> RationalOpMatrix::apply(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("RationalOpMatrix: vector size mismatch");
  std::vector<double> y(rows_, 0.0);
  for (int i = 0; i < rows_; ++i) {
    double acc = 0.0;
    for (int j = 0; j < cols_; ++j)
      if (num(i, j) != 0) acc += static_cast<double>(num(i, j)) * x[j];
    y[i] = acc / static_cast<double>(den_);
  }
  return y;
}

std::vector<double> RationalOpMatrix::row_weights(int i) const {
  std::vector<double> w(cols_);
  for (int j = 0; j < cols_; ++j) w[j] = static_cast<double>(num(i, j)) / den_;
  return w;
}

bool RationalOpMatrix::is_zero() const {
  for (long long v : num_)
    if (v != 0) return false;
  return true;
}

bool RationalOpMatrix::equals_scaled_identity(long long s) const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (num(i, j) != (i == j ? s * den_ : 0)) return false;
  return true;
}

RationalOpMatrix op_flip_last(int k, int l) {
  const int dim = canon_dim(k, l);
  RationalOpMatrix m(dim, dim);
  for (int h = 0; h <= k; ++h)
    for (int a = 0; a <= l; ++a) {
      long long sign = ((l - a) % 2 == 0) ? 1 : -1;
      m.num(canon_index(l, h, a), canon_index(l, h, l - a)) = sign;
    }
  return m;
}

RationalOpMatrix op_sym_compress(int k, int l) {
  const int n = k + l;
  RationalOpMatrix m(n + 1, canon_dim(k, l));
  // Common denominator: lcm of C(n, H).
  long long den = 1;
  for (int H = 0; H <= n; ++H) den = std::lcm(den, binom(n, H));
  m.set_den(den);
  for (int H = 0; H <= n; ++H) {
    long long scale = den / binom(n, H);
    for (int h = std::max(0, H - l); h <= std::min(k, H); ++h)
      m.num(H, canon_index(l, h, H - h)) = scale * binom(k, h) * binom(l, H - h);
  }
  m.reduce();
  return m;
}

RationalOpMatrix op_full_sym(int k, int l) {
  const int n = k + l;
  RationalOpMatrix compress = op_sym_compress(k, l);
  // Expand back: (Sym f)_{(h,a)} = S_{h+a}.
  RationalOpMatrix expand(canon_dim(k, l), n + 1);
  for (int h = 0; h <= k; ++h)
    for (int a = 0; a <= l; ++a) expand.num(canon_index(l, h, a), h + a) = 1;
  return expand * compress;
}

RationalOpMatrix op_metric_insert(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("op_metric_insert: requires k, l >= 1");
  RationalOpMatrix m(canon_dim(k, l), canon_dim(k - 1, l - 1));
  m.set_den(static_cast<long long>(k) * l);
  for (int h = 0; h <= k; ++h)
    for (int a = 0; a <= l; ++a) {
      int row = canon_index(l, h, a);
      if (h >= 1 && a >= 1)
        m.num(row, canon_index(l - 1, h - 1, a - 1)) += static_cast<long long>(h) * a;
      if (h <= k - 1 && a <= l - 1)
        m.num(row, canon_index(l - 1, h, a)) += static_cast<long long>(k - h) * (l - a);
    }
  m.reduce();
  return m;
}

}  // namespace mixtrans
