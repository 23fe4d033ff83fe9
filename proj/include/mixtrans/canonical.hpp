#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mixtrans {

// Block-symmetric tensors over {1,2}^{k+l} have (k+1)(l+1) independent
// components, keyed by (h, a) = (number of 1s in the first block, number of
// 1s in the last block).  Canonical index = h * (l + 1) + a.

long long binom(int n, int k);

inline int canon_dim(int k, int l) { return (k + 1) * (l + 1); }
inline int canon_index(int l, int h, int a) { return h * (l + 1) + a; }

// Pointwise linear operator on canonical component vectors with exact
// rational entries num[i][j] / den.  Keeping the arithmetic in integers makes
// operator identities that hold exactly (A o A = (-1)^l id,
// A Sym A o lambda = 0) come out exactly in the composed matrices.
class RationalOpMatrix {
 public:
  RationalOpMatrix() = default;
  RationalOpMatrix(int rows, int cols) : rows_(rows), cols_(cols), den_(1),
                                         num_(static_cast<size_t>(rows) * cols, 0) {}

  static RationalOpMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long den() const { return den_; }
  long long num(int i, int j) const { return num_[static_cast<size_t>(i) * cols_ + j]; }
  long long& num(int i, int j) { return num_[static_cast<size_t>(i) * cols_ + j]; }
  void set_den(long long d) { den_ = d; }

  // Composition this * other (apply other first).
  RationalOpMatrix operator*(const RationalOpMatrix& other) const;
  // this + scale * other, exact.
  RationalOpMatrix add_scaled(const RationalOpMatrix& other, long long scale_num,
                              long long scale_den = 1) const;

  std::vector<double> apply(const std::vector<double>& x) const;
  // Row as doubles already divided by den (for building field closures).
  std::vector<double> row_weights(int i) const;

  bool is_zero() const;
  bool equals_scaled_identity(long long s) const;

  void reduce();

 private:
  int rows_ = 0, cols_ = 0;
  long long den_ = 1;
  std::vector<long long> num_;
};

// A: sign-weighted flip of the last index block,
// (A f)_{(h,a)} = (-1)^{l-a} f_{(h, l-a)}.
RationalOpMatrix op_flip_last(int k, int l);

// Full symmetrization over all k+l indices, result read back as a (k,l)
// block-symmetric field.
RationalOpMatrix op_full_sym(int k, int l);

// Full symmetrization mapped to the canonical components of a symmetric
// (k+l)-tensor (rows indexed by the total number of 1s).
RationalOpMatrix op_sym_compress(int k, int l);

// lambda without the conformal factor: maps (k-1, l-1) components to (k, l),
// (lambda w)_{(h,a)} = (h a)/(k l) w_{(h-1,a-1)}
//                    + ((k-h)(l-a))/(k l) w_{(h,a)}.
// The full operator is e^{2 alpha(x)} times this.
RationalOpMatrix op_metric_insert(int k, int l);

}  // namespace mixtrans
