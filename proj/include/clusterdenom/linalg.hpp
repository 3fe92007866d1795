#pragma once

#include <vector>

#include "clusterdenom/matrix.hpp"
#include "clusterdenom/numeric.hpp"

namespace clusterdenom {

/// Square matrix of reduced fractions.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}
  explicit RationalMatrix(const IntMatrix& m);
  static RationalMatrix identity(int n);

  int size() const { return n_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  /// result(i, j) = this(row_perm[i], col_perm[j])
  RationalMatrix permuted(std::span<const int> row_perm, std::span<const int> col_perm) const;

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

/// Exact determinant by fraction-free Bareiss elimination.
BigInt det(const IntMatrix& m);

/// Exact inverse; throws SingularMatrix when det(m) == 0.
RationalMatrix inverse(const IntMatrix& m);

/// adj(m) with m * adj(m) == det(m) * I. Entries must fit int64 (std::overflow_error otherwise).
struct Adjugate {
  IntMatrix adj;
  BigInt det;
};
Adjugate adjugate(const IntMatrix& m);

}  // namespace clusterdenom
