#include "clusterdenom/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "clusterdenom/errors.hpp"

namespace clusterdenom {

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.size()) {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) (*this)(i, j) = Rational(m(i, j));
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
  RationalMatrix m(x.n_);
  for (int i = 0; i < x.n_; ++i)
    for (int k = 0; k < x.n_; ++k) {
      if (x(i, k) == 0) continue;
      for (int j = 0; j < x.n_; ++j) m(i, j) += x(i, k) * y(k, j);
    }
  return m;
}

RationalMatrix RationalMatrix::permuted(std::span<const int> row_perm, std::span<const int> col_perm) const {
  RationalMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(row_perm[i], col_perm[j]);
  return m;
}

BigInt det(const IntMatrix& m) {
  const int n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // exact by Sylvester's identity
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

RationalMatrix inverse(const IntMatrix& m) {
  const int n = m.size();
  RationalMatrix a(m);
  RationalMatrix inv = RationalMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i) {
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw SingularMatrix("matrix is singular");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Adjugate adjugate(const IntMatrix& m) {
  const BigInt d = det(m);
  if (d == 0) throw SingularMatrix("matrix is singular");
  const RationalMatrix inv = inverse(m);
  const int n = m.size();
  Adjugate out{IntMatrix(n), d};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational v = inv(i, j) * Rational(d);
      if (denominator(v) != 1) throw InvariantViolation("adjugate entry is not integral");
      const BigInt& num = numerator(v);
      if (num > BigInt(INT64_MAX) || num < BigInt(INT64_MIN)) throw std::overflow_error("adjugate entry overflow");
      out.adj(i, j) = static_cast<IntMatrix::Entry>(num);
    }
  }
  return out;
}

}  // namespace clusterdenom
