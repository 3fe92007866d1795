#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace clusterdenom {

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  using Entry = std::int64_t;

  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}
  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMatrix from_rows(const std::vector<std::vector<Entry>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.n_; ++i) {
      if (static_cast<int>(rows[i].size()) != m.n_) throw std::invalid_argument("matrix must be square");
      for (int j = 0; j < m.n_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int size() const { return n_; }
  Entry& operator()(int i, int j) { return a_[index(i, j)]; }
  Entry operator()(int i, int j) const { return a_[index(i, j)]; }

  std::vector<Entry> column(int j) const {
    std::vector<Entry> c(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  template <typename Range>
  void set_column(int j, const Range& values) {
    int i = 0;
    for (auto v : values) (*this)(i++, j) = static_cast<Entry>(v);
  }
  /// result column j = this column perm[j]
  IntMatrix columns_permuted(std::span<const int> perm) const {
    IntMatrix m(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, perm[j]);
    return m;
  }
  std::vector<std::vector<Entry>> rows() const {
    std::vector<std::vector<Entry>> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out[i].assign(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix m(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        const Entry v = x(i, k);
        if (v == 0) continue;
        for (int j = 0; j < x.n_; ++j) m(i, j) += v * y(k, j);
      }
    return m;
  }
  IntMatrix operator-() const {
    IntMatrix m = *this;
    for (auto& v : m.a_) v = -v;
    return m;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * n_ + j); }

  int n_ = 0;
  std::vector<Entry> a_;
};

}  // namespace clusterdenom
