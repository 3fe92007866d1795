#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "clusterdenom/exmat.hpp"
#include "clusterdenom/numeric.hpp"

namespace oracle {

using clusterdenom::BigInt;
using clusterdenom::Rational;

struct CoxeterData {
  std::vector<int> exponents;
  int h = 0;
};

// Exponents and Coxeter numbers of the finite root systems, from tables.
inline CoxeterData coxeter_data(const std::string& type) {
  const char family = type[0];
  const int n = std::stoi(type.substr(1));
  CoxeterData c;
  switch (family) {
    case 'A':
      for (int i = 1; i <= n; ++i) c.exponents.push_back(i);
      c.h = n + 1;
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) c.exponents.push_back(2 * i - 1);
      c.h = 2 * n;
      break;
    case 'D':
      for (int i = 1; i <= n - 1; ++i) c.exponents.push_back(2 * i - 1);
      c.exponents.push_back(n - 1);
      c.h = 2 * n - 2;
      break;
    case 'E':
      if (n == 6) c = {{1, 4, 5, 7, 8, 11}, 12};
      if (n == 7) c = {{1, 5, 7, 9, 11, 13, 17}, 18};
      if (n == 8) c = {{1, 7, 11, 13, 17, 19, 23, 29}, 30};
      break;
    case 'F': c = {{1, 5, 7, 11}, 12}; break;
    case 'G': c = {{1, 5}, 6}; break;
  }
  return c;
}

// prod (e_i + h + 1) / (e_i + 1)
inline long long cluster_count(const std::string& type) {
  const auto c = coxeter_data(type);
  Rational p = 1;
  for (int e : c.exponents) p *= Rational(e + c.h + 1, e + 1);
  return static_cast<long long>(numerator(p));
}

// almost positive roots: n h / 2 positive roots plus n negative simple roots
inline long long variable_count(const std::string& type) {
  const auto c = coxeter_data(type);
  const long long n = static_cast<long long>(c.exponents.size());
  return n * c.h / 2 + n;
}

// Cofactor expansion; independent of the library's Bareiss code.
inline BigInt cofactor_det(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const BigInt term = m[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

// Fourier-Motzkin: is { x : g x >= h } nonempty over the rationals?
inline bool fm_feasible(std::vector<std::vector<Rational>> g, std::vector<Rational> h) {
  if (g.empty()) return true;
  const std::size_t vars = g[0].size();
  for (std::size_t v = 0; v < vars; ++v) {
    std::vector<std::size_t> pos, neg;
    std::vector<std::vector<Rational>> ng;
    std::vector<Rational> nh;
    for (std::size_t r = 0; r < g.size(); ++r) {
      if (g[r][v] > 0) pos.push_back(r);
      else if (g[r][v] < 0) neg.push_back(r);
      else {
        ng.push_back(g[r]);
        nh.push_back(h[r]);
      }
    }
    for (auto p : pos) {
      for (auto q : neg) {
        const Rational a = g[p][v], b = -g[q][v];
        std::vector<Rational> row(vars);
        for (std::size_t k = 0; k < vars; ++k) row[k] = b * g[p][k] + a * g[q][k];
        ng.push_back(row);
        nh.push_back(b * h[p] + a * h[q]);
      }
    }
    g = std::move(ng);
    h = std::move(nh);
  }
  for (std::size_t r = 0; r < g.size(); ++r)
    if (h[r] > 0) return false;
  return true;
}

// A x >= 0, x >= 0, x_l >= 1
inline bool fm_cone_feasible(const std::vector<std::vector<Rational>>& a, int l) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> g = a;
  std::vector<Rational> h(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(n, 0);
    row[i] = 1;
    g.push_back(row);
    h.push_back(i == static_cast<std::size_t>(l) ? 1 : 0);
  }
  return fm_feasible(g, h);
}

// Random skew-symmetrizable matrix: b_ij = c d_j, b_ji = -c d_i.
inline clusterdenom::ExchangeMatrix random_exchange_matrix(std::mt19937_64& rng, int n, int max_c = 2) {
  std::uniform_int_distribution<int> dd(1, 3), cc(-max_c, max_c);
  using Entry = clusterdenom::ExchangeMatrix::Entry;
  std::vector<Entry> d(static_cast<std::size_t>(n));
  for (auto& x : d) x = dd(rng);
  std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(n), std::vector<Entry>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int c = cc(rng);
      rows[i][j] = c * d[j];
      rows[j][i] = -c * d[i];
    }
  return clusterdenom::ExchangeMatrix::from_rows(rows);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
