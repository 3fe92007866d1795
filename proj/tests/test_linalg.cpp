#include <doctest.h>

#include <random>

#include "clusterdenom/errors.hpp"
#include "clusterdenom/linalg.hpp"
#include "oracles.hpp"

using namespace clusterdenom;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> e(lo, hi);
  IntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = e(rng);
  return m;
}

// product of random elementary matrices
IntMatrix random_unimodular(std::mt19937_64& rng, int n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<int> idx(0, n - 1), f(-2, 2);
  for (int step = 0; step < 3 * n; ++step) {
    const int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    IntMatrix e = IntMatrix::identity(n);
    e(i, j) = f(rng);
    u = u * e;
  }
  if (rng() % 2) {
    IntMatrix s = IntMatrix::identity(n);
    s(0, 0) = -1;
    u = u * s;
  }
  return u;
}

}  // namespace

TEST_CASE("determinants of minus the identity") {
  CHECK(det(-IntMatrix::identity(4)) == 1);
  CHECK(det(-IntMatrix::identity(3)) == -1);
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    auto m = random_matrix(rng, n, -4, 4);
    std::vector<std::vector<BigInt>> big(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) big[i].push_back(m(i, j));
    CHECK(det(m) == oracle::cofactor_det(big));
  }
}

TEST_CASE("inverses") {
  CHECK(inverse(-IntMatrix::identity(3)) == RationalMatrix(-IntMatrix::identity(3)));
  auto d = IntMatrix::from_rows({{2, 0}, {0, 1}});
  auto inv = inverse(d);
  CHECK(inv(0, 0) == Rational(1, 2));
  CHECK(inv(1, 1) == 1);
  CHECK(inv(0, 1) == 0);
  CHECK_THROWS_AS(inverse(IntMatrix::from_rows({{1, 2}, {2, 4}})), SingularMatrix);
}

TEST_CASE("unimodular matrices have integer inverses") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    auto u = random_unimodular(rng, n);
    auto d = det(u);
    CHECK((d == 1 || d == -1));
    auto inv = inverse(u);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(denominator(inv(i, j)) == 1);
    CHECK(RationalMatrix(u) * inv == RationalMatrix::identity(n));
  }
}

TEST_CASE("det is nonzero exactly when the inverse exists") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    auto m = random_matrix(rng, n, -1, 1);
    if (det(m) == 0) {
      CHECK_THROWS_AS(inverse(m), SingularMatrix);
    } else {
      CHECK(RationalMatrix(m) * inverse(m) == RationalMatrix::identity(n));
      auto a = adjugate(m);
      CHECK(a.det == det(m));
      auto prod = m * a.adj;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(BigInt(prod(i, j)) == (i == j ? a.det : BigInt(0)));
    }
  }
}
