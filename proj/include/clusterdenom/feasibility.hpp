#pragma once

#include <optional>
#include <vector>

#include "clusterdenom/linalg.hpp"
#include "clusterdenom/matrix.hpp"
#include "clusterdenom/numeric.hpp"

namespace clusterdenom {

/// The Case-2 system  A X >= 0,  X >= e_l  for A = Ds^-1 Dt after aligning
/// the r shared columns to the front. l is a 0-based column with l >= r.
struct FeasibilitySystem {
  RationalMatrix a;
  int l = 0;
  int r = 0;
};

struct FeasibilityResult {
  bool feasible = false;
  /// A solution when feasible (rational, X_l >= 1).
  std::vector<Rational> witness;
};

/// Exact phase-1 simplex with Bland's rule for  G x >= h, x >= 0.
/// Runs in int64 fractions first and repeats in arbitrary precision on overflow.
FeasibilityResult solve_nonnegative(const std::vector<std::vector<Rational>>& g, const std::vector<Rational>& h);

/// A X >= 0, X >= 0, X_l >= 1 for an integer matrix A.
FeasibilityResult solve_cone(const IntMatrix& a, int l);

FeasibilityResult solve(const FeasibilitySystem& sys);
bool feasible(const FeasibilitySystem& sys);

/// Smallest positive integer multiple of a rational vector.
std::vector<BigInt> scale_to_integers(const std::vector<Rational>& v);

}  // namespace clusterdenom
