#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clusterdenom/exmat.hpp"
#include "clusterdenom/feasibility.hpp"
#include "clusterdenom/linalg.hpp"
#include "clusterdenom/numeric.hpp"
#include "clusterdenom/pattern.hpp"

namespace clusterdenom {

/// Determinant of a D-matrix (Bareiss).
BigInt det(const DMatrix& d);
RationalMatrix inverse(const DMatrix& d);

/// Column permutations that move the cluster variables shared by the two
/// seeds (matched by variable id) to positions 0..r-1 of both, in the same order.
struct SharedColumns {
  std::vector<int> perm_s;
  std::vector<int> perm_t;
  int r = 0;
};
SharedColumns shared_columns(const DMatrix& ds, const DMatrix& dt, const ClusterPattern& pattern);

/// Ds^-1 Dt with columns aligned by shared_columns; rows of the product
/// follow perm_s, columns follow perm_t.
FeasibilitySystem make_system(const DMatrix& ds, const DMatrix& dt, const SharedColumns& shared, int l);

enum class Verdict { Verified, Counterexample, BudgetExceeded };
std::string to_string(Verdict v);

struct SingularFinding {
  std::size_t class_index = 0;
  std::size_t cluster = 0;
};

/// D_t m = D_s n with m, n nonnegative integers and m_l > 0.
struct FeasibleFinding {
  std::size_t class_index = 0;
  std::size_t s = 0;
  std::size_t t = 0;
  /// column of D_t (original order) forced to be positive
  int l = 0;
  int r = 0;
  std::vector<BigInt> m;
  std::vector<BigInt> n;
};

struct ClassSummary {
  ExchangeMatrix matrix;
  std::size_t clusters = 0;
  std::size_t variables = 0;
  std::size_t systems_checked = 0;
  BigInt min_abs_det = 0;
  bool completed = false;
};

struct Report {
  ExchangeMatrix input;
  Engine engine = Engine::Laurent;
  std::size_t class_count = 0;
  std::vector<ClassSummary> classes;
  /// Over every D-matrix examined; 0 if none.
  BigInt min_abs_det = 0;
  std::vector<SingularFinding> singular;
  std::vector<FeasibleFinding> feasible;
  std::size_t systems_checked = 0;
  Verdict verdict = Verdict::BudgetExceeded;
  std::string budget_message;
};

struct Progress {
  std::size_t class_index = 0;
  std::size_t class_count = 0;
  std::size_t clusters = 0;
  std::size_t systems_checked = 0;
  std::size_t findings = 0;
};

struct VerifyOptions {
  Engine engine = Engine::Laurent;
  unsigned jobs = 1;
  std::size_t class_budget = 1'000'000;
  std::size_t node_budget = 1'000'000;
  std::optional<std::chrono::steady_clock::duration> time_limit;
  /// Called after every finished class, and every checkpoint_interval
  /// while a class is still running.
  std::function<void(const Report&, const Progress&)> on_checkpoint;
  std::chrono::steady_clock::duration checkpoint_interval = std::chrono::seconds(60);
};

/// Steps 1-4: mutation classes, cluster patterns and D-matrices per class,
/// determinants, then every Case-2 system for both orders of each pair and
/// each non-shared column l. Classes are processed one at a time; once a
/// singular D-matrix has been seen the pairwise stage is skipped.
Report verify(const ExchangeMatrix& b, const VerifyOptions& opts = {});

/// Case-2 search restricted to one explored pattern. Appends findings; returns systems checked.
std::size_t check_pairs(const ClusterPattern& pattern, const std::vector<DMatrix>& ds, std::size_t class_index,
                        unsigned jobs, std::vector<FeasibleFinding>& findings,
                        const std::function<void()>& poll = {});

}  // namespace clusterdenom
