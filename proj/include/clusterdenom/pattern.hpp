#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "clusterdenom/exmat.hpp"
#include "clusterdenom/laurent.hpp"
#include "clusterdenom/matrix.hpp"

namespace clusterdenom {

using VariableId = std::uint32_t;

/// Which engine produced the cluster variables of a pattern.
enum class Engine {
  /// exact Laurent expansions; variables keyed by canonical polynomial
  Laurent,
  /// d-vector recurrence; variables keyed by modular evaluation fingerprints
  Recurrence,
};

/// Interns cluster variables. Ids 0..n-1 are the initial variables x_1..x_n.
class VariableRegistry {
 public:
  VariableRegistry(int n, Engine engine);

  Engine engine() const { return engine_; }
  int rank() const { return n_; }
  std::size_t size() const { return dvectors_.size(); }
  const DenominatorVector& dvector(VariableId id) const { return dvectors_.at(id); }
  /// Only available for the Laurent engine.
  const LaurentPolynomial& polynomial(VariableId id) const;

  /// Laurent engine: returns the id of p, adding it if new.
  VariableId intern(LaurentPolynomial p);

  static constexpr int kFingerprintPoints = 4;
  using Fingerprint = std::array<std::uint64_t, kFingerprintPoints>;
  /// Recurrence engine: returns the id keyed by fingerprint, adding (fp, d) if new.
  VariableId intern(const Fingerprint& fp, DenominatorVector d);
  const Fingerprint& fingerprint(VariableId id) const { return fingerprints_.at(id); }

 private:
  struct FingerprintHash {
    std::size_t operator()(const Fingerprint& f) const { return static_cast<std::size_t>(f[0] ^ (f[1] << 1)); }
  };

  int n_;
  Engine engine_;
  std::vector<DenominatorVector> dvectors_;
  std::vector<LaurentPolynomial> polynomials_;
  std::unordered_map<LaurentPolynomial, VariableId, LaurentHash> by_polynomial_;
  std::vector<Fingerprint> fingerprints_;
  std::unordered_map<Fingerprint, VariableId, FingerprintHash> by_fingerprint_;
};

/// Exchange matrix plus an ordered cluster of variable ids.
struct Seed {
  ExchangeMatrix matrix;
  std::vector<VariableId> cluster;
};

/// Mutates seeds against a shared registry. Each exchange (the n-1 kept
/// variables plus the one removed) is computed once and remembered in both
/// directions.
class SeedMutator {
 public:
  explicit SeedMutator(VariableRegistry& registry) : registry_(registry) {}

  Seed initial_seed(const ExchangeMatrix& b) const;
  /// Throws InexactDivision if the Laurent division fails (an engine bug) and
  /// InvariantViolation if a new variable has a non-positive coefficient.
  Seed mutate(const Seed& seed, int k);

  VariableRegistry& registry() { return registry_; }

 private:
  VariableId compute_exchange(const Seed& seed, int k);

  VariableRegistry& registry_;
  std::map<std::vector<VariableId>, VariableId> memo_;
};

/// d-vector of the new variable from the recurrence
/// d'_k = -d_k + max(sum_j [b_jk]+ d_j, sum_j [-b_jk]+ d_j).
DenominatorVector recurrence_dvector(std::span<const DenominatorVector> cluster_dvectors, const ExchangeMatrix& b,
                                     int k);

struct ExchangeEdge {
  std::size_t from;
  std::size_t to;
  int k;
};

/// All seeds reachable from the initial seed, one per unordered cluster, in BFS order.
struct ClusterPattern {
  ExchangeMatrix initial;
  std::shared_ptr<const VariableRegistry> registry;
  std::vector<Seed> seeds;
  std::vector<ExchangeEdge> exchange_edges;

  int rank() const { return initial.rank(); }
  std::size_t cluster_count() const { return seeds.size(); }
  std::size_t variable_count() const { return registry->size(); }
};

struct ExploreOptions {
  Engine engine = Engine::Laurent;
  std::size_t node_budget = 1'000'000;
};

/// Breadth-first exploration of the exchange graph (ascending k, FIFO).
/// Throws BudgetExhausted past node_budget seeds.
ClusterPattern explore(const ExchangeMatrix& b, const ExploreOptions& opts = {});

/// Columns are the d-vectors of the cluster variables of one seed.
struct DMatrix {
  IntMatrix d;
  std::size_t cluster_id = 0;

  friend bool operator==(const DMatrix&, const DMatrix&) = default;
};

DMatrix dmatrix_of(const ClusterPattern& pattern, std::size_t cluster_id);
/// One per seed, in seed order.
std::vector<DMatrix> dmatrices(const ClusterPattern& pattern);

/// Recurrence applied to a whole D-matrix: only column k changes.
DMatrix dvector_mutation(const DMatrix& d, const ExchangeMatrix& b_at_seed, int k);

/// Explores b with both engines and compares every D-matrix. Returns the
/// number of clusters compared; throws InvariantViolation on the first mismatch.
std::size_t cross_validate_recurrence(const ExchangeMatrix& b);

}  // namespace clusterdenom
