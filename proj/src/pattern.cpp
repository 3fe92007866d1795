#include "clusterdenom/pattern.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "clusterdenom/errors.hpp"

namespace clusterdenom {

namespace {

constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & kPrime) + static_cast<std::uint64_t>(p >> 61);
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1U) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1U;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a) {
  if (a == 0) throw InvariantViolation("cluster variable vanished at a fingerprint point");
  return pow_mod(a, kPrime - 2);
}

std::vector<VariableId> sorted_ids(std::vector<VariableId> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

VariableRegistry::VariableRegistry(int n, Engine engine) : n_(n), engine_(engine) {
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_int_distribution<std::uint64_t> dist(2, kPrime - 1);
  for (int i = 0; i < n; ++i) {
    DenominatorVector d(static_cast<std::size_t>(n), 0);
    d[i] = -1;
    if (engine == Engine::Laurent) {
      intern(LaurentPolynomial::variable(n, i));
    } else {
      Fingerprint fp;
      for (auto& v : fp) v = dist(rng);
      intern(fp, d);
    }
  }
}

const LaurentPolynomial& VariableRegistry::polynomial(VariableId id) const {
  if (engine_ != Engine::Laurent) throw InvalidArgument("registry holds no Laurent polynomials");
  return polynomials_.at(id);
}

VariableId VariableRegistry::intern(LaurentPolynomial p) {
  if (engine_ != Engine::Laurent) throw InvalidArgument("registry is keyed by fingerprints");
  if (auto it = by_polynomial_.find(p); it != by_polynomial_.end()) return it->second;
  const auto id = static_cast<VariableId>(polynomials_.size());
  dvectors_.push_back(denom_vector(p));
  by_polynomial_.emplace(p, id);
  polynomials_.push_back(std::move(p));
  return id;
}

VariableId VariableRegistry::intern(const Fingerprint& fp, DenominatorVector d) {
  if (engine_ != Engine::Recurrence) throw InvalidArgument("registry is keyed by polynomials");
  if (auto it = by_fingerprint_.find(fp); it != by_fingerprint_.end()) {
    if (dvectors_[it->second] != d) throw InvariantViolation("one variable reached with two different d-vectors");
    return it->second;
  }
  const auto id = static_cast<VariableId>(fingerprints_.size());
  fingerprints_.push_back(fp);
  dvectors_.push_back(std::move(d));
  by_fingerprint_.emplace(fp, id);
  return id;
}

DenominatorVector recurrence_dvector(std::span<const DenominatorVector> cluster, const ExchangeMatrix& b, int k) {
  const int n = b.rank();
  const std::size_t dim = cluster[0].size();
  DenominatorVector plus(dim, 0), minus(dim, 0);
  for (int j = 0; j < n; ++j) {
    const auto bjk = b(j, k);
    for (std::size_t i = 0; i < dim; ++i) {
      if (bjk > 0) plus[i] += static_cast<int>(bjk) * cluster[j][i];
      if (bjk < 0) minus[i] += static_cast<int>(-bjk) * cluster[j][i];
    }
  }
  DenominatorVector out(dim);
  for (std::size_t i = 0; i < dim; ++i) out[i] = -cluster[k][i] + std::max(plus[i], minus[i]);
  return out;
}

Seed SeedMutator::initial_seed(const ExchangeMatrix& b) const {
  if (b.rank() != registry_.rank()) throw InvalidArgument("matrix rank differs from registry rank");
  Seed s{b, {}};
  for (int i = 0; i < b.rank(); ++i) s.cluster.push_back(static_cast<VariableId>(i));
  return s;
}

VariableId SeedMutator::compute_exchange(const Seed& seed, int k) {
  const int n = seed.matrix.rank();
  if (registry_.engine() == Engine::Laurent) {
    std::vector<LaurentPolynomial> cluster;
    cluster.reserve(static_cast<std::size_t>(n));
    for (VariableId id : seed.cluster) cluster.push_back(registry_.polynomial(id));
    LaurentPolynomial next = exchange_step(cluster, seed.matrix, k);
    if (!next.all_coefficients_positive()) {
      throw InvariantViolation("cluster variable with a non-positive coefficient: " + next.to_string());
    }
    return registry_.intern(std::move(next));
  }
  std::vector<DenominatorVector> dvs;
  for (VariableId id : seed.cluster) dvs.push_back(registry_.dvector(id));
  VariableRegistry::Fingerprint fp{};
  for (int p = 0; p < VariableRegistry::kFingerprintPoints; ++p) {
    std::uint64_t plus = 1, minus = 1;
    for (int j = 0; j < n; ++j) {
      const auto bjk = seed.matrix(j, k);
      const std::uint64_t v = registry_.fingerprint(seed.cluster[j])[p];
      if (bjk > 0) plus = mul_mod(plus, pow_mod(v, static_cast<std::uint64_t>(bjk)));
      if (bjk < 0) minus = mul_mod(minus, pow_mod(v, static_cast<std::uint64_t>(-bjk)));
    }
    std::uint64_t sum = plus + minus;
    if (sum >= kPrime) sum -= kPrime;
    fp[p] = mul_mod(sum, inv_mod(registry_.fingerprint(seed.cluster[k])[p]));
  }
  return registry_.intern(fp, recurrence_dvector(dvs, seed.matrix, k));
}

Seed SeedMutator::mutate(const Seed& seed, int k) {
  const int n = seed.matrix.rank();
  if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");
  std::vector<VariableId> kept;
  for (int j = 0; j < n; ++j) {
    if (j != k) kept.push_back(seed.cluster[j]);
  }
  std::sort(kept.begin(), kept.end());
  std::vector<VariableId> key = kept;
  key.push_back(seed.cluster[k]);
  VariableId next;
  if (auto it = memo_.find(key); it != memo_.end()) {
    next = it->second;
  } else {
    next = compute_exchange(seed, k);
    memo_.emplace(key, next);
    kept.push_back(next);
    memo_.emplace(std::move(kept), seed.cluster[k]);
  }
  Seed out{seed.matrix.mutate(k), seed.cluster};
  out.cluster[k] = next;
  return out;
}

ClusterPattern explore(const ExchangeMatrix& b, const ExploreOptions& opts) {
  auto registry = std::make_shared<VariableRegistry>(b.rank(), opts.engine);
  SeedMutator mutator(*registry);
  ClusterPattern pattern{b, registry, {}, {}};
  std::map<std::vector<VariableId>, std::size_t> index;

  Seed first = mutator.initial_seed(b);
  index.emplace(sorted_ids(first.cluster), 0);
  pattern.seeds.push_back(std::move(first));
  for (std::size_t cur = 0; cur < pattern.seeds.size(); ++cur) {
    for (int k = 0; k < b.rank(); ++k) {
      Seed next = mutator.mutate(pattern.seeds[cur], k);
      auto key = sorted_ids(next.cluster);
      if (auto it = index.find(key); it != index.end()) {
        // A cluster determines its seed: the stored seed must be a relabelling.
        const Seed& known = pattern.seeds[it->second];
        std::vector<int> perm(static_cast<std::size_t>(b.rank()));
        for (int i = 0; i < b.rank(); ++i) {
          perm[i] = static_cast<int>(std::find(known.cluster.begin(), known.cluster.end(), next.cluster[i]) -
                                     known.cluster.begin());
        }
        if (known.matrix.permuted(perm) != next.matrix) {
          throw InvariantViolation("two seeds share a cluster but their matrices are not permutation-equivalent");
        }
        if (cur < it->second) pattern.exchange_edges.push_back({cur, it->second, k});
        continue;
      }
      if (pattern.seeds.size() >= opts.node_budget) {
        throw BudgetExhausted("cluster exploration exceeded the node budget of " + std::to_string(opts.node_budget));
      }
      const std::size_t id = pattern.seeds.size();
      index.emplace(std::move(key), id);
      pattern.exchange_edges.push_back({cur, id, k});
      pattern.seeds.push_back(std::move(next));
    }
  }
  return pattern;
}

DMatrix dmatrix_of(const ClusterPattern& pattern, std::size_t cluster_id) {
  const int n = pattern.rank();
  DMatrix out{IntMatrix(n), cluster_id};
  const Seed& seed = pattern.seeds.at(cluster_id);
  for (int k = 0; k < n; ++k) out.d.set_column(k, pattern.registry->dvector(seed.cluster[k]));
  return out;
}

std::vector<DMatrix> dmatrices(const ClusterPattern& pattern) {
  std::vector<DMatrix> out;
  out.reserve(pattern.seeds.size());
  for (std::size_t i = 0; i < pattern.seeds.size(); ++i) out.push_back(dmatrix_of(pattern, i));
  return out;
}

DMatrix dvector_mutation(const DMatrix& d, const ExchangeMatrix& b, int k) {
  const int n = d.d.size();
  if (b.rank() != n) throw InvalidArgument("D-matrix and exchange matrix ranks differ");
  if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");
  std::vector<DenominatorVector> cols;
  for (int j = 0; j < n; ++j) {
    auto c = d.d.column(j);
    cols.emplace_back(c.begin(), c.end());
  }
  DMatrix out = d;
  out.d.set_column(k, recurrence_dvector(cols, b, k));
  return out;
}

std::size_t cross_validate_recurrence(const ExchangeMatrix& b) {
  const ClusterPattern laurent = explore(b, {Engine::Laurent});
  const ClusterPattern fast = explore(b, {Engine::Recurrence});
  if (laurent.cluster_count() != fast.cluster_count() || laurent.variable_count() != fast.variable_count()) {
    throw InvariantViolation("recurrence and Laurent engines disagree on pattern size");
  }
  // every single-step recurrence agrees with the Laurent ground truth
  for (const auto& e : laurent.exchange_edges) {
    const Seed& from = laurent.seeds[e.from];
    const Seed& to = laurent.seeds[e.to];
    VariableId fresh = 0;
    for (VariableId id : to.cluster) {
      if (std::find(from.cluster.begin(), from.cluster.end(), id) == from.cluster.end()) fresh = id;
    }
    const DMatrix predicted = dvector_mutation(dmatrix_of(laurent, e.from), from.matrix, e.k);
    const auto column = predicted.d.column(e.k);
    const auto& truth = laurent.registry->dvector(fresh);
    if (!std::equal(column.begin(), column.end(), truth.begin(), truth.end())) {
      throw InvariantViolation("d-vector recurrence disagrees with the Laurent engine at cluster " +
                               std::to_string(e.to));
    }
  }
  for (std::size_t i = 0; i < laurent.cluster_count(); ++i) {
    if (dmatrix_of(laurent, i).d != dmatrix_of(fast, i).d) {
      throw InvariantViolation("recurrence-derived D-matrix differs at cluster " + std::to_string(i));
    }
  }
  return laurent.cluster_count();
}

}  // namespace clusterdenom
