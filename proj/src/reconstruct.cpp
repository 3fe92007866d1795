#include "clusterdenom/reconstruct.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "clusterdenom/errors.hpp"

namespace clusterdenom::reconstruct {

using disc::Tag;

namespace {

struct Enumerator {
  const std::vector<TaggedArc>& arcs;
  std::vector<std::vector<bool>> ok;
  const std::function<void(const ArcMultiset&)>& emit;
  std::vector<int> chosen;

  void run(int remaining, int first) {
    if (remaining == 0) {
      ArcMultiset m;
      for (int a : chosen) ++m[arcs[static_cast<std::size_t>(a)]];
      emit(m);
      return;
    }
    for (int a = first; a < static_cast<int>(arcs.size()); ++a) {
      bool fits = true;
      for (int c : chosen) {
        if (!ok[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)]) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      chosen.push_back(a);
      run(remaining - 1, a);
      chosen.pop_back();
    }
  }
};

}  // namespace

void enumerate_multisets(int n, const TaggedTriangulation& t, int bound,
                         const std::function<void(const ArcMultiset&)>& emit) {
  if (t.marked_points() != n) throw InvalidArgument("triangulation has a different number of marked points");
  if (bound < 1) throw InvalidArgument("multiplicity bound must be positive");
  const auto arcs = disc::all_tagged_arcs(n);
  Enumerator e{arcs, {}, emit, {}};
  e.ok.assign(arcs.size(), std::vector<bool>(arcs.size(), false));
  for (std::size_t a = 0; a < arcs.size(); ++a)
    for (std::size_t b = 0; b < arcs.size(); ++b) e.ok[a][b] = disc::compatible(arcs[a], arcs[b]);
  for (int size = 0; size <= bound; ++size) e.run(size, 0);
}

std::vector<ArcMultiset> multisets(int n, int bound) {
  std::vector<ArcMultiset> out;
  enumerate_multisets(n, fan_triangulation(n), bound, [&](const ArcMultiset& m) { out.push_back(m); });
  return out;
}

std::vector<Collision> find_collisions(const TaggedTriangulation& t, std::size_t t_index,
                                       const std::vector<ArcMultiset>& domain) {
  std::map<std::vector<int>, std::vector<const ArcMultiset*>> seen;
  std::vector<Collision> out;
  for (const auto& m : domain) {
    auto v = disc::intersection_vector(t, m);
    auto& bucket = seen[v];
    if (std::any_of(bucket.begin(), bucket.end(), [&](const ArcMultiset* x) { return *x == m; })) continue;
    for (const ArcMultiset* other : bucket) out.push_back({t_index, *other, m, v});
    bucket.push_back(&m);
  }
  return out;
}

std::vector<std::size_t> sample_triangulations(std::size_t total, std::size_t count, std::uint64_t seed) {
  std::vector<std::size_t> idx(total);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (count >= total) return idx;
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

InjectivityReport injectivity_check(int n, int bound, std::optional<std::size_t> sample, std::uint64_t seed) {
  const auto ts = disc::tagged_triangulations(n);
  InjectivityReport rep;
  rep.n = n;
  rep.bound = bound;
  rep.triangulations = sample ? sample_triangulations(ts.size(), *sample, seed)
                              : sample_triangulations(ts.size(), ts.size(), seed);
  const auto domain = multisets(n, bound);
  rep.multisets = domain.size();
  for (std::size_t i : rep.triangulations) {
    auto c = find_collisions(ts[i], i, domain);
    rep.collisions.insert(rep.collisions.end(), c.begin(), c.end());
  }
  return rep;
}

StarReport star_check(int n, int bound) {
  const auto ts = disc::tagged_triangulations(n);
  const auto domain = multisets(n, bound);
  StarReport rep;
  rep.triangulations = ts.size();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto& t = ts[i];
    for (const auto& m : domain) {
      if (std::any_of(m.begin(), m.end(), [&](const auto& e) { return t.contains(e.first); })) continue;
      ++rep.multisets_checked;
      const auto s = disc::star(m, t);
      if (s != m) ++rep.with_conjugate_pairs;
      auto before = disc::intersection_vector(t, m);
      auto after = disc::intersection_vector(t, s);
      if (before != after) rep.mismatches.push_back({i, m, before, after});
    }
  }
  return rep;
}

SegmentReport segment_check(int n, int bound) {
  const auto ts = disc::tagged_triangulations(n);
  const auto domain = multisets(n, bound);
  const auto arcs = disc::all_tagged_arcs(n);
  SegmentReport rep;
  rep.triangulations = ts.size();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto& t = ts[i];
    const disc::TileDecomposition tiles(t);
    for (const auto& g : arcs) {
      if (t.contains(g)) continue;
      int expected = 1;
      for (const auto& a : t.arcs()) expected += disc::crossings(a, g);
      if (static_cast<int>(tiles.trace(g).segments.size()) != expected) ++rep.count_failures;
    }
    std::map<std::vector<int>, std::vector<std::pair<const ArcMultiset*, disc::SegmentProfile>>> groups;
    for (const auto& m : domain) {
      if (!disc::permissibility(m, t).permissible()) continue;
      ++rep.permissible;
      auto profile = disc::segment_profile(tiles, m);
      auto& bucket = groups[disc::intersection_vector(t, m)];
      for (const auto& [other, other_profile] : bucket) {
        ++rep.equal_vector_pairs;
        if (other_profile != profile) rep.violations.push_back({i, *other, m});
      }
      bucket.emplace_back(&m, std::move(profile));
    }
  }
  return rep;
}

TaggedTriangulation fan_triangulation(int n) {
  std::vector<TaggedArc> arcs;
  for (int j = 3; j <= n - 1; ++j) arcs.push_back(TaggedArc::chord(n, 1, j, false));
  arcs.push_back(TaggedArc::chord(n, 1, n, false));
  arcs.push_back(TaggedArc::radius(n, 1, Tag::Plain));
  arcs.push_back(TaggedArc::radius(n, 1, Tag::Notched));
  return TaggedTriangulation(std::move(arcs));
}

namespace {

// Edges of the fan quiver: chain of chords, forking to both radii at the chord (1,n).
std::vector<std::pair<int, int>> fan_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k + 1 <= n - 3; ++k) edges.emplace_back(k, k + 1);
  edges.emplace_back(n - 3, n - 2);
  edges.emplace_back(n - 3, n - 1);
  return edges;
}

ExchangeMatrix fan_orientation(int n, unsigned mask) {
  std::vector<std::vector<ExchangeMatrix::Entry>> rows(static_cast<std::size_t>(n),
                                                       std::vector<ExchangeMatrix::Entry>(static_cast<std::size_t>(n), 0));
  const auto edges = fan_edges(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, w] = edges[e];
    const int s = (mask >> e) & 1U ? 1 : -1;
    rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = s;
    rows[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] = -s;
  }
  return ExchangeMatrix::from_rows(rows);
}

std::vector<int> to_ints(const DenominatorVector& d) { return {d.begin(), d.end()}; }

// Flips and mutations agree on the new arc's d-vector up to two steps from the fan.
bool synchronizes(const TaggedTriangulation& t0, const ExchangeMatrix& b) {
  VariableRegistry registry(b.rank(), Engine::Laurent);
  SeedMutator mutator(registry);
  const Seed s0 = mutator.initial_seed(b);
  const int n = t0.size();
  for (int k1 = 0; k1 < n; ++k1) {
    const auto t1 = disc::flip(t0, k1);
    const Seed s1 = mutator.mutate(s0, k1);
    if (disc::intersection_vector(t0, t1[k1]) != to_ints(registry.dvector(s1.cluster[k1]))) return false;
    for (int k2 = 0; k2 < n; ++k2) {
      if (k2 == k1) continue;
      const auto t2 = disc::flip(t1, k2);
      const Seed s2 = mutator.mutate(s1, k2);
      if (disc::intersection_vector(t0, t2[k2]) != to_ints(registry.dvector(s2.cluster[k2]))) return false;
    }
  }
  return true;
}

}  // namespace

CorrespondenceTable fst_crosscheck(int n, int multiset_bound) {
  const auto t0 = fan_triangulation(n);
  CorrespondenceTable table{n, ExchangeMatrix::from_rows({{0}})};

  const unsigned orientations = 1U << static_cast<unsigned>(n - 1);
  std::optional<ExchangeMatrix> chosen;
  for (unsigned mask = 0; mask < orientations && !chosen; ++mask) {
    ++table.orientations_tried;
    auto b = fan_orientation(n, mask);
    if (synchronizes(t0, b)) chosen = b;
  }
  if (!chosen) {
    table.failures.push_back("no orientation of the fan quiver synchronizes flips with mutations");
    return table;
  }
  table.initial = *chosen;

  VariableRegistry registry(n, Engine::Laurent);
  SeedMutator mutator(registry);
  std::map<TaggedArc, VariableId> arc_to_var;
  std::map<VariableId, TaggedArc> var_to_arc;
  auto bind = [&](const TaggedArc& a, VariableId v) {
    auto [ia, new_a] = arc_to_var.emplace(a, v);
    auto [iv, new_v] = var_to_arc.emplace(v, a);
    if (ia->second != v || iv->second != a) {
      table.failures.push_back("arc " + a.to_string() + " paired with two different variables");
    }
  };

  std::map<std::vector<TaggedArc>, std::vector<VariableId>> visited;
  std::deque<std::pair<TaggedTriangulation, Seed>> queue;
  const Seed s0 = mutator.initial_seed(table.initial);
  for (int k = 0; k < n; ++k) bind(t0[k], s0.cluster[static_cast<std::size_t>(k)]);
  auto cluster_key = [](std::vector<VariableId> c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  visited.emplace(t0.sorted_arcs(), cluster_key(s0.cluster));
  queue.emplace_back(t0, s0);
  while (!queue.empty() && table.failures.size() < 20) {
    auto [t, s] = queue.front();
    queue.pop_front();
    for (int k = 0; k < n; ++k) {
      auto t1 = disc::flip(t, k);
      Seed s1 = mutator.mutate(s, k);
      ++table.flips_checked;
      bind(t1[k], s1.cluster[static_cast<std::size_t>(k)]);
      auto [it, fresh] = visited.emplace(t1.sorted_arcs(), cluster_key(s1.cluster));
      if (!fresh) {
        if (it->second != cluster_key(s1.cluster)) {
          table.failures.push_back("triangulation reached with two different clusters");
        }
        continue;
      }
      queue.emplace_back(std::move(t1), std::move(s1));
    }
  }
  table.triangulations = visited.size();

  const auto arcs = disc::all_tagged_arcs(n);
  if (arc_to_var.size() != arcs.size() || registry.size() != arcs.size()) {
    table.failures.push_back("pairing is not a bijection: " + std::to_string(arc_to_var.size()) + " arcs, " +
                             std::to_string(registry.size()) + " variables");
  }
  for (const auto& a : arcs) {
    auto it = arc_to_var.find(a);
    if (it == arc_to_var.end()) continue;
    CorrespondenceEntry e{a, it->second, disc::intersection_vector(t0, a), registry.dvector(it->second)};
    if (e.int_vector != to_ints(e.d_vector)) {
      table.failures.push_back("intersection vector differs from d-vector for " + a.to_string());
    }
    table.entries.push_back(std::move(e));
  }

  if (multiset_bound > 0 && table.failures.empty()) {
    for (const auto& m : multisets(n, multiset_bound)) {
      if (m.empty()) continue;
      auto product = LaurentPolynomial::constant(n, 1);
      for (const auto& [arc, k] : m) product = product * registry.polynomial(arc_to_var.at(arc)).pow(static_cast<unsigned>(k));
      MultisetCheck c{m, disc::intersection_vector(t0, m), denom_vector(product)};
      if (c.int_vector != to_ints(c.d_vector)) {
        table.failures.push_back("intersection vector differs from d-vector for " + disc::to_string(m));
      }
      table.multisets.push_back(std::move(c));
    }
  }
  return table;
}

}  // namespace clusterdenom::reconstruct
