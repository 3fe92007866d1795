#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "clusterdenom/disc.hpp"
#include "clusterdenom/exmat.hpp"
#include "clusterdenom/laurent.hpp"
#include "clusterdenom/pattern.hpp"

namespace clusterdenom::reconstruct {

using disc::ArcMultiset;
using disc::TaggedArc;
using disc::TaggedTriangulation;

/// Every multiset of pairwise compatible tagged arcs with total multiplicity
/// at most `bound`, in graded-lexicographic order (size first, then the
/// sorted arc sequence). The empty multiset comes first.
void enumerate_multisets(int n, const TaggedTriangulation& t, int bound,
                         const std::function<void(const ArcMultiset&)>& emit);
std::vector<ArcMultiset> multisets(int n, int bound);

struct Collision {
  std::size_t triangulation = 0;
  ArcMultiset m;
  ArcMultiset n;
  std::vector<int> vector;
};

/// Groups multisets by intersection vector; identical multisets never collide.
std::vector<Collision> find_collisions(const TaggedTriangulation& t, std::size_t t_index,
                                       const std::vector<ArcMultiset>& domain);

struct InjectivityReport {
  int n = 0;
  int bound = 0;
  /// Indices into tagged_triangulations(n).
  std::vector<std::size_t> triangulations;
  std::size_t multisets = 0;
  std::vector<Collision> collisions;
};

/// sample = nullopt tests every triangulation; otherwise `*sample` of them
/// chosen by a seeded shuffle.
InjectivityReport injectivity_check(int n, int bound, std::optional<std::size_t> sample = std::nullopt,
                                    std::uint64_t seed = 0x5eed);
std::vector<std::size_t> sample_triangulations(std::size_t total, std::size_t count, std::uint64_t seed);

struct StarMismatch {
  std::size_t triangulation = 0;
  ArcMultiset m;
  std::vector<int> before;
  std::vector<int> after;
};

struct StarReport {
  std::size_t triangulations = 0;
  std::size_t multisets_checked = 0;
  std::size_t with_conjugate_pairs = 0;
  std::vector<StarMismatch> mismatches;
};

/// Int_T(M) = Int_T(M*) for every compatible M of size <= bound disjoint from T.
StarReport star_check(int n, int bound);

struct SegmentViolation {
  std::size_t triangulation = 0;
  ArcMultiset m;
  ArcMultiset n;
};

struct SegmentReport {
  std::size_t triangulations = 0;
  std::size_t permissible = 0;
  std::size_t equal_vector_pairs = 0;
  /// traces whose length differs from 1 + sum of crossings
  std::size_t count_failures = 0;
  std::vector<SegmentViolation> violations;
};

/// Over permissible multisets of size <= bound: equal intersection vectors
/// imply equal segment profiles.
SegmentReport segment_check(int n, int bound);

// Correspondence with the D_n cluster algebra --------------------------------

/// Chords from 1 to 3..n-1, the chord (1,n) with the puncture on its short
/// side, then the plain and notched radii at 1.
TaggedTriangulation fan_triangulation(int n);

struct CorrespondenceEntry {
  TaggedArc arc;
  VariableId variable = 0;
  std::vector<int> int_vector;
  DenominatorVector d_vector;
};

struct MultisetCheck {
  ArcMultiset m;
  std::vector<int> int_vector;
  DenominatorVector d_vector;
};

struct CorrespondenceTable {
  int n = 0;
  ExchangeMatrix initial;
  /// Orientations of the fan quiver tried before one synchronized.
  int orientations_tried = 0;
  std::vector<CorrespondenceEntry> entries;
  std::size_t triangulations = 0;
  std::size_t flips_checked = 0;
  std::vector<MultisetCheck> multisets;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Synchronized flips and mutations from the fan; the multiset part checks
/// every compatible multiset of size <= multiset_bound against the Laurent
/// expansion of its cluster monomial.
CorrespondenceTable fst_crosscheck(int n, int multiset_bound = 2);

}  // namespace clusterdenom::reconstruct
