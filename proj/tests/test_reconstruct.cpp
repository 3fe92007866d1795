#include <doctest.h>

#include <set>

#include "clusterdenom/reconstruct.hpp"

using namespace clusterdenom;
using namespace clusterdenom::reconstruct;

TEST_CASE("multiset enumeration") {
  auto t = disc::tagged_triangulations(4).front();
  std::vector<ArcMultiset> seen;
  enumerate_multisets(4, t, 1, [&](const ArcMultiset& m) { seen.push_back(m); });
  CHECK(seen.size() == 17);
  CHECK(seen.front().empty());
  // regression value
  CHECK(multisets(4, 2).size() == 99);
  CHECK(multisets(4, 3).size() == 347);
  for (const auto& m : multisets(4, 3)) {
    CHECK(disc::pairwise_compatible(m));
    CHECK(disc::total_size(m) <= 3);
  }
  CHECK_THROWS(enumerate_multisets(4, t, 0, [](const ArcMultiset&) {}));
}

TEST_CASE("enumeration is graded lexicographic and duplicate free") {
  auto all = multisets(5, 2);
  std::set<ArcMultiset> unique(all.begin(), all.end());
  CHECK(unique.size() == all.size());
  auto key = [](const ArcMultiset& m) {
    std::vector<disc::TaggedArc> seq;
    for (const auto& [a, k] : m)
      for (int r = 0; r < k; ++r) seq.push_back(a);
    return std::pair{seq.size(), seq};
  };
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(key(all[i - 1]) < key(all[i]));
}

TEST_CASE("identical multisets never count as collisions") {
  auto t = disc::tagged_triangulations(4)[5];
  auto domain = multisets(4, 2);
  CHECK(find_collisions(t, 5, domain).empty());
  domain.push_back(domain[10]);
  CHECK(find_collisions(t, 5, domain).empty());
}

TEST_CASE("a non-injective domain is caught") {
  // a conjugate pair and the loop replacing it share an intersection vector
  auto ts = disc::tagged_triangulations(4);
  auto it = std::find_if(ts.begin(), ts.end(), [](const disc::TaggedTriangulation& t) {
    return std::none_of(t.arcs().begin(), t.arcs().end(), [](auto& a) { return a.is_radius() && a.v() == 2; });
  });
  REQUIRE(it != ts.end());
  ArcMultiset pair{{disc::TaggedArc::radius(4, 2, disc::Tag::Plain), 1},
                   {disc::TaggedArc::radius(4, 2, disc::Tag::Notched), 1}};
  ArcMultiset loop{{disc::TaggedArc::loop(4, 2), 1}};
  auto c = find_collisions(*it, 9, {pair, loop});
  REQUIRE(c.size() == 1);
  CHECK(c[0].triangulation == 9);
  CHECK(c[0].m == pair);
  CHECK(c[0].n == loop);
}

TEST_CASE("injectivity on small domains") {
  auto r = injectivity_check(4, 2);
  CHECK(r.triangulations.size() == 50);
  CHECK(r.multisets == 99);
  CHECK(r.collisions.empty());
  auto s = injectivity_check(5, 2, 10, 7);
  CHECK(s.triangulations.size() == 10);
  CHECK(s.collisions.empty());
  CHECK(sample_triangulations(182, 10, 7) == s.triangulations);
  CHECK(sample_triangulations(182, 10, 7) != sample_triangulations(182, 10, 8));
}

TEST_CASE("star identity on every triangulation") {
  auto r = star_check(4, 2);
  CHECK(r.triangulations == 50);
  CHECK(r.with_conjugate_pairs > 0);
  CHECK(r.mismatches.empty());
}

TEST_CASE("segment profiles follow intersection vectors") {
  auto r = segment_check(4, 2);
  CHECK(r.permissible > 0);
  CHECK(r.count_failures == 0);
  CHECK(r.violations.empty());
}

TEST_CASE("fan triangulation") {
  auto t = fan_triangulation(5);
  CHECK(t.size() == 5);
  CHECK(t[4] == disc::TaggedArc::radius(5, 1, disc::Tag::Notched));
  CHECK(t[2] == disc::TaggedArc::chord(5, 1, 5, false));
}

TEST_CASE("arcs and cluster variables correspond") {
  for (int n : {4, 5}) {
    auto table = fst_crosscheck(n);
    for (const auto& f : table.failures) MESSAGE(f);
    CHECK(table.ok());
    CHECK(table.entries.size() == static_cast<std::size_t>(n * n));
    CHECK(table.triangulations == disc::tagged_triangulations(n).size());
    for (const auto& e : table.entries) {
      CHECK(e.int_vector == std::vector<int>(e.d_vector.begin(), e.d_vector.end()));
    }
    auto t0 = fan_triangulation(n);
    for (int k = 0; k < n; ++k) {
      auto it = std::find_if(table.entries.begin(), table.entries.end(), [&](auto& e) { return e.arc == t0[k]; });
      REQUIRE(it != table.entries.end());
      CHECK(it->variable == static_cast<VariableId>(k));
      std::vector<int> minus_e(static_cast<std::size_t>(n), 0);
      minus_e[k] = -1;
      CHECK(it->int_vector == minus_e);
    }
    CHECK(!table.multisets.empty());
  }
}
