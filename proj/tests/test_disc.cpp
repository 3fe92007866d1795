#include <doctest.h>

#include <deque>
#include <set>

#include "clusterdenom/disc.hpp"
#include "clusterdenom/errors.hpp"
#include "oracles.hpp"

using namespace clusterdenom;
using namespace clusterdenom::disc;

namespace {

TaggedArc R(int n, int v, Tag t = Tag::Plain) { return TaggedArc::radius(n, v, t); }

}  // namespace

TEST_CASE("arc counts") {
  for (int n = 4; n <= 7; ++n) {
    auto arcs = all_tagged_arcs(n);
    CHECK(arcs.size() == static_cast<std::size_t>(n * n));
    CHECK(std::count_if(arcs.begin(), arcs.end(), [](auto& a) { return a.is_chord(); }) == n * (n - 2));
    CHECK(std::set<TaggedArc>(arcs.begin(), arcs.end()).size() == arcs.size());
    for (const auto& a : arcs) {
      CHECK_FALSE(a.is_loop());
      if (a.is_radius() && a.tag() == Tag::Plain) CHECK(std::find(arcs.begin(), arcs.end(), a.conjugate()) != arcs.end());
    }
  }
  CHECK_THROWS_AS(all_tagged_arcs(3), InvalidArgument);
}

TEST_CASE("chord normalization and validity") {
  CHECK(TaggedArc::chord(5, 4, 2, false) == TaggedArc::chord(5, 2, 4, true));
  CHECK_THROWS_AS(TaggedArc::chord(5, 1, 2, false), InvalidArgument);  // boundary segment
  CHECK_THROWS_AS(TaggedArc::chord(5, 1, 5, true), InvalidArgument);
  CHECK_NOTHROW(TaggedArc::chord(5, 1, 2, true));
  CHECK_THROWS_AS(TaggedArc::chord(5, 1, 1, true), InvalidArgument);
  CHECK_THROWS_AS(TaggedArc::radius(5, 6, Tag::Plain), InvalidArgument);
  auto c = TaggedArc::chord(6, 2, 5, false);
  CHECK(c.interval_start() == 2);
  CHECK(c.interval_length() == 3);
  CHECK(TaggedArc::chord_from_interval(6, 2, 3) == c);
  auto d = TaggedArc::chord(6, 2, 5, true);
  CHECK(d.interval_start() == 5);
  CHECK(d.interval_length() == 3);
}

TEST_CASE("compatibility examples") {
  CHECK(compatible(R(4, 1), R(4, 1, Tag::Notched)));
  CHECK_FALSE(compatible(R(4, 1), R(4, 2, Tag::Notched)));
  CHECK(compatible(R(4, 1), R(4, 2)));
  CHECK_FALSE(compatible(TaggedArc::chord(4, 1, 3, false), TaggedArc::chord(4, 2, 4, false)));
  CHECK_THROWS_AS(compatible(TaggedArc::loop(4, 1), R(4, 2)), InvalidArgument);
}

TEST_CASE("intersection number examples") {
  auto a = TaggedArc::chord(4, 1, 2, true);
  auto b = TaggedArc::chord(4, 3, 4, true);
  CHECK(intersection(a, b) == 2);
  for (const auto& x : all_tagged_arcs(5)) CHECK(intersection(x, x) == -1);
  CHECK(intersection(R(4, 1), R(4, 1, Tag::Notched)) == 0);
  CHECK(intersection(R(4, 1), R(4, 2, Tag::Notched)) == 1);
  // a radius crosses a chord exactly when its endpoint is cut off from the puncture
  CHECK(intersection(TaggedArc::chord(5, 1, 3, false), R(5, 2)) == 1);
  CHECK(intersection(TaggedArc::chord(5, 1, 3, false), R(5, 4)) == 0);
  CHECK_THROWS_AS(intersection(TaggedArc::loop(4, 1), R(4, 2)), InvalidArgument);
}

TEST_CASE("crossings are symmetric and compatibility means Int <= 0") {
  for (int n = 4; n <= 6; ++n) {
    auto arcs = all_tagged_arcs(n);
    for (const auto& a : arcs) {
      for (const auto& b : arcs) {
        CHECK(crossings(a, b) == crossings(b, a));
        if (a != b) CHECK(compatible(a, b) == (intersection(a, b) <= 0));
      }
    }
  }
}

TEST_CASE("loop intersections equal the conjugate pair sums") {
  for (int n = 4; n <= 6; ++n) {
    for (const auto& a : all_tagged_arcs(n)) {
      for (int v = 1; v <= n; ++v) {
        if (a.is_radius() && a.v() == v) continue;
        CHECK(intersection(a, TaggedArc::loop(n, v)) ==
              intersection(a, R(n, v)) + intersection(a, R(n, v, Tag::Notched)));
      }
    }
  }
}

TEST_CASE("triangulation counts follow the D_n cluster counts") {
  CHECK(tagged_triangulations(4).size() == static_cast<std::size_t>(oracle::cluster_count("D4")));
  CHECK(tagged_triangulations(5).size() == static_cast<std::size_t>(oracle::cluster_count("D5")));
  CHECK(tagged_triangulations(6).size() == static_cast<std::size_t>(oracle::cluster_count("D6")));
}

TEST_CASE("triangulations are maximal compatible sets without mixed tags") {
  for (int n = 4; n <= 5; ++n) {
    auto arcs = all_tagged_arcs(n);
    for (const auto& t : tagged_triangulations(n)) {
      CHECK(t.size() == n);
      for (const auto& a : t.arcs()) {
        CHECK_FALSE(a.is_loop());
        for (const auto& b : t.arcs())
          if (a != b) CHECK(intersection(a, b) == 0);
      }
      for (const auto& c : arcs) {
        if (t.contains(c)) continue;
        CHECK_FALSE(std::all_of(t.arcs().begin(), t.arcs().end(), [&](auto& a) { return compatible(a, c); }));
      }
      std::set<int> radius_points;
      std::set<Tag> tags;
      for (const auto& a : t.arcs()) {
        if (!a.is_radius()) continue;
        radius_points.insert(a.v());
        tags.insert(a.tag());
      }
      // either one tag, or a conjugate pair at one point
      CHECK((tags.size() == 1 || radius_points.size() == 1));
    }
  }
}

TEST_CASE("triangulation validation") {
  auto t = tagged_triangulations(4).front();
  auto arcs = t.arcs();
  arcs.pop_back();
  CHECK_THROWS_AS(TaggedTriangulation{arcs}, InvalidArgument);
  arcs.push_back(arcs.front());
  CHECK_THROWS_AS(TaggedTriangulation{arcs}, InvalidArgument);
  CHECK_THROWS_AS(TaggedTriangulation({R(4, 1), R(4, 2), R(4, 3), R(4, 4, Tag::Notched)}), InvalidArgument);
}

TEST_CASE("flips") {
  for (int n = 4; n <= 5; ++n) {
    for (const auto& t : tagged_triangulations(n)) {
      std::set<std::vector<TaggedArc>> neighbours;
      for (int k = 0; k < n; ++k) {
        auto f = flip(t, k);
        CHECK(flip(f, k) == t);
        CHECK(f[k] != t[k]);
        neighbours.insert(f.sorted_arcs());
      }
      CHECK(neighbours.size() == static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("flip graph for n = 4 is connected and 4-regular") {
  auto all = tagged_triangulations(4);
  std::set<std::vector<TaggedArc>> seen{all.front().sorted_arcs()};
  std::deque<TaggedTriangulation> queue{all.front()};
  while (!queue.empty()) {
    auto t = queue.front();
    queue.pop_front();
    std::set<std::vector<TaggedArc>> nb;
    for (int k = 0; k < 4; ++k) {
      auto f = flip(t, k);
      nb.insert(f.sorted_arcs());
      if (seen.insert(f.sorted_arcs()).second) queue.push_back(f);
    }
    CHECK(nb.size() == 4);
  }
  CHECK(seen.size() == 50);
}

TEST_CASE("intersection vectors") {
  auto t = tagged_triangulations(4)[7];
  for (int k = 0; k < 4; ++k) {
    for (int m = 1; m <= 3; ++m) {
      auto v = intersection_vector(t, ArcMultiset{{t[k], m}});
      for (int i = 0; i < 4; ++i) CHECK(v[i] == (i == k ? -m : 0));
    }
  }
  CHECK(intersection_vector(t, ArcMultiset{}) == std::vector<int>(4, 0));
}

TEST_CASE("star construction") {
  auto ts = tagged_triangulations(4);
  // a triangulation without radii at 1
  auto it = std::find_if(ts.begin(), ts.end(), [](const TaggedTriangulation& t) {
    return std::none_of(t.arcs().begin(), t.arcs().end(), [](auto& a) { return a.is_radius() && a.v() == 1; });
  });
  REQUIRE(it != ts.end());
  ArcMultiset pair{{R(4, 1), 1}, {R(4, 1, Tag::Notched), 1}};
  CHECK(star(pair, *it) == ArcMultiset{{TaggedArc::loop(4, 1), 1}});
  ArcMultiset uneven{{R(4, 1), 3}, {R(4, 1, Tag::Notched), 1}};
  CHECK(star(uneven, *it) == ArcMultiset{{R(4, 1), 2}, {TaggedArc::loop(4, 1), 1}});
  ArcMultiset plain{{R(4, 1), 2}};
  CHECK(star(plain, *it) == plain);
  CHECK(intersection_vector(*it, pair) == intersection_vector(*it, star(pair, *it)));
  CHECK_THROWS_AS(star(ArcMultiset{{(*it)[0], 1}}, *it), InvalidArgument);
  auto p = permissibility(pair, *it);
  CHECK(p.compatible);
  CHECK_FALSE(p.no_conjugate_pairs);
  CHECK(permissibility(star(pair, *it), *it).permissible());
}

TEST_CASE("global tag flip leaves intersection vectors unchanged") {
  for (int n = 4; n <= 5; ++n) {
    auto arcs = all_tagged_arcs(n);
    for (const auto& t : tagged_triangulations(n)) {
      auto ft = flip_tags(t);
      for (const auto& a : arcs) CHECK(intersection_vector(t, a) == intersection_vector(ft, flip_tags(a)));
    }
  }
}

TEST_CASE("segment counts are crossings plus one") {
  for (int n = 4; n <= 6; ++n) {
    for (const auto& t : tagged_triangulations(n)) {
      TileDecomposition tiles(t);
      for (const auto& g : all_tagged_arcs(n)) {
        if (t.contains(g)) {
          CHECK_THROWS_AS(tiles.trace(g), InvalidArgument);
          continue;
        }
        int expected = 1;
        for (const auto& a : t.arcs()) expected += crossings(a, g);
        auto tr = tiles.trace(g);
        CHECK(static_cast<int>(tr.segments.size()) == expected);
        CHECK(tr.crossed.size() + 1 == tr.segments.size());
        CHECK(tr.tiles.size() == tr.segments.size());
        // the crossed arcs are exactly those with positive crossing number, with multiplicity
        for (int k = 0; k < n; ++k)
          CHECK(std::count(tr.crossed.begin(), tr.crossed.end(), k) == crossings(t[k], g));
        for (const auto& d : tr.segments) CHECK(!(d.second < d.first));
      }
    }
  }
}

TEST_CASE("an arc crossing nothing is a single segment") {
  auto t = tagged_triangulations(5)[3];
  for (const auto& g : all_tagged_arcs(5)) {
    if (t.contains(g)) continue;
    int total = 0;
    for (const auto& a : t.arcs()) total += crossings(a, g);
    if (total == 0) CHECK(trace_segments(t, g).segments.size() == 1);
  }
}

TEST_CASE("chords avoiding the puncture side behave like a heptagon") {
  // chords whose puncture-free side stays within 1..6 are the heptagon diagonals away from the
  // puncture, taken as a seventh vertex; crossing-free 4-sets are heptagon triangulations with an
  // ear at the puncture, counted by the Catalan number C_4 = 14
  const int n = 6;
  std::vector<TaggedArc> chords;
  for (const auto& a : all_tagged_arcs(n)) {
    if (a.is_chord() && a.interval_start() + a.interval_length() <= n) chords.push_back(a);
  }
  REQUIRE(chords.size() == 10);
  auto free_of_crossings = [&](std::initializer_list<std::size_t> idx) {
    for (auto a : idx)
      for (auto b : idx)
        if (a < b && crossings(chords[a], chords[b]) != 0) return false;
    return true;
  };
  std::size_t count = 0;
  const std::size_t m = chords.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c)
        for (std::size_t d = c + 1; d < m; ++d)
          if (free_of_crossings({a, b, c, d})) ++count;
  CHECK(count == 14);
}
