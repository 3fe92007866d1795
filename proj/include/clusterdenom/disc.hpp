#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace clusterdenom::disc {

/// Largest number of boundary marked points supported by the enumerators.
inline constexpr int kMaxMarkedPoints = 16;

enum class Tag : std::uint8_t { Plain, Notched };
std::string to_string(Tag t);

/// A tagged arc in the once-punctured disc with n marked points labelled
/// 1..n counterclockwise. Stored normalized:
///  - Chord: 1 <= i < j <= n; puncture_ccw is true when the puncture lies on
///    the side of the counterclockwise boundary path i -> j.
///  - Radius: v joins boundary point v to the puncture, tagged at the puncture.
///  - Loop: based at v, closely wrapping the radius at v (never a tagged arc;
///    only produced by star()).
class TaggedArc {
 public:
  enum class Kind : std::uint8_t { Chord, Radius, Loop };

  static TaggedArc chord(int n, int i, int j, bool puncture_ccw);
  static TaggedArc radius(int n, int v, Tag tag);
  static TaggedArc loop(int n, int v);
  /// Chord whose puncture-free boundary path runs counterclockwise from
  /// `start` through `length` boundary segments (2 <= length <= n-1).
  static TaggedArc chord_from_interval(int n, int start, int length);

  int marked_points() const { return n_; }
  Kind kind() const { return kind_; }
  bool is_chord() const { return kind_ == Kind::Chord; }
  bool is_radius() const { return kind_ == Kind::Radius; }
  bool is_loop() const { return kind_ == Kind::Loop; }
  int i() const { return a_; }
  int j() const { return b_; }
  int v() const { return a_; }
  bool puncture_ccw() const { return puncture_ccw_; }
  Tag tag() const { return tag_; }

  /// Chords only: start point and length of the puncture-free boundary path.
  int interval_start() const;
  int interval_length() const;

  /// Same underlying arc (tags ignored).
  bool same_underlying(const TaggedArc& o) const;
  /// Radius with the other tag; throws for non-radii.
  TaggedArc conjugate() const;

  std::string to_string() const;

  friend bool operator==(const TaggedArc&, const TaggedArc&) = default;
  friend auto operator<=>(const TaggedArc& x, const TaggedArc& y) {
    return std::tie(x.n_, x.kind_, x.a_, x.b_, x.puncture_ccw_, x.tag_) <=>
           std::tie(y.n_, y.kind_, y.a_, y.b_, y.puncture_ccw_, y.tag_);
  }

 private:
  TaggedArc(int n, Kind kind, int a, int b, bool puncture_ccw, Tag tag)
      : n_(n), kind_(kind), a_(a), b_(b), puncture_ccw_(puncture_ccw), tag_(tag) {}

  int n_ = 0;
  Kind kind_ = Kind::Chord;
  int a_ = 0;
  int b_ = 0;
  bool puncture_ccw_ = false;
  Tag tag_ = Tag::Plain;
};

/// Every tagged arc for n marked points: n(n-2) chords then 2n radii, sorted.
std::vector<TaggedArc> all_tagged_arcs(int n);

/// Crossing number of the underlying arcs, through the branched double cover.
int crossings(const TaggedArc& a, const TaggedArc& b);
bool compatible(const TaggedArc& a, const TaggedArc& b);

/// Int(a|b) for a loop-free arc a; b may be a Loop.
int intersection(const TaggedArc& a, const TaggedArc& b);

/// Arcs with multiplicities. Ordered, so equal multisets compare equal.
using ArcMultiset = std::map<TaggedArc, int>;
int total_size(const ArcMultiset& m);
bool pairwise_compatible(const ArcMultiset& m);
std::string to_string(const ArcMultiset& m);

class TaggedTriangulation {
 public:
  /// Validates size, pairwise compatibility and maximality.
  explicit TaggedTriangulation(std::vector<TaggedArc> arcs);

  int marked_points() const { return arcs_.front().marked_points(); }
  int size() const { return static_cast<int>(arcs_.size()); }
  const TaggedArc& operator[](int k) const { return arcs_.at(static_cast<std::size_t>(k)); }
  const std::vector<TaggedArc>& arcs() const { return arcs_; }
  bool contains(const TaggedArc& a) const;
  std::optional<int> position(const TaggedArc& a) const;
  /// Arcs in sorted order; identifies the triangulation regardless of positions.
  std::vector<TaggedArc> sorted_arcs() const;

  friend bool operator==(const TaggedTriangulation&, const TaggedTriangulation&) = default;

 private:
  std::vector<TaggedArc> arcs_;
};

/// All maximal compatible sets (Bron-Kerbosch), each sorted, in lexicographic order.
std::vector<TaggedTriangulation> tagged_triangulations(int n);

/// Replace position k by the unique other arc compatible with the rest.
TaggedTriangulation flip(const TaggedTriangulation& t, int k);

std::vector<int> intersection_vector(const TaggedTriangulation& t, const TaggedArc& a);
std::vector<int> intersection_vector(const TaggedTriangulation& t, const ArcMultiset& m);

/// Replaces each conjugate pair of radii at v by a loop at v, as many times
/// as both multiplicities allow. Throws InvalidArgument if m meets t.
ArcMultiset star(const ArcMultiset& m, const TaggedTriangulation& t);

struct Permissibility {
  bool compatible = false;
  bool no_conjugate_pairs = false;
  bool no_wrapping_loops = false;
  bool disjoint = false;
  bool permissible() const { return compatible && no_conjugate_pairs && no_wrapping_loops && disjoint; }
};
Permissibility permissibility(const ArcMultiset& m, const TaggedTriangulation& t);

/// Swap plain and notched on every radius.
TaggedArc flip_tags(const TaggedArc& a);
ArcMultiset flip_tags(const ArcMultiset& m);
TaggedTriangulation flip_tags(const TaggedTriangulation& t);

// Segments ------------------------------------------------------------------

/// One end of a segment inside a tile.
struct Port {
  enum class Kind : std::uint8_t { Side, Vertex, Puncture };
  Kind kind = Kind::Side;
  /// Side: arc position in T, or n + s for boundary segment s -> s+1 (0-based s).
  /// Vertex: boundary point (1-based).
  int id = 0;
  friend auto operator<=>(const Port&, const Port&) = default;
};

struct SegmentDescriptor {
  int tile = 0;
  /// Unordered: first <= second.
  Port first;
  Port second;
  /// Tag at the puncture when the segment ends there.
  std::optional<Tag> tag;
  friend auto operator<=>(const SegmentDescriptor&, const SegmentDescriptor&) = default;
};

/// Tile id -> sorted descriptors.
using SegmentProfile = std::map<int, std::vector<SegmentDescriptor>>;

struct SegmentTrace {
  std::vector<SegmentDescriptor> segments;
  /// Positions in T crossed, in order along the arc.
  std::vector<int> crossed;
  /// Tiles visited, in order; consecutive entries share the crossed arc.
  std::vector<int> tiles;
};

/// Decomposition of T into tiles: lifts of T to the 2n-gon cut it into
/// triangles, and a tile is an orbit of triangles under the deck rotation.
/// When T holds a conjugate pair the folded tile between the two radii gets
/// its own id (tile_count() - 1).
class TileDecomposition {
 public:
  explicit TileDecomposition(const TaggedTriangulation& t);

  const TaggedTriangulation& triangulation() const { return t_; }
  int tile_count() const { return tile_count_; }
  SegmentTrace trace(const TaggedArc& gamma) const;

 private:
  /// Lifted arc of T in the 2n-gon; vertex 2n is the puncture.
  struct Edge {
    int u = 0;
    int w = 0;
    /// counterclockwise length u -> w for chords, n for the folded
    /// diameter, 0 for a half-radius u -> puncture
    int len = 0;
    /// position in T
    int side = 0;
  };
  struct Face {
    std::array<int, 3> v;
    std::array<int, 3> sides;
    int tile;
  };

  int face_at(double x, double y) const;

  TaggedTriangulation t_;
  int n_;
  /// conjugate pair positions, if any
  std::optional<std::pair<int, int>> pair_;
  int pair_vertex_ = -1;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  int tile_count_ = 0;
  std::vector<std::pair<double, double>> coords_;
};

/// Throws InvalidArgument if gamma is in T.
SegmentTrace trace_segments(const TaggedTriangulation& t, const TaggedArc& gamma);
/// Multiset union of the descriptors of every arc of m, grouped by tile.
SegmentProfile segment_profile(const TileDecomposition& tiles, const ArcMultiset& m);

}  // namespace clusterdenom::disc
