#include "clusterdenom/disc.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "clusterdenom/errors.hpp"

namespace clusterdenom::disc {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

void check_n(int n) {
  if (n < 4) throw InvalidArgument("the punctured disc needs at least 4 marked points");
  if (n > kMaxMarkedPoints) throw InvalidArgument("too many marked points");
}

void check_point(int n, int v) {
  if (v < 1 || v > n) throw InvalidArgument("marked point out of range: " + std::to_string(v));
}

// p strictly inside the counterclockwise path a -> a+len on a circle of m points
bool strictly_inside(int p, int a, int len, int m) {
  const int off = mod(p - a, m);
  return off > 0 && off < len;
}

// lifted chords (a, a+la) and (b, b+lb) on the 2n-gon
bool lifts_cross(int a, int la, int b, int lb, int m) {
  const int a2 = mod(a + la, m);
  const int b2 = mod(b + lb, m);
  if (a == b || a == b2 || a2 == b || a2 == b2) return false;
  return strictly_inside(b, a, la, m) != strictly_inside(b2, a, la, m);
}

}  // namespace

std::string to_string(Tag t) { return t == Tag::Plain ? "plain" : "notched"; }

TaggedArc TaggedArc::chord(int n, int i, int j, bool puncture_ccw) {
  check_n(n);
  check_point(n, i);
  check_point(n, j);
  if (i == j) throw InvalidArgument("chord endpoints must differ");
  if (i > j) {
    std::swap(i, j);
    puncture_ccw = !puncture_ccw;
  }
  const int ccw = j - i;
  const int free_len = puncture_ccw ? n - ccw : ccw;
  if (free_len < 2) throw InvalidArgument("chord is homotopic to a boundary segment");
  return TaggedArc(n, Kind::Chord, i, j, puncture_ccw, Tag::Plain);
}

TaggedArc TaggedArc::chord_from_interval(int n, int start, int length) {
  check_n(n);
  check_point(n, start);
  if (length < 2 || length > n - 1) throw InvalidArgument("chord interval length out of range");
  const int end = mod(start - 1 + length, n) + 1;
  // the counterclockwise path start -> end is puncture-free
  return chord(n, start, end, false);
}

TaggedArc TaggedArc::radius(int n, int v, Tag tag) {
  check_n(n);
  check_point(n, v);
  return TaggedArc(n, Kind::Radius, v, 0, false, tag);
}

TaggedArc TaggedArc::loop(int n, int v) {
  check_n(n);
  check_point(n, v);
  return TaggedArc(n, Kind::Loop, v, 0, false, Tag::Plain);
}

int TaggedArc::interval_start() const {
  if (!is_chord()) throw InvalidArgument("not a chord");
  return puncture_ccw_ ? b_ : a_;
}

int TaggedArc::interval_length() const {
  if (!is_chord()) throw InvalidArgument("not a chord");
  return puncture_ccw_ ? n_ - (b_ - a_) : b_ - a_;
}

bool TaggedArc::same_underlying(const TaggedArc& o) const {
  if (n_ != o.n_ || kind_ != o.kind_) return false;
  if (is_chord()) return a_ == o.a_ && b_ == o.b_ && puncture_ccw_ == o.puncture_ccw_;
  return a_ == o.a_;
}

TaggedArc TaggedArc::conjugate() const {
  if (!is_radius()) throw InvalidArgument("only radii have conjugates");
  return radius(n_, a_, tag_ == Tag::Plain ? Tag::Notched : Tag::Plain);
}

std::string TaggedArc::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Chord: os << "chord(" << a_ << "," << b_ << (puncture_ccw_ ? ",ccw)" : ",cw)"); break;
    case Kind::Radius: os << "radius(" << a_ << "," << disc::to_string(tag_) << ")"; break;
    case Kind::Loop: os << "loop(" << a_ << ")"; break;
  }
  return os.str();
}

std::vector<TaggedArc> all_tagged_arcs(int n) {
  check_n(n);
  std::vector<TaggedArc> out;
  for (int s = 1; s <= n; ++s)
    for (int len = 2; len <= n - 1; ++len) out.push_back(TaggedArc::chord_from_interval(n, s, len));
  for (int v = 1; v <= n; ++v) {
    out.push_back(TaggedArc::radius(n, v, Tag::Plain));
    out.push_back(TaggedArc::radius(n, v, Tag::Notched));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int crossings(const TaggedArc& a, const TaggedArc& b) {
  if (a.is_loop() || b.is_loop()) throw InvalidArgument("crossings are defined for tagged arcs only");
  if (a.marked_points() != b.marked_points()) throw InvalidArgument("arcs live on different discs");
  const int n = a.marked_points();
  if (a.is_radius() && b.is_radius()) return 0;
  if (a.is_radius() || b.is_radius()) {
    const TaggedArc& c = a.is_chord() ? a : b;
    const TaggedArc& r = a.is_chord() ? b : a;
    return strictly_inside(r.v() - 1, c.interval_start() - 1, c.interval_length(), n) ? 1 : 0;
  }
  const int m = 2 * n;
  const int sa = a.interval_start() - 1, la = a.interval_length();
  const int sb = b.interval_start() - 1, lb = b.interval_length();
  int total = 0;
  for (int x : {sa, sa + n})
    for (int y : {sb, sb + n}) total += lifts_cross(x, la, y, lb, m) ? 1 : 0;
  return total / 2;
}

bool compatible(const TaggedArc& a, const TaggedArc& b) {
  if (crossings(a, b) != 0) return false;
  if (a.same_underlying(b)) return true;
  if (a.is_radius() && b.is_radius()) return a.tag() == b.tag();
  return true;
}

int intersection(const TaggedArc& a, const TaggedArc& b) {
  if (a.is_loop()) throw InvalidArgument("the first argument must be loop-free");
  if (b.is_loop()) {
    if (a.is_chord()) return 2 * crossings(a, TaggedArc::radius(a.marked_points(), b.v(), Tag::Plain));
    return a.v() == b.v() ? 0 : 1;
  }
  int value = crossings(a, b);
  if (a.same_underlying(b)) value -= 1;
  if (a.is_radius() && b.is_radius() && a.tag() != b.tag()) value += 1;
  return value;
}

int total_size(const ArcMultiset& m) {
  int total = 0;
  for (const auto& [arc, k] : m) total += k;
  return total;
}

bool pairwise_compatible(const ArcMultiset& m) {
  for (auto it = m.begin(); it != m.end(); ++it) {
    if (it->first.is_loop()) continue;
    for (auto jt = std::next(it); jt != m.end(); ++jt) {
      if (jt->first.is_loop()) continue;
      if (!compatible(it->first, jt->first)) return false;
    }
  }
  return true;
}

std::string to_string(const ArcMultiset& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [arc, k] : m) {
    if (!first) os << ", ";
    first = false;
    os << arc.to_string();
    if (k != 1) os << "^" << k;
  }
  os << "}";
  return os.str();
}

// Triangulations ------------------------------------------------------------

TaggedTriangulation::TaggedTriangulation(std::vector<TaggedArc> arcs) : arcs_(std::move(arcs)) {
  if (arcs_.empty()) throw InvalidArgument("empty triangulation");
  const int n = arcs_.front().marked_points();
  if (static_cast<int>(arcs_.size()) != n) throw InvalidArgument("a tagged triangulation has exactly n arcs");
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    if (arcs_[a].is_loop()) throw InvalidArgument("triangulations contain no loops");
    for (std::size_t b = a + 1; b < arcs_.size(); ++b) {
      if (arcs_[a] == arcs_[b]) throw InvalidArgument("repeated arc " + arcs_[a].to_string());
      if (!compatible(arcs_[a], arcs_[b])) {
        throw InvalidArgument("incompatible arcs " + arcs_[a].to_string() + " and " + arcs_[b].to_string());
      }
    }
  }
  for (const auto& c : all_tagged_arcs(n)) {
    if (contains(c)) continue;
    if (std::all_of(arcs_.begin(), arcs_.end(), [&](const TaggedArc& x) { return compatible(x, c); })) {
      throw InvalidArgument("not maximal: " + c.to_string() + " can be added");
    }
  }
}

bool TaggedTriangulation::contains(const TaggedArc& a) const { return position(a).has_value(); }

std::optional<int> TaggedTriangulation::position(const TaggedArc& a) const {
  for (std::size_t k = 0; k < arcs_.size(); ++k)
    if (arcs_[k] == a) return static_cast<int>(k);
  return std::nullopt;
}

std::vector<TaggedArc> TaggedTriangulation::sorted_arcs() const {
  auto out = arcs_;
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using ArcSet = std::bitset<kMaxMarkedPoints * kMaxMarkedPoints>;

struct CliqueSearch {
  const std::vector<ArcSet>& adj;
  std::vector<std::vector<int>> cliques;
  std::vector<int> current;

  void run(ArcSet p, ArcSet x) {
    if (p.none() && x.none()) {
      cliques.push_back(current);
      return;
    }
    // pivot with the most neighbours in p
    std::size_t pivot = 0, best = 0;
    bool have = false;
    const ArcSet px = p | x;
    for (std::size_t u = 0; u < adj.size(); ++u) {
      if (!px[u]) continue;
      const std::size_t c = (p & adj[u]).count();
      if (!have || c > best) {
        pivot = u;
        best = c;
        have = true;
      }
    }
    const ArcSet candidates = p & ~adj[pivot];
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (!candidates[v]) continue;
      current.push_back(static_cast<int>(v));
      run(p & adj[v], x & adj[v]);
      current.pop_back();
      p.reset(v);
      x.set(v);
    }
  }
};

}  // namespace

std::vector<TaggedTriangulation> tagged_triangulations(int n) {
  const auto arcs = all_tagged_arcs(n);
  std::vector<ArcSet> adj(arcs.size());
  for (std::size_t a = 0; a < arcs.size(); ++a)
    for (std::size_t b = 0; b < arcs.size(); ++b)
      if (a != b && compatible(arcs[a], arcs[b])) adj[a].set(b);
  ArcSet all;
  for (std::size_t a = 0; a < arcs.size(); ++a) all.set(a);
  CliqueSearch search{adj, {}, {}};
  search.run(all, ArcSet{});

  std::vector<std::vector<TaggedArc>> sets;
  for (auto& c : search.cliques) {
    std::sort(c.begin(), c.end());
    std::vector<TaggedArc> s;
    for (int k : c) s.push_back(arcs[static_cast<std::size_t>(k)]);
    if (static_cast<int>(s.size()) != n) {
      throw InvariantViolation("maximal compatible set of size " + std::to_string(s.size()));
    }
    sets.push_back(std::move(s));
  }
  std::sort(sets.begin(), sets.end());
  std::vector<TaggedTriangulation> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(std::move(s));
  return out;
}

TaggedTriangulation flip(const TaggedTriangulation& t, int k) {
  if (k < 0 || k >= t.size()) throw InvalidArgument("flip position out of range");
  std::optional<TaggedArc> replacement;
  for (const auto& c : all_tagged_arcs(t.marked_points())) {
    if (c == t[k] || t.contains(c)) continue;
    bool ok = true;
    for (int p = 0; p < t.size() && ok; ++p)
      if (p != k && !compatible(t[p], c)) ok = false;
    if (!ok) continue;
    if (replacement) throw InvariantViolation("flip is not unique at " + t[k].to_string());
    replacement = c;
  }
  if (!replacement) throw InvariantViolation("no flip exists at " + t[k].to_string());
  auto arcs = t.arcs();
  arcs[static_cast<std::size_t>(k)] = *replacement;
  return TaggedTriangulation(std::move(arcs));
}

std::vector<int> intersection_vector(const TaggedTriangulation& t, const TaggedArc& a) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(t.size()));
  for (const auto& x : t.arcs()) out.push_back(intersection(x, a));
  return out;
}

std::vector<int> intersection_vector(const TaggedTriangulation& t, const ArcMultiset& m) {
  std::vector<int> out(static_cast<std::size_t>(t.size()), 0);
  for (const auto& [arc, k] : m) {
    for (int p = 0; p < t.size(); ++p) out[static_cast<std::size_t>(p)] += k * intersection(t[p], arc);
  }
  return out;
}

ArcMultiset star(const ArcMultiset& m, const TaggedTriangulation& t) {
  for (const auto& [arc, k] : m) {
    if (t.contains(arc)) throw InvalidArgument("multiset meets the triangulation at " + arc.to_string());
  }
  ArcMultiset out = m;
  const int n = t.marked_points();
  for (int v = 1; v <= n; ++v) {
    const auto plain = TaggedArc::radius(n, v, Tag::Plain);
    const auto notched = TaggedArc::radius(n, v, Tag::Notched);
    auto ip = out.find(plain);
    auto iq = out.find(notched);
    if (ip == out.end() || iq == out.end()) continue;
    const int c = std::min(ip->second, iq->second);
    ip->second -= c;
    iq->second -= c;
    if (ip->second == 0) out.erase(ip);
    if (iq->second == 0) out.erase(iq);
    out[TaggedArc::loop(n, v)] += c;
  }
  return out;
}

Permissibility permissibility(const ArcMultiset& m, const TaggedTriangulation& t) {
  Permissibility p;
  p.compatible = pairwise_compatible(m);
  p.no_conjugate_pairs = true;
  p.no_wrapping_loops = true;
  p.disjoint = true;
  for (const auto& [arc, k] : m) {
    if (arc.is_radius() && m.contains(arc.conjugate())) p.no_conjugate_pairs = false;
    if (arc.is_loop()) {
      for (const auto& x : t.arcs())
        if (x.is_radius() && x.v() == arc.v()) p.no_wrapping_loops = false;
    }
    if (t.contains(arc)) p.disjoint = false;
  }
  return p;
}

TaggedArc flip_tags(const TaggedArc& a) { return a.is_radius() ? a.conjugate() : a; }

ArcMultiset flip_tags(const ArcMultiset& m) {
  ArcMultiset out;
  for (const auto& [arc, k] : m) out[flip_tags(arc)] += k;
  return out;
}

TaggedTriangulation flip_tags(const TaggedTriangulation& t) {
  std::vector<TaggedArc> arcs;
  for (const auto& a : t.arcs()) arcs.push_back(flip_tags(a));
  return TaggedTriangulation(std::move(arcs));
}

// Segments ------------------------------------------------------------------

namespace {

using Point = std::pair<double, double>;

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// parameter along p -> q where it meets u -> w (segments known to cross)
double meet(const Point& p, const Point& q, const Point& u, const Point& w) {
  const double dx = q.first - p.first, dy = q.second - p.second;
  const double ex = w.first - u.first, ey = w.second - u.second;
  const double den = dx * ey - dy * ex;
  return ((u.first - p.first) * ey - (u.second - p.second) * ex) / den;
}

SegmentDescriptor make_descriptor(int tile, Port a, Port b, std::optional<Tag> tag) {
  if (b < a) std::swap(a, b);
  return {tile, a, b, tag};
}

}  // namespace

TileDecomposition::TileDecomposition(const TaggedTriangulation& t) : t_(t), n_(t.marked_points()) {
  const int m = 2 * n_;
  const int center = m;
  for (int p = 0; p < t.size(); ++p) {
    if (!t[p].is_radius()) continue;
    for (int q = p + 1; q < t.size(); ++q) {
      if (t[q].is_radius() && t[q].v() == t[p].v()) {
        pair_ = t[p].tag() == Tag::Plain ? std::pair{p, q} : std::pair{q, p};
        pair_vertex_ = t[p].v() - 1;
      }
    }
  }
  for (int k = 0; k <= m; ++k) {
    if (k == center) {
      coords_.emplace_back(0.0, 0.0);
    } else {
      const double angle = 2.0 * std::numbers::pi * k / m;
      coords_.emplace_back(std::cos(angle), std::sin(angle));
    }
  }

  // adjacency over lifted vertices; side ids on each edge
  const int vertices = pair_ ? m : m + 1;
  std::vector<std::vector<int>> side(static_cast<std::size_t>(vertices),
                                     std::vector<int>(static_cast<std::size_t>(vertices), -1));
  auto connect = [&](int a, int b, int s) {
    side[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = s;
    side[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = s;
  };
  for (int k = 0; k < m; ++k) connect(k, (k + 1) % m, n_ + k % n_);
  for (int p = 0; p < t.size(); ++p) {
    const auto& a = t[p];
    if (a.is_chord()) {
      const int s = a.interval_start() - 1, len = a.interval_length();
      for (int x : {s, s + n_}) {
        edges_.push_back({x, (x + len) % m, len, p});
        connect(x, (x + len) % m, p);
      }
    } else if (pair_) {
      if (p == pair_->first) {
        edges_.push_back({pair_vertex_, pair_vertex_ + n_, n_, p});
        connect(pair_vertex_, pair_vertex_ + n_, p);
      }
    } else {
      for (int x : {a.v() - 1, a.v() - 1 + n_}) {
        edges_.push_back({x, center, 0, p});
        connect(x, center, p);
      }
    }
  }

  std::map<std::array<int, 3>, int> tile_keys;
  for (int a = 0; a < vertices; ++a)
    for (int b = a + 1; b < vertices; ++b)
      for (int c = b + 1; c < vertices; ++c) {
        const int sab = side[a][b], sbc = side[b][c], sac = side[a][c];
        if (sab < 0 || sbc < 0 || sac < 0) continue;
        auto rot = [&](int x) { return x == center ? center : (x + n_) % m; };
        std::array<int, 3> key{a, b, c};
        std::array<int, 3> other{rot(a), rot(b), rot(c)};
        std::sort(other.begin(), other.end());
        key = std::min(key, other);
        tile_keys.emplace(key, 0);
        faces_.push_back({{a, b, c}, {sab, sbc, sac}, 0});
      }
  const int expected = pair_ ? m - 2 : m;
  if (static_cast<int>(faces_.size()) != expected) {
    throw InvariantViolation("lifted triangulation has " + std::to_string(faces_.size()) + " faces");
  }
  int id = 0;
  for (auto& [key, value] : tile_keys) value = id++;
  for (auto& f : faces_) {
    auto rot = [&](int x) { return x == center ? center : (x + n_) % m; };
    std::array<int, 3> key = f.v;
    std::array<int, 3> other{rot(f.v[0]), rot(f.v[1]), rot(f.v[2])};
    std::sort(other.begin(), other.end());
    f.tile = tile_keys.at(std::min(key, other));
  }
  tile_count_ = id + (pair_ ? 1 : 0);
}

int TileDecomposition::face_at(double x, double y) const {
  const Point q{x, y};
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& v = faces_[f].v;
    const Point& a = coords_[static_cast<std::size_t>(v[0])];
    const Point& b = coords_[static_cast<std::size_t>(v[1])];
    const Point& c = coords_[static_cast<std::size_t>(v[2])];
    const double d1 = cross(a, b, q), d2 = cross(b, c, q), d3 = cross(c, a, q);
    const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
    const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
    if (!(neg && pos)) return static_cast<int>(f);
  }
  throw InvariantViolation("point outside every face");
}

SegmentTrace TileDecomposition::trace(const TaggedArc& gamma) const {
  if (gamma.is_loop()) throw InvalidArgument("segments are traced for tagged arcs only");
  if (t_.contains(gamma)) throw InvalidArgument("arc belongs to the triangulation");
  const int m = 2 * n_;
  const int center = m;

  SegmentTrace out;
  if (gamma.is_radius() && !pair_) {
    for (int p = 0; p < t_.size(); ++p) {
      if (t_[p].is_radius() && t_[p].v() == gamma.v()) {
        out.segments.push_back(make_descriptor(-1, {Port::Kind::Side, p}, {Port::Kind::Puncture, 0}, gamma.tag()));
        out.tiles.push_back(-1);
        return out;
      }
    }
  }

  int from = 0, to = 0, len = 0;
  if (gamma.is_chord()) {
    from = gamma.interval_start() - 1;
    len = gamma.interval_length();
    to = (from + len) % m;
  } else {
    from = gamma.v() - 1;
    to = center;
  }

  struct Hit {
    double t;
    const Edge* edge;
  };
  std::vector<Hit> hits;
  for (const auto& e : edges_) {
    bool crosses = false;
    if (gamma.is_chord()) {
      if (e.len == 0) {
        crosses = strictly_inside(e.u, from, len, m);
      } else {
        crosses = lifts_cross(from, len, e.u, e.len, m);
      }
    } else if (e.len != 0 && e.len != n_) {
      crosses = strictly_inside(from, e.u, e.len, m);
    }
    if (!crosses) continue;
    const auto& p = coords_[static_cast<std::size_t>(from)];
    const auto& q = coords_[static_cast<std::size_t>(to)];
    hits.push_back({meet(p, q, coords_[static_cast<std::size_t>(e.u)], coords_[static_cast<std::size_t>(e.w)]), &e});
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.t < b.t; });

  const auto& p = coords_[static_cast<std::size_t>(from)];
  const auto& q = coords_[static_cast<std::size_t>(to)];
  const int sliver = tile_count_ - 1;
  for (std::size_t piece = 0; piece <= hits.size(); ++piece) {
    const double t0 = piece == 0 ? 0.0 : hits[piece - 1].t;
    const double t1 = piece == hits.size() ? 1.0 : hits[piece].t;
    const double mid = (t0 + t1) / 2;
    const int face = face_at(p.first + mid * (q.first - p.first), p.second + mid * (q.second - p.second));
    const int tile = faces_[static_cast<std::size_t>(face)].tile;

    Port start{Port::Kind::Vertex, from % n_ + 1};
    if (piece > 0) {
      const Edge* e = hits[piece - 1].edge;
      start = {Port::Kind::Side, (pair_ && e->len == n_) ? pair_->second : e->side};
    }
    Port end{Port::Kind::Side, 0};
    std::optional<Tag> tag;
    if (piece == hits.size()) {
      if (to == center) {
        end = {Port::Kind::Puncture, 0};
        tag = gamma.tag();
      } else {
        end = {Port::Kind::Vertex, to % n_ + 1};
      }
    } else {
      end = {Port::Kind::Side, hits[piece].edge->side};
    }
    out.segments.push_back(make_descriptor(tile, start, end, tag));
    out.tiles.push_back(tile);
    if (piece < hits.size()) {
      const Edge* e = hits[piece].edge;
      if (pair_ && e->len == n_) {
        out.crossed.push_back(pair_->first);
        out.segments.push_back(
            make_descriptor(sliver, {Port::Kind::Side, pair_->first}, {Port::Kind::Side, pair_->second}, {}));
        out.tiles.push_back(sliver);
        out.crossed.push_back(pair_->second);
      } else {
        out.crossed.push_back(e->side);
      }
    }
  }
  return out;
}

SegmentTrace trace_segments(const TaggedTriangulation& t, const TaggedArc& gamma) {
  return TileDecomposition(t).trace(gamma);
}

SegmentProfile segment_profile(const TileDecomposition& tiles, const ArcMultiset& m) {
  SegmentProfile out;
  for (const auto& [arc, k] : m) {
    const auto trace = tiles.trace(arc);
    for (int r = 0; r < k; ++r)
      for (const auto& d : trace.segments) out[d.tile].push_back(d);
  }
  for (auto& [tile, ds] : out) std::sort(ds.begin(), ds.end());
  return out;
}

}  // namespace clusterdenom::disc
