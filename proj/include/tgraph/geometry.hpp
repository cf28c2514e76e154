#pragma once

// Exact planar predicates over rationals. Every decision here (orientation,
// intersection, crossing vs. touching) is made without rounding.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tgraph/error.hpp"

namespace tgraph {

/// Arbitrary-precision rational; GMP keeps results of arithmetic canonical.
using Scalar = mpq_class;

inline Scalar make_scalar(long num, long den = 1) {
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

inline Scalar parse_scalar(const std::string& text) {
  Scalar s;
  if (s.set_str(text, 10) != 0 || s.get_den() == 0) {
    throw Error(ErrorCode::Parse, "not a rational: '" + text + "'");
  }
  s.canonicalize();
  return s;
}

inline std::string format_scalar(const Scalar& s) { return s.get_str(); }

/// Exact conversion from a finite double (every double is a dyadic rational).
inline Scalar scalar_from_double(double v) { return Scalar(v); }

struct Point {
  Scalar x;
  Scalar y;

  Point() = default;
  Point(Scalar x_, Scalar y_) : x(std::move(x_)), y(std::move(y_)) {}
  Point(long x_, long y_) : x(x_), y(y_) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

/// Direction/offset vector; same representation as a point.
using Vec = Point;

inline Vec operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& a, const Vec& v) { return {a.x + v.x, a.y + v.y}; }
inline Vec operator*(const Scalar& s, const Vec& v) { return {s * v.x, s * v.y}; }
inline Vec operator-(const Vec& v) { return {-v.x, -v.y}; }

inline Scalar cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
inline Scalar dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }
inline Scalar norm2(const Vec& v) { return dot(v, v); }

inline int sign(const Scalar& s) { return sgn(s); }

/// Sign of (q - p) x (r - p): +1 left turn, -1 right turn, 0 collinear.
inline int orientation(const Point& p, const Point& q, const Point& r) {
  return sign(cross(q - p, r - p));
}

struct Segment {
  Point a;
  Point b;
};

/// Closed-segment membership.
inline bool on_segment(const Point& p, const Segment& s) {
  if (orientation(s.a, s.b, p) != 0) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

inline Scalar sq_dist(const Point& p, const Point& q) { return norm2(p - q); }

inline Scalar sq_dist(const Point& p, const Segment& s) {
  Vec d = s.b - s.a;
  Scalar t = dot(p - s.a, d) / norm2(d);
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return sq_dist(p, s.a + t * d);
}

struct SegmentHit {
  enum class Kind { Empty, Single, Overlap };
  Kind kind = Kind::Empty;
  Point point;  // valid for Single
};

inline SegmentHit segment_intersection(const Segment& s1, const Segment& s2) {
  Vec d1 = s1.b - s1.a;
  Vec d2 = s2.b - s2.a;
  Scalar denom = cross(d1, d2);
  if (denom == 0) {
    if (orientation(s1.a, s1.b, s2.a) != 0) return {};
    // Collinear: intersect parameter intervals along s1.
    Scalar len = norm2(d1);
    Scalar t0 = dot(s2.a - s1.a, d1) / len;
    Scalar t1 = dot(s2.b - s1.a, d1) / len;
    if (t0 > t1) std::swap(t0, t1);
    Scalar lo = std::max(Scalar(0), t0);
    Scalar hi = std::min(Scalar(1), t1);
    if (lo > hi) return {};
    if (lo == hi) return {SegmentHit::Kind::Single, s1.a + lo * d1};
    return {SegmentHit::Kind::Overlap, {}};
  }
  Vec w = s2.a - s1.a;
  Scalar t = cross(w, d2) / denom;
  Scalar u = cross(w, d1) / denom;
  if (t < 0 || t > 1 || u < 0 || u > 1) return {};
  return {SegmentHit::Kind::Single, s1.a + t * d1};
}

// ---------------------------------------------------------------------------
// Angular order of direction vectors.

/// 0 for directions in [0, pi), 1 for [pi, 2pi).
inline int half_plane(const Vec& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; }

/// Strict counterclockwise angle order starting from the positive x-axis.
inline bool angle_less(const Vec& u, const Vec& v) {
  int hu = half_plane(u), hv = half_plane(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

inline bool same_direction(const Vec& u, const Vec& v) { return cross(u, v) == 0 && dot(u, v) > 0; }

/// True if `u` lies strictly inside the counterclockwise sweep from `from` to `to`.
inline bool strictly_inside_ccw(const Vec& from, const Vec& u, const Vec& to) {
  auto rel = [&](const Vec& v) {
    // Rotate into a frame where `from` is the positive x-axis.
    return Vec{dot(v, from), cross(from, v)};
  };
  Vec ru = rel(u), rt = rel(to);
  if (same_direction(ru, Vec{1, 0})) return false;
  if (same_direction(rt, Vec{1, 0})) return true;  // full turn
  return angle_less(ru, rt);
}

// ---------------------------------------------------------------------------
// Polylines.

using Polyline = std::vector<Point>;

inline Segment segment_of(const Polyline& arc, std::size_t i) { return {arc[i], arc[i + 1]}; }

inline std::size_t segment_count(const Polyline& arc) { return arc.empty() ? 0 : arc.size() - 1; }

/// Position along a polyline: segment index plus parameter in [0, 1].
/// Normalized so that a point at an interior vertex i is (i, 0).
struct ArcPosition {
  std::size_t segment = 0;
  Scalar t;

  friend bool operator==(const ArcPosition& a, const ArcPosition& b) {
    return a.segment == b.segment && a.t == b.t;
  }
  friend bool operator<(const ArcPosition& a, const ArcPosition& b) {
    if (a.segment != b.segment) return a.segment < b.segment;
    return a.t < b.t;
  }
  friend bool operator<=(const ArcPosition& a, const ArcPosition& b) { return !(b < a); }
};

/// Position of the first occurrence of `p` on `arc`; nullopt if `p` is not on it.
inline std::optional<ArcPosition> locate_on_arc(const Polyline& arc, const Point& p) {
  for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
    Segment s = segment_of(arc, i);
    if (!on_segment(p, s)) continue;
    Vec d = s.b - s.a;
    Scalar t = dot(p - s.a, d) / norm2(d);
    if (t == 1 && i + 2 < arc.size()) return ArcPosition{i + 1, Scalar(0)};
    return ArcPosition{i, t};
  }
  return std::nullopt;
}

inline bool on_arc(const Polyline& arc, const Point& p) { return locate_on_arc(arc, p).has_value(); }

inline Point point_at(const Polyline& arc, const ArcPosition& pos) {
  Segment s = segment_of(arc, pos.segment);
  return s.a + pos.t * (s.b - s.a);
}

inline bool is_arc_endpoint(const Polyline& arc, const Point& p) {
  return !arc.empty() && (arc.front() == p || arc.back() == p);
}

/// Directions of the arc leaving `p`, one per local branch (1 at an arc end,
/// 2 at an interior point, more if the arc passes through `p` repeatedly).
inline std::vector<Vec> germs(const Polyline& arc, const Point& p) {
  std::vector<Vec> out;
  auto push = [&](const Vec& v) {
    for (const Vec& g : out) {
      if (same_direction(g, v)) return;
    }
    out.push_back(v);
  };
  for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
    Segment s = segment_of(arc, i);
    if (!on_segment(p, s)) continue;
    if (s.a != p) push(s.a - p);
    if (s.b != p) push(s.b - p);
  }
  return out;
}

/// Simple polyline: >= 2 points, no zero-length segment, no self-contact
/// beyond shared vertices of consecutive segments.
inline bool is_simple_polyline(const Polyline& arc) {
  if (arc.size() < 2) return false;
  for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
    if (arc[i] == arc[i + 1]) return false;
  }
  std::size_t n = segment_count(arc);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      SegmentHit hit = segment_intersection(segment_of(arc, i), segment_of(arc, j));
      if (hit.kind == SegmentHit::Kind::Empty) continue;
      if (hit.kind == SegmentHit::Kind::Overlap) return false;
      if (j != i + 1 || hit.point != arc[j]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Intersections of two arcs.

enum class ContactKind {
  ProperCrossing,   // branches alternate around the point
  Touch,            // both arcs pass through, one stays on one side of the other
  SharedEndpoint,   // endpoint of both arcs
  EndpointContact,  // endpoint of exactly one arc, interior of the other
};

inline const char* to_string(ContactKind k) {
  switch (k) {
    case ContactKind::ProperCrossing: return "ProperCrossing";
    case ContactKind::Touch: return "Touch";
    case ContactKind::SharedEndpoint: return "SharedEndpoint";
    case ContactKind::EndpointContact: return "EndpointContact";
  }
  return "?";
}

struct IntersectionEvent {
  Point location;
  ContactKind kind;
  ArcPosition position_a;
  ArcPosition position_b;
};

/// Rotation test at a common point, given the branches of each arc there.
/// Throws DegenerateOverlap if two branches leave in the same direction and
/// SelfIntersection if either arc passes through the point more than once.
inline ContactKind classify_germs(const std::vector<Vec>& ga, const std::vector<Vec>& gb) {
  if (ga.size() > 2 || gb.size() > 2) {
    throw Error(ErrorCode::SelfIntersection, "arc passes through a contact point twice");
  }
  if (ga.size() == 1 && gb.size() == 1) return ContactKind::SharedEndpoint;
  for (const Vec& u : ga) {
    for (const Vec& v : gb) {
      if (same_direction(u, v)) throw Error(ErrorCode::DegenerateOverlap, "arcs share a direction");
    }
  }
  if (ga.size() == 1 || gb.size() == 1) return ContactKind::EndpointContact;
  struct Tagged {
    Vec v;
    int arc;
  };
  std::vector<Tagged> all{{ga[0], 0}, {ga[1], 0}, {gb[0], 1}, {gb[1], 1}};
  std::sort(all.begin(), all.end(), [](const Tagged& l, const Tagged& r) { return angle_less(l.v, r.v); });
  bool alternating = all[0].arc != all[1].arc && all[1].arc != all[2].arc && all[2].arc != all[3].arc;
  return alternating ? ContactKind::ProperCrossing : ContactKind::Touch;
}

/// Every common point of two simple polylines, classified by the local
/// rotation test. Sorted by position along `a`.
inline std::vector<IntersectionEvent> arc_intersections(const Polyline& a, const Polyline& b) {
  std::vector<Point> points;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      SegmentHit hit = segment_intersection(segment_of(a, i), segment_of(b, j));
      if (hit.kind == SegmentHit::Kind::Overlap) {
        throw Error(ErrorCode::DegenerateOverlap, "arcs share a sub-segment of positive length");
      }
      if (hit.kind == SegmentHit::Kind::Single) points.push_back(hit.point);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<IntersectionEvent> events;
  events.reserve(points.size());
  for (const Point& p : points) {
    ContactKind kind = classify_germs(germs(a, p), germs(b, p));
    events.push_back({p, kind, *locate_on_arc(a, p), *locate_on_arc(b, p)});
  }
  std::sort(events.begin(), events.end(), [](const IntersectionEvent& l, const IntersectionEvent& r) {
    return l.position_a < r.position_a;
  });
  return events;
}

/// Signed area (times 2) of a closed polygon given by its vertices.
inline Scalar twice_signed_area(const std::vector<Point>& ring) {
  Scalar acc = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % ring.size()];
    acc += p.x * q.y - q.x * p.y;
  }
  return acc;
}

/// Winding number of a closed polygon around `q`; `q` must not lie on it.
inline int winding_number(const std::vector<Point>& ring, const Point& q) {
  int wn = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % ring.size()];
    if (a.y <= q.y) {
      if (b.y > q.y && orientation(a, b, q) > 0) ++wn;
    } else {
      if (b.y <= q.y && orientation(a, b, q) < 0) --wn;
    }
  }
  return wn;
}

/// Dyadic rational 2^-k with k >= 0 chosen as the largest value satisfying
/// (2^-k)^2 * scale2 <= limit2. Used to size perturbations exactly.
inline Scalar dyadic_below(const Scalar& scale2, const Scalar& limit2) {
  Scalar step = 1;
  while (step * step * scale2 > limit2) step /= 2;
  return step;
}

/// Rational approximation of a double with denominator 2^bits.
inline Scalar round_dyadic(double v, int bits) {
  mpz_class den = 1;
  den <<= bits;
  double scaled = v * den.get_d();
  mpz_class num(std::nearbyint(scaled));
  Scalar out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace tgraph
