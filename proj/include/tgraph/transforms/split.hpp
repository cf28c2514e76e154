#pragma once

// Vertex splitting that caps the maximum degree while keeping the
// intersection graph of the edges unchanged.

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "tgraph/drawing.hpp"

namespace tgraph {

struct SplitCertificate {
  std::map<VertexId, std::vector<VertexId>> vertex_map;  // old vertex -> replacement(s)
  std::map<EdgeId, EdgeId> edge_map;                     // old edge -> new edge
};

struct SplitResult {
  Drawing drawing;
  SplitCertificate certificate;
};

namespace detail {

struct Spoke {
  EdgeId id;
  bool starts_at_v;  // arc runs from the split vertex
  Polyline out;      // arc oriented away from the split vertex
};

/// Smallest squared distance from `v` to anything that must stay outside the
/// splitting disk: other vertices, every segment not incident to `v`, and
/// the far end of each incident first segment.
inline Scalar split_clearance2(const Drawing& d, VertexId vid) {
  const Point& v = d.vertices.at(vid);
  bool first = true;
  Scalar best;
  auto take = [&](const Scalar& s) {
    if (first || s < best) best = s;
    first = false;
  };
  for (const auto& [id, p] : d.vertices) {
    if (id != vid) take(sq_dist(v, p));
  }
  for (const auto& [id, e] : d.edges) {
    for (std::size_t i = 0; i + 1 < e.arc.size(); ++i) {
      Segment s = segment_of(e.arc, i);
      if (s.a == v || s.b == v) {
        take(sq_dist(s.a, s.b));
      } else {
        take(sq_dist(v, s));
      }
    }
  }
  return best;
}

/// Point at (approximately) radius `r` from `center` in direction `dir`,
/// on the first segment of the spoke (exact rational, strictly inside it).
inline Point point_near_radius(const Point& center, const Vec& dir, double r, int bits) {
  double len = std::sqrt(norm2(dir).get_d());
  Scalar lambda = round_dyadic(r / len, bits);
  return center + lambda * dir;
}

inline bool strictly_convex_ccw(const std::vector<Point>& ring) {
  const std::size_t n = ring.size();
  if (n < 3) return true;
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(ring[i], ring[(i + 1) % n], ring[(i + 2) % n]) <= 0) return false;
  }
  return true;
}

/// True if no three of the segments pass through one common interior point.
inline bool no_concurrent_chords(const std::vector<Segment>& chords) {
  std::map<Point, std::size_t> hits;
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      SegmentHit h = segment_intersection(chords[i], chords[j]);
      if (h.kind == SegmentHit::Kind::Overlap) return false;
      if (h.kind != SegmentHit::Kind::Single) continue;
      bool endpoint = h.point == chords[i].a || h.point == chords[i].b;
      if (endpoint) continue;
      if (++hits[h.point] > 1) return false;
    }
  }
  return true;
}

/// Replaces `vid` by ceil(deg/delta) vertices. The incident edges, in
/// counterclockwise order starting after the widest angular gap, are dealt
/// to the new vertices in consecutive blocks of `delta`. New vertices sit in
/// that gap and every endpoint lies in strictly convex position on a small
/// near-circle, so each edge becomes a chord v_i -> c_j followed by its old
/// route; chords of different blocks interleave and therefore cross exactly
/// once, chords of one block share only v_i.
inline std::vector<VertexId> split_one(Drawing& d, VertexId vid, std::size_t delta, VertexId& next_id) {
  const Point v = d.vertices.at(vid);
  std::vector<Spoke> spokes;
  for (const auto& [id, e] : d.edges) {
    if (e.tail == vid) {
      spokes.push_back({id, true, e.arc});
    } else if (e.head == vid) {
      Polyline rev(e.arc.rbegin(), e.arc.rend());
      spokes.push_back({id, false, rev});
    }
  }
  std::sort(spokes.begin(), spokes.end(),
            [&](const Spoke& a, const Spoke& b) { return angle_less(a.out[1] - v, b.out[1] - v); });
  const std::size_t deg = spokes.size();
  const std::size_t groups = (deg + delta - 1) / delta;

  // Widest angular gap between consecutive spokes (doubles only steer the
  // placement; every property is re-checked exactly below).
  std::vector<double> angle(deg);
  for (std::size_t j = 0; j < deg; ++j) {
    Vec dir = spokes[j].out[1] - v;
    angle[j] = std::atan2(dir.y.get_d(), dir.x.get_d());
  }
  std::size_t gap_end = 0;
  double gap = -1;
  for (std::size_t j = 0; j < deg; ++j) {
    double from = angle[(j + deg - 1) % deg];
    double to = angle[j];
    double g = to - from;
    if (g <= 0) g += 2 * std::numbers::pi;
    if (g > gap) {
      gap = g;
      gap_end = j;
    }
  }
  const double gap_start = angle[(gap_end + deg - 1) % deg];

  const Scalar clear2 = split_clearance2(d, vid);
  double radius = std::sqrt(clear2.get_d()) / 8.0;

  for (int attempt = 0; attempt < 24; ++attempt) {
    int bits = 24 + 4 * attempt;
    double shift = 1.0 / (2.0 + attempt % 5);
    std::vector<Point> ring;
    std::vector<Point> new_points;
    for (std::size_t i = 0; i < groups; ++i) {
      double phi = gap_start + gap * (static_cast<double>(i) + shift * 2.0) / (static_cast<double>(groups) + 1.0);
      Point p = v + Vec{round_dyadic(radius * std::cos(phi), bits), round_dyadic(radius * std::sin(phi), bits)};
      new_points.push_back(p);
      ring.push_back(p);
    }
    std::vector<Point> ends(deg);
    for (std::size_t k = 0; k < deg; ++k) {
      std::size_t j = (gap_end + k) % deg;
      ends[j] = point_near_radius(v, spokes[j].out[1] - v, radius, bits);
      ring.push_back(ends[j]);
    }
    // Exact checks: inside the clear disk, angularly sorted, strictly convex.
    bool ok = strictly_convex_ccw(ring);
    for (const Point& p : ring) {
      if (!ok) break;
      ok = sq_dist(p, v) * 4 < clear2 && p != v;
    }
    for (std::size_t i = 0; ok && i < ring.size(); ++i) {
      ok = orientation(v, ring[i], ring[(i + 1) % ring.size()]) > 0;
    }
    if (!ok) continue;
    std::vector<Segment> chords;
    for (std::size_t k = 0; k < deg; ++k) {
      std::size_t j = (gap_end + k) % deg;
      chords.push_back({new_points[k / delta], ends[j]});
    }
    if (!no_concurrent_chords(chords)) continue;

    std::vector<VertexId> ids;
    for (std::size_t i = 0; i < groups; ++i) {
      ids.push_back(next_id);
      d.vertices.emplace(next_id++, new_points[i]);
    }
    std::optional<Side> side;
    if (auto it = d.bipartition.find(vid); it != d.bipartition.end()) side = it->second;
    for (std::size_t k = 0; k < deg; ++k) {
      std::size_t j = (gap_end + k) % deg;
      const Spoke& s = spokes[j];
      Polyline arc;
      arc.push_back(new_points[k / delta]);
      arc.push_back(ends[j]);
      arc.insert(arc.end(), s.out.begin() + 1, s.out.end());
      Edge& e = d.edges.at(s.id);
      if (s.starts_at_v) {
        e.tail = ids[k / delta];
        e.arc = std::move(arc);
      } else {
        e.head = ids[k / delta];
        e.arc.assign(arc.rbegin(), arc.rend());
      }
    }
    d.vertices.erase(vid);
    d.bipartition.erase(vid);
    if (side) {
      for (VertexId id : ids) d.bipartition[id] = *side;
    }
    return ids;
  }
  throw Error(ErrorCode::SplitFailed, "could not place split vertices for vertex " + std::to_string(vid));
}

}  // namespace detail

/// Splits every vertex of degree > delta. Requires delta >= 2m/n.
inline SplitResult split_vertices(const Drawing& d, std::size_t delta) {
  const std::size_t n = d.vertex_count();
  const std::size_t m = d.edge_count();
  if (delta == 0 || (n > 0 && delta * n < 2 * m)) {
    throw Error(ErrorCode::DeltaTooSmall, "delta=" + std::to_string(delta) + " is below 2m/n");
  }
  SplitResult out;
  out.drawing = d;
  VertexId next_id = d.vertices.empty() ? 0 : d.vertices.rbegin()->first + 1;
  const auto degrees = d.degrees();
  for (const auto& [vid, deg] : degrees) {
    if (deg <= delta) {
      out.certificate.vertex_map[vid] = {vid};
      continue;
    }
    out.certificate.vertex_map[vid] = detail::split_one(out.drawing, vid, delta, next_id);
  }
  for (const auto& [id, e] : d.edges) out.certificate.edge_map[id] = id;
  return out;
}

}  // namespace tgraph
