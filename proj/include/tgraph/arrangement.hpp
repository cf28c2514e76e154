#pragma once

// Planar subdivision induced by a family of pseudo-segments.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "tgraph/geometry.hpp"

namespace tgraph {

struct SubEdge {
  std::size_t arc = 0;    // parent arc
  std::size_t index = 0;  // position along the parent arc, from its start
  std::size_t u = 0, v = 0;
  Polyline path;          // from vertex u to vertex v along the arc
};

struct Face {
  bool bounded = false;
  std::vector<std::size_t> cycles;       // boundary walks (indices into Arrangement::cycles)
  std::set<std::size_t> incident_edges;  // sub-edges in the closure, each once
};

struct Arrangement {
  std::vector<Polyline> arcs;
  std::vector<Point> vertices;
  std::vector<SubEdge> edges;
  std::vector<Face> faces;  // faces[0] is the unbounded face
  std::size_t components = 0;

  // Half-edge 2e runs u -> v along edge e, 2e+1 runs back.
  std::vector<std::size_t> half_next;
  std::vector<std::size_t> half_cycle;
  std::vector<std::vector<std::size_t>> cycles;  // half-edges of each boundary walk
  std::vector<Scalar> cycle_area2;               // twice the signed area of each walk
  std::vector<std::size_t> cycle_face;

  std::size_t face_left_of(std::size_t half) const { return cycle_face[half_cycle[half]]; }

  /// Polygon traced by a boundary walk.
  std::vector<Point> cycle_polygon(std::size_t c) const {
    std::vector<Point> ring;
    for (std::size_t h : cycles[c]) {
      const Polyline& p = edges[h / 2].path;
      if (h % 2 == 0) {
        ring.insert(ring.end(), p.begin(), p.end() - 1);
      } else {
        ring.insert(ring.end(), p.rbegin(), p.rend() - 1);
      }
    }
    return ring;
  }

  long euler_lhs() const {
    return static_cast<long>(vertices.size()) - static_cast<long>(edges.size()) + static_cast<long>(faces.size());
  }
};

namespace detail {

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace detail

/// Checks the pseudo-segment conditions: simple arcs, at most one common
/// point per pair, no point interior to three arcs.
inline void check_pseudo_segments(const std::vector<Polyline>& arcs) {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (!is_simple_polyline(arcs[i])) {
      throw Error(ErrorCode::SelfIntersection, "arc " + std::to_string(i) + " is not a simple polyline");
    }
  }
  std::map<Point, std::size_t> interior_count;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      auto events = arc_intersections(arcs[i], arcs[j]);
      if (events.size() > 1) {
        throw Error(ErrorCode::NotPseudoSegments,
                    "arcs " + std::to_string(i) + " and " + std::to_string(j) + " meet more than once");
      }
    }
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    std::set<Point> seen;
    for (std::size_t j = 0; j < arcs.size(); ++j) {
      if (i == j) continue;
      for (const auto& ev : arc_intersections(arcs[i], arcs[j])) {
        if (!is_arc_endpoint(arcs[i], ev.location)) seen.insert(ev.location);
      }
    }
    for (const Point& p : seen) {
      if (++interior_count[p] >= 3) throw Error(ErrorCode::TriplePoint, "three arcs share an interior point");
    }
  }
}

inline Arrangement build_arrangement(const std::vector<Polyline>& arcs) {
  check_pseudo_segments(arcs);
  Arrangement a;
  a.arcs = arcs;

  std::map<Point, std::size_t> vid;
  auto vertex = [&](const Point& p) {
    auto [it, fresh] = vid.emplace(p, a.vertices.size());
    if (fresh) a.vertices.push_back(p);
    return it->second;
  };
  std::vector<std::vector<std::pair<ArcPosition, Point>>> cuts(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    cuts[i].push_back({ArcPosition{0, Scalar(0)}, arcs[i].front()});
    cuts[i].push_back({ArcPosition{arcs[i].size() - 2, Scalar(1)}, arcs[i].back()});
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      for (const auto& ev : arc_intersections(arcs[i], arcs[j])) {
        cuts[i].push_back({ev.position_a, ev.location});
        cuts[j].push_back({ev.position_b, ev.location});
      }
    }
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto& c = cuts[i];
    std::sort(c.begin(), c.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    c.erase(std::unique(c.begin(), c.end(), [](const auto& l, const auto& r) { return l.second == r.second; }),
            c.end());
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
      SubEdge e;
      e.arc = i;
      e.index = k;
      e.u = vertex(c[k].second);
      e.v = vertex(c[k + 1].second);
      e.path.push_back(c[k].second);
      // Bends strictly between the two cut positions.
      for (std::size_t b = c[k].first.segment + 1; b <= c[k + 1].first.segment && b < arcs[i].size(); ++b) {
        ArcPosition bend{b, Scalar(0)};
        if (c[k].first < bend && bend < c[k + 1].first) e.path.push_back(arcs[i][b]);
      }
      e.path.push_back(c[k + 1].second);
      a.edges.push_back(std::move(e));
    }
  }

  // Rotation system: outgoing half-edges at each vertex in angular order.
  const std::size_t halves = 2 * a.edges.size();
  auto origin = [&](std::size_t h) { return h % 2 ? a.edges[h / 2].v : a.edges[h / 2].u; };
  auto germ = [&](std::size_t h) {
    const Polyline& p = a.edges[h / 2].path;
    return h % 2 ? p[p.size() - 2] - p.back() : p[1] - p[0];
  };
  std::vector<std::vector<std::size_t>> rotation(a.vertices.size());
  for (std::size_t h = 0; h < halves; ++h) rotation[origin(h)].push_back(h);
  std::vector<std::size_t> slot(halves);
  for (auto& rot : rotation) {
    std::sort(rot.begin(), rot.end(), [&](std::size_t x, std::size_t y) { return angle_less(germ(x), germ(y)); });
    for (std::size_t k = 0; k < rot.size(); ++k) slot[rot[k]] = k;
  }
  a.half_next.assign(halves, 0);
  for (std::size_t h = 0; h < halves; ++h) {
    std::size_t twin = h ^ 1;
    const auto& rot = rotation[origin(twin)];
    a.half_next[h] = rot[(slot[twin] + rot.size() - 1) % rot.size()];
  }

  // Boundary walks.
  a.half_cycle.assign(halves, SIZE_MAX);
  for (std::size_t h = 0; h < halves; ++h) {
    if (a.half_cycle[h] != SIZE_MAX) continue;
    std::size_t c = a.cycles.size();
    a.cycles.emplace_back();
    for (std::size_t x = h; a.half_cycle[x] == SIZE_MAX; x = a.half_next[x]) {
      a.half_cycle[x] = c;
      a.cycles[c].push_back(x);
    }
  }
  for (std::size_t c = 0; c < a.cycles.size(); ++c) a.cycle_area2.push_back(twice_signed_area(a.cycle_polygon(c)));

  // Connected components of the union of arcs.
  std::vector<std::size_t> parent(a.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const SubEdge& e : a.edges) parent[detail::find_root(parent, e.u)] = detail::find_root(parent, e.v);
  std::map<std::size_t, std::size_t> comp_index;
  std::vector<std::size_t> comp_of_vertex(a.vertices.size());
  for (std::size_t v = 0; v < a.vertices.size(); ++v) {
    auto [it, fresh] = comp_index.emplace(detail::find_root(parent, v), comp_index.size());
    comp_of_vertex[v] = it->second;
  }
  a.components = comp_index.size();
  auto comp_of_cycle = [&](std::size_t c) { return comp_of_vertex[origin(a.cycles[c].front())]; };

  // Bounded faces are the positively oriented walks; each component's outer
  // walk belongs to the smallest bounded walk of another component around it.
  a.faces.emplace_back();
  a.cycle_face.assign(a.cycles.size(), 0);
  for (std::size_t c = 0; c < a.cycles.size(); ++c) {
    if (a.cycle_area2[c] > 0) {
      a.cycle_face[c] = a.faces.size();
      Face f;
      f.bounded = true;
      a.faces.push_back(f);
    }
  }
  std::vector<std::vector<Point>> polygons(a.cycles.size());
  for (std::size_t c = 0; c < a.cycles.size(); ++c) polygons[c] = a.cycle_polygon(c);
  for (std::size_t c = 0; c < a.cycles.size(); ++c) {
    if (a.cycle_area2[c] > 0) continue;
    const Point& probe = a.vertices[origin(a.cycles[c].front())];
    std::size_t best = SIZE_MAX;
    for (std::size_t d = 0; d < a.cycles.size(); ++d) {
      if (a.cycle_area2[d] <= 0 || comp_of_cycle(d) == comp_of_cycle(c)) continue;
      if (winding_number(polygons[d], probe) == 0) continue;
      if (best == SIZE_MAX || a.cycle_area2[d] < a.cycle_area2[best]) best = d;
    }
    a.cycle_face[c] = best == SIZE_MAX ? 0 : a.cycle_face[best];
  }
  for (std::size_t c = 0; c < a.cycles.size(); ++c) {
    Face& f = a.faces[a.cycle_face[c]];
    f.cycles.push_back(c);
    for (std::size_t h : a.cycles[c]) f.incident_edges.insert(h / 2);
  }

  if (a.euler_lhs() != 1 + static_cast<long>(a.components)) {
    throw Error(ErrorCode::InvalidArgument, "Euler relation failed on arrangement");
  }
  return a;
}

/// Face containing a point that lies on no arc.
inline std::size_t face_of_point(const Arrangement& a, const Point& q) {
  for (const Polyline& arc : a.arcs) {
    if (on_arc(arc, q)) throw Error(ErrorCode::InvalidArgument, "query point lies on an arc");
  }
  std::size_t best = SIZE_MAX;
  for (std::size_t c = 0; c < a.cycles.size(); ++c) {
    if (a.cycle_area2[c] <= 0) continue;
    if (winding_number(a.cycle_polygon(c), q) == 0) continue;
    if (best == SIZE_MAX || a.cycle_area2[c] < a.cycle_area2[best]) best = c;
  }
  return best == SIZE_MAX ? 0 : a.cycle_face[best];
}

/// Sub-polyline of `arc` between two positions (from <= to).
inline Polyline subpath(const Polyline& arc, const ArcPosition& from, const ArcPosition& to) {
  Polyline out{point_at(arc, from)};
  for (std::size_t b = from.segment + 1; b <= to.segment && b < arc.size(); ++b) {
    ArcPosition bend{b, Scalar(0)};
    if (from < bend && bend < to) out.push_back(arc[b]);
  }
  Point end = point_at(arc, to);
  if (end != out.back()) out.push_back(end);
  return out;
}

/// One point on each piece of `arc` between consecutive contacts with
/// `others`; none of the points lies on any of `others`.
inline std::vector<Point> sample_points_off(const Polyline& arc, const std::vector<Polyline>& others) {
  std::vector<ArcPosition> cuts{ArcPosition{0, Scalar(0)}, ArcPosition{arc.size() - 2, Scalar(1)}};
  for (const Polyline& o : others) {
    for (const auto& ev : arc_intersections(arc, o)) cuts.push_back(ev.position_a);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Point> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Polyline piece = subpath(arc, cuts[i], cuts[i + 1]);
    if (piece.size() < 2) continue;
    Point mid{(piece[0].x + piece[1].x) / 2, (piece[0].y + piece[1].y) / 2};
    out.push_back(mid);
  }
  return out;
}

/// The face of `a` whose closure holds every arc of `family`, if there is one.
inline std::optional<std::size_t> common_face(const Arrangement& a, const std::vector<Polyline>& family) {
  std::optional<std::size_t> face;
  for (const Polyline& arc : family) {
    for (const Point& p : sample_points_off(arc, a.arcs)) {
      std::size_t f = face_of_point(a, p);
      if (face && *face != f) return std::nullopt;
      face = f;
    }
  }
  if (!face) return std::size_t{0};
  return face;
}

struct FaceIncidence {
  std::size_t face = 0;
  std::size_t count = 0;
};

/// Face with the most incident sub-edges (lowest id on ties).
inline FaceIncidence max_face_incidence(const Arrangement& a) {
  FaceIncidence best;
  for (std::size_t f = 0; f < a.faces.size(); ++f) {
    if (a.faces[f].incident_edges.size() > best.count) best = {f, a.faces[f].incident_edges.size()};
  }
  return best;
}

}  // namespace tgraph
