#pragma once

// Removal of tangencies by pushing one arc off the other near each touching
// point.

#include <map>
#include <utility>
#include <vector>

#include "tgraph/drawing.hpp"

namespace tgraph {

namespace detail {

struct TouchSite {
  EdgeId stays;  // arc left in place
  EdgeId moves;  // arc rerouted around the touching point
  Point at;
};

inline std::vector<TouchSite> touch_sites(const Drawing& d) {
  std::vector<TouchSite> out;
  for (const auto& [i, e] : d.edges) {
    for (const auto& [j, f] : d.edges) {
      if (i >= j) continue;
      for (const IntersectionEvent& ev : arc_intersections(e.arc, f.arc)) {
        if (ev.kind == ContactKind::Touch) out.push_back({i, j, ev.location});
      }
    }
  }
  return out;
}

/// Squared radius of a disk around `p` met only by the two arcs through it,
/// each as a pair of straight spokes.
inline Scalar touch_clearance2(const Drawing& d, const Point& p) {
  bool first = true;
  Scalar best;
  auto take = [&](const Scalar& s) {
    if (first || s < best) best = s;
    first = false;
  };
  for (const auto& [id, v] : d.vertices) take(sq_dist(p, v));
  for (const auto& [id, e] : d.edges) {
    for (std::size_t i = 0; i + 1 < e.arc.size(); ++i) {
      Segment s = segment_of(e.arc, i);
      if (on_segment(p, s)) {
        if (s.a != p) take(sq_dist(p, s.a));
        if (s.b != p) take(sq_dist(p, s.b));
      } else {
        take(sq_dist(p, s));
      }
    }
  }
  return best;
}

/// Replaces the point `p` of `arc` (interior, touching `other` there) by a
/// detour a' -> p' -> b' through the side of `arc` that `other` avoids.
/// `scale` shrinks the detour; `limit2` is the squared clearance at p.
inline Polyline detour(const Polyline& arc, const Polyline& other, const Point& p, const Scalar& limit2,
                       const Scalar& scale) {
  ArcPosition pos = *locate_on_arc(arc, p);
  // Neighbours of p along the arc.
  std::size_t prev_index, next_index;
  bool at_bend = pos.t == 0;
  if (at_bend) {
    prev_index = pos.segment - 1;
    next_index = pos.segment + 1;
  } else {
    prev_index = pos.segment;
    next_index = pos.segment + 1;
  }
  Vec u = arc[prev_index] - p;
  Vec v = arc[next_index] - p;
  std::vector<Vec> g = germs(other, p);

  // Wedge counterclockwise from u to v; if the other arc lives there, go
  // through the complementary wedge (from v to u) instead.
  bool other_in_uv = strictly_inside_ccw(u, g[0], v);
  Vec from = other_in_uv ? v : u;
  Vec to = other_in_uv ? u : v;
  Scalar turn = cross(from, to);
  Vec w;
  if (turn > 0) {
    w = Vec{from.x + to.x, from.y + to.y};
  } else if (turn == 0) {
    w = Vec{-from.y, from.x};
  } else {
    w = -Vec{from.x + to.x, from.y + to.y};
  }

  Scalar quarter = limit2 / 4;
  Scalar tau = dyadic_below(std::max(norm2(u), norm2(v)), quarter) * scale;
  Scalar eta = dyadic_below(norm2(w), quarter) * scale;
  // A strict fraction of the way to the neighbours.
  if (tau >= Scalar(1, 2)) tau = Scalar(1, 4) * scale;

  Point a = p + tau * u;
  Point b = p + tau * v;
  Point q = p + eta * w;
  Polyline out(arc.begin(), arc.begin() + static_cast<std::ptrdiff_t>(prev_index) + 1);
  out.push_back(a);
  out.push_back(q);
  out.push_back(b);
  out.insert(out.end(), arc.begin() + static_cast<std::ptrdiff_t>(next_index), arc.end());
  return out;
}

}  // namespace detail

/// Makes every tangent pair disjoint by rerouting the higher-id arc of the
/// pair around the touching point. Other pair classifications are unchanged.
inline Drawing perturb_tangencies(const Drawing& d) {
  PairTable before = pair_table(d);
  for (std::size_t i = 0; i < before.size(); ++i) {
    for (std::size_t j = i + 1; j < before.size(); ++j) {
      if (before.at(i, j).common_points() > 1) {
        throw Error(ErrorCode::InvalidArgument, "perturbation needs at most one common point per pair");
      }
    }
  }
  std::vector<detail::TouchSite> sites = detail::touch_sites(d);
  if (sites.empty()) return d;

  Scalar scale = 1;
  for (int attempt = 0; attempt < 12; ++attempt, scale /= 2) {
    Drawing out = d;
    for (const detail::TouchSite& s : sites) {
      Scalar limit2 = detail::touch_clearance2(out, s.at);
      Edge& moving = out.edges.at(s.moves);
      moving.arc = detail::detour(moving.arc, out.edges.at(s.stays).arc, s.at, limit2, scale);
    }
    if (!validate(out).empty()) continue;
    PairTable after;
    try {
      after = pair_table(out);
    } catch (const Error&) {
      continue;
    }
    bool ok = true;
    for (std::size_t i = 0; i < before.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < before.size() && ok; ++j) {
        const PairClass& was = before.at(i, j);
        const PairClass& now = after.at(i, j);
        if (was.relation == Relation::Tangent) {
          ok = now.relation == Relation::Disjoint;
        } else {
          ok = now == was;
        }
      }
    }
    if (ok) return out;
  }
  throw Error(ErrorCode::PerturbationCollision, "tangency removal kept colliding with other arcs");
}

}  // namespace tgraph
