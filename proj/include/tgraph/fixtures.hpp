#pragma once

// Handcrafted fixtures: all-tangent pseudo-segment families for k = 1..4 and
// a small tangled-thrackle.

#include <array>
#include <vector>

#include "tgraph/drawing.hpp"

namespace tgraph {

struct ArcFamilies {
  std::vector<Polyline> l1;
  std::vector<Polyline> l2;
};

namespace detail {

inline Point pt(long xn, long xd, long yn, long yd) { return {make_scalar(xn, xd), make_scalar(yn, yd)}; }

// L2 bounds a triangle P(0,0), Q(12,0), R(6,10) with a tooth from B0(6,0)
// up to T(6,4). That face is the image of a convex hexagon model under a
// piecewise affine map; the L1 arcs are chord chains in the model that
// touch four of its sides each.
struct ToothFace {
  std::array<Point, 6> model{pt(0, 1, 0, 1), pt(2, 1, -1, 1), pt(4, 1, 0, 1),
                             pt(4, 1, 2, 1), pt(2, 1, 3, 1), pt(0, 1, 2, 1)};
  std::array<Point, 6> real{pt(0, 1, 0, 1), pt(6, 1, 0, 1), pt(6, 1, 4, 1),
                            pt(6, 1, 0, 1), pt(12, 1, 0, 1), pt(6, 1, 10, 1)};
  // Fan from model vertex 2.
  std::array<std::array<int, 3>, 4> triangles{{{0, 1, 2}, {2, 3, 4}, {0, 2, 5}, {2, 4, 5}}};
  std::array<std::array<int, 2>, 3> diagonals{{{0, 2}, {2, 4}, {2, 5}}};

  Point side_point(int side, const Scalar& f) const {
    const Point& a = model[static_cast<std::size_t>(side)];
    const Point& b = model[static_cast<std::size_t>((side + 1) % 6)];
    return a + f * (b - a);
  }

  Point map(const Point& p) const {
    for (const auto& t : triangles) {
      const Point &a = model[t[0]], &b = model[t[1]], &c = model[t[2]];
      if (orientation(a, b, p) < 0 || orientation(b, c, p) < 0 || orientation(c, a, p) < 0) continue;
      Scalar area = cross(b - a, c - a);
      Scalar wb = cross(p - a, c - a) / area;
      Scalar wc = cross(b - a, p - a) / area;
      Scalar wa = 1 - wb - wc;
      const Point &ra = real[t[0]], &rb = real[t[1]], &rc = real[t[2]];
      return {wa * ra.x + wb * rb.x + wc * rc.x, wa * ra.y + wb * rb.y + wc * rc.y};
    }
    throw Error(ErrorCode::InvalidArgument, "point outside the model hexagon");
  }

  /// Image of a model polyline, with breaks where it crosses a diagonal.
  Polyline map_polyline(const Polyline& model_path) const {
    Polyline out;
    for (std::size_t i = 0; i + 1 < model_path.size(); ++i) {
      Segment s{model_path[i], model_path[i + 1]};
      std::vector<std::pair<Scalar, Point>> cuts{{Scalar(0), s.a}};
      for (const auto& d : diagonals) {
        SegmentHit hit = segment_intersection(s, {model[d[0]], model[d[1]]});
        if (hit.kind != SegmentHit::Kind::Single) continue;
        Vec dir = s.b - s.a;
        cuts.push_back({dot(hit.point - s.a, dir) / norm2(dir), hit.point});
      }
      std::sort(cuts.begin(), cuts.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
      for (const auto& [t, p] : cuts) {
        Point q = map(p);
        if (out.empty() || out.back() != q) out.push_back(q);
      }
    }
    Point last = map(model_path.back());
    if (out.back() != last) out.push_back(last);
    // Drop bends where the image is straight anyway.
    Polyline clean{out.front()};
    for (std::size_t i = 1; i + 1 < out.size(); ++i) {
      if (orientation(clean.back(), out[i], out[i + 1]) != 0) clean.push_back(out[i]);
    }
    clean.push_back(out.back());
    return clean;
  }
};

}  // namespace detail

/// Families with |L1| = |L2| = k (1 <= k <= 4), every arc of L1 tangent to
/// every arc of L2, L1 inside one face of L2 and vice versa.
inline ArcFamilies tangency_fixture(std::size_t k) {
  if (k < 1 || k > 4) throw Error(ErrorCode::BadParams, "tangency fixtures exist for k = 1..4");
  using detail::pt;
  ArcFamilies f;
  const std::vector<Polyline> l2{
      {pt(-1, 1, 0, 1), pt(13, 1, 0, 1)},   // base line through P and Q
      {pt(6, 1, -1, 1), pt(6, 1, 4, 1)},    // tooth
      {pt(63, 5, -1, 1), pt(27, 5, 11, 1)}, // line through Q and R
      {pt(33, 5, 11, 1), pt(-3, 5, -1, 1)}, // line through R and P
  };
  // (side, fraction) stops of each chord chain in the model hexagon.
  const std::vector<std::vector<std::pair<int, Scalar>>> chains{
      {{5, make_scalar(3, 5)}, {1, make_scalar(3, 4)}, {3, make_scalar(2, 3)}, {4, make_scalar(1, 5)}},
      {{0, make_scalar(4, 5)}, {1, make_scalar(1, 4)}, {4, make_scalar(4, 5)}, {5, make_scalar(1, 5)}},
      {{2, make_scalar(2, 3)}, {3, make_scalar(1, 3)}, {4, make_scalar(2, 5)}, {5, make_scalar(2, 5)}},
      {{5, make_scalar(4, 5)}, {0, make_scalar(2, 5)}, {1, make_scalar(1, 2)}, {4, make_scalar(3, 5)}},
  };
  detail::ToothFace face;
  const Point center = detail::pt(2, 1, 1, 1);
  for (std::size_t i = 0; i < k; ++i) {
    Polyline model;
    for (const auto& [side, frac] : chains[i]) model.push_back(face.side_point(side, frac));
    // Short stubs pointing inward, so every stop is a touching point.
    Point first = model.front() + make_scalar(1, 100) * (center - model.front());
    Point last = model.back() + make_scalar(1, 100) * (center - model.back());
    model.insert(model.begin(), first);
    model.push_back(last);
    f.l1.push_back(face.map_polyline(model));
    f.l2.push_back(l2[i]);
  }
  return f;
}

/// Three edges, two tangencies: A(0,0)-B(4,0), B(4,0)-C(2,3), and
/// D(1,1) -> (2,0) -> (3,3/2) -> E(2,2), which touches the first edge at
/// (2,0) and the second at (3,3/2).
inline Drawing tangled_fixture() {
  using detail::pt;
  Drawing d;
  d.vertices = {{0, pt(0, 1, 0, 1)}, {1, pt(4, 1, 0, 1)}, {2, pt(2, 1, 3, 1)}, {3, pt(1, 1, 1, 1)}, {4, pt(2, 1, 2, 1)}};
  d.edges[0] = Edge{0, 1, {d.vertices[0], d.vertices[1]}};
  d.edges[1] = Edge{1, 2, {d.vertices[1], d.vertices[2]}};
  d.edges[2] = Edge{3, 4, {d.vertices[3], pt(2, 1, 0, 1), pt(3, 1, 3, 2), d.vertices[4]}};
  return d;
}

/// Tangled fixture plus an edge crossing two of the others and an edge
/// sharing endpoints with two of them.
inline Drawing tangled_fixture_large() {
  using detail::pt;
  Drawing d = tangled_fixture();
  d.vertices[5] = pt(3, 2, -1, 1);
  d.vertices[6] = pt(3, 2, 3, 1);
  d.edges[3] = Edge{5, 6, {d.vertices[5], d.vertices[6]}};
  d.edges[4] = Edge{2, 4, {d.vertices[2], d.vertices[4]}};
  return d;
}

}  // namespace tgraph
