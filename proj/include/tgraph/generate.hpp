#pragma once

// Instance generators. Every generator is a pure function of its parameters
// and seed, and every result passes validate().

#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "tgraph/arrangement.hpp"
#include "tgraph/drawing.hpp"
#include "tgraph/rng.hpp"

namespace tgraph {

/// Rational point on the unit circle at (approximately) angle `theta`.
inline Point circle_point(double theta, int bits = 20) {
  Scalar t = round_dyadic(std::tan(theta / 2.0), bits);
  Scalar den = 1 + t * t;
  return {(1 - t * t) / den, 2 * t / den};
}

/// Odd cycle on n points of a circle, edge i joining position i to
/// i + (n-1)/2. Every two edges share an endpoint or cross.
inline Drawing star_thrackle(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorCode::BadParams, "star-thrackle needs odd n >= 3");
  Drawing d;
  for (std::size_t i = 0; i < n; ++i) {
    d.vertices[static_cast<VertexId>(i)] = circle_point(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
  }
  std::size_t step = (n - 1) / 2;
  VertexId at = 0;
  for (std::size_t i = 0; i < n; ++i) {
    VertexId next = static_cast<VertexId>((static_cast<std::size_t>(at) + step) % n);
    d.edges[static_cast<EdgeId>(i)] = Edge{at, next, {d.vertices[at], d.vertices[next]}};
    at = next;
  }
  return d;
}

/// k pairwise disjoint straight edges, tails (class B) on y = 0, heads
/// (class A) on y = 1.
inline Drawing plane_matching(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::BadParams, "plane-matching needs k >= 1");
  Drawing d;
  for (std::size_t i = 0; i < k; ++i) {
    VertexId tail = static_cast<VertexId>(2 * i), head = tail + 1;
    Point a{Scalar(static_cast<long>(2 * i)), Scalar(0)};
    Point b{Scalar(static_cast<long>(2 * i + 1)), Scalar(1)};
    d.vertices[tail] = a;
    d.vertices[head] = b;
    d.bipartition[tail] = Side::B;
    d.bipartition[head] = Side::A;
    d.edges[static_cast<EdgeId>(i)] = Edge{tail, head, {a, b}};
  }
  return d;
}

/// Two far-apart groups of t pairwise crossing chords each: chord i joins
/// points i and i + t of 2t points on a convex curve. Any edge of one group
/// is disjoint from every edge of the other.
inline Drawing two_cluster(std::size_t t, std::uint64_t seed = 0) {
  if (t < 1) throw Error(ErrorCode::BadParams, "two-cluster needs t >= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Drawing d;
    std::vector<Point> base;
    for (std::size_t i = 0; i < 2 * t; ++i) {
      // Jittered angles in the upper half circle keep the order along it.
      double theta = std::numbers::pi * (static_cast<double>(i) + 0.25 + 0.5 * static_cast<double>(rng.below(1000)) / 1000.0) /
                     static_cast<double>(2 * t);
      base.push_back(circle_point(theta, 16));
    }
    for (std::size_t c = 0; c < 2; ++c) {
      Vec shift{Scalar(static_cast<long>(10 * c)), Scalar(0)};
      for (std::size_t i = 0; i < 2 * t; ++i) d.vertices[static_cast<VertexId>(c * 2 * t + i)] = base[i] + shift;
      for (std::size_t i = 0; i < t; ++i) {
        VertexId a = static_cast<VertexId>(c * 2 * t + i), b = a + static_cast<VertexId>(t);
        d.edges[static_cast<EdgeId>(c * t + i)] = Edge{a, b, {d.vertices[a], d.vertices[b]}};
      }
    }
    if (is_valid(d)) return d;
  }
  throw Error(ErrorCode::BadParams, "two-cluster generation failed");
}

struct RandomBipartiteParams {
  std::size_t n_a = 3;        // upper class, band 3 <= y <= 4
  std::size_t n_b = 3;        // lower class, band 0 <= y <= 1
  std::size_t m = 4;          // requested edges
  std::size_t max_bends = 2;
  std::size_t attempts_per_edge = 200;
};

namespace detail {

inline Scalar random_coord(Rng& rng, long lo, long hi) {
  long den = static_cast<long>(rng.range(1, 16));
  return make_scalar(static_cast<long>(rng.range(lo * den, hi * den)), den);
}

/// Whether adding `id` keeps the drawing valid, simple and free of touches.
inline bool edge_fits(const Drawing& d, EdgeId id) {
  const Edge& e = d.edges.at(id);
  if (!is_simple_polyline(e.arc)) return false;
  for (const auto& [vid, p] : d.vertices) {
    if (vid != e.tail && vid != e.head && on_arc(e.arc, p)) return false;
  }
  for (const auto& [fid, f] : d.edges) {
    if (fid == id) continue;
    PairClass pc;
    try {
      pc = classify_events(arc_intersections(e.arc, f.arc));
    } catch (const Error&) {
      return false;
    }
    if (pc.common_points() > 1 || pc.touches > 0) return false;
  }
  return is_valid(d);
}

}  // namespace detail

/// Random y-separated bipartite drawing: class A points in the band
/// 3 <= y <= 4, class B in 0 <= y <= 1, coordinates with denominators at
/// most 16, edges as polylines with at most `max_bends` bends. Each edge is
/// rejection-sampled until the drawing stays valid, simple and free of
/// tangencies; an edge that cannot be placed is dropped, so the result may
/// have fewer than m edges.
inline Drawing random_bipartite(const RandomBipartiteParams& p, std::uint64_t seed) {
  if (p.n_a + p.n_b < 2 || p.n_a == 0 || p.n_b == 0) throw Error(ErrorCode::BadParams, "random-bipartite needs both classes");
  if (p.m > p.n_a * p.n_b) throw Error(ErrorCode::BadParams, "more edges requested than vertex pairs");
  Rng rng(seed);
  Drawing d;
  std::set<Point> used;
  auto place = [&](VertexId id, Side side) {
    for (;;) {
      long base = side == Side::A ? 3 : 0;
      Point q{detail::random_coord(rng, 0, 4), detail::random_coord(rng, base, base + 1)};
      if (!used.insert(q).second) continue;
      d.vertices[id] = q;
      d.bipartition[id] = side;
      return;
    }
  };
  for (std::size_t i = 0; i < p.n_a; ++i) place(static_cast<VertexId>(i), Side::A);
  for (std::size_t i = 0; i < p.n_b; ++i) place(static_cast<VertexId>(p.n_a + i), Side::B);

  std::set<std::pair<VertexId, VertexId>> present;
  EdgeId next = 0;
  for (std::size_t k = 0; k < p.m; ++k) {
    for (std::size_t attempt = 0; attempt < p.attempts_per_edge; ++attempt) {
      VertexId b = static_cast<VertexId>(p.n_a + rng.below(p.n_b));
      VertexId a = static_cast<VertexId>(rng.below(p.n_a));
      if (present.count({b, a})) continue;
      Polyline arc{d.vertices[b]};
      std::size_t bends = p.max_bends == 0 ? 0 : rng.below(p.max_bends + 1);
      for (std::size_t j = 0; j < bends; ++j) {
        arc.push_back({detail::random_coord(rng, 0, 4), make_scalar(rng.range(17, 47), 16)});
      }
      arc.push_back(d.vertices[a]);
      d.edges[next] = Edge{b, a, arc};
      if (detail::edge_fits(d, next)) {
        present.insert({b, a});
        ++next;
        break;
      }
      d.edges.erase(next);
    }
  }
  return d;
}

/// Random family of m pseudo-segments in [0, 8]^2 with up to `max_bends`
/// bends each. Arcs are rejection-sampled so that the family stays one of
/// pseudo-segments without triple points; an arc that cannot be placed is
/// dropped.
inline std::vector<Polyline> random_pseudo_segments(std::size_t m, std::uint64_t seed, std::size_t max_bends = 1,
                                                    std::size_t attempts_per_arc = 200) {
  Rng rng(seed);
  std::vector<Polyline> arcs;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t attempt = 0; attempt < attempts_per_arc; ++attempt) {
      Polyline arc;
      std::size_t points = 2 + (max_bends == 0 ? 0 : rng.below(max_bends + 1));
      for (std::size_t j = 0; j < points; ++j) arc.push_back({detail::random_coord(rng, 0, 8), detail::random_coord(rng, 0, 8)});
      arcs.push_back(arc);
      try {
        check_pseudo_segments(arcs);
        break;
      } catch (const Error&) {
        arcs.pop_back();
      }
    }
  }
  return arcs;
}

}  // namespace tgraph
