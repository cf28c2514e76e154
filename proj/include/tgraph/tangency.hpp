#pragma once

// Two families of pseudo-segments touching each other: the tangency graph,
// the Euler density count that bounds it, and the refinement to subfamilies
// that each lie in a single face of the other.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tgraph/arrangement.hpp"
#include "tgraph/ds.hpp"

namespace tgraph {

struct Tangency {
  std::size_t arc1 = 0;  // index in L1
  std::size_t arc2 = 0;  // index in L2
  Point at;
};

/// Every touching point between an arc of `l1` and an arc of `l2`; throws
/// CrossFamilyCrossing on a proper crossing between the families.
inline std::vector<Tangency> cross_family_tangencies(const std::vector<Polyline>& l1, const std::vector<Polyline>& l2) {
  std::vector<Tangency> out;
  for (std::size_t i = 0; i < l1.size(); ++i) {
    for (std::size_t j = 0; j < l2.size(); ++j) {
      for (const auto& ev : arc_intersections(l1[i], l2[j])) {
        if (ev.kind == ContactKind::ProperCrossing) {
          throw Error(ErrorCode::CrossFamilyCrossing,
                      "L1 arc " + std::to_string(i) + " crosses L2 arc " + std::to_string(j));
        }
        if (ev.kind == ContactKind::Touch) out.push_back({i, j, ev.location});
      }
    }
  }
  return out;
}

struct TangencyGraph {
  // Vertices: sub-edges of arr(L1) on face1, then sub-edges of arr(L2) on face2.
  std::vector<std::size_t> edges1;
  std::vector<std::size_t> edges2;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // vertex indices
  std::size_t face1 = 0;  // face of arr(L1) holding L2
  std::size_t face2 = 0;  // face of arr(L2) holding L1

  std::size_t vertex_count() const { return edges1.size() + edges2.size(); }
  std::size_t edge_count() const { return edges.size(); }
  bool satisfies_planar_bound() const {
    std::size_t v = vertex_count();
    return v < 3 || edges.size() + 6 <= 3 * v;
  }
  bool is_simple_graph() const {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto e : edges) {
      if (!seen.insert(e).second) return false;
    }
    return true;
  }
};

namespace detail {

inline std::size_t sub_edge_at(const Arrangement& a, std::size_t arc, const Point& p) {
  for (std::size_t e = 0; e < a.edges.size(); ++e) {
    if (a.edges[e].arc == arc && on_arc(a.edges[e].path, p)) return e;
  }
  throw Error(ErrorCode::InvalidArgument, "point is not on the arc");
}

inline std::vector<Polyline> concat(const std::vector<Polyline>& a, const std::vector<Polyline>& b) {
  std::vector<Polyline> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace detail

inline TangencyGraph tangency_graph(const std::vector<Polyline>& l1, const std::vector<Polyline>& l2) {
  std::vector<Tangency> touches = cross_family_tangencies(l1, l2);
  check_pseudo_segments(detail::concat(l1, l2));
  Arrangement a1 = build_arrangement(l1);
  Arrangement a2 = build_arrangement(l2);
  auto f1 = common_face(a1, l2);
  auto f2 = common_face(a2, l1);
  if (!f1) throw Error(ErrorCode::NotSingleFace, "L2 is spread over several faces of the L1 arrangement");
  if (!f2) throw Error(ErrorCode::NotSingleFace, "L1 is spread over several faces of the L2 arrangement");

  TangencyGraph h;
  h.face1 = *f1;
  h.face2 = *f2;
  h.edges1.assign(a1.faces[*f1].incident_edges.begin(), a1.faces[*f1].incident_edges.end());
  h.edges2.assign(a2.faces[*f2].incident_edges.begin(), a2.faces[*f2].incident_edges.end());
  auto index_of = [](const std::vector<std::size_t>& v, std::size_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) throw Error(ErrorCode::NotSingleFace, "tangency off the common face");
    return static_cast<std::size_t>(it - v.begin());
  };
  for (const Tangency& t : touches) {
    std::size_t u = index_of(h.edges1, detail::sub_edge_at(a1, t.arc1, t.at));
    std::size_t v = h.edges1.size() + index_of(h.edges2, detail::sub_edge_at(a2, t.arc2, t.at));
    h.edges.emplace_back(u, v);
  }
  return h;
}

struct EulerDensity {
  double ratio = 0;
  bool contradiction = false;
};

/// k^2 tangencies against at most 2 * lambda3_upper(2k) vertices: a ratio
/// above 3 is impossible for a planar graph.
inline EulerDensity euler_density_check(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  double kk = static_cast<double>(k);
  EulerDensity r;
  r.ratio = kk * kk / (2.0 * lambda3_upper(2 * k));
  r.contradiction = r.ratio > 3.0;
  return r;
}

struct Refinement {
  std::vector<std::size_t> l1;  // indices into the input L1
  std::vector<std::size_t> l2;  // indices into the input L2
  std::size_t face1 = 0;        // face of arr(L1'') holding L2''
  std::size_t face2 = 0;        // face of arr(L2'') holding L1''
  std::optional<std::string> warning;
};

namespace detail {

struct HalfPick {
  std::vector<std::size_t> own;    // own-family arcs avoiding the half
  std::vector<std::size_t> other;  // other-family arcs tangent to the half
};

/// One halving round on `own` (arcs given by index into `own_arcs`). For an
/// arc l cut into r sub-edges by the rest of its family, the split vertex is
/// the end of sub-edge floor(r/2); each half is taken open at that vertex, so
/// it meets at most floor(s/2) other arcs of its family.
inline std::optional<HalfPick> halve(const std::vector<Polyline>& own_arcs, const std::vector<std::size_t>& own,
                                     const std::vector<Polyline>& other_arcs, const std::vector<std::size_t>& other,
                                     std::size_t target) {
  std::vector<Polyline> own_sub;
  for (std::size_t i : own) own_sub.push_back(own_arcs[i]);
  Arrangement a = build_arrangement(own_sub);
  for (std::size_t li = 0; li < own.size(); ++li) {
    std::vector<std::size_t> chain;  // sub-edges of l in order
    for (std::size_t e = 0; e < a.edges.size(); ++e) {
      if (a.edges[e].arc == li) chain.push_back(e);
    }
    std::sort(chain.begin(), chain.end(), [&](std::size_t x, std::size_t y) { return a.edges[x].index < a.edges[y].index; });
    const std::size_t r = chain.size();
    const std::size_t h = r / 2;
    // Vertex k of the chain is the start of sub-edge k (k = r is the end).
    auto vertex_slot = [&](const Point& p) -> std::optional<std::size_t> {
      for (std::size_t k = 0; k < r; ++k) {
        if (a.vertices[a.edges[chain[k]].u] == p) return k;
      }
      if (a.vertices[a.edges[chain[r - 1]].v] == p) return r;
      return std::nullopt;
    };
    for (int half = 0; half < 2; ++half) {
      HalfPick pick;
      for (std::size_t gi = 0; gi < own.size() && pick.own.size() < target; ++gi) {
        if (gi == li) continue;
        bool hits = false;
        for (const auto& ev : arc_intersections(own_sub[li], own_sub[gi])) {
          std::size_t k = *vertex_slot(ev.location);
          hits = hits || (half == 0 ? k < h : k > h);
        }
        if (!hits) pick.own.push_back(own[gi]);
      }
      for (std::size_t oi = 0; oi < other.size() && pick.other.size() < target; ++oi) {
        for (const auto& ev : arc_intersections(own_sub[li], other_arcs[other[oi]])) {
          if (ev.kind != ContactKind::Touch) continue;
          std::size_t k = 0;
          while (k < r && !on_arc(a.edges[chain[k]].path, ev.location)) ++k;
          if (half == 0 ? k < h : k >= h) pick.other.push_back(other[oi]);
        }
      }
      if (pick.own.size() >= target && pick.other.size() >= target) return pick;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Subfamilies L1'' of L1 and L2'' of L2, each of size N/4 where N is the
/// common family size rounded down to a multiple of 4, such that each lies
/// in a single face of the other's arrangement.
inline Refinement refine_to_single_face(const std::vector<Polyline>& l1, const std::vector<Polyline>& l2) {
  for (std::size_t i = 0; i < l1.size(); ++i) {
    for (std::size_t j = 0; j < l2.size(); ++j) {
      auto ev = arc_intersections(l1[i], l2[j]);
      if (ev.size() != 1 || ev[0].kind != ContactKind::Touch) {
        throw Error(ErrorCode::NotAllTangent,
                    "L1 arc " + std::to_string(i) + " is not tangent to L2 arc " + std::to_string(j));
      }
    }
  }
  check_pseudo_segments(detail::concat(l1, l2));
  Refinement out;
  std::size_t n = std::min(l1.size(), l2.size());
  std::size_t big = n - n % 4;
  if (big == 0) throw Error(ErrorCode::InvalidArgument, "refinement needs at least 4 arcs per family");
  if (big != l1.size() || big != l2.size()) {
    out.warning = "family sizes " + std::to_string(l1.size()) + "/" + std::to_string(l2.size()) +
                  " rounded down to " + std::to_string(big);
  }
  const std::size_t q = big / 4;
  std::vector<std::size_t> all1, all2;
  for (std::size_t i = 0; i < big; ++i) {
    all1.push_back(i);
    all2.push_back(i);
  }
  auto first = detail::halve(l1, all1, l2, all2, 2 * q);
  if (!first) throw Error(ErrorCode::RefinementFailed, "no arc of L1 has a half meeting the counts");
  std::vector<std::size_t> l1p(first->own.begin(), first->own.begin() + static_cast<std::ptrdiff_t>(2 * q));
  std::vector<std::size_t> l2p(first->other.begin(), first->other.begin() + static_cast<std::ptrdiff_t>(2 * q));
  auto second = detail::halve(l2, l2p, l1, l1p, q);
  if (!second) throw Error(ErrorCode::RefinementFailed, "no arc of L2' has a half meeting the counts");
  out.l2.assign(second->own.begin(), second->own.begin() + static_cast<std::ptrdiff_t>(q));
  out.l1.assign(second->other.begin(), second->other.begin() + static_cast<std::ptrdiff_t>(q));

  std::vector<Polyline> s1, s2;
  for (std::size_t i : out.l1) s1.push_back(l1[i]);
  for (std::size_t i : out.l2) s2.push_back(l2[i]);
  auto f1 = common_face(build_arrangement(s1), s2);
  auto f2 = common_face(build_arrangement(s2), s1);
  if (!f1 || !f2) throw Error(ErrorCode::RefinementFailed, "refined families are not single-face");
  out.face1 = *f1;
  out.face2 = *f2;
  return out;
}

}  // namespace tgraph
