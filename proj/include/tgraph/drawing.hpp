#pragma once

// Topological drawings with polyline edges: validation of the nondegeneracy
// conditions, pairwise classification and the intersection graph of edges.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tgraph/geometry.hpp"

namespace tgraph {

using VertexId = std::int64_t;
using EdgeId = std::int64_t;

enum class Side { A, B };

struct Edge {
  VertexId tail = 0;
  VertexId head = 0;
  Polyline arc;  // arc.front() is the tail point, arc.back() the head point

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Drawing {
  std::map<VertexId, Point> vertices;
  std::map<EdgeId, Edge> edges;
  std::map<VertexId, Side> bipartition;  // empty when no labels are attached

  friend bool operator==(const Drawing&, const Drawing&) = default;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const { return edges.size(); }

  std::vector<EdgeId> edge_ids() const {
    std::vector<EdgeId> ids;
    ids.reserve(edges.size());
    for (const auto& [id, e] : edges) ids.push_back(id);
    return ids;
  }

  std::map<VertexId, std::size_t> degrees() const {
    std::map<VertexId, std::size_t> deg;
    for (const auto& [id, v] : vertices) deg[id] = 0;
    for (const auto& [id, e] : edges) {
      ++deg[e.tail];
      ++deg[e.head];
    }
    return deg;
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& [v, d] : degrees()) best = std::max(best, d);
    return best;
  }

  const Edge& edge(EdgeId id) const {
    auto it = edges.find(id);
    if (it == edges.end()) throw Error(ErrorCode::UnknownEdge, "edge " + std::to_string(id));
    return it->second;
  }

  bool share_vertex(EdgeId e, EdgeId f) const {
    const Edge& a = edge(e);
    const Edge& b = edge(f);
    return a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head;
  }
};

// ---------------------------------------------------------------------------
// Validation.

enum class ViolationKind {
  UnknownVertex,
  LoopEdge,
  CoincidentVertices,
  ParallelEdges,
  EndpointMismatch,
  BadArc,            // fewer than two points, zero-length or self-intersecting
  ArcThroughVertex,  // condition (a)
  DegenerateOverlap, // shared sub-segment, violates condition (b)
  TriplePoint,       // condition (c)
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::UnknownVertex: return "UnknownVertex";
    case ViolationKind::LoopEdge: return "LoopEdge";
    case ViolationKind::CoincidentVertices: return "CoincidentVertices";
    case ViolationKind::ParallelEdges: return "ParallelEdges";
    case ViolationKind::EndpointMismatch: return "EndpointMismatch";
    case ViolationKind::BadArc: return "BadArc";
    case ViolationKind::ArcThroughVertex: return "ArcThroughVertex";
    case ViolationKind::DegenerateOverlap: return "DegenerateOverlap";
    case ViolationKind::TriplePoint: return "TriplePoint";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;
  std::optional<Point> location;
};

using ValidationReport = std::vector<Violation>;

/// All violations of the drawing axioms; an empty report means valid.
/// Tangencies are not violations: they are classified, not rejected.
inline ValidationReport validate(const Drawing& d) {
  ValidationReport report;

  std::map<Point, VertexId> seen;
  for (const auto& [id, p] : d.vertices) {
    auto [it, fresh] = seen.emplace(p, id);
    if (!fresh) report.push_back({ViolationKind::CoincidentVertices, {}, {it->second, id}, p});
  }

  std::set<EdgeId> broken;
  std::map<std::pair<VertexId, VertexId>, EdgeId> endpoints;
  for (const auto& [id, e] : d.edges) {
    auto t = d.vertices.find(e.tail);
    auto h = d.vertices.find(e.head);
    if (t == d.vertices.end() || h == d.vertices.end()) {
      report.push_back({ViolationKind::UnknownVertex, {id}, {e.tail, e.head}, std::nullopt});
      broken.insert(id);
      continue;
    }
    if (e.tail == e.head) {
      report.push_back({ViolationKind::LoopEdge, {id}, {e.tail}, std::nullopt});
      broken.insert(id);
      continue;
    }
    auto key = std::minmax(e.tail, e.head);
    auto [it, fresh] = endpoints.emplace(std::make_pair(key.first, key.second), id);
    if (!fresh) report.push_back({ViolationKind::ParallelEdges, {it->second, id}, {e.tail, e.head}, std::nullopt});
    if (!is_simple_polyline(e.arc)) {
      report.push_back({ViolationKind::BadArc, {id}, {}, std::nullopt});
      broken.insert(id);
      continue;
    }
    if (e.arc.front() != t->second || e.arc.back() != h->second) {
      report.push_back({ViolationKind::EndpointMismatch, {id}, {e.tail, e.head}, std::nullopt});
      broken.insert(id);
      continue;
    }
    for (const auto& [vid, p] : d.vertices) {
      if (vid == e.tail || vid == e.head) continue;
      if (on_arc(e.arc, p)) report.push_back({ViolationKind::ArcThroughVertex, {id}, {vid}, p});
    }
  }

  // Interior points shared by several arcs, for condition (c).
  std::map<Point, std::set<EdgeId>> interior_owners;
  for (auto i = d.edges.begin(); i != d.edges.end(); ++i) {
    if (broken.count(i->first)) continue;
    for (auto j = std::next(i); j != d.edges.end(); ++j) {
      if (broken.count(j->first)) continue;
      const Polyline& a = i->second.arc;
      const Polyline& b = j->second.arc;
      try {
        for (const IntersectionEvent& ev : arc_intersections(a, b)) {
          if (!is_arc_endpoint(a, ev.location)) interior_owners[ev.location].insert(i->first);
          if (!is_arc_endpoint(b, ev.location)) interior_owners[ev.location].insert(j->first);
        }
      } catch (const Error& err) {
        if (err.code() != ErrorCode::DegenerateOverlap) throw;
        report.push_back({ViolationKind::DegenerateOverlap, {i->first, j->first}, {}, std::nullopt});
      }
    }
  }
  for (const auto& [p, owners] : interior_owners) {
    if (owners.size() >= 3) {
      report.push_back({ViolationKind::TriplePoint, {owners.begin(), owners.end()}, {}, p});
    }
  }
  return report;
}

inline bool is_valid(const Drawing& d) { return validate(d).empty(); }

// ---------------------------------------------------------------------------
// Pair classification.

enum class Relation { CommonEndpoint, Crossing, Tangent, Disjoint, Mixed };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::CommonEndpoint: return "CommonEndpoint";
    case Relation::Crossing: return "Crossing";
    case Relation::Tangent: return "Tangent";
    case Relation::Disjoint: return "Disjoint";
    case Relation::Mixed: return "Mixed";
  }
  return "?";
}

struct PairClass {
  Relation relation = Relation::Disjoint;
  std::size_t crossings = 0;
  std::size_t touches = 0;
  std::size_t shared_endpoints = 0;

  std::size_t common_points() const { return crossings + touches + shared_endpoints; }

  friend bool operator==(const PairClass&, const PairClass&) = default;
};

inline PairClass classify_events(const std::vector<IntersectionEvent>& events) {
  PairClass pc;
  for (const IntersectionEvent& ev : events) {
    switch (ev.kind) {
      case ContactKind::SharedEndpoint: ++pc.shared_endpoints; break;
      case ContactKind::ProperCrossing: ++pc.crossings; break;
      case ContactKind::Touch:
      case ContactKind::EndpointContact: ++pc.touches; break;
    }
  }
  int categories = (pc.shared_endpoints > 0) + (pc.crossings > 0) + (pc.touches > 0);
  if (categories == 0) {
    pc.relation = Relation::Disjoint;
  } else if (categories > 1) {
    pc.relation = Relation::Mixed;
  } else if (pc.shared_endpoints > 0) {
    pc.relation = Relation::CommonEndpoint;
  } else if (pc.crossings > 0) {
    pc.relation = Relation::Crossing;
  } else {
    pc.relation = Relation::Tangent;
  }
  return pc;
}

inline PairClass classify_pair(const Drawing& d, EdgeId e1, EdgeId e2) {
  const Edge& a = d.edge(e1);
  const Edge& b = d.edge(e2);
  if (e1 == e2) throw Error(ErrorCode::InvalidArgument, "classify_pair needs two distinct edges");
  return classify_events(arc_intersections(a.arc, b.arc));
}

/// Classification of every unordered pair, indexed by position in `ids`.
struct PairTable {
  std::vector<EdgeId> ids;
  std::vector<std::vector<PairClass>> cls;

  std::size_t size() const { return ids.size(); }
  const PairClass& at(std::size_t i, std::size_t j) const { return cls[i][j]; }

  std::size_t index_of(EdgeId id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) throw Error(ErrorCode::UnknownEdge, "edge " + std::to_string(id));
    return static_cast<std::size_t>(it - ids.begin());
  }
};

inline PairTable pair_table(const Drawing& d) {
  PairTable t;
  t.ids = d.edge_ids();
  std::size_t m = t.ids.size();
  t.cls.assign(m, std::vector<PairClass>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      PairClass pc = classify_pair(d, t.ids[i], t.ids[j]);
      t.cls[i][j] = pc;
      t.cls[j][i] = pc;
    }
  }
  return t;
}

inline bool is_simple(const PairTable& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t.at(i, j).common_points() > 1) return false;
    }
  }
  return true;
}

inline bool is_simple(const Drawing& d) { return is_simple(pair_table(d)); }

/// Edges of the drawing as nodes; two nodes adjacent iff the arcs meet.
struct IntersectionGraph {
  std::vector<EdgeId> nodes;
  std::vector<std::vector<char>> adjacency;

  bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i][j] != 0; }

  std::size_t adjacent_pairs() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) count += adjacent(i, j);
    }
    return count;
  }
};

inline IntersectionGraph intersection_graph(const PairTable& t) {
  IntersectionGraph g;
  g.nodes = t.ids;
  g.adjacency.assign(t.size(), std::vector<char>(t.size(), 0));
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (i != j && t.at(i, j).relation != Relation::Disjoint) g.adjacency[i][j] = 1;
    }
  }
  return g;
}

inline IntersectionGraph intersection_graph(const Drawing& d) { return intersection_graph(pair_table(d)); }

struct DrawingFlags {
  bool is_thrackle = false;
  bool is_tangled_thrackle = false;
};

inline DrawingFlags classify_drawing(const PairTable& t) {
  DrawingFlags f{true, true};
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const PairClass& pc = t.at(i, j);
      if (pc.common_points() != 1) {
        f.is_thrackle = false;
        f.is_tangled_thrackle = false;
      } else if (pc.touches != 0) {
        f.is_thrackle = false;
      }
    }
  }
  return f;
}

inline DrawingFlags classify_drawing(const Drawing& d) { return classify_drawing(pair_table(d)); }

/// Sub-drawing induced by a vertex subset: keeps edges with both ends inside.
inline Drawing induced_subdrawing(const Drawing& d, const std::set<VertexId>& keep) {
  Drawing out;
  for (VertexId v : keep) out.vertices.emplace(v, d.vertices.at(v));
  for (const auto& [id, e] : d.edges) {
    if (keep.count(e.tail) && keep.count(e.head)) out.edges.emplace(id, e);
  }
  for (const auto& [v, side] : d.bipartition) {
    if (keep.count(v)) out.bipartition.emplace(v, side);
  }
  return out;
}

}  // namespace tgraph
