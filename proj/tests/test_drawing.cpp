#include <gtest/gtest.h>

#include "tgraph/drawing.hpp"
#include "tgraph/generate.hpp"

using namespace tgraph;

namespace {

Point P(long x, long y) { return {Scalar(x), Scalar(y)}; }

Drawing straight(const std::vector<Point>& pts, const std::vector<std::pair<VertexId, VertexId>>& es) {
  Drawing d;
  for (std::size_t i = 0; i < pts.size(); ++i) d.vertices[static_cast<VertexId>(i)] = pts[i];
  EdgeId id = 0;
  for (auto [a, b] : es) d.edges[id++] = Edge{a, b, {pts[a], pts[b]}};
  return d;
}

Drawing convex_k4() {
  return straight({P(0, 0), P(2, 0), P(2, 2), P(0, 2)}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

bool has_violation(const ValidationReport& r, ViolationKind k) {
  for (const auto& v : r) {
    if (v.kind == k) return true;
  }
  return false;
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(convex_k4()).empty());

  Drawing three;
  three.vertices = {{0, P(-1, 0)}, {1, P(1, 0)}, {2, P(0, -1)}, {3, P(0, 1)}, {4, P(-1, -1)}, {5, P(1, 1)}};
  three.edges[0] = Edge{0, 1, {P(-1, 0), P(1, 0)}};
  three.edges[1] = Edge{2, 3, {P(0, -1), P(0, 1)}};
  three.edges[2] = Edge{4, 5, {P(-1, -1), P(1, 1)}};
  EXPECT_TRUE(has_violation(validate(three), ViolationKind::TriplePoint));

  Drawing overlap = straight({P(0, 0), P(2, 0), P(1, 0), P(3, 0)}, {{0, 1}, {2, 3}});
  EXPECT_TRUE(has_violation(validate(overlap), ViolationKind::DegenerateOverlap));
}

TEST(Validate, AxiomViolations) {
  Drawing through = straight({P(0, 0), P(2, 0), P(1, 0)}, {{0, 1}});
  EXPECT_TRUE(has_violation(validate(through), ViolationKind::ArcThroughVertex));

  Drawing parallel = straight({P(0, 0), P(2, 0)}, {{0, 1}});
  parallel.edges[1] = Edge{0, 1, {P(0, 0), P(1, 1), P(2, 0)}};
  EXPECT_TRUE(has_violation(validate(parallel), ViolationKind::ParallelEdges));

  Drawing mismatch = straight({P(0, 0), P(2, 0)}, {{0, 1}});
  mismatch.edges[0].arc.back() = P(3, 0);
  EXPECT_TRUE(has_violation(validate(mismatch), ViolationKind::EndpointMismatch));

  Drawing loop;
  loop.vertices[0] = P(0, 0);
  loop.edges[0] = Edge{0, 0, {P(0, 0), P(1, 0), P(0, 1), P(0, 0)}};
  EXPECT_TRUE(has_violation(validate(loop), ViolationKind::LoopEdge));

  Drawing unknown = straight({P(0, 0), P(2, 0)}, {{0, 1}});
  unknown.edges[0].head = 7;
  EXPECT_TRUE(has_violation(validate(unknown), ViolationKind::UnknownVertex));
}

TEST(ClassifyPair, Examples) {
  Drawing diag = straight({P(0, 0), P(2, 2), P(0, 2), P(2, 0)}, {{0, 1}, {2, 3}});
  PairClass pc = classify_pair(diag, 0, 1);
  EXPECT_EQ(pc.relation, Relation::Crossing);
  EXPECT_EQ(pc.crossings, 1u);

  Drawing wedge = straight({P(0, 0), P(1, 0), P(0, 1)}, {{0, 1}, {0, 2}});
  EXPECT_EQ(classify_pair(wedge, 0, 1).relation, Relation::CommonEndpoint);

  Drawing touch;
  touch.vertices = {{0, P(0, 0)}, {1, P(2, 0)}, {2, P(0, 2)}, {3, P(2, 2)}};
  touch.edges[0] = Edge{0, 1, {P(0, 0), P(1, 1), P(2, 0)}};
  touch.edges[1] = Edge{2, 3, {P(0, 2), P(1, 1), P(2, 2)}};
  pc = classify_pair(touch, 0, 1);
  EXPECT_EQ(pc.relation, Relation::Tangent);
  EXPECT_EQ(pc.touches, 1u);
  // Oracle: around (1,1) the germs in angle order are B, B, A, A.
  std::vector<Vec> all{{1, -1}, {-1, -1}, {1, 1}, {-1, 1}};
  std::sort(all.begin(), all.end(), angle_less);
  EXPECT_EQ(all[0], (Vec{1, 1}));
  EXPECT_EQ(all[1], (Vec{-1, 1}));

  EXPECT_THROW(classify_pair(diag, 0, 9), Error);
  EXPECT_EQ(classify_pair(touch, 1, 0), classify_pair(touch, 0, 1));
}

TEST(ClassifyPair, MixedRelation) {
  Drawing d;
  d.vertices = {{0, P(0, 0)}, {1, P(4, 0)}, {2, P(4, 4)}};
  d.edges[0] = Edge{0, 1, {P(0, 0), P(4, 0)}};
  d.edges[1] = Edge{0, 2, {P(0, 0), P(2, 1), P(2, -1), P(4, 4)}};
  PairClass pc = classify_pair(d, 0, 1);
  EXPECT_EQ(pc.relation, Relation::Mixed);
  EXPECT_EQ(pc.shared_endpoints, 1u);
  EXPECT_EQ(pc.crossings, 2u);
}

TEST(IsSimple, Examples) {
  EXPECT_TRUE(is_simple(convex_k4()));
  Drawing s;
  s.vertices = {{0, P(0, 0)}, {1, P(6, 0)}, {2, P(1, -1)}, {3, P(5, 1)}};
  s.edges[0] = Edge{0, 1, {P(0, 0), P(6, 0)}};
  s.edges[1] = Edge{2, 3, {P(1, -1), P(2, 1), P(4, -1), P(5, 1)}};
  EXPECT_EQ(arc_intersections(s.edges[0].arc, s.edges[1].arc).size(), 3u);
  EXPECT_FALSE(is_simple(s));
  EXPECT_TRUE(is_simple(straight({P(0, 0), P(1, 0)}, {{0, 1}})));
}

TEST(IntersectionGraph, Examples) {
  IntersectionGraph thr = intersection_graph(star_thrackle(5));
  EXPECT_EQ(thr.adjacent_pairs(), 10u);

  EXPECT_EQ(intersection_graph(plane_matching(3)).adjacent_pairs(), 0u);

  Drawing k4 = convex_k4();
  PairTable t = pair_table(k4);
  std::size_t disjoint = 0, crossing = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      disjoint += t.at(i, j).relation == Relation::Disjoint;
      crossing += t.at(i, j).relation == Relation::Crossing;
    }
  }
  EXPECT_EQ(disjoint, 2u);
  EXPECT_EQ(crossing, 1u);
  EXPECT_EQ(intersection_graph(t).adjacent_pairs(), 13u);
}

TEST(ClassifyDrawing, Examples) {
  DrawingFlags f = classify_drawing(star_thrackle(5));
  EXPECT_TRUE(f.is_thrackle);
  EXPECT_TRUE(f.is_tangled_thrackle);

  f = classify_drawing(plane_matching(2));
  EXPECT_FALSE(f.is_thrackle);
  EXPECT_FALSE(f.is_tangled_thrackle);

  Drawing touch;
  touch.vertices = {{0, P(0, 0)}, {1, P(2, 0)}, {2, P(0, 2)}, {3, P(2, 2)}};
  touch.edges[0] = Edge{0, 1, {P(0, 0), P(1, 1), P(2, 0)}};
  touch.edges[1] = Edge{2, 3, {P(0, 2), P(1, 1), P(2, 2)}};
  f = classify_drawing(touch);
  EXPECT_FALSE(f.is_thrackle);
  EXPECT_TRUE(f.is_tangled_thrackle);
}

// Invariants over random straight-line and polyline drawings.
TEST(Drawing, CountIdentityAndStraightLineOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Drawing d = random_bipartite({3, 4, 8, seed % 2 ? 0u : 2u, 200}, seed);
    ASSERT_TRUE(is_valid(d));
    PairTable t = pair_table(d);
    std::size_t m = t.size(), disjoint = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        disjoint += t.at(i, j).relation == Relation::Disjoint;
        EXPECT_EQ(t.at(i, j), classify_pair(d, t.ids[j], t.ids[i]));
      }
    }
    EXPECT_EQ(disjoint + intersection_graph(t).adjacent_pairs(), m * (m - 1) / 2);

    DrawingFlags f = classify_drawing(t);
    if (f.is_thrackle) EXPECT_TRUE(f.is_tangled_thrackle);

    if (seed % 2) {
      // Straight edges: crossings from the orientation test of endpoints.
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          const Edge& a = d.edges.at(t.ids[i]);
          const Edge& b = d.edges.at(t.ids[j]);
          const Point &p1 = a.arc.front(), &p2 = a.arc.back(), &q1 = b.arc.front(), &q2 = b.arc.back();
          bool proper = orientation(p1, p2, q1) * orientation(p1, p2, q2) < 0 &&
                        orientation(q1, q2, p1) * orientation(q1, q2, p2) < 0;
          EXPECT_EQ(t.at(i, j).relation == Relation::Crossing, proper);
        }
      }
    }
  }
}

TEST(InducedSubdrawing, KeepsInsideEdges) {
  Drawing k4 = convex_k4();
  Drawing sub = induced_subdrawing(k4, {0, 1, 2});
  EXPECT_EQ(sub.vertex_count(), 3u);
  EXPECT_EQ(sub.edge_count(), 3u);
}
