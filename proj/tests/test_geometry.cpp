#include <gtest/gtest.h>

#include <set>

#include "tgraph/geometry.hpp"
#include "tgraph/rng.hpp"

using namespace tgraph;

namespace {

Point P(long x, long y) { return {Scalar(x), Scalar(y)}; }
Point Q(long xn, long xd, long yn, long yd) { return {make_scalar(xn, xd), make_scalar(yn, yd)}; }

// Random polyline with rational coordinates, denominators <= 16.
Polyline random_polyline(Rng& rng, std::size_t bends) {
  for (;;) {
    Polyline arc;
    for (std::size_t i = 0; i < bends + 2; ++i) {
      long den = static_cast<long>(rng.range(1, 16));
      arc.push_back({make_scalar(static_cast<long>(rng.range(0, 4 * den)), den),
                     make_scalar(static_cast<long>(rng.range(0, 4 * den)), den)});
    }
    if (is_simple_polyline(arc)) return arc;
  }
}

}  // namespace

TEST(Orientation, Examples) {
  EXPECT_EQ(orientation(P(0, 0), P(1, 0), P(0, 1)), 1);
  EXPECT_EQ(orientation(P(0, 0), P(1, 1), P(2, 2)), 0);
  EXPECT_EQ(orientation(P(0, 0), P(0, 1), P(1, 0)), -1);
}

TEST(Orientation, AntisymmetricAndTranslationInvariant) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Point p = Q(rng.range(-50, 50), rng.range(1, 9), rng.range(-50, 50), rng.range(1, 9));
    Point q = Q(rng.range(-50, 50), rng.range(1, 9), rng.range(-50, 50), rng.range(1, 9));
    Point r = Q(rng.range(-50, 50), rng.range(1, 9), rng.range(-50, 50), rng.range(1, 9));
    Vec t{make_scalar(rng.range(-99, 99), rng.range(1, 13)), make_scalar(rng.range(-99, 99), rng.range(1, 13))};
    EXPECT_EQ(orientation(p, q, r), -orientation(p, r, q));
    EXPECT_EQ(orientation(p, q, r), orientation(p + t, q + t, r + t));
  }
}

TEST(SegmentIntersection, Examples) {
  SegmentHit h = segment_intersection({P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)});
  ASSERT_EQ(h.kind, SegmentHit::Kind::Single);
  EXPECT_EQ(h.point, P(1, 1));
  EXPECT_EQ(segment_intersection({P(0, 0), P(1, 0)}, {P(0, 1), P(1, 1)}).kind, SegmentHit::Kind::Empty);
  EXPECT_EQ(segment_intersection({P(0, 0), P(2, 0)}, {P(1, 0), P(3, 0)}).kind, SegmentHit::Kind::Overlap);
  // Collinear, touching at one end only.
  h = segment_intersection({P(0, 0), P(1, 0)}, {P(1, 0), P(3, 0)});
  ASSERT_EQ(h.kind, SegmentHit::Kind::Single);
  EXPECT_EQ(h.point, P(1, 0));
}

TEST(Scalar, CanonicalForm) {
  Scalar a = make_scalar(6, -4);
  EXPECT_EQ(a.get_num(), -3);
  EXPECT_EQ(a.get_den(), 2);
  EXPECT_EQ(parse_scalar("6/-4"), a);
  EXPECT_EQ(format_scalar(parse_scalar("10/4")), "5/2");
  EXPECT_THROW(parse_scalar("1/0"), Error);
  EXPECT_THROW(parse_scalar("abc"), Error);
}

TEST(ArcIntersections, Examples) {
  auto touch = arc_intersections({P(0, 0), P(1, 1), P(2, 0)}, {P(0, 2), P(1, 1), P(2, 2)});
  ASSERT_EQ(touch.size(), 1u);
  EXPECT_EQ(touch[0].kind, ContactKind::Touch);
  EXPECT_EQ(touch[0].location, P(1, 1));

  auto cross = arc_intersections({P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)});
  ASSERT_EQ(cross.size(), 1u);
  EXPECT_EQ(cross[0].kind, ContactKind::ProperCrossing);
  EXPECT_EQ(cross[0].location, P(1, 1));

  EXPECT_TRUE(arc_intersections({P(0, 0), P(1, 0)}, {P(2, 0), P(3, 0)}).empty());
}

TEST(ArcIntersections, KindsAtBendsAndEnds) {
  // Crossing at a bend of one arc and segment interior of the other.
  auto ev = arc_intersections({P(0, 0), P(1, 1), P(2, 2)}, {P(0, 2), P(1, 1), P(2, 0)});
  ASSERT_EQ(ev.size(), 1u);
  EXPECT_EQ(ev[0].kind, ContactKind::ProperCrossing);
  // Touch at a bend against a straight segment.
  ev = arc_intersections({P(0, 0), P(2, 0)}, {P(0, 1), P(1, 0), P(2, 1)});
  ASSERT_EQ(ev.size(), 1u);
  EXPECT_EQ(ev[0].kind, ContactKind::Touch);
  // Common endpoint.
  ev = arc_intersections({P(0, 0), P(1, 0)}, {P(0, 0), P(0, 1)});
  ASSERT_EQ(ev.size(), 1u);
  EXPECT_EQ(ev[0].kind, ContactKind::SharedEndpoint);
  // Endpoint of one arc on the interior of the other.
  ev = arc_intersections({P(0, 0), P(2, 0)}, {P(1, 0), P(1, 1)});
  ASSERT_EQ(ev.size(), 1u);
  EXPECT_EQ(ev[0].kind, ContactKind::EndpointContact);
  // Overlap.
  EXPECT_THROW(arc_intersections({P(0, 0), P(2, 0)}, {P(1, 0), P(3, 0)}), Error);
}

TEST(ArcIntersections, SymmetricAndStable) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Polyline a = random_polyline(rng, rng.below(4));
    Polyline b = random_polyline(rng, rng.below(4));
    std::vector<IntersectionEvent> ab, ba;
    try {
      ab = arc_intersections(a, b);
      ba = arc_intersections(b, a);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DegenerateOverlap);
      continue;
    }
    std::map<Point, ContactKind> m1, m2;
    for (const auto& e : ab) m1[e.location] = e.kind;
    for (const auto& e : ba) m2[e.location] = e.kind;
    EXPECT_EQ(m1, m2);
    for (const auto& e : ab) {
      EXPECT_TRUE(on_arc(a, e.location));
      EXPECT_TRUE(on_arc(b, e.location));
      EXPECT_EQ(classify_germs(germs(a, e.location), germs(b, e.location)), e.kind);
      EXPECT_EQ(point_at(a, e.position_a), e.location);
      EXPECT_EQ(point_at(b, e.position_b), e.location);
    }
  }
}

// Oracle: every pair of segments, intersected with the parametric line
// formulas written out independently of the library.
TEST(ArcIntersections, MatchesBruteForceScan) {
  Rng rng(2024);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Polyline a = random_polyline(rng, rng.below(7));
    Polyline b = random_polyline(rng, rng.below(7));
    std::set<Point> expected;
    bool overlap = false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      for (std::size_t j = 0; j + 1 < b.size(); ++j) {
        const Point &p = a[i], &p2 = a[i + 1], &q = b[j], &q2 = b[j + 1];
        Scalar rx = p2.x - p.x, ry = p2.y - p.y, sx = q2.x - q.x, sy = q2.y - q.y;
        Scalar den = rx * sy - ry * sx;
        Scalar qpx = q.x - p.x, qpy = q.y - p.y;
        if (den != 0) {
          Scalar t = (qpx * sy - qpy * sx) / den;
          Scalar u = (qpx * ry - qpy * rx) / den;
          if (t >= 0 && t <= 1 && u >= 0 && u <= 1) expected.insert({p.x + t * rx, p.y + t * ry});
        } else if (qpx * ry - qpy * rx == 0) {
          // Collinear: project onto the a-segment.
          Scalar rr = rx * rx + ry * ry;
          Scalar t0 = (qpx * rx + qpy * ry) / rr;
          Scalar t1 = ((q2.x - p.x) * rx + (q2.y - p.y) * ry) / rr;
          Scalar lo = std::max(Scalar(0), Scalar(std::min(t0, t1)));
          Scalar hi = std::min(Scalar(1), Scalar(std::max(t0, t1)));
          if (lo < hi) overlap = true;
          if (lo == hi) expected.insert({p.x + lo * rx, p.y + lo * ry});
        }
      }
    }
    if (overlap) {
      EXPECT_THROW(arc_intersections(a, b), Error);
      continue;
    }
    std::set<Point> got;
    for (const auto& e : arc_intersections(a, b)) got.insert(e.location);
    EXPECT_EQ(got, expected);
    compared += !expected.empty();
  }
  EXPECT_GT(compared, 50);
}

TEST(Polyline, Simplicity) {
  EXPECT_TRUE(is_simple_polyline({P(0, 0), P(1, 0), P(1, 1)}));
  EXPECT_FALSE(is_simple_polyline({P(0, 0), P(2, 0), P(1, 1), P(1, -1)}));
  EXPECT_FALSE(is_simple_polyline({P(0, 0), P(0, 0), P(1, 1)}));
  EXPECT_FALSE(is_simple_polyline({P(0, 0)}));
}

TEST(Planar, AreaAndWinding) {
  std::vector<Point> sq{P(0, 0), P(2, 0), P(2, 2), P(0, 2)};
  EXPECT_EQ(twice_signed_area(sq), 8);
  EXPECT_EQ(winding_number(sq, P(1, 1)), 1);
  EXPECT_EQ(winding_number(sq, P(3, 1)), 0);
  std::vector<Point> cw(sq.rbegin(), sq.rend());
  EXPECT_EQ(winding_number(cw, P(1, 1)), -1);
}
