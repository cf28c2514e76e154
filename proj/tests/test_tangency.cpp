#include <gtest/gtest.h>

#include <cmath>

#include "tgraph/fixtures.hpp"
#include "tgraph/tangency.hpp"

using namespace tgraph;

namespace {

Point P(long x, long y) { return {make_scalar(x), make_scalar(y)}; }

// Oracle: tangencies counted straight from the pairwise contact events.
std::size_t touch_count(const ArcFamilies& f) {
  std::size_t n = 0;
  for (const auto& a : f.l1) {
    for (const auto& b : f.l2) {
      for (const auto& ev : arc_intersections(a, b)) n += ev.kind == ContactKind::Touch;
    }
  }
  return n;
}

}  // namespace

TEST(Tangency, FixturesAreAllTangent) {
  for (std::size_t k = 1; k <= 4; ++k) {
    ArcFamilies f = tangency_fixture(k);
    ASSERT_EQ(f.l1.size(), k);
    ASSERT_EQ(f.l2.size(), k);
    EXPECT_EQ(touch_count(f), k * k);
    std::vector<Polyline> all = f.l1;
    all.insert(all.end(), f.l2.begin(), f.l2.end());
    EXPECT_NO_THROW(check_pseudo_segments(all));
    TangencyGraph h = tangency_graph(f.l1, f.l2);
    EXPECT_EQ(h.edge_count(), k * k);
    EXPECT_TRUE(h.satisfies_planar_bound());
    EXPECT_TRUE(h.is_simple_graph());
    if (h.vertex_count() >= 3) EXPECT_LE(h.edge_count() + 6, 3 * h.vertex_count());
  }
  EXPECT_THROW(tangency_fixture(0), Error);
  EXPECT_THROW(tangency_fixture(5), Error);
}

TEST(Tangency, SingleTouch) {
  TangencyGraph h = tangency_graph({{P(0, 0), P(4, 0)}}, {{P(1, 2), P(2, 0), P(3, 2)}});
  EXPECT_EQ(h.vertex_count(), 2u);
  EXPECT_EQ(h.edge_count(), 1u);
}

TEST(Tangency, Errors) {
  try {
    tangency_graph({{P(0, 0), P(4, 0)}}, {{P(2, -1), P(2, 1)}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CrossFamilyCrossing);
  }
  // The V sits inside a square of L1 touching its bottom, while the second
  // L2 arc is outside: L2 spans two faces of arr(L1).
  std::vector<Polyline> square{{P(0, 0), P(10, 0)}, {P(10, -1), P(10, 11)}, {P(11, 10), P(-1, 10)}, {P(0, 11), P(0, -1)}};
  std::vector<Polyline> l2{{P(4, 2), P(5, 0), P(6, 2)}, {P(20, 0), P(21, 0)}};
  try {
    tangency_graph(square, l2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSingleFace);
  }
}

TEST(Tangency, EulerDensity) {
  EulerDensity big = euler_density_check(200);
  EXPECT_GT(big.ratio, 3.3);
  EXPECT_LT(big.ratio, 3.4);
  EXPECT_NEAR(big.ratio, 40000.0 / (2.0 * (800.0 * std::log(400.0) + 1200.0)), 1e-6);
  EXPECT_TRUE(big.contradiction);
  EulerDensity ten = euler_density_check(10);
  EXPECT_NEAR(ten.ratio, 100.0 / (2.0 * (40.0 * std::log(20.0) + 60.0)), 1e-6);
  EXPECT_NEAR(ten.ratio, 0.278, 1e-3);
  EXPECT_FALSE(ten.contradiction);
  EXPECT_NEAR(euler_density_check(1).ratio, 1.0 / (2.0 * (4.0 * std::log(2.0) + 6.0)), 1e-6);
  EXPECT_NEAR(euler_density_check(1).ratio, 0.057, 1e-3);
  bool seen = false;
  for (std::size_t k = 1; k <= 200; ++k) {
    bool c = euler_density_check(k).contradiction;
    EXPECT_TRUE(!seen || c) << k;
    seen = seen || c;
  }
  EXPECT_FALSE(euler_density_check(10).contradiction);
  EXPECT_TRUE(seen);
}

TEST(Tangency, RefineFourByFour) {
  ArcFamilies f = tangency_fixture(4);
  Refinement r = refine_to_single_face(f.l1, f.l2);
  ASSERT_EQ(r.l1.size(), 1u);
  ASSERT_EQ(r.l2.size(), 1u);
  EXPECT_FALSE(r.warning.has_value());
  std::vector<Polyline> s1{f.l1[r.l1[0]]}, s2{f.l2[r.l2[0]]};
  // Independent face check: sample points of each arc land in one face.
  Arrangement a1 = build_arrangement(s1), a2 = build_arrangement(s2);
  std::set<std::size_t> faces1, faces2;
  for (const Point& p : sample_points_off(s2[0], s1)) faces1.insert(face_of_point(a1, p));
  for (const Point& p : sample_points_off(s1[0], s2)) faces2.insert(face_of_point(a2, p));
  EXPECT_EQ(faces1.size(), 1u);
  EXPECT_EQ(faces2.size(), 1u);
  EXPECT_EQ(arc_intersections(s1[0], s2[0]).size(), 1u);
}

TEST(Tangency, RefineErrors) {
  ArcFamilies f = tangency_fixture(3);
  EXPECT_THROW(refine_to_single_face(f.l1, f.l2), Error);
  try {
    refine_to_single_face({{P(0, 0), P(4, 0)}}, {{P(2, -1), P(2, 1)}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAllTangent);
  }
}
