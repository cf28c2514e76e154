#include <gtest/gtest.h>

#include <cmath>

#include "tgraph/arrangement.hpp"
#include "tgraph/ds.hpp"
#include "tgraph/generate.hpp"

using namespace tgraph;

namespace {

Point P(long x, long y) { return {make_scalar(x), make_scalar(y)}; }

std::vector<Polyline> triangle_triple() {
  return {{P(0, 0), P(10, 0)}, {P(1, -1), P(6, 9)}, {P(9, -1), P(4, 9)}};
}

// Oracle: longest alternation by scanning every ordered symbol pair with a
// greedy pass, and extension of all valid prefixes (validity is prefix-closed).
bool ds_oracle(const std::vector<int>& u, std::size_t s) {
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (u[i] == u[i - 1]) return false;
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      std::size_t len = 0;
      int want = a;
      for (int x : u) {
        if (x == want) {
          ++len;
          want = want == a ? b : a;
        }
      }
      if (len >= s + 2) return false;
    }
  }
  return true;
}

std::size_t lambda_oracle(std::size_t n, std::size_t s) {
  std::vector<std::vector<int>> frontier{{}};
  std::size_t best = 0;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& u : frontier) {
      for (int x = 0; x < static_cast<int>(n); ++x) {
        std::vector<int> v = u;
        v.push_back(x);
        if (ds_oracle(v, s)) next.push_back(v);
      }
    }
    if (!next.empty()) best = next.front().size();
    frontier = std::move(next);
  }
  return best;
}

}  // namespace

TEST(Arrangement, OneSegment) {
  Arrangement a = build_arrangement({{P(0, 0), P(1, 0)}});
  EXPECT_EQ(a.vertices.size(), 2u);
  EXPECT_EQ(a.edges.size(), 1u);
  EXPECT_EQ(a.faces.size(), 1u);
  EXPECT_EQ(a.euler_lhs(), 2);
  EXPECT_EQ(max_face_incidence(a).count, 1u);
  EXPECT_LE(1.0, lambda3_upper(2));
}

TEST(Arrangement, CrossingSegments) {
  Arrangement a = build_arrangement({{P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)}});
  EXPECT_EQ(a.vertices.size(), 5u);
  EXPECT_EQ(a.edges.size(), 4u);
  EXPECT_EQ(a.faces.size(), 1u);
  EXPECT_EQ(max_face_incidence(a).count, 4u);
  EXPECT_LE(4.0, lambda3_upper(4));
}

TEST(Arrangement, TriangleTriple) {
  Arrangement a = build_arrangement(triangle_triple());
  EXPECT_EQ(a.vertices.size(), 9u);
  EXPECT_EQ(a.edges.size(), 9u);
  ASSERT_EQ(a.faces.size(), 2u);
  EXPECT_EQ(a.euler_lhs(), 1 + static_cast<long>(a.components));
  std::size_t bounded = a.faces[0].bounded ? 0 : 1;
  EXPECT_TRUE(a.faces[bounded].bounded);
  EXPECT_EQ(a.faces[bounded].incident_edges.size(), 3u);
  EXPECT_EQ(a.faces[1 - bounded].incident_edges.size(), 9u);
  FaceIncidence best = max_face_incidence(a);
  EXPECT_EQ(best.face, 1 - bounded);
  EXPECT_EQ(best.count, 9u);
  EXPECT_EQ(face_of_point(a, P(5, 2)), bounded);
  EXPECT_EQ(face_of_point(a, P(20, 20)), 1 - bounded);
}

TEST(Arrangement, DisconnectedAndNested) {
  // A triangle with a short segment floating inside it and one far away.
  auto arcs = triangle_triple();
  arcs.push_back({P(4, 2), P(6, 2)});
  arcs.push_back({P(30, 30), P(31, 30)});
  Arrangement a = build_arrangement(arcs);
  EXPECT_EQ(a.components, 3u);
  EXPECT_EQ(a.faces.size(), 2u);
  EXPECT_EQ(a.euler_lhs(), 4);
}

TEST(Arrangement, Errors) {
  auto code_of = [](const std::vector<Polyline>& arcs) {
    try {
      build_arrangement(arcs);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Parse;
  };
  EXPECT_EQ(code_of({{P(0, 0), P(4, 0)}, {P(1, -1), P(2, 1), P(3, -1)}}), ErrorCode::NotPseudoSegments);
  EXPECT_EQ(code_of({{P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)}, {P(1, 0), P(1, 2)}}), ErrorCode::TriplePoint);
  EXPECT_EQ(code_of({{P(0, 0), P(2, 2), P(2, 0), P(0, 2)}}), ErrorCode::SelfIntersection);
}

TEST(Arrangement, TangencyVertexNeedsNoSpecialCase) {
  // A V touching a line from above at its apex.
  Arrangement a = build_arrangement({{P(0, 0), P(4, 0)}, {P(1, 2), P(2, 0), P(3, 2)}});
  EXPECT_EQ(a.vertices.size(), 5u);
  EXPECT_EQ(a.edges.size(), 4u);
  EXPECT_EQ(a.faces.size(), 1u);
  EXPECT_EQ(a.euler_lhs(), 2);
}

TEST(Arrangement, RandomFamilies) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::size_t m = 2 + seed % 11;
    auto arcs = random_pseudo_segments(m, seed);
    Arrangement a = build_arrangement(arcs);
    EXPECT_EQ(a.euler_lhs(), 1 + static_cast<long>(a.components)) << seed;
    EXPECT_LE(static_cast<double>(max_face_incidence(a).count), lambda3_upper(2 * arcs.size()));
    std::size_t edges = 0;
    for (const SubEdge& e : a.edges) edges += e.path.size() >= 2;
    EXPECT_EQ(edges, a.edges.size());
  }
}

TEST(Ds, Validity) {
  EXPECT_TRUE(is_ds_sequence({0, 1, 0, 1}, 3));
  EXPECT_FALSE(is_ds_sequence({0, 1, 0, 1, 0}, 3));
  EXPECT_FALSE(is_ds_sequence({0, 0, 1}, 3));
  EXPECT_FALSE(is_ds_sequence({0, 0, 1}, 10));
  EXPECT_TRUE(is_ds_sequence({}, 1));
  EXPECT_FALSE(is_ds_sequence({0, 1, 0}, 1));
  EXPECT_THROW(is_ds_sequence({0}, 0), Error);
}

TEST(Ds, LambdaMatchesOracle) {
  EXPECT_EQ(lambda_brute(1, 3), 1u);
  EXPECT_EQ(lambda_brute(2, 3), 4u);
  EXPECT_EQ(lambda_brute(3, 2), 5u);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t s = 1; s <= 4; ++s) {
      if (n == 4 && s == 4) continue;
      EXPECT_EQ(lambda_brute(n, s), lambda_oracle(n, s)) << n << "," << s;
    }
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(lambda_brute(n, 2), 2 * n - 1);
    EXPECT_LE(static_cast<double>(lambda_brute(n, 3)), lambda3_upper(n));
    for (std::size_t s = 1; s <= 4; ++s) {
      if (n > 1) EXPECT_LE(lambda_brute(n - 1, s), lambda_brute(n, s));
      if (s > 1) EXPECT_LE(lambda_brute(n, s - 1), lambda_brute(n, s));
    }
  }
  EXPECT_THROW(lambda_brute(5, 3), Error);
  EXPECT_THROW(lambda_brute(3, 5), Error);
}

TEST(Ds, UpperBound) {
  EXPECT_NEAR(lambda3_upper(1), 3.0, 1e-6);
  EXPECT_NEAR(lambda3_upper(2), 4.0 * std::log(2.0) + 6.0, 1e-6);
  EXPECT_NEAR(lambda3_upper(2), 8.77, 1e-2);
  EXPECT_NEAR(lambda3_upper(400), 5993.2, 0.1);
  EXPECT_GT(lambda3_upper(400), 800.0 * std::log(400.0) + 1200.0);
}
