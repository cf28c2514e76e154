#pragma once

// Recursive split-and-bisect decomposition of a drawing.

#include <cmath>
#include <set>
#include <vector>

#include "tgraph/bisection.hpp"
#include "tgraph/extremal.hpp"
#include "tgraph/transforms/split.hpp"

namespace tgraph {

/// (1/3)^(1-1/7t) + (2/3)^(1-1/7t).
inline double alpha(std::size_t t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "alpha needs t >= 1");
  double e = 1.0 - 1.0 / (7.0 * static_cast<double>(t));
  double a = std::pow(1.0 / 3.0, e) + std::pow(2.0 / 3.0, e);
  if (!(a > 1.0)) throw Error(ErrorCode::InvalidArgument, "alpha <= 1 at t=" + std::to_string(t));
  return a;
}

struct DecompositionNode {
  std::set<VertexId> vertices;  // vertex set of the node's drawing
  std::size_t n = 0;
  std::size_t m = 0;
  bool leaf = false;
  // Filled for internal nodes only.
  std::size_t delta = 0;
  std::size_t split_vertices = 0;  // vertices that were split
  std::size_t n_split = 0;         // vertex count after splitting
  std::size_t cut = 0;
  BisectionMode mode = BisectionMode::Exact;
  double bound = 0;                // Cor-Eq2 value at n
  std::vector<std::size_t> children;
  std::size_t depth = 0;
};

struct DecompositionTree {
  std::vector<DecompositionNode> nodes;  // nodes[0] is the root

  std::size_t leaf_edges() const {
    std::size_t s = 0;
    for (const auto& nd : nodes) s += nd.leaf ? nd.m : 0;
    return s;
  }
  std::size_t total_cut() const {
    std::size_t s = 0;
    for (const auto& nd : nodes) s += nd.leaf ? 0 : nd.cut;
    return s;
  }
  bool conserves() const { return nodes.empty() || leaf_edges() + total_cut() == nodes[0].m; }
  std::size_t depth() const {
    std::size_t best = 0;
    for (const auto& nd : nodes) best = std::max(best, nd.depth);
    return best;
  }
  /// Every internal node's children have sizes in [n'/3, 2n'/3].
  bool balanced() const {
    for (const auto& nd : nodes) {
      for (std::size_t c : nd.children) {
        std::size_t k = nodes[c].n;
        if (3 * k < nd.n_split || 3 * k > 2 * nd.n_split) return false;
      }
    }
    return true;
  }
};

inline constexpr std::size_t kMaxDecompositionDepth = 200;

/// Degree cap: ceil(n^(1/5)), raised to ceil(2m/n) when that is larger so
/// the splitting precondition holds.
inline std::size_t decomposition_delta(std::size_t n, std::size_t m) {
  std::size_t root = 1;
  while (std::pow(static_cast<double>(root), 5.0) < static_cast<double>(n)) ++root;
  std::size_t avg = n == 0 ? 0 : (2 * m + n - 1) / n;
  return std::max({root, avg, std::size_t{1}});
}

namespace detail {

inline std::size_t decompose(const Drawing& d, std::size_t t, const BoundConstants& k, std::uint64_t seed,
                             std::size_t depth, DecompositionTree& tree) {
  std::size_t index = tree.nodes.size();
  tree.nodes.emplace_back();
  {
    DecompositionNode& nd = tree.nodes[index];
    for (const auto& [v, p] : d.vertices) nd.vertices.insert(v);
    nd.n = d.vertex_count();
    nd.m = d.edge_count();
    nd.depth = depth;
  }
  const Scalar n0 = k.n0;
  if (Scalar(static_cast<long>(d.vertex_count())) <= n0 || d.vertex_count() < 2) {
    tree.nodes[index].leaf = true;
    return index;
  }
  if (depth >= kMaxDecompositionDepth) throw Error(ErrorCode::TooLarge, "decomposition depth cap reached");

  std::size_t delta = decomposition_delta(d.vertex_count(), d.edge_count());
  SplitResult split = split_vertices(d, delta);
  std::size_t split_count = 0;
  for (const auto& [v, news] : split.certificate.vertex_map) split_count += news.size() > 1;

  LabeledGraph lg = abstract_graph(split.drawing);
  BisectionResult cut = bisect(lg.graph, seed + index);

  {
    DecompositionNode& nd = tree.nodes[index];
    nd.delta = delta;
    nd.split_vertices = split_count;
    nd.n_split = split.drawing.vertex_count();
    nd.cut = cut.width;
    nd.mode = cut.mode;
    nd.bound = bound_value(BoundFormula::CorollaryEq2, {nd.n, t, std::nullopt, 0}, k);
  }
  for (const auto* part : {&cut.part1, &cut.part2}) {
    std::set<VertexId> keep;
    for (std::size_t i : *part) keep.insert(lg.labels[i]);
    Drawing sub = induced_subdrawing(split.drawing, keep);
    std::size_t child = decompose(sub, t, k, seed, depth + 1, tree);
    tree.nodes[index].children.push_back(child);
  }
  return index;
}

}  // namespace detail

/// Splits to degree cap, bisects, and recurses until at most n0 vertices
/// remain. Exact bisection for up to 20 vertices, heuristic above.
inline DecompositionTree recursive_decomposition(const Drawing& d, std::size_t t, const BoundConstants& k = {},
                                                 std::uint64_t seed = 1) {
  k.check();
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "t must be >= 1");
  DecompositionTree tree;
  detail::decompose(d, t, k, seed, 0, tree);
  if (!tree.conserves()) throw Error(ErrorCode::InvalidArgument, "decomposition lost edges");
  return tree;
}

}  // namespace tgraph
