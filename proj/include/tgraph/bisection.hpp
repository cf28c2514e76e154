#pragma once

// Balanced partitions of abstract graphs and odd-crossing pair counts of
// concrete drawings.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "tgraph/drawing.hpp"
#include "tgraph/rng.hpp"

namespace tgraph {

struct AbstractGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  void check() const {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
      if (u == v) throw Error(ErrorCode::InvalidArgument, "loop edge");
      if (!seen.insert(std::minmax(u, v)).second) throw Error(ErrorCode::InvalidArgument, "multi-edge");
    }
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : edges) {
      ++deg[u];
      ++deg[v];
    }
    return deg;
  }
};

/// Underlying graph of a drawing; vertex i is the i-th smallest VertexId.
struct LabeledGraph {
  AbstractGraph graph;
  std::vector<VertexId> labels;
};

inline LabeledGraph abstract_graph(const Drawing& d) {
  LabeledGraph out;
  std::map<VertexId, std::size_t> index;
  for (const auto& [id, p] : d.vertices) {
    index[id] = out.labels.size();
    out.labels.push_back(id);
  }
  out.graph.n = out.labels.size();
  for (const auto& [id, e] : d.edges) out.graph.edges.emplace_back(index.at(e.tail), index.at(e.head));
  return out;
}

enum class BisectionMode { Exact, Heuristic };

struct BisectionResult {
  std::size_t width = 0;
  std::vector<std::size_t> part1;  // contains vertex 0
  std::vector<std::size_t> part2;
  BisectionMode mode = BisectionMode::Exact;
};

inline std::size_t balance_min(std::size_t n) { return (n + 2) / 3; }
inline std::size_t balance_max(std::size_t n) { return (2 * n) / 3; }

inline std::size_t cut_size(const AbstractGraph& g, const std::vector<char>& in_part1) {
  std::size_t cut = 0;
  for (auto [u, v] : g.edges) cut += in_part1[u] != in_part1[v];
  return cut;
}

inline constexpr std::size_t kExactBisectionCap = 20;

/// Minimum cut over all partitions with ceil(n/3) <= |V_i| <= floor(2n/3).
inline BisectionResult bisection_width_exact(const AbstractGraph& g) {
  g.check();
  if (g.n > kExactBisectionCap) throw Error(ErrorCode::TooLarge, "exact bisection supports n <= 20");
  if (g.n < 2) throw Error(ErrorCode::InvalidArgument, "bisection needs n >= 2");
  const std::size_t n = g.n;
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  const std::size_t lo = balance_min(n), hi = balance_max(n);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::size_t best = SIZE_MAX;
  std::uint32_t best_mask = 0;
  // Vertex 0 always in part 1, so each partition is visited once.
  for (std::uint32_t mask = 1; mask <= full; mask += 2) {
    std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (size < lo || size > hi) continue;
    std::size_t cut = 0;
    for (std::uint32_t m = mask; m; m &= m - 1) {
      cut += static_cast<std::size_t>(std::popcount(adj[std::countr_zero(m)] & ~mask & full));
    }
    if (cut < best) {
      best = cut;
      best_mask = mask;
    }
  }
  BisectionResult r;
  r.width = best;
  r.mode = BisectionMode::Exact;
  for (std::size_t v = 0; v < n; ++v) ((best_mask >> v) & 1 ? r.part1 : r.part2).push_back(v);
  return r;
}

/// Upper bound on the bisection width: multistart random balanced splits,
/// each improved by balance-preserving moves and swaps until no step lowers
/// the cut. Deterministic in `seed`.
inline BisectionResult bisection_width_heuristic(const AbstractGraph& g, std::uint64_t seed,
                                                 std::size_t restarts = 8) {
  g.check();
  if (g.n < 2) throw Error(ErrorCode::InvalidArgument, "bisection needs n >= 2");
  const std::size_t n = g.n;
  const std::size_t lo = balance_min(n), hi = balance_max(n);
  std::vector<std::vector<std::size_t>> nbr(n);
  std::vector<std::set<std::size_t>> nbr_set(n);
  for (auto [u, v] : g.edges) {
    nbr[u].push_back(v);
    nbr[v].push_back(u);
    nbr_set[u].insert(v);
    nbr_set[v].insert(u);
  }

  Rng rng(seed);
  std::vector<char> best_side;
  std::size_t best_cut = SIZE_MAX;

  for (std::size_t r = 0; r < std::max<std::size_t>(restarts, 1); ++r) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);
    std::vector<char> side(n, 0);  // 1 = part 1
    for (std::size_t i = 0; i < n / 2; ++i) side[order[i]] = 1;
    std::size_t size1 = n / 2;

    // gain[v]: cut decrease when v changes side alone.
    auto gain = [&](std::size_t v) {
      long ext = 0, in = 0;
      for (std::size_t w : nbr[v]) (side[w] != side[v] ? ext : in)++;
      return ext - in;
    };
    while (true) {
      long best_gain = 0;
      std::size_t bu = SIZE_MAX, bv = SIZE_MAX;
      for (std::size_t u = 0; u < n; ++u) {
        long gu = gain(u);
        std::size_t new_size1 = side[u] ? size1 - 1 : size1 + 1;
        if (new_size1 >= lo && new_size1 <= hi && gu > best_gain) {
          best_gain = gu;
          bu = u;
          bv = SIZE_MAX;
        }
        if (!side[u]) continue;
        for (std::size_t v = 0; v < n; ++v) {
          if (side[v]) continue;
          long gs = gu + gain(v) - 2 * static_cast<long>(nbr_set[u].count(v));
          if (gs > best_gain) {
            best_gain = gs;
            bu = u;
            bv = v;
          }
        }
      }
      if (bu == SIZE_MAX) break;
      if (bv == SIZE_MAX) {
        size1 = side[bu] ? size1 - 1 : size1 + 1;
        side[bu] ^= 1;
      } else {
        side[bu] ^= 1;
        side[bv] ^= 1;
      }
    }
    if (!side[0]) {
      for (char& s : side) s ^= 1;
    }
    std::size_t cut = cut_size(g, side);
    // Ties: prefer the lexicographically least part 1 (as a sorted list).
    auto part_less = [&](const std::vector<char>& a, const std::vector<char>& b) {
      for (std::size_t v = 0; v < n; ++v) {
        if (a[v] != b[v]) return a[v] > b[v];
      }
      return false;
    };
    if (cut < best_cut || (cut == best_cut && part_less(side, best_side))) {
      best_cut = cut;
      best_side = side;
    }
  }

  BisectionResult res;
  res.width = best_cut;
  res.mode = BisectionMode::Heuristic;
  for (std::size_t v = 0; v < n; ++v) (best_side[v] ? res.part1 : res.part2).push_back(v);
  return res;
}

/// Exact when the graph is small enough, heuristic otherwise.
inline BisectionResult bisect(const AbstractGraph& g, std::uint64_t seed) {
  if (g.n <= kExactBisectionCap) return bisection_width_exact(g);
  return bisection_width_heuristic(g, seed);
}

/// Independent edge pairs crossing an odd number of times in this drawing.
inline std::size_t odd_crossing_pairs(const Drawing& d, const PairTable& t) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (d.share_vertex(t.ids[i], t.ids[j])) continue;
      count += t.at(i, j).crossings % 2;
    }
  }
  return count;
}

inline std::size_t odd_crossing_pairs(const Drawing& d) { return odd_crossing_pairs(d, pair_table(d)); }

}  // namespace tgraph
