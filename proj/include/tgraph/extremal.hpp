#pragma once

// Disjointness structure of a drawing (pairwise-disjoint sets, disjoint
// bicliques) and the closed-form edge bounds it is compared against.

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tgraph/drawing.hpp"

namespace tgraph {

/// Largest edge count handled by the exhaustive searches.
inline constexpr std::size_t kExactEdgeCap = 24;

using EdgeMask = std::uint32_t;

/// Bitmask adjacency of the "disjoint" relation (the complement of the
/// intersection graph).
inline std::vector<EdgeMask> disjointness_masks(const PairTable& t) {
  if (t.size() > kExactEdgeCap) {
    throw Error(ErrorCode::TooLarge, std::to_string(t.size()) + " edges exceed the exact-mode cap");
  }
  std::vector<EdgeMask> masks(t.size(), 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (i != j && t.at(i, j).relation == Relation::Disjoint) masks[i] |= EdgeMask{1} << j;
    }
  }
  return masks;
}

namespace detail {

inline void max_clique(const std::vector<EdgeMask>& adj, EdgeMask current, EdgeMask candidates, EdgeMask excluded,
                       EdgeMask& best) {
  if (candidates == 0 && excluded == 0) {
    if (std::popcount(current) > std::popcount(best)) best = current;
    return;
  }
  if (std::popcount(current) + std::popcount(candidates) <= std::popcount(best)) return;
  // Tomita pivot: the vertex covering most candidates.
  EdgeMask pool = candidates | excluded;
  int pivot = std::countr_zero(pool);
  int pivot_cover = -1;
  for (EdgeMask p = pool; p; p &= p - 1) {
    int u = std::countr_zero(p);
    int cover = std::popcount(candidates & adj[u]);
    if (cover > pivot_cover) {
      pivot_cover = cover;
      pivot = u;
    }
  }
  for (EdgeMask rest = candidates & ~adj[pivot]; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    EdgeMask bit = EdgeMask{1} << v;
    max_clique(adj, current | bit, candidates & adj[v], excluded & adj[v], best);
    candidates &= ~bit;
    excluded |= bit;
  }
}

}  // namespace detail

struct DisjointSet {
  std::size_t size = 0;
  std::vector<EdgeId> witness;
};

/// Largest set of pairwise Disjoint edges, by exhaustive branch-and-bound.
inline DisjointSet max_pairwise_disjoint(const PairTable& t) {
  std::vector<EdgeMask> adj = disjointness_masks(t);
  DisjointSet out;
  if (t.size() == 0) return out;
  EdgeMask all = t.size() == 32 ? ~EdgeMask{0} : ((EdgeMask{1} << t.size()) - 1);
  EdgeMask best = 0;
  detail::max_clique(adj, 0, all, 0, best);
  out.size = static_cast<std::size_t>(std::popcount(best));
  for (EdgeMask b = best; b; b &= b - 1) out.witness.push_back(t.ids[std::countr_zero(b)]);
  return out;
}

inline DisjointSet max_pairwise_disjoint(const Drawing& d) {
  if (d.edge_count() > kExactEdgeCap) {
    throw Error(ErrorCode::TooLarge, std::to_string(d.edge_count()) + " edges exceed the exact-mode cap");
  }
  return max_pairwise_disjoint(pair_table(d));
}

struct Biclique {
  std::vector<EdgeId> left;
  std::vector<EdgeId> right;
};

namespace detail {

inline bool grow_biclique(const std::vector<EdgeMask>& adj, std::size_t t, std::size_t start, EdgeMask chosen,
                          EdgeMask common, std::size_t m, EdgeMask& left, EdgeMask& right) {
  if (static_cast<std::size_t>(std::popcount(common)) < t) return false;
  if (static_cast<std::size_t>(std::popcount(chosen)) == t) {
    // Common neighbourhood excludes `chosen` since the relation is loop-free.
    EdgeMask pick = 0;
    EdgeMask c = common;
    for (std::size_t k = 0; k < t; ++k) {
      pick |= c & (~c + 1);
      c &= c - 1;
    }
    left = chosen;
    right = pick;
    return true;
  }
  for (std::size_t v = start; v < m; ++v) {
    EdgeMask bit = EdgeMask{1} << v;
    if (grow_biclique(adj, t, v + 1, chosen | bit, common & adj[v], m, left, right)) return true;
  }
  return false;
}

}  // namespace detail

/// Two disjoint edge sets of size t with every cross pair Disjoint, if any.
/// Witness: lexicographically first left set, lowest-index right set.
inline std::optional<Biclique> find_disjoint_biclique(const PairTable& t, std::size_t size) {
  if (size == 0) throw Error(ErrorCode::InvalidArgument, "biclique size must be >= 1");
  std::vector<EdgeMask> adj = disjointness_masks(t);
  std::size_t m = t.size();
  if (2 * size > m) return std::nullopt;
  EdgeMask all = (EdgeMask{1} << m) - 1;
  EdgeMask left = 0, right = 0;
  if (!detail::grow_biclique(adj, size, 0, 0, all, m, left, right)) return std::nullopt;
  Biclique b;
  for (EdgeMask x = left; x; x &= x - 1) b.left.push_back(t.ids[std::countr_zero(x)]);
  for (EdgeMask x = right; x; x &= x - 1) b.right.push_back(t.ids[std::countr_zero(x)]);
  return b;
}

inline bool has_disjoint_biclique(const PairTable& t, std::size_t size) {
  return find_disjoint_biclique(t, size).has_value();
}

inline std::optional<Biclique> find_disjoint_biclique(const Drawing& d, std::size_t size) {
  if (d.edge_count() > kExactEdgeCap) {
    throw Error(ErrorCode::TooLarge, std::to_string(d.edge_count()) + " edges exceed the exact-mode cap");
  }
  return find_disjoint_biclique(pair_table(d), size);
}

inline bool has_disjoint_biclique(const Drawing& d, std::size_t size) {
  return find_disjoint_biclique(d, size).has_value();
}

// ---------------------------------------------------------------------------
// Bounds. The constants are never valued in the literature; every value
// computed here is reported next to measurements, never asserted against them.

struct BoundConstants {
  Scalar c1 = 1, c2 = 1, c3 = 1, c4 = 1, c5 = 1, c6 = 1, n0 = 1;

  void check() const {
    for (const Scalar* c : {&c1, &c2, &c3, &c4, &c5, &c6, &n0}) {
      if (*c <= 0) throw Error(ErrorCode::BadParams, "bound constants must be positive");
    }
  }
};

enum class BoundFormula {
  KST,         // c1 n^(2 - 1/t)
  PTLog,       // c3 n log^(4t - 8) n
  Bisect,      // c2 log n sqrt(odd-cr + sum d_i^2)
  LemmaEq1,    // c4 n^(1 - 1/2t) log^(8t - 3) n + c4 log n sqrt(sum d_i^2)
  CorollaryEq2 // c5 n^(1 - 1/4t)
};

inline const char* to_string(BoundFormula f) {
  switch (f) {
    case BoundFormula::KST: return "KST";
    case BoundFormula::PTLog: return "PT-log";
    case BoundFormula::Bisect: return "Bisect";
    case BoundFormula::LemmaEq1: return "Lem-Eq1";
    case BoundFormula::CorollaryEq2: return "Cor-Eq2";
  }
  return "?";
}

inline BoundFormula parse_bound_formula(const std::string& s) {
  for (BoundFormula f : {BoundFormula::KST, BoundFormula::PTLog, BoundFormula::Bisect, BoundFormula::LemmaEq1,
                         BoundFormula::CorollaryEq2}) {
    if (s == to_string(f)) return f;
  }
  throw Error(ErrorCode::BadParams, "unknown bound formula '" + s + "'");
}

struct BoundInputs {
  std::size_t n = 0;
  std::size_t t = 1;
  std::optional<std::vector<std::size_t>> degrees;  // needed by Bisect and LemmaEq1
  std::size_t odd_crossings = 0;                    // odd-cr term of Bisect
};

/// Value of a bound formula; logarithms base 2, double precision.
inline double bound_value(BoundFormula formula, const BoundInputs& in, const BoundConstants& k = {}) {
  k.check();
  if (in.n < 2) throw Error(ErrorCode::InvalidArgument, "bounds need n >= 2");
  if (in.t < 1) throw Error(ErrorCode::InvalidArgument, "bounds need t >= 1");
  const double n = static_cast<double>(in.n);
  const double t = static_cast<double>(in.t);
  const double lg = std::log2(n);
  auto sum_sq = [&]() {
    if (!in.degrees) throw Error(ErrorCode::MissingDegrees, std::string(to_string(formula)) + " needs degrees");
    double acc = 0;
    for (std::size_t d : *in.degrees) acc += static_cast<double>(d) * static_cast<double>(d);
    return acc;
  };
  switch (formula) {
    case BoundFormula::KST:
      return k.c1.get_d() * std::pow(n, 2.0 - 1.0 / t);
    case BoundFormula::PTLog:
      return k.c3.get_d() * n * std::pow(lg, 4.0 * t - 8.0);
    case BoundFormula::Bisect:
      return k.c2.get_d() * lg * std::sqrt(static_cast<double>(in.odd_crossings) + sum_sq());
    case BoundFormula::LemmaEq1:
      return k.c4.get_d() * std::pow(n, 1.0 - 1.0 / (2.0 * t)) * std::pow(lg, 8.0 * t - 3.0) +
             k.c4.get_d() * lg * std::sqrt(sum_sq());
    case BoundFormula::CorollaryEq2:
      return k.c5.get_d() * std::pow(n, 1.0 - 1.0 / (4.0 * t));
  }
  return 0;
}

struct DensityReport {
  std::size_t n = 0;
  std::size_t m = 0;
  double ratio = 0;
  std::optional<std::size_t> max_disjoint;  // empty when m exceeds the exact cap
  std::optional<std::size_t> biclique_t;    // largest t with a disjoint t x t biclique
  std::map<std::string, double> bounds;
};

inline DensityReport density_report(const Drawing& d, std::size_t t, const BoundConstants& k = {}) {
  DensityReport r;
  r.n = d.vertex_count();
  r.m = d.edge_count();
  r.ratio = r.n == 0 ? 0.0 : static_cast<double>(r.m) / static_cast<double>(r.n);
  if (r.m <= kExactEdgeCap) {
    PairTable table = pair_table(d);
    r.max_disjoint = max_pairwise_disjoint(table).size;
    std::size_t best = 0;
    while (2 * (best + 1) <= r.m && has_disjoint_biclique(table, best + 1)) ++best;
    r.biclique_t = best;
  }
  if (r.n >= 2) {
    BoundInputs in{r.n, t, std::nullopt, 0};
    std::vector<std::size_t> degs;
    for (const auto& [v, deg] : d.degrees()) degs.push_back(deg);
    in.degrees = degs;
    for (BoundFormula f : {BoundFormula::KST, BoundFormula::PTLog, BoundFormula::LemmaEq1,
                           BoundFormula::CorollaryEq2}) {
      r.bounds[to_string(f)] = bound_value(f, in, k);
    }
  }
  return r;
}

}  // namespace tgraph
