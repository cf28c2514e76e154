#pragma once

// Davenport-Schinzel sequences: validity, exhaustive maximum length, and
// the order-3 upper bound.

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "tgraph/error.hpp"

namespace tgraph {

/// Number of maximal runs of one symbol in the sequence restricted to {a, b}.
inline std::size_t alternation_length(const std::vector<int>& u, int a, int b) {
  std::size_t runs = 0;
  int last = 0;
  bool any = false;
  for (int x : u) {
    if (x != a && x != b) continue;
    if (!any || x != last) ++runs;
    last = x;
    any = true;
  }
  return runs;
}

/// No immediate repetition and no alternation a..b..a.. of length s + 2.
inline bool is_ds_sequence(const std::vector<int>& u, std::size_t s) {
  if (s < 1) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    if (u[i] == u[i + 1]) return false;
  }
  std::vector<int> symbols(u.begin(), u.end());
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    for (std::size_t j = i + 1; j < symbols.size(); ++j) {
      if (alternation_length(u, symbols[i], symbols[j]) >= s + 2) return false;
    }
  }
  return true;
}

namespace detail {

struct DsSearch {
  std::size_t n, s;
  std::vector<int> seq;
  // runs[a][b]: alternation length of a/b so far; last[a][b]: last of the two seen.
  std::vector<std::vector<std::size_t>> runs;
  std::vector<std::vector<int>> last;
  std::size_t best = 0;

  void extend(int used) {
    best = std::max(best, seq.size());
    // A new symbol may only be the next unused one (first-occurrence order).
    int limit = std::min<int>(used + 1, static_cast<int>(n));
    for (int x = 0; x < limit; ++x) {
      if (!seq.empty() && seq.back() == x) continue;
      bool ok = true;
      for (int y = 0; y < static_cast<int>(n) && ok; ++y) {
        if (y == x) continue;
        if (last[x][y] != x) {
          if (runs[x][y] + 1 >= s + 2) ok = false;
        }
      }
      if (!ok) continue;
      std::vector<std::pair<std::size_t, int>> saved;
      for (int y = 0; y < static_cast<int>(n); ++y) {
        if (y == x) continue;
        saved.emplace_back(runs[x][y], last[x][y]);
        if (last[x][y] != x) {
          ++runs[x][y];
          runs[y][x] = runs[x][y];
          last[x][y] = last[y][x] = x;
        }
      }
      seq.push_back(x);
      extend(std::max(used, x + 1));
      seq.pop_back();
      std::size_t k = 0;
      for (int y = 0; y < static_cast<int>(n); ++y) {
        if (y == x) continue;
        runs[x][y] = runs[y][x] = saved[k].first;
        last[x][y] = last[y][x] = saved[k].second;
        ++k;
      }
    }
  }
};

}  // namespace detail

inline constexpr std::size_t kDsBruteMaxN = 4;
inline constexpr std::size_t kDsBruteMaxS = 4;

/// lambda_s(n) by exhaustive depth-first extension.
inline std::size_t lambda_brute(std::size_t n, std::size_t s) {
  if (n < 1 || s < 1) throw Error(ErrorCode::InvalidArgument, "lambda_brute needs n, s >= 1");
  if (n > kDsBruteMaxN || s > kDsBruteMaxS) throw Error(ErrorCode::TooLarge, "lambda_brute supports n, s <= 4");
  detail::DsSearch search{n, s, {}, {}, {}, 0};
  search.runs.assign(n, std::vector<std::size_t>(n, 0));
  search.last.assign(n, std::vector<int>(n, -1));
  search.extend(0);
  return search.best;
}

/// 2n ln n + 3n, inflated by a relative 1e-9 so integer counts compare safely.
inline double lambda3_upper(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "lambda3_upper needs n >= 1");
  double x = static_cast<double>(n);
  return (2.0 * x * std::log(x) + 3.0 * x) * (1.0 + 1e-9);
}

}  // namespace tgraph
