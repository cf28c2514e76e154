#pragma once

// Strip redrawing of a bipartite drawing: one class above a horizontal strip,
// the other below, the upper half mirrored, and each passage through the
// strip replaced by a straight segment. Independent pairs that crossed end
// up crossing an even number of times.

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "tgraph/drawing.hpp"

namespace tgraph {

/// C(k1+k2, 2) - C(k1, 2) - C(k2, 2); checked against k1*k2.
inline std::size_t strip_crossing_formula(std::size_t k1, std::size_t k2) {
  auto choose2 = [](std::size_t k) { return k * (k - (k > 0)) / 2; };
  std::size_t value = choose2(k1 + k2) - choose2(k1) - choose2(k2);
  if (value != k1 * k2) throw Error(ErrorCode::InvalidArgument, "strip crossing identity failed");
  return value;
}

struct StripPairCount {
  std::size_t inside = 0;   // crossings in 0 < y < 1
  std::size_t outside = 0;  // crossings above or below the strip
  bool independent = false;

  std::size_t total() const { return inside + outside; }
};

struct RedrawnDrawing {
  std::map<VertexId, Point> vertices;
  std::map<EdgeId, Edge> edges;  // arcs may cross themselves inside the strip
  std::map<EdgeId, std::size_t> strip_multiplicity;
  std::map<std::pair<EdgeId, EdgeId>, StripPairCount> pairs;  // key (e, f), e < f
  Scalar line_y;  // the separating line of the input that became the strip
};

namespace detail {

// One passage of an edge through the separating line.
struct LineCrossing {
  Scalar x;
  bool upward;  // lower class side to upper class side, along the arc
};

// Pieces of an arc away from the strip, in output coordinates.
struct StripPieces {
  std::vector<Polyline> outside;
  std::vector<Segment> inside;
};

inline Point to_lower(const Point& p, const Scalar& h) { return {p.x, p.y - h}; }
inline Point to_upper(const Point& p, const Scalar& h) { return {-p.x, p.y - h + 1}; }

/// Splits `arc` at the line y = h and maps each part to its output half.
/// `eps` gives the strip offset per crossing x. The line avoids every bend.
inline StripPieces strip_pieces(const Polyline& arc, const Scalar& h, const std::map<Scalar, Scalar>& eps,
                                Polyline& joined, std::vector<LineCrossing>& crossings) {
  StripPieces out;
  auto map_point = [&](const Point& p) { return p.y > h ? to_upper(p, h) : to_lower(p, h); };
  Polyline current{map_point(arc.front())};
  joined = current;
  for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
    const Point& a = arc[i];
    const Point& b = arc[i + 1];
    if ((a.y > h) != (b.y > h)) {
      Scalar t = (h - a.y) / (b.y - a.y);
      Scalar x = a.x + t * (b.x - a.x);
      bool upward = b.y > h;
      Point low{x, Scalar(0)};
      Point top_end{-x, Scalar(1)};
      Point top_start{-x + eps.at(x), Scalar(1)};
      if (upward) {
        current.push_back(low);
        out.outside.push_back(current);
        out.inside.push_back({low, top_start});
        current = {top_start, top_end};
        joined.insert(joined.end(), {low, top_start, top_end});
      } else {
        current.push_back(top_end);
        current.push_back(top_start);
        out.outside.push_back(current);
        out.inside.push_back({top_start, low});
        current = {low};
        joined.insert(joined.end(), {top_end, top_start, low});
      }
      crossings.push_back({x, upward});
    }
    current.push_back(map_point(b));
    joined.push_back(map_point(b));
  }
  out.outside.push_back(current);
  return out;
}

}  // namespace detail

/// Redraws a y-separated bipartite drawing around the strip 0 <= y <= 1.
/// Class A must lie above class B (or the reverse; the drawing is mirrored
/// vertically first in that case).
inline RedrawnDrawing strip_redraw(const Drawing& input) {
  if (input.bipartition.size() != input.vertices.size()) {
    throw Error(ErrorCode::NotBipartite, "every vertex needs a bipartition label");
  }
  for (const auto& [id, e] : input.edges) {
    if (input.bipartition.at(e.tail) == input.bipartition.at(e.head)) {
      throw Error(ErrorCode::NotBipartite, "edge " + std::to_string(id) + " joins two vertices of one class");
    }
  }
  Drawing d = input;
  auto class_range = [&](Side s) {
    std::optional<Scalar> lo, hi;
    for (const auto& [v, p] : d.vertices) {
      if (d.bipartition.at(v) != s) continue;
      if (!lo || p.y < *lo) lo = p.y;
      if (!hi || p.y > *hi) hi = p.y;
    }
    return std::make_pair(lo, hi);
  };
  {
    auto [a_lo, a_hi] = class_range(Side::A);
    auto [b_lo, b_hi] = class_range(Side::B);
    if (a_lo && b_hi && !(*a_lo > *b_hi)) {
      if (*a_hi < *b_lo) {
        for (auto& [v, p] : d.vertices) p.y = -p.y;
        for (auto& [id, e] : d.edges) {
          for (Point& p : e.arc) p.y = -p.y;
        }
      } else {
        throw Error(ErrorCode::NotSeparable, "bipartition classes are not separated by a horizontal line");
      }
    }
  }
  auto [a_lo, a_hi] = class_range(Side::A);
  auto [b_lo, b_hi] = class_range(Side::B);

  RedrawnDrawing out;
  PairTable table = pair_table(d);
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = i + 1; j < table.size(); ++j) {
      if (table.at(i, j).touches > 0) {
        throw Error(ErrorCode::NotTopological, "strip redrawing needs proper crossings only, edges " +
                                                   std::to_string(table.ids[i]) + " and " +
                                                   std::to_string(table.ids[j]) + " touch");
      }
    }
  }

  // Separating line: avoid bends and common points of arcs.
  Scalar lo = b_hi ? *b_hi : (a_lo ? *a_lo - 2 : Scalar(-1));
  Scalar hi = a_lo ? *a_lo : lo + 2;
  std::set<Scalar> blocked{lo, hi};
  for (const auto& [id, e] : d.edges) {
    for (const Point& p : e.arc) {
      if (p.y > lo && p.y < hi) blocked.insert(p.y);
    }
  }
  for (const auto& [i, e] : d.edges) {
    for (const auto& [j, f] : d.edges) {
      if (i >= j) continue;
      for (const IntersectionEvent& ev : arc_intersections(e.arc, f.arc)) {
        if (ev.location.y > lo && ev.location.y < hi) blocked.insert(ev.location.y);
      }
    }
  }
  Scalar h;
  {
    Scalar widest = -1;
    for (auto it = blocked.begin(); std::next(it) != blocked.end(); ++it) {
      Scalar gap = *std::next(it) - *it;
      if (gap > widest) {
        widest = gap;
        h = (*it + *std::next(it)) / 2;
      }
    }
  }
  out.line_y = h;

  // Crossing x-coordinates of the line, all distinct since the line avoids
  // common points of arcs and each arc is simple.
  std::set<Scalar> xs;
  for (const auto& [id, e] : d.edges) {
    for (std::size_t i = 0; i + 1 < e.arc.size(); ++i) {
      const Point& a = e.arc[i];
      const Point& b = e.arc[i + 1];
      if ((a.y > h) != (b.y > h)) xs.insert(a.x + (h - a.y) / (b.y - a.y) * (b.x - a.x));
    }
  }
  Scalar min_gap = 1;
  {
    std::vector<Scalar> sorted(xs.begin(), xs.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
      Scalar g = sorted[i + 1] - sorted[i];
      if (g < min_gap) min_gap = g;
    }
  }

  Scalar delta = min_gap / 4;
  for (int attempt = 0; attempt < 16; ++attempt, delta /= 2) {
    // Distinct, generic offsets in (-delta, delta).
    std::map<Scalar, Scalar> eps;
    std::size_t k = 0;
    for (const Scalar& x : xs) {
      ++k;
      Scalar frac = make_scalar(static_cast<long>(2 * k + 1 + attempt), static_cast<long>(2 * xs.size() + 7 + 3 * attempt));
      eps[x] = delta * frac * (k % 2 ? 1 : -1);
    }

    out.vertices.clear();
    out.edges.clear();
    out.strip_multiplicity.clear();
    out.pairs.clear();
    for (const auto& [v, p] : d.vertices) {
      out.vertices[v] = p.y > h ? detail::to_upper(p, h) : detail::to_lower(p, h);
    }
    std::map<EdgeId, detail::StripPieces> pieces;
    for (const auto& [id, e] : d.edges) {
      Polyline joined;
      std::vector<detail::LineCrossing> crossings;
      pieces[id] = detail::strip_pieces(e.arc, h, eps, joined, crossings);
      out.edges[id] = Edge{e.tail, e.head, joined};
      out.strip_multiplicity[id] = crossings.size();
    }

    // No three strip segments may pass through a common point.
    bool generic = true;
    std::map<Point, int> strip_points;
    std::vector<std::pair<EdgeId, Segment>> all_inside;
    for (const auto& [id, pc] : pieces) {
      for (const Segment& s : pc.inside) all_inside.emplace_back(id, s);
    }
    std::map<std::pair<EdgeId, EdgeId>, std::size_t> inside_count;
    for (std::size_t i = 0; i < all_inside.size() && generic; ++i) {
      for (std::size_t j = i + 1; j < all_inside.size(); ++j) {
        SegmentHit hit = segment_intersection(all_inside[i].second, all_inside[j].second);
        if (hit.kind == SegmentHit::Kind::Empty) continue;
        if (hit.kind == SegmentHit::Kind::Overlap || hit.point.y <= 0 || hit.point.y >= 1 ||
            ++strip_points[hit.point] > 1) {
          generic = false;
          break;
        }
        EdgeId e = all_inside[i].first, f = all_inside[j].first;
        if (e != f) ++inside_count[std::minmax(e, f)];
      }
    }
    if (!generic) continue;

    for (const auto& [e, pe] : pieces) {
      for (const auto& [f, pf] : pieces) {
        if (e >= f) continue;
        StripPairCount c;
        c.independent = !d.share_vertex(e, f);
        c.inside = inside_count[{e, f}];
        for (const Polyline& a : pe.outside) {
          for (const Polyline& b : pf.outside) {
            for (const IntersectionEvent& ev : arc_intersections(a, b)) {
              if (ev.kind == ContactKind::ProperCrossing) ++c.outside;
            }
          }
        }
        out.pairs[{e, f}] = c;
      }
    }
    return out;
  }
  throw Error(ErrorCode::DegenerateAfterPerturbation, "strip segments stay concurrent after perturbation");
}

/// Independent pairs crossing an odd number of times in the redrawing.
inline std::size_t odd_crossing_pairs(const RedrawnDrawing& r) {
  std::size_t count = 0;
  for (const auto& [key, c] : r.pairs) count += c.independent && c.total() % 2 == 1;
  return count;
}

/// Independent pairs that cross in `input` but an odd number of times in the
/// redrawing. Always empty for a correct redrawing.
inline std::vector<std::pair<EdgeId, EdgeId>> strip_parity_violations(const Drawing& input, const RedrawnDrawing& r) {
  std::vector<std::pair<EdgeId, EdgeId>> bad;
  for (const auto& [key, c] : r.pairs) {
    if (!c.independent) continue;
    if (classify_pair(input, key.first, key.second).crossings > 0 && c.total() % 2 == 1) bad.push_back(key);
  }
  return bad;
}

}  // namespace tgraph
