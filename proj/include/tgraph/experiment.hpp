#pragma once

// Experiment suites over seeded instances, with JSON and CSV reports.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "tgraph/bisection.hpp"
#include "tgraph/extremal.hpp"
#include "tgraph/fixtures.hpp"
#include "tgraph/generate.hpp"
#include "tgraph/io.hpp"
#include "tgraph/tangency.hpp"
#include "tgraph/transforms.hpp"

namespace tgraph {

struct ReportRow {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  Json metrics = Json::object();
  bool pass = true;
};

struct ExperimentReport {
  std::string suite;
  std::vector<std::string> metric_names;
  std::vector<ReportRow> rows;
  double seconds = 0;

  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; }));
  }
  bool ok() const { return !rows.empty() && passed() == rows.size(); }
};

struct ExperimentConfig {
  std::size_t instances = 0;  // 0: the suite default
  std::uint64_t first_seed = 0;
  std::size_t t = 1;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"parity", "formula",  "splitting", "ds",        "facesize",
                                              "euler",  "tangency", "tangled",   "bisection", "decomposition"};
  return names;
}

// lambda_s(n) for 1 <= n, s <= 4, rows n, columns s, as printed by lambda_brute.
inline constexpr std::size_t kLambdaTable[4][4] = {{1, 1, 1, 1}, {2, 3, 4, 5}, {3, 5, 8, 10}, {4, 7, 12, 16}};

namespace detail {

inline std::size_t instances_or(const ExperimentConfig& c, std::size_t fallback) {
  return c.instances == 0 ? fallback : c.instances;
}

inline Drawing parity_instance(std::uint64_t seed) {
  Rng rng(seed ^ 0x5eedULL);
  std::size_t n = 4 + rng.below(9);
  std::size_t n_a = 2 + rng.below(n - 3);
  RandomBipartiteParams p{n_a, n - n_a, 0, 2, 200};
  p.m = std::min(p.n_a * p.n_b, n / 2 + rng.below(n));
  return random_bipartite(p, seed);
}

inline Drawing splitting_instance(std::uint64_t seed, std::size_t delta) {
  Rng rng(seed ^ 0x5b117ULL);
  std::size_t n_a = 1 + rng.below(2);
  std::size_t n_b = 5 + rng.below(6);
  std::size_t cap = std::min<std::size_t>({20, n_a * n_b, delta * (n_a + n_b) / 2});
  RandomBipartiteParams p{n_a, n_b, n_a == 1 ? cap : cap - rng.below(cap / 2 + 1), n_a == 1 ? 0u : 1u, 400};
  return random_bipartite(p, seed);
}

inline Drawing decomposition_instance(std::uint64_t seed) {
  Rng rng(seed ^ 0xdec0ULL);
  std::size_t n = 20 + rng.below(41);
  std::size_t n_a = n / 2;
  RandomBipartiteParams p{n_a, n - n_a, n + rng.below(n / 2), 1, 60};
  return random_bipartite(p, seed);
}

inline AbstractGraph random_abstract_graph(Rng& rng, std::size_t n) {
  AbstractGraph g{n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.coin(3, 10)) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

inline ExperimentReport parity(const ExperimentConfig& c) {
  ExperimentReport r{"parity", {"valid", "simple", "crossing_pairs", "odd_pairs", "violations", "odd_not_disjoint"}, {}, 0};
  for (std::size_t i = 0; i < instances_or(c, 100); ++i) {
    std::uint64_t seed = c.first_seed + i;
    Drawing d = parity_instance(seed);
    ReportRow row{seed, d.vertex_count(), d.edge_count()};
    bool valid = is_valid(d), simple = is_simple(d);
    RedrawnDrawing red = strip_redraw(d);
    std::size_t crossing = 0, odd_bad = 0;
    for (const auto& [key, pc] : red.pairs) {
      Relation rel = classify_pair(d, key.first, key.second).relation;
      crossing += pc.independent && rel == Relation::Crossing;
      odd_bad += pc.independent && pc.total() % 2 == 1 && rel != Relation::Disjoint;
    }
    std::size_t violations = strip_parity_violations(d, red).size();
    row.metrics = {{"valid", valid},       {"simple", simple},
                   {"crossing_pairs", crossing}, {"odd_pairs", odd_crossing_pairs(red)},
                   {"violations", violations},   {"odd_not_disjoint", odd_bad}};
    row.pass = valid && simple && violations == 0 && odd_bad == 0;
    r.rows.push_back(row);
  }
  return r;
}

inline ExperimentReport formula(const ExperimentConfig&) {
  ExperimentReport r{"formula", {"k_max", "checked", "mismatches"}, {}, 0};
  std::size_t checked = 0, bad = 0;
  for (std::size_t a = 0; a <= 50; ++a) {
    for (std::size_t b = 0; b <= 50; ++b) {
      ++checked;
      try {
        bad += strip_crossing_formula(a, b) != a * b;
      } catch (const Error&) {
        ++bad;
      }
    }
  }
  ReportRow row;
  row.metrics = {{"k_max", 50}, {"checked", checked}, {"mismatches", bad}};
  row.pass = bad == 0;
  r.rows.push_back(row);
  return r;
}

inline ExperimentReport splitting(const ExperimentConfig& c) {
  ExperimentReport r{"splitting", {"delta", "max_degree_in", "n_out", "n_bound", "max_degree_out", "m_out", "simple",
                                   "adjacency_mismatches"}, {}, 0};
  for (std::size_t i = 0; i < instances_or(c, 60); ++i) {
    std::uint64_t seed = c.first_seed + i;
    std::size_t delta = 2 + seed % 3;
    Drawing d = splitting_instance(seed, delta);
    ReportRow row{seed, d.vertex_count(), d.edge_count()};
    SplitResult s = split_vertices(d, delta);
    PairTable before = pair_table(d), after = pair_table(s.drawing);
    std::size_t mismatches = 0;
    for (std::size_t a = 0; a < before.size(); ++a) {
      for (std::size_t b = a + 1; b < before.size(); ++b) {
        std::size_t a2 = after.index_of(s.certificate.edge_map.at(before.ids[a]));
        std::size_t b2 = after.index_of(s.certificate.edge_map.at(before.ids[b]));
        bool in = before.at(a, b).relation != Relation::Disjoint;
        bool out = after.at(a2, b2).relation != Relation::Disjoint;
        mismatches += in != out;
      }
    }
    double bound = static_cast<double>(d.vertex_count()) + 2.0 * static_cast<double>(d.edge_count()) / delta;
    bool simple = is_simple(after) && is_valid(s.drawing);
    row.metrics = {{"delta", delta},
                   {"max_degree_in", d.max_degree()},
                   {"n_out", s.drawing.vertex_count()},
                   {"n_bound", bound},
                   {"max_degree_out", s.drawing.max_degree()},
                   {"m_out", s.drawing.edge_count()},
                   {"simple", simple},
                   {"adjacency_mismatches", mismatches}};
    row.pass = s.drawing.max_degree() <= delta && static_cast<double>(s.drawing.vertex_count()) <= bound &&
               s.drawing.edge_count() == d.edge_count() && simple && mismatches == 0;
    r.rows.push_back(row);
  }
  return r;
}

inline ExperimentReport ds(const ExperimentConfig&) {
  ExperimentReport r{"ds", {"s", "lambda", "table", "upper"}, {}, 0};
  for (std::size_t n = 1; n <= kDsBruteMaxN; ++n) {
    for (std::size_t s = 1; s <= kDsBruteMaxS; ++s) {
      ReportRow row{0, n, 0};
      std::size_t lambda = lambda_brute(n, s);
      std::size_t table = kLambdaTable[n - 1][s - 1];
      row.metrics = {{"s", s}, {"lambda", lambda}, {"table", table}};
      row.pass = lambda == table;
      if (s == 3) {
        row.metrics["upper"] = lambda3_upper(n);
        row.pass = row.pass && static_cast<double>(lambda) <= lambda3_upper(n);
      } else {
        row.metrics["upper"] = nullptr;
      }
      r.rows.push_back(row);
    }
  }
  return r;
}

inline ExperimentReport facesize(const ExperimentConfig& c) {
  ExperimentReport r{"facesize", {"V", "E", "F", "C", "max_incidence", "bound"}, {}, 0};
  for (std::size_t i = 0; i < instances_or(c, 100); ++i) {
    std::uint64_t seed = c.first_seed + i;
    auto arcs = random_pseudo_segments(2 + seed % 11, seed);
    Arrangement a = build_arrangement(arcs);
    ReportRow row{seed, a.vertices.size(), arcs.size()};
    FaceIncidence best = max_face_incidence(a);
    double bound = lambda3_upper(2 * arcs.size());
    row.metrics = {{"V", a.vertices.size()}, {"E", a.edges.size()},       {"F", a.faces.size()},
                   {"C", a.components},      {"max_incidence", best.count}, {"bound", bound}};
    row.pass = a.euler_lhs() == 1 + static_cast<long>(a.components) && static_cast<double>(best.count) <= bound;
    r.rows.push_back(row);
  }
  return r;
}

inline ExperimentReport euler(const ExperimentConfig&) {
  ExperimentReport r{"euler", {"k", "ratio", "contradiction"}, {}, 0};
  for (std::size_t k : {1u, 10u, 200u}) {
    EulerDensity e = euler_density_check(k);
    ReportRow row;
    row.metrics = {{"k", k}, {"ratio", e.ratio}, {"contradiction", e.contradiction}};
    if (k == 200) row.pass = e.ratio > 3.3 && e.ratio < 3.4 && e.contradiction;
    if (k == 10) row.pass = !e.contradiction;
    if (k == 1) row.pass = !e.contradiction;
    r.rows.push_back(row);
  }
  return r;
}

inline ExperimentReport tangency(const ExperimentConfig&) {
  ExperimentReport r{"tangency", {"k", "H_vertices", "H_edges", "planar", "refined"}, {}, 0};
  for (std::size_t k = 1; k <= 4; ++k) {
    ArcFamilies f = tangency_fixture(k);
    TangencyGraph h = tangency_graph(f.l1, f.l2);
    ReportRow row{0, f.l1.size() + f.l2.size(), f.l1.size() * f.l2.size()};
    row.metrics = {{"k", k}, {"H_vertices", h.vertex_count()}, {"H_edges", h.edge_count()},
                   {"planar", h.satisfies_planar_bound()}, {"refined", nullptr}};
    row.pass = h.edge_count() == k * k && h.satisfies_planar_bound();
    if (k == 4) {
      Refinement ref = refine_to_single_face(f.l1, f.l2);
      bool good = ref.l1.size() == 1 && ref.l2.size() == 1;
      row.metrics["refined"] = Json::array({ref.l1.front(), ref.l2.front()});
      row.pass = row.pass && good;
    }
    r.rows.push_back(row);
  }
  return r;
}

inline ExperimentReport tangled(const ExperimentConfig&) {
  ExperimentReport r{"tangled", {"tangent_before", "tangent_to_disjoint", "other_changed", "simple", "biclique_t1"}, {}, 0};
  std::vector<Drawing> fixtures{tangled_fixture(), tangled_fixture_large()};
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const Drawing& d = fixtures[i];
    Drawing p = perturb_tangencies(d);
    PairTable before = pair_table(d), after = pair_table(p);
    std::size_t tangent = 0, converted = 0, changed = 0;
    std::vector<std::pair<std::size_t, std::size_t>> witnesses;
    for (std::size_t a = 0; a < before.size(); ++a) {
      for (std::size_t b = a + 1; b < before.size(); ++b) {
        if (before.at(a, b).relation == Relation::Tangent) {
          ++tangent;
          converted += after.at(a, b).relation == Relation::Disjoint;
          witnesses.emplace_back(a, b);
        } else {
          changed += !(after.at(a, b) == before.at(a, b));
        }
      }
    }
    // Each former tangent pair is itself a 1+1 disjoint biclique.
    bool biclique = has_disjoint_biclique(after, 1);
    for (auto [a, b] : witnesses) biclique = biclique && after.at(a, b).relation == Relation::Disjoint;
    bool simple = is_simple(after) && is_valid(p);
    ReportRow row{i, p.vertex_count(), p.edge_count()};
    row.metrics = {{"tangent_before", tangent}, {"tangent_to_disjoint", converted}, {"other_changed", changed},
                   {"simple", simple},          {"biclique_t1", biclique}};
    row.pass = p.vertex_count() == d.vertex_count() && p.edge_count() == d.edge_count() && tangent > 0 &&
               converted == tangent && changed == 0 && simple && biclique;
    r.rows.push_back(row);
  }
  return r;
}

inline ExperimentReport bisection(const ExperimentConfig& c) {
  ExperimentReport r{"bisection", {"exact", "heuristic_min", "expected"}, {}, 0};
  auto path = [](std::size_t n) {
    AbstractGraph g{n, {}};
    for (std::size_t i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
  };
  AbstractGraph p4 = path(4), c4 = path(4), k4{4, {}};
  c4.edges.emplace_back(3, 0);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) k4.edges.emplace_back(i, j);
  }
  std::vector<std::pair<AbstractGraph, std::size_t>> named{{p4, 1}, {c4, 2}, {k4, 4}};
  for (const auto& [g, expected] : named) {
    ReportRow row{0, g.n, g.edges.size()};
    std::size_t w = bisection_width_exact(g).width;
    row.metrics = {{"exact", w}, {"heuristic_min", nullptr}, {"expected", expected}};
    row.pass = w == expected;
    r.rows.push_back(row);
  }
  for (std::size_t i = 0; i < instances_or(c, 50); ++i) {
    std::uint64_t seed = c.first_seed + i;
    Rng rng(seed ^ 0xb15ecULL);
    AbstractGraph g = random_abstract_graph(rng, 4 + rng.below(11));
    std::size_t w = bisection_width_exact(g).width;
    std::size_t hmin = SIZE_MAX;
    bool pass = true;
    for (std::uint64_t s = 0; s <= 4; ++s) {
      std::size_t h = bisection_width_heuristic(g, s).width;
      hmin = std::min(hmin, h);
      pass = pass && h >= w;
    }
    ReportRow row{seed, g.n, g.edges.size()};
    row.metrics = {{"exact", w}, {"heuristic_min", hmin}, {"expected", nullptr}};
    row.pass = pass;
    r.rows.push_back(row);
  }
  return r;
}

inline ExperimentReport decomposition(const ExperimentConfig& c) {
  ExperimentReport r{"decomposition", {"nodes", "depth", "leaf_edges", "total_cut", "conserves", "balanced"}, {}, 0};
  BoundConstants k;
  k.n0 = 4;
  for (std::size_t i = 0; i < instances_or(c, 20); ++i) {
    std::uint64_t seed = c.first_seed + i;
    Drawing d = decomposition_instance(seed);
    DecompositionTree tree = recursive_decomposition(d, c.t, k, seed);
    ReportRow row{seed, d.vertex_count(), d.edge_count()};
    row.metrics = {{"nodes", tree.nodes.size()},       {"depth", tree.depth()},
                   {"leaf_edges", tree.leaf_edges()},   {"total_cut", tree.total_cut()},
                   {"conserves", tree.conserves()},     {"balanced", tree.balanced()}};
    row.pass = tree.conserves() && tree.balanced();
    r.rows.push_back(row);
  }
  return r;
}

}  // namespace detail

inline ExperimentReport run_experiment(const std::string& suite, const ExperimentConfig& config = {}) {
  static const std::map<std::string, std::function<ExperimentReport(const ExperimentConfig&)>> suites{
      {"parity", detail::parity},       {"formula", detail::formula},   {"splitting", detail::splitting},
      {"ds", detail::ds},               {"facesize", detail::facesize}, {"euler", detail::euler},
      {"tangency", detail::tangency},   {"tangled", detail::tangled},   {"bisection", detail::bisection},
      {"decomposition", detail::decomposition}};
  auto it = suites.find(suite);
  if (it == suites.end()) throw Error(ErrorCode::BadParams, "unknown suite '" + suite + "'");
  if (config.t < 1) throw Error(ErrorCode::BadParams, "t must be >= 1");
  auto start = std::chrono::steady_clock::now();
  ExperimentReport report = it->second(config);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline Json report_to_json(const ExperimentReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["rows"] = Json::array();
  for (const ReportRow& row : r.rows) {
    Json x{{"seed", row.seed}, {"n", row.n}, {"m", row.m}};
    for (const auto& [key, value] : row.metrics.items()) x[key] = value;
    x["pass"] = row.pass;
    j["rows"].push_back(x);
  }
  j["summary"] = {{"instances", r.rows.size()}, {"passed", r.passed()}, {"failed", r.rows.size() - r.passed()},
                  {"seconds", r.seconds}};
  return j;
}

inline std::string report_to_csv(const ExperimentReport& r) {
  std::string out = "suite,seed,n,m";
  for (const std::string& name : r.metric_names) out += "," + name;
  out += ",pass\n";
  for (const ReportRow& row : r.rows) {
    out += r.suite + "," + std::to_string(row.seed) + "," + std::to_string(row.n) + "," + std::to_string(row.m);
    for (const std::string& name : r.metric_names) {
      out += ",";
      if (!row.metrics.contains(name) || row.metrics[name].is_null()) continue;
      const Json& v = row.metrics[name];
      out += v.is_string() ? v.get<std::string>() : v.is_array() ? "\"" + v.dump() + "\"" : v.dump();
    }
    out += row.pass ? ",true\n" : ",false\n";
  }
  return out;
}

}  // namespace tgraph
