// tgraph: command-line access to drawings, transforms, arrangements and the
// experiment suites. Exit status: 0 all checks passed, 1 a check failed,
// 2 usage or data error.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tgraph/experiment.hpp"

using namespace tgraph;

namespace {

struct Options {
  std::string in;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t t = 1;
  std::size_t delta = 0;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file(o.out, text);
  }
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

Drawing load(const Options& o) {
  if (o.in.empty()) throw Error(ErrorCode::BadParams, "--in is required");
  return parse_drawing(read_file(o.in));
}

Json point_json(const Point& p) { return detail::point_json(p); }

Json validation_json(const ValidationReport& report) {
  Json out = Json::array();
  for (const Violation& v : report) {
    Json x{{"kind", to_string(v.kind)}, {"edges", v.edges}, {"vertices", v.vertices}};
    if (v.location) x["location"] = point_json(*v.location);
    out.push_back(x);
  }
  return out;
}

int cmd_validate(const Options& o) {
  ValidationReport report = validate(load(o));
  emit_json(o, {{"valid", report.empty()}, {"violations", validation_json(report)}});
  return report.empty() ? 0 : 1;
}

int cmd_classify(const Options& o) {
  Drawing d = load(o);
  if (!is_valid(d)) throw Error(ErrorCode::InvalidArgument, "drawing does not validate");
  PairTable t = pair_table(d);
  DrawingFlags flags = classify_drawing(t);
  if (o.format == "csv") {
    std::string csv = "e,f,relation,crossings,touches,shared_endpoints\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        const PairClass& pc = t.at(i, j);
        csv += std::to_string(t.ids[i]) + "," + std::to_string(t.ids[j]) + "," + to_string(pc.relation) + "," +
               std::to_string(pc.crossings) + "," + std::to_string(pc.touches) + "," +
               std::to_string(pc.shared_endpoints) + "\n";
      }
    }
    emit(o, csv);
    return 0;
  }
  Json pairs = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const PairClass& pc = t.at(i, j);
      pairs.push_back({{"e", t.ids[i]}, {"f", t.ids[j]}, {"relation", to_string(pc.relation)},
                       {"crossings", pc.crossings}, {"touches", pc.touches}, {"shared_endpoints", pc.shared_endpoints}});
    }
  }
  emit_json(o, {{"simple", is_simple(t)},
                {"thrackle", flags.is_thrackle},
                {"tangled_thrackle", flags.is_tangled_thrackle},
                {"pairs", pairs}});
  return 0;
}

int cmd_check(const Options& o) {
  Drawing d = load(o);
  if (!is_valid(d)) throw Error(ErrorCode::InvalidArgument, "drawing does not validate");
  DensityReport r = density_report(d, o.t);
  Json j{{"n", r.n}, {"m", r.m}, {"ratio", r.ratio}, {"t", o.t}};
  j["max_disjoint"] = r.max_disjoint ? Json(*r.max_disjoint) : Json(nullptr);
  j["biclique_t"] = r.biclique_t ? Json(*r.biclique_t) : Json(nullptr);
  j["bounds"] = r.bounds;
  bool has = false;
  if (d.edge_count() <= kExactEdgeCap) {
    auto b = find_disjoint_biclique(d, o.t);
    has = b.has_value();
    if (b) j["witness"] = {{"left", b->left}, {"right", b->right}};
  }
  j["has_disjoint_biclique"] = has;
  emit_json(o, j);
  return 0;
}

Json redrawn_json(const RedrawnDrawing& r) {
  Drawing as_drawing{r.vertices, r.edges, {}};
  Json j = drawing_to_json(as_drawing);
  j["line_y"] = format_scalar(r.line_y);
  j["pairs"] = Json::array();
  for (const auto& [key, c] : r.pairs) {
    j["pairs"].push_back({{"e", key.first}, {"f", key.second}, {"inside", c.inside}, {"outside", c.outside},
                          {"independent", c.independent}, {"parity", c.total() % 2 ? "odd" : "even"}});
  }
  return j;
}

int cmd_transform(const std::string& which, const Options& o) {
  Drawing d = load(o);
  if (!is_valid(d)) throw Error(ErrorCode::InvalidArgument, "drawing does not validate");
  if (which == "split") {
    if (o.delta == 0) throw Error(ErrorCode::BadParams, "split needs --delta");
    SplitResult r = split_vertices(d, o.delta);
    Json j = drawing_to_json(r.drawing);
    j["certificate"]["vertex_map"] = Json::array();
    for (const auto& [v, copies] : r.certificate.vertex_map) {
      j["certificate"]["vertex_map"].push_back({{"vertex", v}, {"copies", copies}});
    }
    j["certificate"]["edge_map"] = Json::array();
    for (const auto& [e, f] : r.certificate.edge_map) j["certificate"]["edge_map"].push_back({e, f});
    emit_json(o, j);
    return 0;
  }
  if (which == "strip") {
    RedrawnDrawing r = strip_redraw(d);
    Json j = redrawn_json(r);
    auto bad = strip_parity_violations(d, r);
    j["parity_violations"] = bad.size();
    emit_json(o, j);
    return bad.empty() ? 0 : 1;
  }
  if (which == "perturb") {
    emit(o, serialize_drawing(perturb_tangencies(d)));
    return 0;
  }
  throw Error(ErrorCode::BadParams, "unknown transform '" + which + "'");
}

int cmd_bisect(const Options& o) {
  Drawing d = load(o);
  LabeledGraph lg = abstract_graph(d);
  BisectionResult r = bisect(lg.graph, o.seed);
  std::vector<VertexId> part1, part2;
  for (std::size_t v : r.part1) part1.push_back(lg.labels[v]);
  for (std::size_t v : r.part2) part2.push_back(lg.labels[v]);
  emit_json(o, {{"width", r.width},
                {"mode", r.mode == BisectionMode::Exact ? "exact" : "heuristic"},
                {"part1", part1},
                {"part2", part2}});
  return 0;
}

int cmd_arrange(const Options& o, bool refine) {
  if (o.in.empty()) throw Error(ErrorCode::BadParams, "--in is required");
  ArcFamilies f = parse_families(read_file(o.in));
  std::vector<Polyline> all = f.l1;
  all.insert(all.end(), f.l2.begin(), f.l2.end());
  Arrangement a = build_arrangement(all);
  FaceIncidence best = max_face_incidence(a);
  Json j{{"arcs", all.size()},
         {"V", a.vertices.size()},
         {"E", a.edges.size()},
         {"F", a.faces.size()},
         {"C", a.components},
         {"euler", a.euler_lhs() == 1 + static_cast<long>(a.components)},
         {"max_face", best.face},
         {"max_incidence", best.count},
         {"lambda3_upper", lambda3_upper(2 * all.size())}};
  int status = static_cast<double>(best.count) <= lambda3_upper(2 * all.size()) ? 0 : 1;
  if (!f.l1.empty() && !f.l2.empty()) {
    TangencyGraph h = tangency_graph(f.l1, f.l2);
    j["tangency_graph"] = {{"vertices", h.vertex_count()}, {"edges", h.edge_count()},
                           {"planar_bound", h.satisfies_planar_bound()}};
    if (!h.satisfies_planar_bound()) status = 1;
  }
  if (refine) {
    Refinement r = refine_to_single_face(f.l1, f.l2);
    j["refinement"] = {{"l1", r.l1}, {"l2", r.l2}, {"face1", r.face1}, {"face2", r.face2}};
    if (r.warning) j["refinement"]["warning"] = *r.warning;
  }
  emit_json(o, j);
  return status;
}

int cmd_ds(const Options& o, std::size_t n, std::size_t s, const std::string& seq) {
  Json j{{"s", s}};
  if (!seq.empty()) {
    std::vector<int> u;
    std::stringstream in(seq);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        u.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "bad symbol '" + item + "'");
      }
    }
    j["sequence"] = u;
    j["valid"] = is_ds_sequence(u, s);
  }
  if (n > 0) {
    j["n"] = n;
    j["lambda"] = lambda_brute(n, s);
    if (s == 3) j["lambda3_upper"] = lambda3_upper(n);
  }
  emit_json(o, j);
  return 0;
}

int cmd_decompose(const Options& o, const std::string& n0) {
  Drawing d = load(o);
  if (!is_valid(d)) throw Error(ErrorCode::InvalidArgument, "drawing does not validate");
  BoundConstants k;
  k.n0 = parse_scalar(n0);
  DecompositionTree tree = recursive_decomposition(d, o.t, k, o.seed);
  Json nodes = Json::array();
  for (const DecompositionNode& node : tree.nodes) {
    nodes.push_back({{"n", node.n},         {"m", node.m},           {"leaf", node.leaf},
                     {"delta", node.delta}, {"n_split", node.n_split}, {"cut", node.cut},
                     {"mode", node.mode == BisectionMode::Exact ? "exact" : "heuristic"},
                     {"bound", node.bound}, {"children", node.children}, {"depth", node.depth}});
  }
  emit_json(o, {{"alpha", alpha(o.t)},
                {"conserves", tree.conserves()},
                {"balanced", tree.balanced()},
                {"leaf_edges", tree.leaf_edges()},
                {"total_cut", tree.total_cut()},
                {"depth", tree.depth()},
                {"nodes", nodes}});
  return tree.conserves() && tree.balanced() ? 0 : 1;
}

int cmd_gen(const std::string& family, const Options& o, std::size_t n, std::size_t m) {
  if (family == "tangency-fixture") {
    emit(o, serialize_families(tangency_fixture(n)));
    return 0;
  }
  Drawing d;
  if (family == "star-thrackle") {
    d = star_thrackle(n);
  } else if (family == "plane-matching") {
    d = plane_matching(n);
  } else if (family == "two-cluster") {
    d = two_cluster(o.t, o.seed);
  } else if (family == "random-bipartite") {
    if (n < 4) throw Error(ErrorCode::BadParams, "random-bipartite needs n >= 4");
    d = random_bipartite({n / 2, n - n / 2, m == 0 ? n : m, 2, 200}, o.seed);
  } else if (family == "tangled") {
    d = n > 5 ? tangled_fixture_large() : tangled_fixture();
  } else {
    throw Error(ErrorCode::BadParams, "unknown family '" + family + "'");
  }
  if (!is_valid(d)) throw Error(ErrorCode::InvalidArgument, "generated drawing does not validate");
  emit(o, serialize_drawing(d));
  return 0;
}

int cmd_run(const std::string& suite, const Options& o, std::size_t instances) {
  std::vector<std::string> suites = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  ExperimentConfig c{instances, o.seed, o.t};
  std::string text;
  Json all = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    ExperimentReport r = run_experiment(suites[i], c);
    ok = ok && r.ok();
    if (o.format == "csv") {
      text += report_to_csv(r);
    } else {
      all.push_back(report_to_json(r));
    }
    std::cerr << suites[i] << ": " << r.passed() << "/" << r.rows.size() << " passed\n";
  }
  if (o.format != "csv") text = (all.size() == 1 ? all[0] : all).dump(2) + "\n";
  emit(o, text);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological graph drawings: validation, transforms, arrangements, experiments"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool input) {
    if (input) sub->add_option("--in", o.in, "input document");
    sub->add_option("--out", o.out, "output file (default: stdout)");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--t", o.t, "biclique size t")->check(CLI::PositiveNumber);
    sub->add_option("--delta", o.delta, "degree bound for splitting");
  };
  std::string which, family, suite = "all", seq, n0 = "1";
  std::size_t n = 0, m = 0, s = 3, instances = 0;
  bool refine = false;

  auto* validate_cmd = app.add_subcommand("validate", "check the drawing conditions");
  common(validate_cmd, true);
  auto* classify_cmd = app.add_subcommand("classify", "classify every pair of edges");
  common(classify_cmd, true);
  auto* check_cmd = app.add_subcommand("check", "density report and disjoint t x t biclique search");
  common(check_cmd, true);
  auto* transform_cmd = app.add_subcommand("transform", "split, strip or perturb a drawing");
  common(transform_cmd, true);
  transform_cmd->add_option("kind", which, "split | strip | perturb")->required();
  auto* bisect_cmd = app.add_subcommand("bisect", "bisection width of the underlying graph");
  common(bisect_cmd, true);
  auto* arrange_cmd = app.add_subcommand("arrange", "arrangement and tangency graph of arc families");
  common(arrange_cmd, true);
  arrange_cmd->add_flag("--refine", refine, "also refine to single-face subfamilies");
  auto* ds_cmd = app.add_subcommand("ds", "Davenport-Schinzel sequences");
  common(ds_cmd, false);
  ds_cmd->add_option("--n", n, "alphabet size for lambda_brute");
  ds_cmd->add_option("--s", s, "order")->check(CLI::PositiveNumber);
  ds_cmd->add_option("--seq", seq, "comma-separated sequence to test");
  auto* decompose_cmd = app.add_subcommand("decompose", "recursive split-and-bisect decomposition");
  common(decompose_cmd, true);
  decompose_cmd->add_option("--n0", n0, "leaf threshold");
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  common(gen_cmd, false);
  gen_cmd->add_option("family", family,
                      "star-thrackle | plane-matching | two-cluster | random-bipartite | tangled | tangency-fixture")
      ->required();
  gen_cmd->add_option("--n", n, "size parameter (n, k)");
  gen_cmd->add_option("--m", m, "edge count for random-bipartite");
  auto* run_cmd = app.add_subcommand("run", "run experiment suites");
  common(run_cmd, false);
  run_cmd->add_option("suite", suite, "suite name or 'all'");
  run_cmd->add_option("--instances", instances, "instances per seeded suite (0: default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(o);
    if (*classify_cmd) return cmd_classify(o);
    if (*check_cmd) return cmd_check(o);
    if (*transform_cmd) return cmd_transform(which, o);
    if (*bisect_cmd) return cmd_bisect(o);
    if (*arrange_cmd) return cmd_arrange(o, refine);
    if (*ds_cmd) return cmd_ds(o, n, s, seq);
    if (*decompose_cmd) return cmd_decompose(o, n0);
    if (*gen_cmd) return cmd_gen(family, o, n, m);
    if (*run_cmd) return cmd_run(suite, o, instances);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
