// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "tgraph/experiment.hpp"

using namespace tgraph;

namespace {

constexpr double kRatioTol = 1e-6;
constexpr double kAlphaTol = 1e-3;
constexpr double kAlpha1 = 1.0964;
constexpr double kAlpha2 = 1.0468;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string summary(const ExperimentReport& r) {
  return std::to_string(r.passed()) + "/" + std::to_string(r.rows.size()) + " " + r.suite + " rows";
}

std::size_t metric(const ReportRow& row, const char* key) { return row.metrics[key].get<std::size_t>(); }

Outcome parity() {
  ExperimentReport r = run_experiment("parity", {100, 0, 1});
  bool sizes = true;
  std::size_t crossing = 0, odd = 0;
  for (const ReportRow& row : r.rows) {
    sizes = sizes && row.n >= 4 && row.n <= 12;
    crossing += metric(row, "crossing_pairs");
    odd += metric(row, "odd_pairs");
  }
  return {r.ok() && r.rows.size() >= 100 && sizes && crossing > 0 && odd > 0,
          summary(r) + ", " + std::to_string(crossing) + " crossing pairs even, " + std::to_string(odd) +
              " odd pairs all disjoint in the input"};
}

Outcome formula() {
  ExperimentReport r = run_experiment("formula");
  return {r.ok() && metric(r.rows[0], "checked") == 51 * 51, std::to_string(metric(r.rows[0], "checked")) + " pairs"};
}

Outcome splitting() {
  ExperimentReport r = run_experiment("splitting", {60, 0, 1});
  std::size_t max_deg = 0, max_m = 0;
  std::set<std::size_t> deltas;
  for (const ReportRow& row : r.rows) {
    max_deg = std::max(max_deg, metric(row, "max_degree_in"));
    max_m = std::max(max_m, row.m);
    deltas.insert(metric(row, "delta"));
  }
  return {r.ok() && r.rows.size() >= 50 && max_deg <= 10 && max_deg > 4 && max_m <= 20 && deltas.size() == 3,
          summary(r) + ", input max degree " + std::to_string(max_deg) + ", m <= " + std::to_string(max_m)};
}

Outcome ds() {
  ExperimentReport r = run_experiment("ds");
  bool named = lambda_brute(1, 3) == 1 && lambda_brute(2, 3) == 4 && lambda_brute(3, 2) == 5;
  bool bounded = true;
  for (std::size_t n = 1; n <= 4; ++n) bounded = bounded && static_cast<double>(lambda_brute(n, 3)) <= lambda3_upper(n);
  return {r.ok() && named && bounded, summary(r) + ", lambda_3(1)=1, lambda_3(2)=4, lambda_2(3)=5"};
}

Outcome facesize() {
  ExperimentReport r = run_experiment("facesize", {100, 0, 1});
  std::size_t max_m = 0, bounded_faces = 0;
  for (const ReportRow& row : r.rows) {
    max_m = std::max(max_m, row.m);
    bounded_faces += metric(row, "F") - 1;
  }
  return {r.ok() && r.rows.size() >= 100 && max_m <= 12 && bounded_faces > 0,
          summary(r) + ", m <= " + std::to_string(max_m) + ", " + std::to_string(bounded_faces) + " bounded faces"};
}

Outcome euler() {
  EulerDensity big = euler_density_check(200), small = euler_density_check(10);
  double expected = 200.0 * 200.0 / (2.0 * (2.0 * 400.0 * std::log(400.0) + 3.0 * 400.0));
  bool pass = big.ratio > 3.3 && big.ratio < 3.4 && std::abs(big.ratio - expected) <= kRatioTol && big.contradiction &&
              !small.contradiction && run_experiment("euler").ok();
  char buf[96];
  std::snprintf(buf, sizeof buf, "k=200 ratio %.6f, k=10 ratio %.6f", big.ratio, small.ratio);
  return {pass, buf};
}

Outcome tangency() {
  ExperimentReport r = run_experiment("tangency");
  bool squares = r.rows.size() == 4;
  for (std::size_t k = 1; k <= r.rows.size(); ++k) squares = squares && metric(r.rows[k - 1], "H_edges") == k * k;
  return {r.ok() && squares, summary(r) + ", |E(H)| = 1, 4, 9, 16, 4+4 refined to 1+1"};
}

Outcome tangled() {
  ExperimentReport r = run_experiment("tangled");
  std::size_t converted = 0;
  for (const ReportRow& row : r.rows) converted += metric(row, "tangent_to_disjoint");
  return {r.ok() && r.rows.size() == 2, summary(r) + ", " + std::to_string(converted) + " tangent pairs now disjoint"};
}

Outcome bisection() {
  ExperimentReport r = run_experiment("bisection", {50, 0, 1});
  return {r.ok() && r.rows.size() == 53, summary(r) + ", P4/C4/K4 = 1/2/4"};
}

Outcome decomposition() {
  ExperimentReport r = run_experiment("decomposition", {20, 0, 1});
  std::size_t max_n = 0;
  for (const ReportRow& row : r.rows) max_n = std::max(max_n, row.n);
  bool alpha_ok = std::abs(alpha(1) - kAlpha1) <= kAlphaTol && std::abs(alpha(2) - kAlpha2) <= kAlphaTol;
  for (std::size_t t = 1; t <= 100; ++t) alpha_ok = alpha_ok && alpha(t) > 1.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, ", alpha(1)=%.4f, alpha(2)=%.4f", alpha(1), alpha(2));
  return {r.ok() && r.rows.size() >= 20 && max_n <= 60 && alpha_ok,
          summary(r) + ", n <= " + std::to_string(max_n) + buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"parity suite", parity},
      {"strip crossing formula", formula},
      {"splitting suite", splitting},
      {"Davenport-Schinzel suite", ds},
      {"face complexity suite", facesize},
      {"Euler density arithmetic", euler},
      {"tangency graph suite", tangency},
      {"tangled thrackle pipeline", tangled},
      {"bisection oracle suite", bisection},
      {"decomposition suite", decomposition},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%s; %.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
