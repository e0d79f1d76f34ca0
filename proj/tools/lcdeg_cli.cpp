// Copyright 2026 The lcdeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// lcdeg: command-line front end.
//
// Exit codes: 0 success, 1 a verified identity failed, 2 usage, cap or
// precondition error.

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "lcdeg/lcdeg.hpp"

namespace {

using lcdeg::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t exact_n = lcdeg::kDefaultExactCap;
  std::size_t oneside_n = lcdeg::kDefaultExactCap;
  std::size_t orbit_nodes = lcdeg::kDefaultOrbitNodeCap;
  std::string format = "json";
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  bool deterministic = false;

  lcdeg::SearchOptions exact() const { return {exact_n, workers}; }
  lcdeg::SearchOptions oneside() const { return {oneside_n, workers}; }
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json envelope(const RunConfig& cfg, std::string_view command) {
  Json j;
  j["command"] = command;
  j["seed"] = cfg.seed;
  if (!cfg.deterministic) j["timestamp"] = utc_timestamp();
  return j;
}

// Text mode prints every top-level field as "key: value".
void emit(const RunConfig& cfg, const Json& report) {
  if (cfg.format == "json") {
    std::cout << report.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : report.items())
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

void require_dot_allowed(const RunConfig& cfg, std::string_view command) {
  if (cfg.format == "dot")
    throw lcdeg::InputError("--format dot is not available for '" + std::string(command) + "'");
}

int run_deltaloc(const RunConfig& cfg, const std::string& path, bool bipartite, bool orbit_check) {
  const lcdeg::Graph g = lcdeg::load_graph(path);
  if (cfg.format == "dot") {
    lcdeg::write_dot(std::cout, g);
    return kExitOk;
  }
  const auto r = bipartite ? lcdeg::delta_loc_bipartite(g, cfg.oneside())
                           : lcdeg::delta_loc_exact(g, cfg.exact());
  Json j = envelope(cfg, "deltaloc");
  j["n"] = g.order();
  j["m"] = g.edge_count();
  j.update(lcdeg::to_json(r));
  int code = kExitOk;
  if (orbit_check) {
    const auto orbit = lcdeg::lc_orbit(g, cfg.orbit_nodes);
    j["orbit"] = lcdeg::to_json(orbit);
    std::string verdict;
    if (orbit.truncated)
      verdict = orbit.min_degree_over_orbit >= r.value ? "UPPER-BOUND" : "DISAGREE";
    else
      verdict = orbit.min_degree_over_orbit == r.value ? "AGREE" : "DISAGREE";
    j["orbit_verdict"] = verdict;
    if (verdict == "DISAGREE") code = kExitVerification;
  }
  emit(cfg, j);
  return code;
}

int run_paley(const RunConfig& cfg, std::uint64_t p, bool verify_all, std::uint64_t trials) {
  const auto ctx = lcdeg::paley_graph(p);
  if (cfg.format == "dot") {
    lcdeg::write_dot(std::cout, ctx.graph, "Pal" + std::to_string(p));
    return kExitOk;
  }
  const auto theorem = lcdeg::verify_paley_theorem(ctx, cfg.exact(), trials, cfg.seed);
  const auto identity = lcdeg::verify_lemma_odd_even(ctx, 200, lcdeg::derive_seed(cfg.seed, 1));
  bool checks_passed = identity.passed();

  Json j = envelope(cfg, "paley");
  j.update(lcdeg::to_json(theorem));
  Json checks;
  checks["odd_even_random"] = lcdeg::to_json(identity);
  if (verify_all) {
    const auto exhaustive = lcdeg::verify_lemma_odd_even_exhaustive(ctx, 2);
    const auto weil = lcdeg::verify_weil_bound(ctx, 3, 200, lcdeg::derive_seed(cfg.seed, 2));
    checks["odd_even_small_sets"] = lcdeg::to_json(exhaustive);
    checks["weil_bound"] = lcdeg::to_json(weil);
    checks_passed = checks_passed && exhaustive.passed() && weil.passed();
  }
  j["char_sum_checks"] = checks;
  j["char_sum_checks_passed"] = checks_passed;
  emit(cfg, j);
  return theorem.holds && theorem.lemma_holds && checks_passed ? kExitOk : kExitVerification;
}

struct ReduceArgs {
  std::string matrix_path;
  std::optional<std::size_t> gadget_side;
  std::optional<std::size_t> required_d;
  std::optional<std::string> gadget_path;
  std::size_t u = 0;
  std::size_t attempts = 5000;
  std::uint64_t falsifier_trials = 1'000'000;
  std::string out_dir;
};

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw lcdeg::InputError("cannot write " + path.string());
  out << text;
}

void write_bundle(const std::string& dir, const lcdeg::ReductionInstance& inst, const Json& report) {
  const std::filesystem::path root(dir);
  std::filesystem::create_directories(root);
  write_text(root / "aprime.mat", lcdeg::to_matrix_text(inst.aprime));
  write_text(root / "gadget.edges", lcdeg::to_edge_list(inst.gadget));
  write_text(root / "composed.edges", lcdeg::to_edge_list(inst.composed));
  write_text(root / "composed.dot", lcdeg::to_dot(inst.composed));
  if (inst.composed.order() <= lcdeg::kGraph6MaxOrder)
    write_text(root / "composed.g6", lcdeg::to_graph6(inst.composed) + "\n");
  write_text(root / "manifest.json", lcdeg::manifest(inst).dump(2) + "\n");
  write_text(root / "report.json", report.dump(2) + "\n");
}

lcdeg::BinaryMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lcdeg::InputError("cannot open matrix file: " + path);
  return lcdeg::read_matrix(in);
}

int run_reduce(const RunConfig& cfg, const ReduceArgs& args) {
  const auto a = load_matrix(args.matrix_path);
  Json j = envelope(cfg, "reduce");
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  j["kernel_dim"] = lcdeg::kernel_dim(a);

  lcdeg::ReductionOptions opts;
  opts.oneside_cap = cfg.oneside_n;
  opts.workers = cfg.workers;
  opts.falsifier_trials = args.falsifier_trials;
  opts.seed = cfg.seed;

  if (lcdeg::kernel_dim(a) > 0) {
    require_dot_allowed(cfg, "reduce on a singular matrix");
    const auto run = lcdeg::run_reduction(a, lcdeg::BinaryMatrix::identity(1), 0, opts);
    j["report"] = lcdeg::to_json(*run.report);
    emit(cfg, j);
    return kExitOk;
  }

  const auto form = lcdeg::systematic_form(a);
  const std::size_t k = a.cols(), n = a.rows() - k;
  j["k"] = k;
  j["n"] = n;
  j["row_order"] = form.row_order;

  lcdeg::BinaryMatrix b;
  Json gadget;
  if (args.gadget_path) {
    b = load_matrix(*args.gadget_path);
    gadget["source"] = *args.gadget_path;
  } else {
    const std::size_t required = args.required_d.value_or(n + 3);
    const std::size_t first = args.gadget_side.value_or(std::max<std::size_t>(required - 1, 1));
    const std::size_t last = args.gadget_side.value_or(std::min<std::size_t>(first + 12, lcdeg::kDefaultMessageCap));
    std::optional<lcdeg::BinaryMatrix> found;
    for (std::size_t side = first; side <= last && !found; ++side)
      found = lcdeg::gadget_code_search(side, required, args.attempts, lcdeg::derive_seed(cfg.seed, side));
    if (!found)
      throw lcdeg::InputError("gadget search exhausted: no side in [" + std::to_string(first) + ", " +
                              std::to_string(last) + "] reached distance " + std::to_string(required));
    b = *found;
    gadget["required_d"] = required;
  }
  gadget["rows"] = b.rows();
  gadget["cols"] = b.cols();
  gadget["biadjacency"] = lcdeg::to_json(b);
  gadget["u"] = args.u;
  j["gadget"] = gadget;

  const auto inst = lcdeg::compose(form.aprime, lcdeg::gadget_graph(b), args.u);
  const auto pre = lcdeg::verify_preconditions(inst, cfg.oneside());
  j["composed_order"] = inst.composed.order();
  j["preconditions"] = lcdeg::to_json(pre);
  if (!pre.passed()) {
    emit(cfg, j);
    std::cerr << "error: precondition failed:"
              << (pre.gadget_ok ? "" : " gadget delta_loc " + std::to_string(pre.gadget_delta_loc) +
                                           " is not above n + 1 = " + std::to_string(pre.required_above))
              << (pre.degree_ok ? "" : " composed min degree " + std::to_string(pre.composed_min_degree) +
                                           " exceeds n = " + std::to_string(n))
              << '\n';
    return kExitUsage;
  }
  const auto report = lcdeg::verify_reduction(inst, a, opts);
  j["report"] = lcdeg::to_json(report);
  if (!args.out_dir.empty()) {
    write_bundle(args.out_dir, inst, j);
    j["out_dir"] = args.out_dir;
  }
  if (cfg.format == "dot")
    lcdeg::write_dot(std::cout, inst.composed);
  else
    emit(cfg, j);
  return report.equal ? kExitOk : kExitVerification;
}

lcdeg::GraphKind parse_kind(const std::string& s) {
  if (s == "bipartite") return lcdeg::GraphKind::bipartite;
  if (s == "general" || s == "graph") return lcdeg::GraphKind::general;
  throw lcdeg::InputError("unknown kind '" + s + "'");
}

int run_lll(const RunConfig& cfg, lcdeg::GraphKind kind, double tol, std::size_t points) {
  require_dot_allowed(cfg, "lll");
  const double c = lcdeg::solve_max_c(kind, tol);
  const auto at = lcdeg::condition_margin(kind, c);
  Json j = envelope(cfg, "lll");
  j["kind"] = lcdeg::to_string(kind);
  j["c_max"] = c;
  j["tolerance"] = tol;
  j["margin_at_c_max"] = at.margin;
  j["worst_d"] = at.worst_d;
  Json curve = Json::array();
  const double end = lcdeg::d_range_end(kind, c);
  for (std::size_t i = 1; i <= points; ++i) {
    const double d = end * static_cast<double>(i) / static_cast<double>(points);
    curve.push_back({{"d", d}, {"margin", lcdeg::condition_value(kind, c, d)}});
  }
  j["worst_d_curve"] = curve;
  emit(cfg, j);
  return kExitOk;
}

int run_sample(const RunConfig& cfg, lcdeg::GraphKind kind, std::size_t size, std::size_t count, double c) {
  require_dot_allowed(cfg, "sample");
  const auto prof = lcdeg::empirical_profile(kind, size, count, cfg.seed, c,
                                             kind == lcdeg::GraphKind::bipartite ? cfg.oneside() : cfg.exact());
  Json j = envelope(cfg, "sample");
  j.update(lcdeg::to_json(prof));
  emit(cfg, j);
  const bool ok = prof.min_degree_respected && prof.oracles_agree.value_or(true);
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local minimum degree toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--seed", cfg.seed, "Master seed");
  app.add_flag("--deterministic", cfg.deterministic, "Omit the timestamp field");
  app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1U, 1024U));
  app.add_option("--cap-n", cfg.exact_n, "Exact-search vertex cap")->envname("LCDEG_CAP_N");
  app.add_option("--oneside-cap", cfg.oneside_n, "One-sided search cap per side");
  app.add_option("--orbit-nodes", cfg.orbit_nodes, "Orbit search node cap");

  std::function<int()> action;

  auto* deltaloc = app.add_subcommand("deltaloc", "Exact delta_loc of a graph file");
  std::string graph_path;
  bool bipartite = false, orbit_check = false;
  deltaloc->add_option("graph", graph_path, "Edge list or .g6 file")->required();
  deltaloc->add_flag("--bipartite", bipartite, "One-sided search over a bipartition");
  deltaloc->add_flag("--orbit-check", orbit_check, "Cross-check with the orbit oracle");
  deltaloc->callback([&] { action = [&] { return run_deltaloc(cfg, graph_path, bipartite, orbit_check); }; });

  auto* paley = app.add_subcommand("paley", "Paley graph bound and character-sum checks");
  std::uint64_t p = 0, paley_trials = 1'000'000;
  bool verify_all = false;
  paley->add_option("p", p, "Prime with p = 1 mod 4")->required();
  paley->add_flag("--verify-all", verify_all, "Also run exhaustive identity and Weil-bound checks");
  paley->add_option("--trials", paley_trials, "Falsifier trials above the exact cap");
  paley->callback([&] { action = [&] { return run_paley(cfg, p, verify_all, paley_trials); }; });

  auto* reduce = app.add_subcommand("reduce", "Build and verify a reduction instance");
  ReduceArgs rargs;
  reduce->add_option("matrix", rargs.matrix_path, "Generator matrix file")->required();
  reduce->add_option("--gadget-side", rargs.gadget_side, "Gadget side size");
  reduce->add_option("--required-d", rargs.required_d, "Gadget code distance (default n + 3)");
  reduce->add_option("--gadget", rargs.gadget_path, "Gadget biadjacency matrix file");
  reduce->add_option("--gadget-vertex", rargs.u, "Distinguished gadget vertex u (row side)");
  reduce->add_option("--attempts", rargs.attempts, "Gadget search attempts per side");
  reduce->add_option("--falsifier-trials", rargs.falsifier_trials, "Random samples in the theorem-assisted tier");
  reduce->add_option("--out-dir", rargs.out_dir, "Write the instance bundle here");
  reduce->callback([&] { action = [&] { return run_reduce(cfg, rargs); }; });

  auto* lll = app.add_subcommand("lll", "Solve the entropy condition for the largest c");
  std::string lll_kind;
  double tol = 1e-6;
  std::size_t points = 50;
  lll->add_option("kind", lll_kind, "bipartite or general")->required()->check(CLI::IsMember({"bipartite", "general"}));
  lll->add_option("--tol", tol, "Bisection tolerance")->check(CLI::PositiveNumber);
  lll->add_option("--points", points, "Points on the margin curve");
  lll->callback([&] { action = [&] { return run_lll(cfg, parse_kind(lll_kind), tol, points); }; });

  auto* sample = app.add_subcommand("sample", "Histogram of delta_loc over random graphs");
  std::string sample_kind;
  std::size_t size = 0, count = 0;
  double c = 0.0;
  sample->add_option("kind", sample_kind, "graph or bipartite")->required()->check(CLI::IsMember({"graph", "bipartite"}));
  sample->add_option("--size", size, "n, or nu per side for bipartite")->required();
  sample->add_option("--count", count, "Number of samples")->required();
  sample->add_option("--c", c, "Report the fraction with delta_loc > c * order");
  sample->callback([&] { action = [&] { return run_sample(cfg, parse_kind(sample_kind), size, count, c); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const lcdeg::SearchTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const lcdeg::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
