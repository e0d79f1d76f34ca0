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

#pragma once

/**
 * Density constants for random graphs with linear local minimum degree.
 *
 * A local-lemma argument shows delta_loc > c n with positive probability
 * whenever an entropy inequality holds for every relative subset size d:
 *
 *   bipartite (G(nu, nu, 1/2), n = 2 nu), d in (0, min(2c, 1)]:
 *       H(d) + H(2c - d) - 1 <= 0
 *   general (G(n, 1/2)), d in (0, c]:
 *       (1 - d) [H((c - d) / (1 - d)) - 1] + H(d) <= 0
 *
 * The "margin" of a candidate c is the maximum of the left side over d; c is
 * feasible iff margin <= 0. The event weights 1 / (r C(nu, d nu)) with r = nu
 * used by the argument only contribute vanishing terms and are not computed.
 *
 * Also here: G(n, 1/2) and bipartite G(nu, nu, 1/2) samplers and an empirical
 * histogram of exact delta_loc over such samples.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "lcdeg/error.hpp"
#include "lcdeg/graph.hpp"
#include "lcdeg/locmindeg.hpp"
#include "lcdeg/rng.hpp"

namespace lcdeg {

enum class GraphKind { bipartite, general };

constexpr std::string_view to_string(GraphKind k) {
  return k == GraphKind::bipartite ? "bipartite" : "general";
}

struct EntropySolverConfig {
  double grid_step = 1e-4;  // d-grid spacing before golden-section refinement
  double refine_tol = 1e-10;
  double bisection_tol = 1e-6;
};

inline double binary_entropy(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InputError("binary_entropy: argument outside [0, 1]");
  if (t == 0.0 || t == 1.0) return 0.0;
  return -t * std::log2(t) - (1.0 - t) * std::log2(1.0 - t);
}

/// Left side of the condition for a given c and relative subset size d.
/// Entropy arguments are clamped to [0, 1] to absorb rounding at the range ends.
inline double condition_value(GraphKind kind, double c, double d) {
  auto h = [](double t) { return binary_entropy(std::clamp(t, 0.0, 1.0)); };
  if (kind == GraphKind::bipartite) return h(d) + h(2 * c - d) - 1.0;
  return (1.0 - d) * (h((c - d) / (1.0 - d)) - 1.0) + h(d);
}

/// Upper end of the d range.
inline double d_range_end(GraphKind kind, double c) {
  return kind == GraphKind::bipartite ? std::min(2 * c, 1.0) : c;
}

struct EntropyCondition {
  GraphKind kind = GraphKind::bipartite;
  double c = 0.0;
  double worst_d = 0.0;
  double margin = 0.0;  // max over d of the left side
  bool satisfied() const { return margin <= 0.0; }
};

inline EntropyCondition condition_margin(GraphKind kind, double c, const EntropySolverConfig& cfg = {}) {
  if (!(c > 0.0 && c <= 0.5)) throw InputError("condition_margin: c must lie in (0, 1/2]");
  const double hi = d_range_end(kind, c);
  const auto steps = static_cast<std::size_t>(std::ceil(hi / cfg.grid_step));
  auto f = [&](double d) { return condition_value(kind, c, d); };

  std::size_t best_i = 1;
  double best = f(hi / static_cast<double>(steps));
  for (std::size_t i = 2; i <= steps; ++i) {
    const double v = f(hi * static_cast<double>(i) / static_cast<double>(steps));
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  double best_d = hi * static_cast<double>(best_i) / static_cast<double>(steps);

  // Golden-section maximisation on the bracketing grid cells.
  double a = hi * static_cast<double>(best_i - 1) / static_cast<double>(steps);
  double b = hi * static_cast<double>(std::min(best_i + 1, steps)) / static_cast<double>(steps);
  if (a <= 0.0) a = best_d * 1e-6;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > cfg.refine_tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  const double mid = 0.5 * (a + b);
  if (const double v = f(mid); v > best) {
    best = v;
    best_d = mid;
  }
  return {kind, c, best_d, best};
}

/// Largest feasible c in (0, 1/2], by bisection to `tol`. Returns the feasible end.
inline double solve_max_c(GraphKind kind, double tol = 1e-6, const EntropySolverConfig& cfg = {}) {
  if (!(tol > 0.0)) throw InputError("solve_max_c: tolerance must be positive");
  double lo = 1e-6, hi = 0.5;
  if (!condition_margin(kind, lo, cfg).satisfied()) return 0.0;
  if (condition_margin(kind, hi, cfg).satisfied()) return hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (condition_margin(kind, mid, cfg).satisfied() ? lo : hi) = mid;
  }
  return lo;
}

/// Margin sampled at `points` evenly spaced c values in (0, c_end].
inline std::vector<EntropyCondition> margin_curve(GraphKind kind, double c_end, std::size_t points,
                                                  const EntropySolverConfig& cfg = {}) {
  std::vector<EntropyCondition> out;
  for (std::size_t i = 1; i <= points; ++i)
    out.push_back(condition_margin(kind, c_end * static_cast<double>(i) / static_cast<double>(points), cfg));
  return out;
}

/// G(n, 1/2).
inline Graph random_graph(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.coin()) g.add_edge(i, j);
  return g;
}

/// Bipartite G(nu, nu, 1/2); left side 0..nu-1.
inline Graph random_bipartite(std::size_t nu, std::uint64_t seed) {
  Rng rng(seed);
  Graph g(2 * nu);
  for (Vertex i = 0; i < nu; ++i)
    for (Vertex j = 0; j < nu; ++j)
      if (rng.coin()) g.add_edge(i, nu + j);
  Bipartition part{VertexSet(2 * nu), VertexSet(2 * nu)};
  for (Vertex v = 0; v < 2 * nu; ++v) (v < nu ? part.left : part.right).set(v);
  g.set_bipartition(std::move(part));
  return g;
}

struct EmpiricalProfile {
  GraphKind kind = GraphKind::general;
  std::size_t size = 0;   // n, or nu for bipartite
  std::size_t order = 0;  // vertices per sample
  std::size_t samples = 0;
  std::map<std::size_t, std::size_t> histogram;  // delta_loc -> count
  double c = 0.0;
  std::size_t exceeding = 0;  // samples with delta_loc > c * order
  bool min_degree_respected = true;
  std::optional<bool> oracles_agree;  // bipartite: one-sided vs full enumeration
  double fraction_exceeding() const {
    return samples ? static_cast<double>(exceeding) / static_cast<double>(samples) : 0.0;
  }
};

/// Exact delta_loc over `samples` random graphs. Sample i uses derive_seed(seed, i).
/// For bipartite samples whose order fits `opts.cap`, also cross-checks the one-sided
/// value against full enumeration.
inline EmpiricalProfile empirical_profile(GraphKind kind, std::size_t size, std::size_t samples,
                                          std::uint64_t seed, double c = 0.0, SearchOptions opts = {}) {
  if (size == 0) throw InputError("empirical_profile: size must be positive");
  EmpiricalProfile prof;
  prof.kind = kind;
  prof.size = size;
  prof.order = kind == GraphKind::bipartite ? 2 * size : size;
  prof.samples = samples;
  prof.c = c;
  if (kind == GraphKind::general && prof.order > opts.cap)
    throw SearchTooLarge("n = " + std::to_string(size) + " exceeds the exact-search cap of " +
                         std::to_string(opts.cap));
  if (kind == GraphKind::bipartite && size > opts.cap)
    throw SearchTooLarge("nu = " + std::to_string(size) + " exceeds the one-sided cap of " +
                         std::to_string(opts.cap));
  const bool cross = kind == GraphKind::bipartite && prof.order <= opts.cap;
  if (cross) prof.oracles_agree = true;

  for (std::size_t i = 0; i < samples; ++i) {
    const auto s = derive_seed(seed, i);
    const Graph g = kind == GraphKind::bipartite ? random_bipartite(size, s) : random_graph(size, s);
    const std::size_t value = kind == GraphKind::bipartite ? delta_loc_bipartite(g, opts).value
                                                           : delta_loc_exact(g, opts).value;
    ++prof.histogram[value];
    if (static_cast<double>(value) > c * static_cast<double>(prof.order)) ++prof.exceeding;
    if (value > min_degree(g)) prof.min_degree_respected = false;
    if (cross && delta_loc_exact(g, opts).value != value) prof.oracles_agree = false;
  }
  return prof;
}

}  // namespace lcdeg
