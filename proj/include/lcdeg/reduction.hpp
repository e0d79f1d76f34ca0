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
 * Shortest-codeword to local-minimum-degree reduction.
 *
 * Given a generator in the form (I_k ; A') with A' of size n x k, and a
 * bipartite gadget G_B = (B1 ∪ B2, E_B) with a distinguished u in B1, the
 * composed bipartite graph has
 *
 *   V1L = cols(A') x {u}          (k vertices)
 *   V1R = rows(A') x B2           (n |B2| vertices)
 *   V2  = rows(A') x B1           (n |B1| vertices)
 *
 * and (x, y) ~ (x', y') iff (x, x') is an edge of the code graph of A' and
 * y == y', or (y, y') is a gadget edge and x == x'. In words: n copies of the
 * gadget, plus k extra vertices wired to the u-vertex of copy x' whenever
 * A'[x'][x] = 1. When the gadget has delta_loc > n + 1 and the composed graph
 * has minimum degree <= n, every minimiser of |D ∪ Odd(D)| lies in V1L and
 * delta_loc(G) + 1 equals the minimum distance of the code.
 *
 * Vertex numbering: V1L first (by column), then V1R (copy-major), then V2.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcdeg/codes.hpp"
#include "lcdeg/error.hpp"
#include "lcdeg/graph.hpp"
#include "lcdeg/locmindeg.hpp"
#include "lcdeg/paley.hpp"

namespace lcdeg {

/// Bipartite graph of A' (n x k): vertices 0..k-1 are columns, k..k+n-1 rows,
/// column x ~ row x' iff A'[x'][x] == 1.
inline Graph code_graph(const BinaryMatrix& aprime) {
  const std::size_t k = aprime.cols(), n = aprime.rows();
  if (k == 0) throw InputError("code_graph needs at least one column");
  Graph g(k + n);
  for (std::size_t r = 0; r < n; ++r)
    for (auto c : aprime.row(r).indices()) g.add_edge(c, k + r);
  Bipartition part{VertexSet(k + n), VertexSet(k + n)};
  for (Vertex v = 0; v < k + n; ++v) (v < k ? part.left : part.right).set(v);
  g.set_bipartition(std::move(part));
  return g;
}

/// Bipartite graph with biadjacency b: rows are the left side (0..r-1),
/// columns the right side (r..r+c-1).
inline Graph gadget_graph(const BinaryMatrix& b) {
  const std::size_t r = b.rows(), c = b.cols();
  Graph g(r + c);
  for (std::size_t i = 0; i < r; ++i)
    for (auto j : b.row(i).indices()) g.add_edge(i, r + j);
  Bipartition part{VertexSet(r + c), VertexSet(r + c)};
  for (Vertex v = 0; v < r + c; ++v) (v < r ? part.left : part.right).set(v);
  g.set_bipartition(std::move(part));
  return g;
}

enum class Part { left_code, right_copy, gadget_copy };

constexpr std::string_view to_string(Part p) {
  switch (p) {
    case Part::left_code: return "V1L";
    case Part::right_copy: return "V1R";
    case Part::gadget_copy: return "V2";
  }
  return "?";
}

/// Pair label (x, y) of a composed vertex: x indexes a column (V1L) or a row of A',
/// y is a gadget vertex.
struct VertexLabel {
  Part part;
  std::size_t x;
  Vertex y;
};

struct ReductionInstance {
  BinaryMatrix aprime;
  Graph gadget;
  Vertex u = 0;
  Graph composed;
  std::size_t k = 0;
  std::size_t n = 0;
  VertexSet v1l, v1r, v2;
  std::vector<VertexLabel> labels;
  bool bipartite_gadget = true;  // false for the experimental Paley gadget
};

inline ReductionInstance compose(const BinaryMatrix& aprime, const Graph& gadget, Vertex u) {
  const auto& part = gadget.bipartition();
  if (!part) throw InputError("compose: gadget must carry a bipartition");
  if (u >= gadget.order() || !part->left.test(u))
    throw InputError("compose: u must be a vertex of the gadget's first side");
  const std::size_t k = aprime.cols(), n = aprime.rows();
  if (k == 0) throw InputError("compose: A' needs at least one column");
  const auto b1 = part->left.indices();
  const auto b2 = part->right.indices();
  const std::size_t total = k + n * (b1.size() + b2.size());

  ReductionInstance inst{aprime, gadget, u, Graph(total), k, n,
                         VertexSet(total), VertexSet(total), VertexSet(total), {}, true};
  std::vector<Vertex> slot(gadget.order());  // position of a gadget vertex inside its side
  for (std::size_t i = 0; i < b1.size(); ++i) slot[b1[i]] = i;
  for (std::size_t j = 0; j < b2.size(); ++j) slot[b2[j]] = j;
  auto v1l_id = [&](std::size_t x) { return x; };
  auto v1r_id = [&](std::size_t xr, Vertex y) { return k + xr * b2.size() + slot[y]; };
  auto v2_id = [&](std::size_t xr, Vertex y) { return k + n * b2.size() + xr * b1.size() + slot[y]; };

  for (std::size_t x = 0; x < k; ++x) inst.labels.push_back({Part::left_code, x, u});
  for (std::size_t xr = 0; xr < n; ++xr)
    for (auto y : b2) inst.labels.push_back({Part::right_copy, xr, y});
  for (std::size_t xr = 0; xr < n; ++xr)
    for (auto y : b1) inst.labels.push_back({Part::gadget_copy, xr, y});

  for (std::size_t x = 0; x < k; ++x) inst.v1l.set(v1l_id(x));
  for (std::size_t xr = 0; xr < n; ++xr) {
    for (auto y : b2) inst.v1r.set(v1r_id(xr, y));
    for (auto y : b1) inst.v2.set(v2_id(xr, y));
  }

  // Code-graph edges with y == y' == u.
  for (std::size_t xr = 0; xr < n; ++xr)
    for (auto x : aprime.row(xr).indices()) inst.composed.add_edge(v1l_id(x), v2_id(xr, u));
  // Gadget edges inside each copy (x == x').
  for (std::size_t xr = 0; xr < n; ++xr)
    for (auto y : b2)
      for (auto y2 : gadget.row(y).indices()) inst.composed.add_edge(v1r_id(xr, y), v2_id(xr, y2));

  inst.composed.set_bipartition({inst.v1l | inst.v1r, inst.v2});
  return inst;
}

/// Experimental non-bipartite variant: n copies of Pal_p, the k code vertices wired to
/// vertex u of copy x' whenever A'[x'][x] = 1. Numbering: code vertices, then copies.
inline ReductionInstance compose_with_paley(const BinaryMatrix& aprime, std::uint64_t p, Vertex u = 0) {
  const auto ctx = paley_graph(p);
  if (u >= p) throw InputError("compose_with_paley: u out of range");
  const std::size_t k = aprime.cols(), n = aprime.rows();
  const std::size_t total = k + n * p;
  ReductionInstance inst{aprime, ctx.graph, u, Graph(total), k, n,
                         VertexSet(total), VertexSet(total), VertexSet(total), {}, false};
  for (std::size_t x = 0; x < k; ++x) {
    inst.labels.push_back({Part::left_code, x, u});
    inst.v1l.set(x);
  }
  for (std::size_t xr = 0; xr < n; ++xr)
    for (Vertex y = 0; y < p; ++y) {
      inst.labels.push_back({Part::gadget_copy, xr, y});
      inst.v2.set(k + xr * p + y);
    }
  for (std::size_t xr = 0; xr < n; ++xr) {
    for (auto x : aprime.row(xr).indices()) inst.composed.add_edge(x, k + xr * p + u);
    for (auto [a, b] : ctx.graph.edges()) inst.composed.add_edge(k + xr * p + a, k + xr * p + b);
  }
  return inst;
}

struct PreconditionReport {
  std::size_t gadget_delta_loc = 0;
  std::size_t required_above = 0;  // n + 1
  bool gadget_ok = false;          // gadget_delta_loc > n + 1
  std::size_t composed_min_degree = 0;
  bool degree_ok = false;          // composed_min_degree <= n
  bool passed() const { return gadget_ok && degree_ok; }
};

inline PreconditionReport verify_preconditions(const ReductionInstance& inst, SearchOptions opts = {}) {
  PreconditionReport r;
  r.gadget_delta_loc = inst.bipartite_gadget ? delta_loc_bipartite(inst.gadget, opts).value
                                             : delta_loc_exact(inst.gadget, opts).value;
  r.required_above = inst.n + 1;
  r.gadget_ok = r.gadget_delta_loc > r.required_above;
  r.composed_min_degree = min_degree(inst.composed);
  r.degree_ok = r.composed_min_degree <= inst.n;
  return r;
}

enum class ReductionMethod { exact, theorem_assisted, short_circuit };

constexpr std::string_view to_string(ReductionMethod m) {
  switch (m) {
    case ReductionMethod::exact: return "exact";
    case ReductionMethod::theorem_assisted: return "theorem-assisted";
    case ReductionMethod::short_circuit: return "short-circuit";
  }
  return "?";
}

struct ReductionOptions {
  std::size_t oneside_cap = kDefaultExactCap;  // max side size for exact one-sided search
  std::size_t message_cap = kDefaultMessageCap;
  unsigned workers = 1;
  std::uint64_t falsifier_trials = 1'000'000;
  std::uint64_t seed = 0;
};

struct ReductionReport {
  std::size_t d_min = 0;
  BitVector d_min_message;
  std::size_t delta_loc_plus_1 = 0;
  VertexSet witness;  // minimiser in the composed graph (empty on short-circuit)
  bool equal = false;
  ReductionMethod method = ReductionMethod::exact;
  std::uint64_t sets_examined = 0;
  // Theorem-assisted tier.
  std::optional<std::size_t> v1l_minimum;
  std::uint64_t falsifier_trials = 0;
  std::optional<VertexSet> falsifier_hit;
};

/// d_min(A) against delta_loc(composed) + 1. Exact one-sided search when both sides
/// fit `oneside_cap`, otherwise exact search over D ⊆ V1L plus random falsification
/// over V1, V2 and the whole vertex set.
inline ReductionReport verify_reduction(const ReductionInstance& inst, const BinaryMatrix& a,
                                        const ReductionOptions& opts = {}) {
  ReductionReport r;
  const auto dm = min_distance(a, opts.message_cap, opts.workers);
  r.d_min = dm.distance;
  r.d_min_message = dm.message;
  if (kernel_dim(a) > 0) {
    r.method = ReductionMethod::short_circuit;
    r.equal = true;
    return r;
  }
  if (inst.bipartite_gadget) {
    const auto& part = *inst.composed.bipartition();
    if (part.left.count() <= opts.oneside_cap && part.right.count() <= opts.oneside_cap) {
      auto res = delta_loc_bipartite(inst.composed, {opts.oneside_cap, opts.workers});
      r.method = ReductionMethod::exact;
      r.delta_loc_plus_1 = res.value + 1;
      r.witness = std::move(res.witness);
      r.sets_examined = res.sets_examined;
      r.equal = r.delta_loc_plus_1 == r.d_min;
      return r;
    }
  } else if (inst.composed.order() <= opts.oneside_cap) {
    auto res = delta_loc_exact(inst.composed, {opts.oneside_cap, opts.workers});
    r.method = ReductionMethod::exact;
    r.delta_loc_plus_1 = res.value + 1;
    r.witness = std::move(res.witness);
    r.sets_examined = res.sets_examined;
    r.equal = r.delta_loc_plus_1 == r.d_min;
    return r;
  }

  r.method = ReductionMethod::theorem_assisted;
  auto restricted = min_closed_odd_over(inst.composed, inst.v1l, opts.workers);
  r.v1l_minimum = restricted.min_size;
  r.delta_loc_plus_1 = restricted.min_size;
  r.witness = std::move(restricted.witness);
  r.sets_examined = restricted.examined;
  if (restricted.min_size > 1) {
    const std::size_t below = restricted.min_size - 1;
    const std::uint64_t share = opts.falsifier_trials / 3;
    const std::vector<VertexSet> domains{inst.v1l | inst.v1r, inst.v2,
                                         VertexSet::full(inst.composed.order())};
    for (std::size_t i = 0; i < domains.size() && !r.falsifier_hit; ++i) {
      const std::uint64_t trials = i + 1 < domains.size() ? share : opts.falsifier_trials - 2 * share;
      if (domains[i].none()) continue;
      r.falsifier_hit =
          falsifier_sample(inst.composed, domains[i], below, trials, derive_seed(opts.seed, i));
      r.falsifier_trials += trials;
    }
  }
  r.equal = !r.falsifier_hit && r.delta_loc_plus_1 == r.d_min;
  return r;
}

/// End-to-end run from a generator matrix and a gadget biadjacency matrix.
struct ReductionRun {
  std::optional<SystematicForm> form;
  std::optional<ReductionInstance> instance;
  std::optional<PreconditionReport> preconditions;
  std::optional<ReductionReport> report;  // absent when preconditions fail
};

/// A generator with a nontrivial kernel short-circuits to answer 0 without building a
/// graph. `gadget_b` rows form the gadget side containing u.
inline ReductionRun run_reduction(const BinaryMatrix& a, const BinaryMatrix& gadget_b, Vertex u,
                                  const ReductionOptions& opts = {}) {
  ReductionRun run;
  if (kernel_dim(a) > 0) {
    ReductionReport r;
    r.method = ReductionMethod::short_circuit;
    r.d_min = 0;
    r.d_min_message = *kernel_vector(a);
    r.delta_loc_plus_1 = 0;
    r.equal = true;
    run.report = std::move(r);
    return run;
  }
  run.form = systematic_form(a);
  run.instance = compose(run.form->aprime, gadget_graph(gadget_b), u);
  run.preconditions = verify_preconditions(*run.instance, {opts.oneside_cap, opts.workers});
  if (run.preconditions->passed()) run.report = verify_reduction(*run.instance, a, opts);
  return run;
}

}  // namespace lcdeg
