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
 * Local minimum degree.
 *
 * Three independent routes to the same number:
 *  - delta_loc_exact: min over nonempty D of |D ∪ Odd(D)|, minus one;
 *  - delta_loc_bipartite: the same minimum restricted to D inside one side of
 *    a bipartition (enough for bipartite graphs, 2^|V1| + 2^|V2| subsets);
 *  - delta_loc_via_orbit: minimum degree over the labeled local-complementation
 *    orbit, found by breadth-first search.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lcdeg/error.hpp"
#include "lcdeg/graph.hpp"
#include "lcdeg/rng.hpp"
#include "lcdeg/subset_sweep.hpp"

namespace lcdeg {

inline constexpr std::size_t kDefaultExactCap = 30;
inline constexpr std::size_t kDefaultOrbitNodeCap = 2'000'000;

enum class DeltaLocMethod { full_enumeration, one_sided, orbit };

constexpr std::string_view to_string(DeltaLocMethod m) {
  switch (m) {
    case DeltaLocMethod::full_enumeration: return "full-enumeration";
    case DeltaLocMethod::one_sided: return "one-sided";
    case DeltaLocMethod::orbit: return "orbit";
  }
  return "unknown";
}

struct SearchOptions {
  std::size_t cap = kDefaultExactCap;  // max vertices enumerated exhaustively
  unsigned workers = 1;
};

struct DeltaLocResult {
  std::size_t value = 0;
  VertexSet witness;  // closed_odd_size(g, witness) == value + 1
  std::uint64_t sets_examined = 0;
  DeltaLocMethod method = DeltaLocMethod::full_enumeration;
};

/// Minimum of |D ∪ Odd(D)| over nonempty D ⊆ domain.
struct SubsetMinimum {
  std::size_t min_size = 0;
  VertexSet witness;
  std::uint64_t examined = 0;
};

inline SubsetMinimum min_closed_odd_over(const Graph& g, std::span<const Vertex> domain,
                                         unsigned workers = 1) {
  if (domain.empty()) throw InputError("subset search over an empty domain");
  for (auto v : domain)
    if (v >= g.order()) throw InputError("domain vertex out of range");
  return detail::dispatch_words(g.order(), [&]<std::size_t W>() {
    const detail::SweepDomain<W> dom(g, domain);
    const auto best = detail::sweep_all(dom, workers, [] { return detail::ClosedOddMin{}; });
    return SubsetMinimum{best.best, detail::subset_from_index(g.order(), domain, best.index),
                         best.examined};
  });
}

inline SubsetMinimum min_closed_odd_over(const Graph& g, const VertexSet& domain,
                                         unsigned workers = 1) {
  const auto idx = domain.indices();
  return min_closed_odd_over(g, std::span<const Vertex>(idx), workers);
}

/// Exhaustive δ_loc over all 2^n - 1 nonempty subsets.
inline DeltaLocResult delta_loc_exact(const Graph& g, SearchOptions opts = {}) {
  if (g.order() == 0) throw InputError("delta_loc of the empty graph");
  if (g.order() > opts.cap)
    throw SearchTooLarge(std::to_string(g.order()) + " vertices exceed the exact-search cap of " +
                         std::to_string(opts.cap));
  std::vector<Vertex> all(g.order());
  std::iota(all.begin(), all.end(), Vertex{0});
  auto m = min_closed_odd_over(g, std::span<const Vertex>(all), opts.workers);
  return {m.min_size - 1, std::move(m.witness), m.examined, DeltaLocMethod::full_enumeration};
}

/// δ_loc of a bipartite graph from subsets confined to one side. Uses the recorded
/// bipartition or computes one; `opts.cap` bounds each side separately.
inline DeltaLocResult delta_loc_bipartite(const Graph& g, SearchOptions opts = {}) {
  if (g.order() == 0) throw InputError("delta_loc of the empty graph");
  const auto part = is_bipartite(g);
  if (!part) throw InputError("graph is not bipartite");
  for (const auto* side : {&part->left, &part->right})
    if (side->count() > opts.cap)
      throw SearchTooLarge("side of " + std::to_string(side->count()) +
                           " vertices exceeds the one-sided cap of " + std::to_string(opts.cap));
  std::optional<SubsetMinimum> best;
  std::uint64_t examined = 0;
  for (const auto* side : {&part->left, &part->right}) {
    if (side->none()) continue;
    auto m = min_closed_odd_over(g, *side, opts.workers);
    examined += m.examined;
    if (!best || m.min_size < best->min_size) best = std::move(m);
  }
  return {best->min_size - 1, std::move(best->witness), examined, DeltaLocMethod::one_sided};
}

struct OrbitReport {
  std::size_t orbit_size = 0;
  std::size_t min_degree_over_orbit = 0;
  std::vector<Vertex> generator_sequence;  // replaying these from the start graph reaches a minimiser
  bool truncated = false;                  // node cap hit: min degree is only an upper bound
};

namespace detail {
/// Upper triangle packed into bytes; a canonical key for labeled graphs.
inline std::string adjacency_key(const Graph& g) {
  const std::size_t n = g.order();
  std::string key((n * (n - (n ? 1 : 0)) / 2 + 7) / 8, '\0');
  std::size_t k = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++k)
      if (g.row(i).test(j)) key[k / 8] = static_cast<char>(key[k / 8] | (1 << (k % 8)));
  return key;
}
}  // namespace detail

/// Breadth-first search of the labeled LC orbit under the generators G -> G * u.
inline OrbitReport lc_orbit(const Graph& g, std::size_t node_cap = kDefaultOrbitNodeCap) {
  if (g.order() == 0) throw InputError("lc_orbit of the empty graph");
  struct Node {
    std::size_t parent;
    Vertex generator;
  };
  std::vector<Node> nodes{{0, 0}};
  std::unordered_set<std::string> seen{detail::adjacency_key(g)};
  std::deque<std::pair<std::size_t, Graph>> frontier{{0, g}};

  OrbitReport report;
  report.min_degree_over_orbit = min_degree(g);
  std::size_t best_node = 0;

  while (!frontier.empty()) {
    auto [id, current] = std::move(frontier.front());
    frontier.pop_front();
    for (Vertex u = 0; u < g.order(); ++u) {
      if (current.degree(u) < 2) continue;  // G * u == G
      Graph next = local_complement(current, u);
      auto key = detail::adjacency_key(next);
      if (seen.contains(key)) continue;
      if (nodes.size() >= node_cap) {
        report.truncated = true;
        continue;
      }
      const std::size_t next_id = nodes.size();
      nodes.push_back({id, u});
      seen.insert(std::move(key));
      const std::size_t deg = min_degree(next);
      if (deg < report.min_degree_over_orbit) {
        report.min_degree_over_orbit = deg;
        best_node = next_id;
      }
      frontier.emplace_back(next_id, std::move(next));
    }
  }

  report.orbit_size = nodes.size();
  for (std::size_t id = best_node; id != 0; id = nodes[id].parent)
    report.generator_sequence.push_back(nodes[id].generator);
  std::reverse(report.generator_sequence.begin(), report.generator_sequence.end());
  return report;
}

struct OrbitBound {
  std::size_t value = 0;
  bool exact = true;  // false: orbit truncated, value is an upper bound
};

inline OrbitBound delta_loc_via_orbit(const Graph& g,
                                      std::size_t node_cap = kDefaultOrbitNodeCap) {
  const auto r = lc_orbit(g, node_cap);
  return {r.min_degree_over_orbit, !r.truncated};
}

/// Random search for D ⊆ domain with |D ∪ Odd(D)| <= threshold. Each trial draws a
/// size (half the time 1 + Geometric(1/2), otherwise uniform on 1..|domain|) and then
/// a uniform subset of that size.
inline std::optional<VertexSet> falsifier_sample(const Graph& g, const VertexSet& domain,
                                                 std::size_t threshold, std::uint64_t trials,
                                                 std::uint64_t seed) {
  if (domain.size() != g.order()) throw InputError("domain length does not match graph order");
  std::vector<Vertex> pool = domain.indices();
  if (pool.empty()) return std::nullopt;
  const std::size_t m = pool.size();
  Rng rng(seed);
  return detail::dispatch_words(g.order(), [&]<std::size_t W>() -> std::optional<VertexSet> {
    const detail::SweepDomain<W> dom(g, pool);
    std::vector<std::size_t> order(m);
    for (std::uint64_t t = 0; t < trials; ++t) {
      std::size_t size = 1;
      if (rng.coin()) {
        while (size < m && rng.coin()) ++size;
      } else {
        size = 1 + static_cast<std::size_t>(rng.below(m));
      }
      std::iota(order.begin(), order.end(), std::size_t{0});
      detail::Row<W> d{}, odd{};
      for (std::size_t i = 0; i < size; ++i) {
        const auto pick = i + static_cast<std::size_t>(rng.below(m - i));
        std::swap(order[i], order[pick]);
        const auto j = order[i];
        for (std::size_t w = 0; w < W; ++w) {
          d[w] ^= dom.members[j][w];
          odd[w] ^= dom.rows[j][w];
        }
      }
      if (detail::popcount_or<W>(d, odd) <= threshold) {
        VertexSet witness(g.order());
        for (std::size_t i = 0; i < size; ++i) witness.set(pool[order[i]]);
        return witness;
      }
    }
    return std::nullopt;
  });
}

inline std::optional<VertexSet> falsifier_sample(const Graph& g, std::size_t threshold,
                                                 std::uint64_t trials, std::uint64_t seed) {
  return falsifier_sample(g, VertexSet::full(g.order()), threshold, trials, seed);
}

}  // namespace lcdeg
