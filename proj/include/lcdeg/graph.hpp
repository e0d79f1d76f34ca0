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
 * Undirected simple graphs with adjacency stored as one bit row per vertex,
 * together with the neighbourhood primitives used throughout the toolkit:
 * odd/even neighbourhoods of a vertex subset and local complementation.
 *
 * Odd(D) is the GF(2) product of the adjacency matrix with the indicator of
 * D, so it is computed as an XOR fold of the rows of the members of D.
 */

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcdeg/bits.hpp"
#include "lcdeg/error.hpp"

namespace lcdeg {

using Vertex = std::size_t;

struct Bipartition {
  VertexSet left;
  VertexSet right;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 512;

  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), rows_(n, VertexSet(n)) {
    if (n > kMaxVertices)
      throw InputError("graph order " + std::to_string(n) + " exceeds the supported maximum " +
                       std::to_string(kMaxVertices));
  }

  std::size_t order() const { return n_; }
  std::size_t word_count() const { return words_for(n_); }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[u].test(v);
  }
  void add_edge(Vertex u, Vertex v) { set_edge(u, v, true); }
  void remove_edge(Vertex u, Vertex v) { set_edge(u, v, false); }
  void toggle_edge(Vertex u, Vertex v) { set_edge(u, v, !has_edge(u, v)); }

  const VertexSet& row(Vertex u) const {
    check_vertex(u);
    return rows_[u];
  }
  std::size_t degree(Vertex u) const { return row(u).count(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
  }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
      for (auto v : rows_[u].indices())
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  const std::optional<Bipartition>& bipartition() const { return part_; }

  /// Records a known bipartition after checking it against the edges.
  void set_bipartition(Bipartition part) {
    if (part.left.size() != n_ || part.right.size() != n_)
      throw InputError("bipartition size does not match graph order");
    if ((part.left & part.right).any())
      throw InputError("bipartition sides overlap");
    if ((part.left | part.right).count() != n_)
      throw InputError("bipartition does not cover every vertex");
    for (Vertex u = 0; u < n_; ++u) {
      const auto& side = part.left.test(u) ? part.left : part.right;
      if ((rows_[u] & side).any())
        throw InputError("bipartition has an edge inside one side at vertex " +
                         std::to_string(u));
    }
    part_ = std::move(part);
  }
  void clear_bipartition() { part_.reset(); }

  /// Toggles every pair of distinct vertices inside `s` (symmetric difference with K_s).
  void toggle_clique(const VertexSet& s) {
    if (s.size() != n_) throw InputError("clique set length does not match graph order");
    for (auto a : s.indices()) {
      rows_[a] ^= s;
      rows_[a].flip(a);
    }
    part_.reset();
  }

  /// Labeled equality: identical adjacency, bipartition metadata ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check_vertex(Vertex u) const {
    if (u >= n_)
      throw InputError("vertex " + std::to_string(u) + " out of range for graph of order " +
                       std::to_string(n_));
  }
  void set_edge(Vertex u, Vertex v, bool value) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    rows_[u].set(v, value);
    rows_[v].set(u, value);
    part_.reset();
  }

  std::size_t n_ = 0;
  std::vector<VertexSet> rows_;
  std::optional<Bipartition> part_;
};

inline VertexSet neighbors(const Graph& g, Vertex u) { return g.row(u); }

namespace detail {
inline void check_set(const Graph& g, const VertexSet& d) {
  if (d.size() != g.order())
    throw InputError("vertex set length " + std::to_string(d.size()) +
                     " does not match graph order " + std::to_string(g.order()));
}
}  // namespace detail

/// { v : |N(v) ∩ D| is odd }. Members of D are included when their parity is odd.
inline VertexSet odd_neighborhood(const Graph& g, const VertexSet& d) {
  detail::check_set(g, d);
  VertexSet odd(g.order());
  for (auto v : d.indices()) odd ^= g.row(v);
  return odd;
}

inline VertexSet even_neighborhood(const Graph& g, const VertexSet& d) {
  return ~odd_neighborhood(g, d);
}

/// G * u: toggles every pair of distinct neighbours of u.
inline Graph local_complement(const Graph& g, Vertex u) {
  Graph out = g;
  out.toggle_clique(g.row(u));
  return out;
}

/// |D ∪ Odd(D)| for nonempty D.
inline std::size_t closed_odd_size(const Graph& g, const VertexSet& d) {
  detail::check_set(g, d);
  if (d.none()) throw InputError("closed_odd_size requires a nonempty set");
  return (d | odd_neighborhood(g, d)).count();
}

inline std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw InputError("min_degree of the empty graph");
  std::size_t best = g.order();
  for (Vertex u = 0; u < g.order(); ++u) best = std::min(best, g.degree(u));
  return best;
}

inline Vertex min_degree_vertex(const Graph& g) {
  if (g.order() == 0) throw InputError("min_degree of the empty graph");
  Vertex arg = 0;
  for (Vertex u = 1; u < g.order(); ++u)
    if (g.degree(u) < g.degree(arg)) arg = u;
  return arg;
}

/// BFS two-colouring; each component's lowest vertex goes left.
inline std::optional<Bipartition> find_bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (auto v : g.row(u).indices()) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition part{VertexSet(n), VertexSet(n)};
  for (Vertex u = 0; u < n; ++u) (colour[u] == 0 ? part.left : part.right).set(u);
  return part;
}

/// The recorded bipartition if present, otherwise a computed one.
inline std::optional<Bipartition> is_bipartite(const Graph& g) {
  if (g.bipartition()) return g.bipartition();
  return find_bipartition(g);
}

// Standard families.

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// K_{a,b} with left side {0..a-1}.
inline Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) g.add_edge(i, a + j);
  Bipartition part{VertexSet(a + b), VertexSet(a + b)};
  for (Vertex i = 0; i < a + b; ++i) (i < a ? part.left : part.right).set(i);
  g.set_bipartition(std::move(part));
  return g;
}

/// K_{1,leaves}, centre 0.
inline Graph star_graph(std::size_t leaves) { return complete_bipartite_graph(1, leaves); }

}  // namespace lcdeg
