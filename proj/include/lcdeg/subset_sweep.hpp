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
 * Gray-code sweep over the nonempty subsets D of a vertex domain.
 *
 * Subset number i (1 <= i < 2^m) is gray(i) = i ^ (i >> 1) read as a mask over
 * the domain. Consecutive subsets differ in domain bit ctz(i), so Odd(D) is
 * maintained by XOR-ing a single adjacency row per step. Rows are copied into
 * fixed-width word arrays, with the width chosen at compile time from
 * {1..8} words (graphs up to 512 vertices).
 *
 * The index range [1, 2^m) is split into contiguous chunks, one per worker.
 * Trackers from later chunks are merged into earlier ones, so a tracker that
 * keeps its first optimum reports the globally first optimum regardless of
 * the number of workers.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "lcdeg/bits.hpp"
#include "lcdeg/error.hpp"
#include "lcdeg/graph.hpp"

namespace lcdeg::detail {

inline constexpr std::size_t kMaxSweepDomain = 62;

template <std::size_t W>
using Row = std::array<Word, W>;

template <std::size_t W>
Row<W> to_row(const BitVector& v) {
  Row<W> r{};
  const auto words = v.words();
  for (std::size_t i = 0; i < words.size() && i < W; ++i) r[i] = words[i];
  return r;
}

template <std::size_t W>
inline std::size_t popcount_or(const Row<W>& a, const Row<W>& b) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < W; ++w) c += static_cast<std::size_t>(std::popcount(a[w] | b[w]));
  return c;
}

/// Calls f.template operator()<W>() with W = number of words for `bits`.
template <class F>
decltype(auto) dispatch_words(std::size_t bits, F&& f) {
  switch (words_for(std::max<std::size_t>(bits, 1))) {
    case 1: return f.template operator()<1>();
    case 2: return f.template operator()<2>();
    case 3: return f.template operator()<3>();
    case 4: return f.template operator()<4>();
    case 5: return f.template operator()<5>();
    case 6: return f.template operator()<6>();
    case 7: return f.template operator()<7>();
    case 8: return f.template operator()<8>();
    default: throw InputError("graph too large for bit-parallel sweep");
  }
}

template <std::size_t W>
struct SweepDomain {
  std::vector<Row<W>> rows;     // adjacency row of domain[j]
  std::vector<Row<W>> members;  // singleton {domain[j]}
  Row<W> all{};                 // V(G)

  SweepDomain(const Graph& g, std::span<const Vertex> domain) {
    rows.reserve(domain.size());
    members.reserve(domain.size());
    for (auto v : domain) {
      rows.push_back(to_row<W>(g.row(v)));
      members.push_back(to_row<W>(VertexSet::from_indices(g.order(), {v})));
    }
    all = to_row<W>(VertexSet::full(g.order()));
  }
};

/// Visits subsets with Gray index in [begin, end), begin >= 1.
/// Tracker needs `void visit(std::uint64_t index, const Row<W>& d, const Row<W>& odd)`.
template <std::size_t W, class Tracker>
void sweep_range(const SweepDomain<W>& dom, std::uint64_t begin, std::uint64_t end, Tracker& t) {
  if (begin == 0) begin = 1;
  if (begin >= end) return;
  Row<W> d{}, odd{};
  const std::uint64_t start = begin ^ (begin >> 1);
  for (std::size_t j = 0; j < dom.rows.size(); ++j) {
    if ((start >> j) & 1U) {
      for (std::size_t w = 0; w < W; ++w) {
        d[w] ^= dom.members[j][w];
        odd[w] ^= dom.rows[j][w];
      }
    }
  }
  t.visit(begin, d, odd);
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    const auto j = static_cast<std::size_t>(std::countr_zero(i));
    for (std::size_t w = 0; w < W; ++w) {
      d[w] ^= dom.members[j][w];
      odd[w] ^= dom.rows[j][w];
    }
    t.visit(i, d, odd);
  }
}

/// Sweeps all nonempty subsets of `domain` with `workers` threads and returns the
/// merged tracker. `make` builds a fresh tracker for each chunk; trackers provide
/// `void merge_later(const Tracker&)`.
template <std::size_t W, class MakeTracker>
auto sweep_all(const SweepDomain<W>& dom, unsigned workers, MakeTracker&& make) {
  using Tracker = decltype(make());
  const std::size_t m = dom.rows.size();
  if (m > kMaxSweepDomain) throw SearchTooLarge("domain of " + std::to_string(m) + " vertices");
  const std::uint64_t total = std::uint64_t{1} << m;
  std::uint64_t chunks = std::max<unsigned>(workers, 1);
  if (total < (std::uint64_t{1} << 14)) chunks = 1;
  chunks = std::min<std::uint64_t>(chunks, total);

  std::vector<Tracker> trackers;
  trackers.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) trackers.push_back(make());
  auto bounds = [&](std::uint64_t c) { return c * (total / chunks) + std::min(c, total % chunks); };

  if (chunks == 1) {
    sweep_range(dom, 1, total, trackers[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c)
      threads.emplace_back([&, c] { sweep_range(dom, bounds(c), bounds(c + 1), trackers[c]); });
    for (auto& t : threads) t.join();
  }
  for (std::uint64_t c = 1; c < chunks; ++c) trackers[0].merge_later(trackers[c]);
  return trackers[0];
}

/// Domain vertices selected by a Gray index.
inline VertexSet subset_from_index(std::size_t n, std::span<const Vertex> domain,
                                   std::uint64_t index) {
  const std::uint64_t mask = index ^ (index >> 1);
  VertexSet d(n);
  for (std::size_t j = 0; j < domain.size(); ++j)
    if ((mask >> j) & 1U) d.set(domain[j]);
  return d;
}

/// Keeps the first subset minimising |D ∪ Odd(D)|.
struct ClosedOddMin {
  std::size_t best = static_cast<std::size_t>(-1);
  std::uint64_t index = 0;
  std::uint64_t examined = 0;

  template <std::size_t W>
  void visit(std::uint64_t i, const Row<W>& d, const Row<W>& odd) {
    ++examined;
    const std::size_t size = popcount_or<W>(d, odd);
    if (size < best) {
      best = size;
      index = i;
    }
  }
  void merge_later(const ClosedOddMin& later) {
    examined += later.examined;
    if (later.best < best) {
      best = later.best;
      index = later.index;
    }
  }
};

}  // namespace lcdeg::detail
