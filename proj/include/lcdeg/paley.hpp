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
 * Paley graphs and the character sums attached to them.
 *
 * For S ⊆ F_p let f_S(x) = prod_{j in S} (x - j). Summing the Legendre symbol of
 * f_S over F_p counts Even(S) \ S against Odd(S) \ S, so
 *
 *     |sum_i chi(f_S(i))| == | |S ∪ Odd(S)| - |S ∪ Even(S)| |
 *
 * and the Weil-type estimate |sum| <= (|S| - 1) sqrt(p) + 1 bounds both set
 * sizes from below by sqrt(p) - 1/2. All identity checks here use exact
 * integers; sqrt(p) is only ever compared after squaring.
 */

#include <bit>
#include <cmath>
#include <cstdlib>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcdeg/error.hpp"
#include "lcdeg/graph.hpp"
#include "lcdeg/locmindeg.hpp"
#include "lcdeg/rng.hpp"
#include "lcdeg/subset_sweep.hpp"

namespace lcdeg {

inline constexpr std::uint64_t kDefaultPaleyCap = 257;

/// Deterministic trial division.
constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = static_cast<std::uint64_t>((unsigned __int128)result * base % mod);
    base = static_cast<std::uint64_t>((unsigned __int128)base * base % mod);
    exp >>= 1;
  }
  return result;
}

/// Euler's criterion: x^((p-1)/2) mod p mapped to {0, +1, -1}.
inline int legendre(std::uint64_t p, std::int64_t x) {
  if (p == 2 || !is_prime(p)) throw InputError("legendre: p = " + std::to_string(p) + " is not an odd prime");
  const auto sp = static_cast<std::int64_t>(p);
  const auto r = static_cast<std::uint64_t>(((x % sp) + sp) % sp);
  if (r == 0) return 0;
  const auto e = pow_mod(r, (p - 1) / 2, p);
  if (e == 1) return 1;
  if (e == p - 1) return -1;
  throw std::logic_error("Euler criterion produced a value other than +-1");
}

struct PaleyContext {
  std::uint64_t p = 0;
  std::vector<int> chi;  // chi[x] = legendre(p, x) for x in [0, p)
  Graph graph;
};

inline PaleyContext paley_graph(std::uint64_t p, std::uint64_t cap = kDefaultPaleyCap) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (p % 4 != 1) throw InputError("p = " + std::to_string(p) + ": p ≢ 1 mod 4");
  if (p > cap)
    throw InputError("p = " + std::to_string(p) + " exceeds the Paley cap of " + std::to_string(cap));
  if (p > Graph::kMaxVertices) throw InputError("p exceeds the maximum graph order");
  PaleyContext ctx{p, std::vector<int>(p), Graph(p)};
  for (std::uint64_t x = 0; x < p; ++x) ctx.chi[x] = legendre(p, static_cast<std::int64_t>(x));
  for (Vertex i = 0; i < p; ++i)
    for (Vertex j = i + 1; j < p; ++j)
      if (ctx.chi[j - i] == 1) ctx.graph.add_edge(i, j);
  return ctx;
}

/// Exact test of |sum| <= (|S| - 1) sqrt(p) + 1.
constexpr bool weil_bound_holds(std::int64_t sum, std::size_t s_size, std::uint64_t p) {
  const std::uint64_t a = static_cast<std::uint64_t>(sum < 0 ? -sum : sum);
  if (a <= 1) return true;
  if (s_size <= 1) return false;
  const unsigned __int128 lhs = static_cast<unsigned __int128>(a - 1) * (a - 1);
  const unsigned __int128 rhs = static_cast<unsigned __int128>(s_size - 1) * (s_size - 1) * p;
  return lhs <= rhs;
}

/// size >= sqrt(p) - 1/2, i.e. (2 size + 1)^2 >= 4p.
constexpr bool at_least_sqrt_p_minus_half(std::size_t size, std::uint64_t p) {
  return (2 * size + 1) * (2 * size + 1) >= 4 * p;
}

/// delta >= sqrt(p) - 3/2, i.e. (2 delta + 3)^2 >= 4p.
constexpr bool at_least_sqrt_p_minus_three_halves(std::size_t delta, std::uint64_t p) {
  return (2 * delta + 3) * (2 * delta + 3) >= 4 * p;
}

struct CharSumReport {
  VertexSet s;
  std::int64_t sum = 0;
  std::size_t odd_size = 0;   // |S ∪ Odd(S)|
  std::size_t even_size = 0;  // |S ∪ Even(S)|
  double weil_rhs = 0.0;      // (|S| - 1) sqrt(p) + 1

  bool identity_holds() const {
    const auto diff = static_cast<std::int64_t>(odd_size) - static_cast<std::int64_t>(even_size);
    return std::llabs(sum) == std::llabs(diff);
  }
};

inline CharSumReport char_sum(const PaleyContext& ctx, const VertexSet& s) {
  if (s.size() != ctx.p) throw InputError("char_sum: set length does not match p");
  if (s.none()) throw InputError("char_sum requires a nonempty set");
  const auto members = s.indices();
  CharSumReport r;
  r.s = s;
  for (std::uint64_t i = 0; i < ctx.p; ++i) {
    std::uint64_t f = 1;
    for (auto j : members) f = f * ((i + ctx.p - j) % ctx.p) % ctx.p;
    r.sum += ctx.chi[f];
  }
  r.odd_size = (s | odd_neighborhood(ctx.graph, s)).count();
  r.even_size = (s | even_neighborhood(ctx.graph, s)).count();
  r.weil_rhs = static_cast<double>(members.size() - 1) * std::sqrt(static_cast<double>(ctx.p)) + 1.0;
  return r;
}

struct CheckSummary {
  std::size_t checked = 0;
  std::optional<CharSumReport> counterexample;
  bool passed() const { return !counterexample.has_value(); }
};

namespace detail {

/// Calls f(S) for every S ⊆ {0..n-1} with 1 <= |S| <= max_size, in lexicographic order
/// of sorted member lists; stops early when f returns false.
inline void for_each_small_subset(std::size_t n, std::size_t max_size,
                                  const std::function<bool(const VertexSet&)>& f) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 1; k <= std::min(max_size, n); ++k) {
    idx.resize(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (;;) {
      if (!f(VertexSet::from_indices(n, idx))) return;
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t q = pos; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
}

/// Uniform size in [min_size, n], then a uniform subset of that size.
inline VertexSet random_subset(std::size_t n, std::size_t min_size, Rng& rng) {
  const std::size_t size = min_size + static_cast<std::size_t>(rng.below(n - min_size + 1));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  VertexSet s(n);
  for (std::size_t i = 0; i < size; ++i) {
    std::swap(order[i], order[i + static_cast<std::size_t>(rng.below(n - i))]);
    s.set(order[i]);
  }
  return s;
}

}  // namespace detail

/// |sum| == ||S ∪ Odd(S)| - |S ∪ Even(S)|| on `trials` random nonempty S.
inline CheckSummary verify_lemma_odd_even(const PaleyContext& ctx, std::size_t trials,
                                          std::uint64_t seed) {
  CheckSummary out;
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto r = char_sum(ctx, detail::random_subset(ctx.p, 1, rng));
    ++out.checked;
    if (!r.identity_holds()) {
      out.counterexample = std::move(r);
      break;
    }
  }
  return out;
}

/// The same identity for every S with |S| <= max_size.
inline CheckSummary verify_lemma_odd_even_exhaustive(const PaleyContext& ctx, std::size_t max_size) {
  CheckSummary out;
  detail::for_each_small_subset(ctx.p, max_size, [&](const VertexSet& s) {
    auto r = char_sum(ctx, s);
    ++out.checked;
    if (!r.identity_holds()) {
      out.counterexample = std::move(r);
      return false;
    }
    return true;
  });
  return out;
}

/// |sum| <= (|S| - 1) sqrt(p) + 1 for all |S| <= max_subset_size, then `trials`
/// random S of size above max_subset_size.
inline CheckSummary verify_weil_bound(const PaleyContext& ctx, std::size_t max_subset_size,
                                      std::size_t trials, std::uint64_t seed) {
  CheckSummary out;
  auto check = [&](const VertexSet& s) {
    auto r = char_sum(ctx, s);
    ++out.checked;
    if (!weil_bound_holds(r.sum, s.count(), ctx.p)) {
      out.counterexample = std::move(r);
      return false;
    }
    return true;
  };
  detail::for_each_small_subset(ctx.p, max_subset_size, check);
  if (!out.passed() || max_subset_size >= ctx.p) return out;
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t)
    if (!check(detail::random_subset(ctx.p, max_subset_size + 1, rng))) break;
  return out;
}

struct PaleyTheoremReport {
  enum class Mode { verified, not_falsified };

  std::uint64_t p = 0;
  double bound = 0.0;        // sqrt(p) - 3/2
  double lemma_bound = 0.0;  // sqrt(p) - 1/2
  Mode mode = Mode::verified;
  std::optional<std::size_t> delta_loc;
  VertexSet witness;  // minimiser of |S ∪ Odd(S)| (verified mode)
  std::optional<std::size_t> min_odd_size;
  std::optional<std::size_t> min_even_size;
  bool holds = false;        // delta_loc >= sqrt(p) - 3/2
  bool lemma_holds = false;  // both minima >= sqrt(p) - 1/2
  std::uint64_t sets_examined = 0;
  std::uint64_t falsifier_trials = 0;
};

constexpr std::string_view to_string(PaleyTheoremReport::Mode m) {
  return m == PaleyTheoremReport::Mode::verified ? "verified" : "not-falsified";
}

namespace detail {
/// Tracks min |D ∪ Odd(D)| (first minimiser) and min |D ∪ Even(D)|.
template <std::size_t W>
struct OddEvenMin {
  Row<W> all{};
  ClosedOddMin odd;
  std::size_t best_even = static_cast<std::size_t>(-1);

  template <std::size_t W2>
  void visit(std::uint64_t i, const Row<W2>& d, const Row<W2>& o) {
    odd.visit<W2>(i, d, o);
    std::size_t even = 0;
    for (std::size_t w = 0; w < W2; ++w)
      even += static_cast<std::size_t>(std::popcount(d[w] | (~o[w] & all[w])));
    if (even < best_even) best_even = even;
  }
  void merge_later(const OddEvenMin& later) {
    odd.merge_later(later.odd);
    best_even = std::min(best_even, later.best_even);
  }
};
}  // namespace detail

/// Exhaustive check of delta_loc(Pal_p) >= sqrt(p) - 3/2 together with
/// min |S ∪ Odd(S)|, min |S ∪ Even(S)| >= sqrt(p) - 1/2 in the same sweep.
/// Above `opts.cap` falls back to random search for a violating S.
inline PaleyTheoremReport verify_paley_theorem(const PaleyContext& ctx, SearchOptions opts = {},
                                               std::uint64_t falsifier_trials = 1'000'000,
                                               std::uint64_t seed = 0) {
  PaleyTheoremReport r;
  r.p = ctx.p;
  const double root = std::sqrt(static_cast<double>(ctx.p));
  r.bound = root - 1.5;
  r.lemma_bound = root - 0.5;
  const std::size_t n = ctx.graph.order();

  if (n > opts.cap) {
    r.mode = PaleyTheoremReport::Mode::not_falsified;
    std::size_t threshold = 0;  // largest size violating the lemma
    while (!at_least_sqrt_p_minus_half(threshold + 1, ctx.p)) ++threshold;
    const auto hit = falsifier_sample(ctx.graph, threshold, falsifier_trials, seed);
    r.falsifier_trials = falsifier_trials;
    r.holds = r.lemma_holds = !hit.has_value();
    if (hit) {
      r.witness = *hit;
      r.min_odd_size = closed_odd_size(ctx.graph, *hit);
    }
    return r;
  }

  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  detail::dispatch_words(n, [&]<std::size_t W>() {
    const detail::SweepDomain<W> dom(ctx.graph, all);
    const auto best = detail::sweep_all(dom, opts.workers, [&] {
      detail::OddEvenMin<W> t;
      t.all = dom.all;
      return t;
    });
    r.min_odd_size = best.odd.best;
    r.min_even_size = best.best_even;
    r.sets_examined = best.odd.examined;
    r.witness = detail::subset_from_index(n, all, best.odd.index);
  });
  r.delta_loc = *r.min_odd_size - 1;
  r.holds = at_least_sqrt_p_minus_three_halves(*r.delta_loc, ctx.p);
  r.lemma_holds = at_least_sqrt_p_minus_half(*r.min_odd_size, ctx.p) &&
                  at_least_sqrt_p_minus_half(*r.min_even_size, ctx.p);
  return r;
}

}  // namespace lcdeg
