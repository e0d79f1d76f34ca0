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
 * Binary linear codes given by a generator matrix A (rows = code length,
 * cols = message length); the code is the column space {A X}.
 */

#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lcdeg/bits.hpp"
#include "lcdeg/error.hpp"
#include "lcdeg/rng.hpp"

namespace lcdeg {

inline constexpr std::size_t kDefaultMessageCap = 24;

class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, BitVector(cols)) {}

  static BinaryMatrix identity(std::size_t k) {
    BinaryMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m.set(i, i);
    return m;
  }

  /// One string of '0'/'1' per row.
  static BinaryMatrix from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw InputError("matrix needs at least one row");
    BinaryMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols())
        throw InputError("matrix row " + std::to_string(r) + " has width " +
                         std::to_string(rows[r].size()) + ", expected " + std::to_string(m.cols()));
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (rows[r][c] == '1')
          m.set(r, c);
        else if (rows[r][c] != '0')
          throw InputError("matrix entries must be 0 or 1");
      }
    }
    return m;
  }

  /// Top block over bottom block.
  static BinaryMatrix stack(const BinaryMatrix& top, const BinaryMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw InputError("stack: column counts differ");
    BinaryMatrix m = top;
    m.data_.insert(m.data_.end(), bottom.data_.begin(), bottom.data_.end());
    return m;
  }

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }

  bool at(std::size_t r, std::size_t c) const { return row(r).test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) {
    check_row(r);
    data_[r].set(c, value);
  }
  const BitVector& row(std::size_t r) const {
    check_row(r);
    return data_[r];
  }
  BitVector column(std::size_t c) const {
    BitVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r) v.set(r, data_[r].test(c));
    return v;
  }

  BinaryMatrix transpose() const {
    BinaryMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (auto c : data_[r].indices()) t.set(c, r);
    return t;
  }

  /// Rows listed in `order` (a selection/permutation of row indices).
  BinaryMatrix select_rows(const std::vector<std::size_t>& order) const {
    BinaryMatrix m(0, cols_);
    for (auto r : order) m.data_.push_back(row(r));
    return m;
  }

  friend BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
    BinaryMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (auto k : a.data_[r].indices()) out.data_[r] ^= b.data_[k];
    return out;
  }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  void check_row(std::size_t r) const {
    if (r >= rows())
      throw InputError("row " + std::to_string(r) + " out of range (" + std::to_string(rows()) + " rows)");
  }

  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

/// A X over GF(2).
inline BitVector gf2_mul(const BinaryMatrix& m, const BitVector& x) {
  if (x.size() != m.cols())
    throw InputError("gf2_mul: vector length " + std::to_string(x.size()) + " != " +
                     std::to_string(m.cols()) + " columns");
  BitVector y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) y.set(r, m.row(r).dot(x));
  return y;
}

namespace detail {
/// Reduced row echelon form over GF(2); returns pivot columns.
inline std::vector<std::size_t> row_reduce(std::vector<BitVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    std::size_t pivot = top;
    while (pivot < rows.size() && !rows[pivot].test(c)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[top], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != top && rows[r].test(c)) rows[r] ^= rows[top];
    pivots.push_back(c);
    ++top;
  }
  return pivots;
}
}  // namespace detail

inline std::size_t rank(const BinaryMatrix& m) {
  std::vector<BitVector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return detail::row_reduce(rows, m.cols()).size();
}

/// cols - rank.
inline std::size_t kernel_dim(const BinaryMatrix& m) { return m.cols() - rank(m); }

/// A nonzero X with A X = 0, if one exists.
inline std::optional<BitVector> kernel_vector(const BinaryMatrix& m) {
  std::vector<BitVector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  const auto pivots = detail::row_reduce(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector x(m.cols());
    x.set(free);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (rows[i].test(free)) x.set(pivots[i]);
    return x;
  }
  return std::nullopt;
}

/// Inverse of a square invertible matrix.
inline BinaryMatrix inverse(const BinaryMatrix& m) {
  const std::size_t k = m.rows();
  if (m.cols() != k) throw InputError("inverse of a non-square matrix");
  std::vector<BitVector> left, right;
  for (std::size_t r = 0; r < k; ++r) {
    left.push_back(m.row(r));
    right.push_back(BitVector::from_indices(k, {r}));
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    while (pivot < k && !left[pivot].test(c)) ++pivot;
    if (pivot == k) throw InputError("matrix is singular");
    std::swap(left[c], left[pivot]);
    std::swap(right[c], right[pivot]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r != c && left[r].test(c)) {
        left[r] ^= left[c];
        right[r] ^= right[c];
      }
    }
  }
  BinaryMatrix out(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (auto c : right[r].indices()) out.set(r, c);
  return out;
}

/**
 * Generator in the shape (I_k ; A').
 *
 * `row_order` lists the rows of the input in their new positions: the first k
 * are linearly independent. `message_transform` is the invertible k x k matrix T
 * with select_rows(row_order) * T == stack(I_k, aprime). The code (column space)
 * is unchanged up to the coordinate permutation `row_order`, so weights agree.
 */
struct SystematicForm {
  BinaryMatrix aprime;
  std::vector<std::size_t> row_order;
  BinaryMatrix message_transform;
};

inline SystematicForm systematic_form(const BinaryMatrix& a) {
  const std::size_t k = a.cols();
  if (k == 0 || a.rows() < k) throw InputError("systematic_form needs rows >= cols >= 1");
  if (kernel_dim(a) != 0) throw InputError("code has nonzero kernel, min weight is 0");

  // Greedy choice of k independent rows, earliest first.
  std::vector<std::size_t> chosen, rest;
  std::vector<BitVector> basis;  // reduced copies of chosen rows
  std::vector<std::size_t> basis_pivot;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BitVector v = a.row(r);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (v.test(basis_pivot[i])) v ^= basis[i];
    if (chosen.size() < k && v.any()) {
      chosen.push_back(r);
      basis_pivot.push_back(v.first());
      basis.push_back(std::move(v));
    } else {
      rest.push_back(r);
    }
  }
  std::vector<std::size_t> order = chosen;
  order.insert(order.end(), rest.begin(), rest.end());

  const BinaryMatrix top = a.select_rows(chosen);
  const BinaryMatrix transform = inverse(top);
  const BinaryMatrix bottom = a.select_rows(rest);
  return {bottom * transform, std::move(order), transform};
}

struct MinDistance {
  std::size_t distance = 0;
  BitVector message;  // minimising X, smallest as an integer among minimisers
};

/// min over nonzero X of w(A X); 0 when A has a nontrivial kernel.
inline MinDistance min_distance(const BinaryMatrix& a, std::size_t cap = kDefaultMessageCap,
                                unsigned workers = 1) {
  const std::size_t k = a.cols();
  if (k == 0) throw InputError("min_distance needs at least one column");
  if (auto x = kernel_vector(a)) return {0, std::move(*x)};
  if (k > cap)
    throw SearchTooLarge(std::to_string(k) + " message bits exceed the cap of " + std::to_string(cap));

  std::vector<BitVector> columns;
  for (std::size_t c = 0; c < k; ++c) columns.push_back(a.column(c));
  const std::uint64_t total = std::uint64_t{1} << k;

  struct Best {
    std::size_t weight = static_cast<std::size_t>(-1);
    std::uint64_t message = 0;
    void offer(std::size_t w, std::uint64_t x) {
      if (w < weight || (w == weight && x < message)) {
        weight = w;
        message = x;
      }
    }
  };
  auto run = [&](std::uint64_t begin, std::uint64_t end, Best& best) {
    if (begin == 0) begin = 1;
    if (begin >= end) return;
    std::uint64_t x = begin ^ (begin >> 1);
    BitVector word(a.rows());
    for (std::size_t j = 0; j < k; ++j)
      if ((x >> j) & 1U) word ^= columns[j];
    best.offer(word.count(), x);
    for (std::uint64_t i = begin + 1; i < end; ++i) {
      const auto j = static_cast<std::size_t>(std::countr_zero(i));
      word ^= columns[j];
      x ^= std::uint64_t{1} << j;
      best.offer(word.count(), x);
    }
  };

  std::uint64_t chunks = (total < (1U << 14)) ? 1 : std::max<unsigned>(workers, 1);
  std::vector<Best> partial(chunks);
  if (chunks == 1) {
    run(1, total, partial[0]);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t c = 0; c < chunks; ++c)
      threads.emplace_back([&, c] { run(c * total / chunks, (c + 1) * total / chunks, partial[c]); });
    for (auto& t : threads) t.join();
  }
  Best best;
  for (const auto& p : partial) best.offer(p.weight, p.message);

  BitVector msg(k);
  for (std::size_t j = 0; j < k; ++j)
    if ((best.message >> j) & 1U) msg.set(j);
  return {best.weight, std::move(msg)};
}

/// Circulant matrix whose row i is `first_row` rotated right by i.
inline BinaryMatrix circulant(const BitVector& first_row) {
  const std::size_t s = first_row.size();
  BinaryMatrix m(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (auto j : first_row.indices()) m.set(i, (i + j) % s);
  return m;
}

/**
 * Random search for a square B whose codes (I ; B) and (I ; B^T) both have
 * minimum distance >= required_d. Candidates are circulant with a uniformly
 * random first row, so each entry is 1 with probability 1/2.
 */
inline std::optional<BinaryMatrix> gadget_code_search(std::size_t side, std::size_t required_d,
                                                      std::size_t attempts, std::uint64_t seed) {
  if (side == 0) throw InputError("gadget side must be positive");
  if (required_d == 0) throw InputError("required distance must be at least 1");
  if (side > kDefaultMessageCap) throw SearchTooLarge("gadget side " + std::to_string(side));
  Rng rng(seed);
  const BinaryMatrix id = BinaryMatrix::identity(side);
  for (std::size_t t = 0; t < attempts; ++t) {
    BitVector first(side);
    for (std::size_t j = 0; j < side; ++j) first.set(j, rng.coin());
    BinaryMatrix b = circulant(first);
    if (min_distance(BinaryMatrix::stack(id, b)).distance < required_d) continue;
    if (min_distance(BinaryMatrix::stack(id, b.transpose())).distance < required_d) continue;
    return b;
  }
  return std::nullopt;
}

/// "rows cols" then one line of 0/1 characters per row.
inline BinaryMatrix read_matrix(std::istream& in) {
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 1 || cols < 1)
    throw InputError("matrix file: expected header \"rows cols\" with positive integers");
  std::vector<std::string> lines;
  for (long long r = 0; r < rows; ++r) {
    std::string line;
    if (!(in >> line))
      throw InputError("matrix file: expected " + std::to_string(rows) + " rows, found " + std::to_string(r));
    if (static_cast<long long>(line.size()) != cols)
      throw InputError("matrix file: row " + std::to_string(r) + " has " + std::to_string(line.size()) +
                       " entries, expected " + std::to_string(cols));
    lines.push_back(std::move(line));
  }
  std::string extra;
  if (in >> extra) throw InputError("matrix file: trailing content");
  return BinaryMatrix::from_rows(lines);
}

inline void write_matrix(std::ostream& out, const BinaryMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (m.at(r, c) ? '1' : '0');
    out << '\n';
  }
}

inline std::string to_matrix_text(const BinaryMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

}  // namespace lcdeg
