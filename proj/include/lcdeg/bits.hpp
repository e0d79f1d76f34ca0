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

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lcdeg/error.hpp"

namespace lcdeg {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

/// Fixed-length bit row over GF(2). Bits past size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

  static BitVector from_indices(std::size_t size, std::span<const std::size_t> indices) {
    BitVector v(size);
    for (auto i : indices) v.set(i);
    return v;
  }
  static BitVector from_indices(std::size_t size, std::initializer_list<std::size_t> indices) {
    return from_indices(size, std::span<const std::size_t>(indices.begin(), indices.size()));
  }
  static BitVector full(std::size_t size) {
    BitVector v(size);
    std::fill(v.words_.begin(), v.words_.end(), ~Word{0});
    v.trim();
    return v;
  }

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool test(std::size_t i) const {
    check(i);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i, bool value = true) {
    check(i);
    const Word mask = Word{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void reset(std::size_t i) { set(i, false); }
  void flip(std::size_t i) {
    check(i);
    words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  bool none() const { return !any(); }

  BitVector& operator|=(const BitVector& o) {
    same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BitVector& operator&=(const BitVector& o) {
    same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitVector& operator^=(const BitVector& o) {
    same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  /// Set difference: clears every bit that is set in `o`.
  BitVector& subtract(const BitVector& o) {
    same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  BitVector operator~() const {
    BitVector r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  /// Parity of the dot product over GF(2).
  bool dot(const BitVector& o) const {
    same_size(o);
    Word acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
    return std::popcount(acc) & 1;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// Lowest set index, or size() when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return size_;
  }

  /// "{0,2,5}"
  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for (auto i : indices()) {
      if (!first_item) s += ',';
      s += std::to_string(i);
      first_item = false;
    }
    return s + "}";
  }

  /// "0101..." with index 0 first.
  std::string to_bit_string() const {
    std::string s(size_, '0');
    for (auto i : indices()) s[i] = '1';
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void check(std::size_t i) const {
    if (i >= size_)
      throw InputError("bit index " + std::to_string(i) + " out of range for length " +
                       std::to_string(size_));
  }
  void same_size(const BitVector& o) const {
    if (o.size_ != size_)
      throw InputError("bit vector length mismatch: " + std::to_string(size_) + " vs " +
                       std::to_string(o.size_));
  }
  void trim() {
    if (size_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Vertex subsets share the bit-row representation.
using VertexSet = BitVector;

}  // namespace lcdeg
