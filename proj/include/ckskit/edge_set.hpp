// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CKSKIT_EDGE_SET_HPP_
#define CKSKIT_EDGE_SET_HPP_

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace ckskit {

// Set of edge indices of one graph, stored as a bit mask. Edge indices are
// positions in the graph's edge order, so iteration is in edge order.
class EdgeSet {
 public:
  using Mask = std::uint64_t;
  static constexpr int kMaxEdges = 64;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr Iterator() = default;
    constexpr explicit Iterator(Mask rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(Mask bits) : bits_(bits) {}
  EdgeSet(std::initializer_list<int> edges) {
    for (int e : edges) bits_ |= bit(e);
  }

  static EdgeSet from(const std::vector<int>& edges) {
    EdgeSet s;
    for (int e : edges) s.bits_ |= bit(e);
    return s;
  }

  // The set {0, ..., n-1}.
  static constexpr EdgeSet range(int n) {
    return EdgeSet(n >= kMaxEdges ? ~Mask{0} : (Mask{1} << n) - 1);
  }

  static constexpr Mask bit(int e) { return Mask{1} << e; }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool subset_of(EdgeSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(EdgeSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr EdgeSet with(int e) const { return EdgeSet(bits_ | bit(e)); }
  constexpr EdgeSet without(int e) const { return EdgeSet(bits_ & ~bit(e)); }

  // Smallest and largest member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return kMaxEdges - 1 - std::countl_zero(bits_); }

  // Number of members strictly smaller than e.
  constexpr int rank_of(int e) const {
    return std::popcount(bits_ & (bit(e) - 1));
  }

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (int e : *this) out.push_back(e);
    return out;
  }

  friend constexpr EdgeSet operator|(EdgeSet a, EdgeSet b) {
    return EdgeSet(a.bits_ | b.bits_);
  }
  friend constexpr EdgeSet operator&(EdgeSet a, EdgeSet b) {
    return EdgeSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr EdgeSet operator-(EdgeSet a, EdgeSet b) {
    return EdgeSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(EdgeSet a, EdgeSet b) = default;
  // Numeric order of masks; used only for container keys.
  friend constexpr bool operator<(EdgeSet a, EdgeSet b) {
    return a.bits_ < b.bits_;
  }

 private:
  Mask bits_ = 0;
};

// Lexicographic order of the increasing sequences of edge indices.
inline bool lex_less(EdgeSet a, EdgeSet b) {
  EdgeSet::Mask diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  int first = std::countr_zero(diff);
  bool first_in_a = a.contains(first);
  EdgeSet::Mask above = first + 1 >= EdgeSet::kMaxEdges
                            ? 0
                            : ~((EdgeSet::Mask{1} << (first + 1)) - 1);
  if (first_in_a) {
    // b continues with a larger element, or b is a proper prefix of a.
    return (b.bits() & above) != 0;
  }
  return (a.bits() & above) == 0;
}

// Calls f(EdgeSet) for each k-subset of {0, ..., n-1} in lexicographic order.
template <class F>
void for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    EdgeSet s;
    for (int i : idx) s = s.with(i);
    f(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Calls f(EdgeSet) for each subset of `s`, including the empty set and s.
template <class F>
void for_each_subset(EdgeSet s, F&& f) {
  EdgeSet::Mask m = s.bits();
  EdgeSet::Mask sub = 0;
  while (true) {
    f(EdgeSet(sub));
    if (sub == m) return;
    sub = (sub - m) & m;
  }
}

// Re-indexes `s` after the edges in `removed` are dropped from the order.
inline EdgeSet compress(EdgeSet s, EdgeSet removed) {
  EdgeSet out;
  for (int e : s - removed) out = out.with(e - removed.rank_of(e));
  return out;
}

// Inverse of compress: maps indices of the smaller order back.
inline EdgeSet expand(EdgeSet s, EdgeSet removed) {
  EdgeSet out;
  int old = -1;
  int kept = -1;
  for (int e : s) {
    while (kept < e) {
      ++old;
      if (!removed.contains(old)) ++kept;
    }
    out = out.with(old);
  }
  return out;
}

}  // namespace ckskit

template <>
struct std::hash<ckskit::EdgeSet> {
  std::size_t operator()(ckskit::EdgeSet s) const noexcept {
    return std::hash<std::uint64_t>()(s.bits());
  }
};

#endif  // CKSKIT_EDGE_SET_HPP_
